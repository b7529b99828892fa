// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace grushin {

const char* const kToolVersion = "0.1.0";

JsonValue JsonValue::null() { return JsonValue(); }

JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.kind_ = Kind::Boolean;
  v.bool_ = b;
  return v;
}

JsonValue JsonValue::number(double x) {
  JsonValue v;
  v.kind_ = Kind::Number;
  v.number_ = x;
  return v;
}

JsonValue JsonValue::integer(long long n) {
  JsonValue v;
  v.kind_ = Kind::Integer;
  v.integer_ = n;
  return v;
}

JsonValue JsonValue::string(std::string s) {
  JsonValue v;
  v.kind_ = Kind::String;
  v.string_ = std::move(s);
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::Array;
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}

JsonValue JsonValue::complex_number(Complex z) {
  JsonValue v = array();
  v.push_back(number(z.real()));
  v.push_back(number(z.imag()));
  return v;
}

JsonValue JsonValue::vector(const ComplexVector& x) {
  JsonValue v = array();
  for (Index i = 0; i < x.dim(); ++i) v.push_back(complex_number(x[i]));
  return v;
}

JsonValue JsonValue::matrix(const ComplexMatrix& m) {
  JsonValue v = array();
  for (Index i = 0; i < m.rows(); ++i) {
    JsonValue row = array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_number(m(i, j)));
    v.push_back(std::move(row));
  }
  return v;
}

JsonValue JsonValue::real_array(const std::vector<double>& xs) {
  JsonValue v = array();
  for (double x : xs) v.push_back(number(x));
  return v;
}

JsonValue& JsonValue::push_back(JsonValue v) {
  if (kind_ != Kind::Array) {
    raise(ErrorCode::ParseError, "push_back on a non-array JSON value");
  }
  items_.push_back(std::move(v));
  return *this;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  if (kind_ != Kind::Object) {
    raise(ErrorCode::ParseError, "set on a non-object JSON value");
  }
  members_.emplace_back(key, std::move(v));
  return *this;
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

void dump_string(const std::string& s, std::string& out) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

}  // namespace

void JsonValue::dump_into(std::string& out) const {
  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Boolean: out += bool_ ? "true" : "false"; break;
    case Kind::Number: out += format_double(number_); break;
    case Kind::Integer: out += std::to_string(integer_); break;
    case Kind::String: dump_string(string_, out); break;
    case Kind::Array: {
      out += '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ',';
        items_[i].dump_into(out);
      }
      out += ']';
      break;
    }
    case Kind::Object: {
      out += '{';
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        dump_string(members_[i].first, out);
        out += ':';
        members_[i].second.dump_into(out);
      }
      out += '}';
      break;
    }
  }
}

std::string JsonValue::dump() const {
  std::string out;
  dump_into(out);
  return out;
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& origin, const std::string& field,
                              const std::string& what) {
  raise(ErrorCode::ParseError, origin + ": field '" + field + "': " + what);
}

ComplexMatrix parse_matrix(const json& node, const std::string& origin,
                           const std::string& field) {
  if (!node.is_array() || node.empty()) {
    field_error(origin, field, "expected a non-empty array of rows");
  }
  const std::size_t rows = node.size();
  std::size_t cols = 0;
  Eigen::MatrixXcd m;
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = node[i];
    if (!row.is_array() || row.empty()) {
      field_error(origin, field, "row " + std::to_string(i) + " is not an array");
    }
    if (i == 0) {
      cols = row.size();
      m.resize(static_cast<Index>(rows), static_cast<Index>(cols));
    } else if (row.size() != cols) {
      field_error(origin, field, "row " + std::to_string(i) + " has ragged length");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const json& entry = row[j];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        field_error(origin, field,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") must be a [re, im] pair of numbers");
      }
      m(static_cast<Index>(i), static_cast<Index>(j)) =
          Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  if (!m.allFinite()) {
    field_error(origin, field, "entries must be finite");
  }
  return ComplexMatrix(std::move(m));
}

}  // namespace

StateSpaceSystem parse_system(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    raise(ErrorCode::ParseError, origin + ": " + err.what());
  }
  if (!doc.is_object()) {
    raise(ErrorCode::ParseError, origin + ": top-level value must be an object");
  }
  if (!doc.contains("a")) field_error(origin, "a", "missing");
  if (!doc.contains("b")) field_error(origin, "b", "missing");
  const ComplexMatrix a = parse_matrix(doc["a"], origin, "a");
  const ComplexMatrix b = parse_matrix(doc["b"], origin, "b");
  ComplexMatrix c = doc.contains("c") ? parse_matrix(doc["c"], origin, "c")
                                      : b.adjoint();
  ComplexMatrix d = doc.contains("d")
                        ? parse_matrix(doc["d"], origin, "d")
                        : ComplexMatrix::zero(c.rows(), b.cols());
  bool skew = false;
  if (doc.contains("flags")) {
    const json& flags = doc["flags"];
    if (!flags.is_object()) field_error(origin, "flags", "expected an object");
    if (flags.contains("skew_adjoint")) {
      if (!flags["skew_adjoint"].is_boolean()) {
        field_error(origin, "flags.skew_adjoint", "expected a boolean");
      }
      skew = flags["skew_adjoint"].get<bool>();
    }
  }
  try {
    return StateSpaceSystem(a, b, std::move(c), std::move(d), skew);
  } catch (const Error& err) {
    raise(ErrorCode::ParseError, origin + ": " + err.what());
  }
}

StateSpaceSystem load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::ParseError, path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str(), path);
}

JsonValue system_to_json_value(const StateSpaceSystem& system) {
  JsonValue doc = JsonValue::object();
  doc.set("a", JsonValue::matrix(system.a));
  doc.set("b", JsonValue::matrix(system.b));
  doc.set("c", JsonValue::matrix(system.c));
  doc.set("d", JsonValue::matrix(system.d));
  JsonValue flags = JsonValue::object();
  flags.set("skew_adjoint", JsonValue::boolean(system.skew_adjoint));
  doc.set("flags", std::move(flags));
  return doc;
}

std::string system_to_json(const StateSpaceSystem& system) {
  return system_to_json_value(system).dump();
}

std::string AnalysisReport::to_json() const {
  JsonValue doc = JsonValue::object();
  doc.set("command", JsonValue::string(command));
  doc.set("inputs_digest", JsonValue::string(inputs_digest));
  doc.set("payload", payload);
  doc.set("tool_version", JsonValue::string(tool_version));
  return doc.dump();
}

}  // namespace grushin
