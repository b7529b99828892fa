// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grushin/state_space.hpp"

namespace grushin {

/// Minimal ordered JSON document builder with deterministic output: object
/// keys keep insertion order and every floating-point number is printed with
/// 17 significant digits, so identical values serialize to identical bytes.
class JsonValue {
 public:
  enum class Kind { Null, Boolean, Number, Integer, String, Array, Object };

  JsonValue() : kind_(Kind::Null) {}
  static JsonValue null();
  static JsonValue boolean(bool b);
  static JsonValue number(double x);
  static JsonValue integer(long long n);
  static JsonValue string(std::string s);
  static JsonValue array();
  static JsonValue object();

  static JsonValue complex_number(Complex z);           // [re, im]
  static JsonValue vector(const ComplexVector& v);      // [[re, im], ...]
  static JsonValue matrix(const ComplexMatrix& m);      // [[[re, im], ...], ...]
  static JsonValue real_array(const std::vector<double>& xs);

  JsonValue& push_back(JsonValue v);                    // arrays
  JsonValue& set(const std::string& key, JsonValue v);  // objects

  Kind kind() const { return kind_; }
  std::string dump() const;

 private:
  void dump_into(std::string& out) const;

  Kind kind_;
  bool bool_ = false;
  double number_ = 0.0;
  long long integer_ = 0;
  std::string string_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

/// %.17g rendering used everywhere a double reaches an output stream; round
/// trips IEEE doubles exactly. Non-finite values render as null.
std::string format_double(double x);

/// FNV-1a 64-bit, the stable input digest for reports.
std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 0xcbf29ce484222325ull);
std::string digest_hex(std::uint64_t h);

/// Parses a system description document:
///   {"a": [[[re,im],...],...], "b": ..., "c": ..., "d": ...,
///    "flags": {"skew_adjoint": bool}}
/// c defaults to the conjugate transpose of b, d to zero. Malformed documents
/// raise ErrorCode::ParseError naming the offending line or field.
StateSpaceSystem parse_system(const std::string& text,
                              const std::string& origin = "<input>");
StateSpaceSystem load_system(const std::string& path);

/// Emits the same schema; parse(system_to_json(s)) reproduces s bit-exactly.
std::string system_to_json(const StateSpaceSystem& system);
JsonValue system_to_json_value(const StateSpaceSystem& system);

/// Serializable result record emitted by the command-line front end.
struct AnalysisReport {
  std::string command;
  std::string inputs_digest;
  JsonValue payload;
  std::string tool_version;

  std::string to_json() const;
};

extern const char* const kToolVersion;

}  // namespace grushin
