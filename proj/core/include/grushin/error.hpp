// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace grushin {

/// Domain failure modes surfaced by the library. Every code maps to a stable
/// name so front ends can report errors without string matching on messages.
enum class ErrorCode {
  Singular,                      // matrix not invertible at rank tolerance
  IllPosed,                      // assembled Grushin matrix singular
  DimensionMismatch,             // incompatible block shapes
  EffectiveHamiltonianSingular,  // E_{-+} not invertible
  HypothesisViolated,            // a stated hypothesis fails (e.g. B* not onto)
  InvalidGrid,                   // bad time grid (dt <= 0, length mismatch, ...)
  EmptyGrid,                     // frequency grid with no usable samples
  NonDiagonalizable,             // eigenbasis numerically singular
  DegenerateMode,                // a modal weight vanishes
  ContourThroughSpectrum,        // quadrature contour too close to an eigenvalue
  TransferSingularOnContour,     // H(lambda) singular at a quadrature node
  Overflow,                      // result exceeds representable range
  InvalidContour,                // malformed contour specification
  InvalidWeight,                 // nonpositive renormalization weight
  SkewAdjointViolated,           // skew_adjoint flag set but A* + A != 0
  NonFinite,                     // NaN/Inf entries on construction
  ParseError,                    // malformed input file
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace grushin
