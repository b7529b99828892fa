// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include "grushin/types.hpp"

namespace grushin {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::IllPosed: return "IllPosed";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EffectiveHamiltonianSingular: return "EffectiveHamiltonianSingular";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::NonDiagonalizable: return "NonDiagonalizable";
    case ErrorCode::DegenerateMode: return "DegenerateMode";
    case ErrorCode::ContourThroughSpectrum: return "ContourThroughSpectrum";
    case ErrorCode::TransferSingularOnContour: return "TransferSingularOnContour";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidContour: return "InvalidContour";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::SkewAdjointViolated: return "SkewAdjointViolated";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void check_finite(const Eigen::MatrixXcd& m) {
  if (!m.allFinite()) {
    raise(ErrorCode::NonFinite, "matrix entries must be finite on construction");
  }
}

void check_finite(const Eigen::VectorXcd& v) {
  if (!v.allFinite()) {
    raise(ErrorCode::NonFinite, "vector entries must be finite on construction");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(Index rows, Index cols)
    : m_(Eigen::MatrixXcd::Zero(rows, cols)) {}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  check_finite(m_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  m_.resize(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) {
      raise(ErrorCode::DimensionMismatch, "ragged initializer for ComplexMatrix");
    }
    Index j = 0;
    for (const Complex& z : row) m_(i, j++) = z;
    ++i;
  }
  check_finite(m_);
}

ComplexMatrix ComplexMatrix::zero(Index rows, Index cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::identity(Index n) {
  return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n).eval());
}

ComplexMatrix ComplexMatrix::block(Index i, Index j, Index rows, Index cols) const {
  if (i < 0 || j < 0 || rows < 0 || cols < 0 || i + rows > m_.rows() ||
      j + cols > m_.cols()) {
    raise(ErrorCode::DimensionMismatch, "block indices out of range");
  }
  return ComplexMatrix(m_.block(i, j, rows, cols).eval());
}

ComplexVector ComplexMatrix::col(Index j) const {
  return ComplexVector(m_.col(j).eval());
}

ComplexVector ComplexMatrix::row(Index i) const {
  return ComplexVector(m_.row(i).transpose().eval());
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  if (m_.size() == 0 || m_.norm() == 0.0) return true;
  return (m_ - m_.adjoint()).norm() <= tol * m_.norm();
}

bool ComplexMatrix::is_skew_adjoint(double tol) const {
  if (!is_square()) return false;
  if (m_.size() == 0 || m_.norm() == 0.0) return true;
  return (m_ + m_.adjoint()).norm() <= tol * m_.norm();
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  return ComplexMatrix((a.m_ + b.m_).eval());
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  return ComplexMatrix((a.m_ - b.m_).eval());
}

ComplexMatrix operator-(const ComplexMatrix& a) {
  return ComplexMatrix((-a.m_).eval());
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    raise(ErrorCode::DimensionMismatch, "matrix product shapes incompatible");
  }
  return ComplexMatrix((a.m_ * b.m_).eval());
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  return ComplexMatrix((s * a.m_).eval());
}

ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols() != x.dim()) {
    raise(ErrorCode::DimensionMismatch, "matrix-vector shapes incompatible");
  }
  return ComplexVector((a.m_ * x.eigen()).eval());
}

ComplexVector::ComplexVector(Eigen::VectorXcd v) : v_(std::move(v)) {
  check_finite(v_);
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : v_(static_cast<Index>(entries.size())) {
  Index i = 0;
  for (const Complex& z : entries) v_(i++) = z;
  check_finite(v_);
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) raise(ErrorCode::DimensionMismatch, "vector dims differ");
  return ComplexVector((a.v_ + b.v_).eval());
}

ComplexVector operator-(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) raise(ErrorCode::DimensionMismatch, "vector dims differ");
  return ComplexVector((a.v_ - b.v_).eval());
}

ComplexVector operator*(Complex s, const ComplexVector& a) {
  return ComplexVector((s * a.v_).eval());
}

ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) raise(ErrorCode::DimensionMismatch, "hstack row counts differ");
  Eigen::MatrixXcd m(a.rows(), a.cols() + b.cols());
  m << a.eigen(), b.eigen();
  return ComplexMatrix(std::move(m));
}

ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.cols()) raise(ErrorCode::DimensionMismatch, "vstack col counts differ");
  Eigen::MatrixXcd m(a.rows() + b.rows(), a.cols());
  m << a.eigen(), b.eigen();
  return ComplexMatrix(std::move(m));
}

}  // namespace grushin
