// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>

#include "grushin/error.hpp"

namespace grushin {

using Complex = std::complex<double>;
using Index = Eigen::Index;

class ComplexVector;

/// Dense complex matrix, the universal numeric carrier of the library.
///
/// Thin value wrapper over an Eigen matrix: entries are validated to be
/// finite on construction, logical entry order is row-major (i, j), and all
/// operations are pure. Mutating access is provided for entry-wise assembly;
/// operations never mutate their arguments, so values can be shared across
/// threads freely once built.
class ComplexMatrix {
 public:
  ComplexMatrix() : m_(0, 0) {}
  ComplexMatrix(Index rows, Index cols);
  ComplexMatrix(Eigen::MatrixXcd m);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(Index rows, Index cols);
  static ComplexMatrix identity(Index n);

  Index rows() const { return m_.rows(); }
  Index cols() const { return m_.cols(); }
  bool empty() const { return m_.size() == 0; }
  bool is_square() const { return m_.rows() == m_.cols(); }

  Complex operator()(Index i, Index j) const { return m_(i, j); }
  Complex& operator()(Index i, Index j) { return m_(i, j); }

  ComplexMatrix adjoint() const { return ComplexMatrix(m_.adjoint().eval()); }
  ComplexMatrix transpose() const { return ComplexMatrix(m_.transpose().eval()); }
  ComplexMatrix conjugate() const { return ComplexMatrix(m_.conjugate().eval()); }
  ComplexMatrix block(Index i, Index j, Index rows, Index cols) const;
  ComplexVector col(Index j) const;
  ComplexVector row(Index i) const;

  Complex trace() const { return m_.trace(); }
  /// Frobenius norm.
  double norm() const { return m_.norm(); }
  double max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

  bool is_hermitian(double tol) const;
  bool is_skew_adjoint(double tol) const;

  const Eigen::MatrixXcd& eigen() const { return m_; }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend ComplexMatrix operator*(const ComplexMatrix& a, Complex s);
  friend ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);

 private:
  Eigen::MatrixXcd m_;
};

/// Dense complex vector; entries validated finite on construction.
class ComplexVector {
 public:
  ComplexVector() : v_(0) {}
  explicit ComplexVector(Index dim) : v_(Eigen::VectorXcd::Zero(dim)) {}
  ComplexVector(Eigen::VectorXcd v);
  ComplexVector(std::initializer_list<Complex> entries);

  static ComplexVector zero(Index dim) { return ComplexVector(dim); }

  Index dim() const { return v_.size(); }
  Complex operator[](Index i) const { return v_(i); }
  Complex& operator[](Index i) { return v_(i); }

  double norm() const { return v_.norm(); }
  ComplexMatrix as_column() const { return ComplexMatrix(Eigen::MatrixXcd(v_)); }

  const Eigen::VectorXcd& eigen() const { return v_; }

  friend ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
  friend ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);
  friend ComplexVector operator*(Complex s, const ComplexVector& a);

 private:
  Eigen::VectorXcd v_;
};

/// [a b] side-by-side concatenation.
ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b);
/// [a; b] stacked concatenation.
ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace grushin
