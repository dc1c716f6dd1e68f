// Diagonal quadratic spaces over a quadratic field and exact linear algebra.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hypcox/exactnum.hpp"

namespace hypcox {

class LinearAlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldScalar> data_;
};

struct QVector {
  std::vector<FieldScalar> coords;

  std::size_t size() const { return coords.size(); }
  const FieldScalar& operator[](std::size_t i) const { return coords[i]; }
  FieldScalar& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  friend bool operator==(const QVector&, const QVector&) = default;
};

QVector operator+(const QVector& u, const QVector& v);
QVector operator-(const QVector& u, const QVector& v);
QVector operator*(const FieldScalar& s, const QVector& v);

/// A diagonal quadratic form sum(diag[i] * x_i^2) over Q(sqrt d).
///
/// Either Lorentzian (exactly one negative coefficient) or positive definite;
/// the latter hosts root-system models of spherical diagrams.
class QSpace {
 public:
  QSpace() = default;
  explicit QSpace(std::vector<FieldScalar> diag);

  /// -x0^2 + x1^2 + ... + xn^2
  static QSpace lorentzian(std::size_t n);
  static QSpace euclidean(std::size_t n);

  std::size_t dim() const { return diag_.size(); }
  const std::vector<FieldScalar>& diag() const { return diag_; }
  long field() const { return d_; }
  bool is_lorentzian() const { return negatives_ == 1; }

  friend bool operator==(const QSpace&, const QSpace&) = default;

 private:
  std::vector<FieldScalar> diag_;
  long d_ = 0;
  int negatives_ = 0;
};

FieldScalar inner(const QSpace& space, const QVector& u, const QVector& v);
inline FieldScalar norm(const QSpace& space, const QVector& v) { return inner(space, v, v); }

/// Reflection across root^perp: v - 2 (v.root / root.root) root.
QVector reflect(const QSpace& space, const QVector& root, const QVector& v);

Matrix gram(const QSpace& space, std::span<const QVector> vectors);

/// Pi-perp(v): the component of v orthogonal to span(vectors), from the exact
/// solution of the Gram system. Throws LinearAlgebraError for a degenerate span.
QVector orth_project(const QSpace& space, std::span<const QVector> span, const QVector& v);
/// Pi(v) = v - Pi-perp(v).
QVector span_project(const QSpace& space, std::span<const QVector> span, const QVector& v);

/// Solves A x = b exactly by fraction-free elimination with first-nonzero
/// pivoting. Throws LinearAlgebraError when A is singular.
std::vector<FieldScalar> solve(const Matrix& a, std::span<const FieldScalar> b);

/// Basis of {x : m x = 0}.
std::vector<QVector> null_space(const Matrix& m);

/// Pairwise-orthogonal, anisotropic basis of span(basis) (which must be
/// nondegenerate), built by congruence diagonalization.
std::vector<QVector> orthogonal_basis(const QSpace& space, std::vector<QVector> basis);

/// Positive rescaling of v clearing all coordinate denominators.
QVector clear_denominators(const QVector& v);

/// True when u = s v for some s > 0.
bool positively_proportional(const QVector& u, const QVector& v);

/// Realizes a symmetric matrix as a Gram matrix: returns a diagonal space and
/// vectors whose Gram matrix is `g`. The radical of `g` is dropped.
struct GramRealization {
  QSpace space;
  std::vector<QVector> vectors;
};
GramRealization realize_gram(const Matrix& g);

}  // namespace hypcox
