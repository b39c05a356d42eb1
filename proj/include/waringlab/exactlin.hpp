#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace waringlab {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Scalar>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Scalar& x);
/// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Scalar parse_scalar(std::string_view text);

bool is_zero(std::span<const Scalar> v);
/// Scales v to coprime integers whose first nonzero entry is positive.
Vector primitive(std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

Integer binomial(long n, long k);
/// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(long n, long k);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  void append_row(std::span<const Scalar> v);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  /// Pivot column of each nonzero row of `reduced`, in order.
  std::vector<std::size_t> pivots;
  /// Invertible matrix with transform * input == reduced.
  Matrix transform;
};

/// Reduced row-echelon form. Pivots are chosen as the leftmost column with
/// a nonzero entry and, within it, the first such row.
Matrix rref(const Matrix& m);
RrefResult rref_with_transform(const Matrix& m);

/// Exact rank via fraction-free elimination on integer-scaled rows.
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vector>& rows);

/// Determinant of a square matrix (fraction-free elimination).
Scalar determinant(const Matrix& m);

class LinearSubspace;

/// Right null space {v : m v = 0}, as a subspace of P^{cols-1}.
LinearSubspace kernel(const Matrix& m);

/// Projective linear subspace of P^N, stored by a canonical basis: the
/// reduced row-echelon form with every row scaled to coprime integers and a
/// positive leading entry. Equal subspaces have identical bases.
class LinearSubspace {
 public:
  /// The empty subspace of P^ambient_dim.
  explicit LinearSubspace(std::size_t ambient_dim = 0);

  static LinearSubspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static LinearSubspace point(std::span<const Scalar> v);
  static LinearSubspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  /// Dimension of the underlying vector space.
  std::size_t vector_dim() const { return basis_.rows(); }
  /// Projective dimension; -1 for the empty subspace.
  long dim() const { return static_cast<long>(basis_.rows()) - 1; }
  bool empty() const { return basis_.rows() == 0; }
  bool is_point() const { return basis_.rows() == 1; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  /// Throws PreconditionError for the zero vector or a length mismatch.
  bool contains(std::span<const Scalar> v) const;
  bool contains(const LinearSubspace& other) const;

  /// Vectors orthogonal to every basis vector (the dual subspace).
  LinearSubspace annihilator() const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) = default;

 private:
  LinearSubspace(std::size_t ambient_dim, Matrix canonical_basis);
  friend LinearSubspace kernel(const Matrix& m);

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// a ∩ b. Throws PreconditionError on ambient mismatch.
LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b);
/// The span of a ∪ b.
LinearSubspace join(const LinearSubspace& a, const LinearSubspace& b);

}  // namespace waringlab
