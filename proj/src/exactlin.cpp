#include "waringlab/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "waringlab/error.hpp"

namespace waringlab {

std::string to_string(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Scalar x(n, d);
  x.canonicalize();
  return x;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector primitive(std::span<const Scalar> v) {
  Integer l = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  Vector out(v.size());
  if (g == 0) return out;
  auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (sgn(*first) < 0) g = -g;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(ints[i] / g);
  return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer falling_factorial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= n - i;
  return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void Matrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_) throw PreconditionError("row length does not match matrix width");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw PreconditionError("vector length does not match matrix width");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product: inner dimensions differ");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

// ---------------------------------------------------------------- elimination

namespace {

// Gauss-Jordan in place. When `track` is non-null the same row operations
// are applied to it.
std::vector<std::size_t> gauss_jordan(Matrix& m, Matrix* track) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    if (track) track->swap_rows(r, p);
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    if (track)
      for (auto& x : track->row(r)) x *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      if (track)
        for (std::size_t j = 0; j < track->cols(); ++j) (*track)(i, j) -= f * (*track)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix rref(const Matrix& m) {
  Matrix out = m;
  gauss_jordan(out, nullptr);
  return out;
}

RrefResult rref_with_transform(const Matrix& m) {
  RrefResult res{m, {}, Matrix::identity(m.rows())};
  res.pivots = gauss_jordan(res.reduced, &res.transform);
  return res;
}

std::size_t rank(const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw PreconditionError("rank: ragged rows");
    Vector p = primitive(r);
    std::vector<Integer> ir(cols);
    for (std::size_t j = 0; j < cols; ++j) ir[j] = p[j].get_num();
    a.push_back(std::move(ir));
  }
  // Fraction-free (Bareiss) elimination; every division below is exact.
  std::size_t rk = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t p = rk;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[rk], a[p]);
    for (std::size_t i = rk + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

std::size_t rank(const Matrix& m) { return rank(m.row_vectors()); }

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Clear denominators row by row, then Bareiss on integers.
  Scalar scale = 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    scale /= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Scalar det(a[n - 1][n - 1]);
  return sign * det * scale;
}

// ---------------------------------------------------------------- subspaces

namespace {

Matrix canonical_rows(const Matrix& reduced, std::size_t count) {
  Matrix out(0, reduced.cols());
  for (std::size_t r = 0; r < count; ++r) out.append_row(primitive(reduced.row(r)));
  return out;
}

}  // namespace

LinearSubspace::LinearSubspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim + 1) {}

LinearSubspace::LinearSubspace(std::size_t ambient_dim, Matrix canonical_basis)
    : ambient_(ambient_dim), basis_(std::move(canonical_basis)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    auto row = basis_.row(r);
    pivots_.push_back(static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](const Scalar& x) { return sgn(x) != 0; }) - row.begin()));
  }
}

LinearSubspace LinearSubspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Matrix m(0, ambient_dim + 1);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim + 1) throw PreconditionError("span: vector length does not match ambient space");
    m.append_row(v);
  }
  Matrix red = m;
  auto pivots = gauss_jordan(red, nullptr);
  return LinearSubspace(ambient_dim, canonical_rows(red, pivots.size()));
}

LinearSubspace LinearSubspace::point(std::span<const Scalar> v) {
  if (v.empty() || is_zero(v)) throw PreconditionError("the zero vector is not a projective point");
  return span(v.size() - 1, {Vector(v.begin(), v.end())});
}

LinearSubspace LinearSubspace::whole(std::size_t ambient_dim) {
  return LinearSubspace(ambient_dim, Matrix::identity(ambient_dim + 1));
}

bool LinearSubspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_ + 1) throw PreconditionError("contains: vector length does not match ambient space");
  if (is_zero(v)) throw PreconditionError("contains: the zero vector is not a projective point");
  Vector w(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const std::size_t p = pivots_[r];
    if (sgn(w[p]) == 0) continue;
    Scalar f = w[p] / basis_(r, p);
    for (std::size_t j = p; j < w.size(); ++j) w[j] -= f * basis_(r, j);
  }
  return is_zero(w);
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("contains: ambient dimensions differ");
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

LinearSubspace LinearSubspace::annihilator() const {
  if (empty()) return whole(ambient_);
  return kernel(basis_);
}

LinearSubspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) throw PreconditionError("kernel: matrix has no columns");
  Matrix red = m;
  auto pivots = gauss_jordan(red, nullptr);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    vecs.push_back(std::move(v));
  }
  return LinearSubspace::span(n - 1, vecs);
}

LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("intersect: ambient dimensions differ");
  if (a.empty() || b.empty()) return LinearSubspace(a.ambient_dim());
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  Matrix stacked = a.annihilator().basis();
  const LinearSubspace b_ann = b.annihilator();
  const Matrix& bb = b_ann.basis();
  for (std::size_t r = 0; r < bb.rows(); ++r) stacked.append_row(bb.row(r));
  return kernel(stacked);
}

LinearSubspace join(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("join: ambient dimensions differ");
  auto vecs = a.basis_vectors();
  for (auto& v : b.basis_vectors()) vecs.push_back(std::move(v));
  return LinearSubspace::span(a.ambient_dim(), vecs);
}

}  // namespace waringlab
