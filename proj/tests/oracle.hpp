#pragma once

// Reference computations kept apart from the library: slow, direct, and
// written against a different representation so they can catch mistakes in
// the optimized paths.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "waringlab/binform.hpp"

namespace oracle {

using waringlab::BinaryForm;
using waringlab::DualForm;
using waringlab::Matrix;
using waringlab::Scalar;
using waringlab::Vector;

// Polynomial in x, y as a map from (x-exponent, y-exponent) to coefficient.
using Poly2 = std::map<std::pair<int, int>, Scalar>;

inline Poly2 as_poly(const BinaryForm& f) {
  Poly2 p;
  for (int i = 0; i <= f.degree(); ++i)
    if (f[i] != 0) p[{f.degree() - i, i}] = f[i];
  return p;
}

inline Poly2 differentiate(const Poly2& p, int dx, int dy) {
  Poly2 out;
  for (const auto& [e, c] : p) {
    if (e.first < dx || e.second < dy) continue;
    Scalar k = c;
    for (int i = 0; i < dx; ++i) k *= e.first - i;
    for (int i = 0; i < dy; ++i) k *= e.second - i;
    out[{e.first - dx, e.second - dy}] += k;
  }
  return out;
}

inline BinaryForm contract(const DualForm& g, const BinaryForm& f) {
  const int s = g.degree();
  Poly2 acc;
  const Poly2 pf = as_poly(f);
  for (int j = 0; j <= s; ++j) {
    if (g[j] == 0) continue;
    for (const auto& [e, c] : differentiate(pf, s - j, j)) acc[e] += g[j] * c;
  }
  BinaryForm r(f.degree() - s);
  for (const auto& [e, c] : acc) r[e.second] += c;
  return r;
}

// Apolar forms of degree t, found as the null space of the contraction
// table by plain Gauss-Jordan elimination.
inline std::vector<DualForm> apolar_basis(const BinaryForm& f, int t) {
  const int d = f.degree();
  if (t > d) {
    std::vector<DualForm> all;
    for (int j = 0; j <= t; ++j) all.push_back(DualForm::monomial(t, j));
    return all;
  }
  const int rows = d - t + 1, cols = t + 1;
  std::vector<Vector> m(static_cast<std::size_t>(rows), Vector(static_cast<std::size_t>(cols)));
  for (int j = 0; j < cols; ++j) {
    BinaryForm col = oracle::contract(DualForm::monomial(t, j), f);
    for (int k = 0; k < rows; ++k) m[k][j] = col[k];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Scalar f2 = m[i][c];
      for (int k = 0; k < cols; ++k) m[i][k] -= f2 * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<DualForm> basis;
  for (int free = 0; free < cols; ++free) {
    bool is_pivot = false;
    for (int pc : pivot_col) is_pivot = is_pivot || pc == free;
    if (is_pivot) continue;
    DualForm g(t);
    g[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) g[pivot_col[i]] = -m[i][free];
    basis.push_back(g);
  }
  return basis;
}

// Squarefree through the discriminant; linear and constant forms count as
// squarefree when nonzero.
inline bool squarefree(const DualForm& g) {
  if (g.degree() < 2) return !g.is_zero();
  return waringlab::discriminant(g) != 0;
}

// Visits the weight vectors of {0..top}^m with the given coordinate sum;
// stops when f returns true.
template <class F>
bool for_each_weight(std::vector<long>& w, std::size_t i, long remaining, long top, const F& f) {
  if (i + 1 == w.size()) {
    if (remaining > top) return false;
    w[i] = remaining;
    return f(w);
  }
  for (long x = std::min(top, remaining); x >= 0; --x) {
    w[i] = x;
    if (for_each_weight(w, i + 1, remaining - x, top, f)) return true;
  }
  return false;
}

// Whether some member of the linear system is squarefree. A repeated factor
// shared by the whole basis settles "no"; otherwise weights on the grid
// {0..2t-2}^m are tried by increasing coordinate sum, which is exhaustive
// because the discriminant has degree 2t - 2 in the weights.
inline bool has_squarefree_member(const std::vector<DualForm>& basis) {
  if (basis.empty()) return false;
  const int t = basis.front().degree();
  DualForm common = basis.front();
  for (const auto& b : basis) common = waringlab::gcd(common, b);
  if (common.degree() >= 2 && !oracle::squarefree(common)) return false;
  const std::size_t m = basis.size();
  const long top = std::max(1L, 2L * t - 2);
  std::vector<long> w(m, 0);
  auto test = [&](const std::vector<long>& weights) {
    DualForm g(t);
    for (std::size_t k = 0; k < m; ++k)
      for (int j = 0; j <= t; ++j) g[j] += weights[k] * basis[k][j];
    return !g.is_zero() && oracle::squarefree(g);
  };
  for (long sum = 1; sum <= static_cast<long>(m) * top; ++sum)
    if (for_each_weight(w, 0, sum, top, test)) return true;
  return false;
}

// Rank as the least t for which I(F)_t has a squarefree member.
inline int waring_rank(const BinaryForm& f) {
  for (int t = 1; t <= f.degree() + 1; ++t)
    if (has_squarefree_member(apolar_basis(f, t))) return t;
  return -1;
}

// Border rank as the least t with a nonzero apolar form.
inline int border_rank(const BinaryForm& f) {
  for (int t = 1; t <= f.degree() + 1; ++t)
    if (!apolar_basis(f, t).empty()) return t;
  return -1;
}

// (a x + b y)^d expanded monomial by monomial.
inline Vector veronese_point(const Scalar& a, const Scalar& b, int d) {
  Vector v(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    Scalar c = 1;
    for (int k = 0; k < i; ++k) c = c * (d - k) / (k + 1);
    for (int k = 0; k < d - i; ++k) c *= a;
    for (int k = 0; k < i; ++k) c *= b;
    v[i] = c;
  }
  return v;
}

}  // namespace oracle
