#include "waringlab/binform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "waringlab/error.hpp"

namespace waringlab {

namespace {

std::string join_coeffs(const Vector& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += to_string(c[i]);
  }
  return s;
}

// Number of leading zero coefficients: the multiplicity of the second
// variable as a factor.
int second_variable_multiplicity(const DualForm& g) {
  int m = 0;
  while (m <= g.degree() && sgn(g[m]) == 0) ++m;
  return m;
}

// Univariate polynomials in descending order of degree, as they arise from
// dehomogenizing at Y = 1.
using Poly = std::vector<Scalar>;

void strip(Poly& p) {
  auto it = std::find_if(p.begin(), p.end(), [](const Scalar& x) { return sgn(x) != 0; });
  p.erase(p.begin(), it);
}

Poly poly_mod(Poly a, const Poly& b) {
  strip(a);
  while (a.size() >= b.size() && !a.empty()) {
    Scalar f = a.front() / b.front();
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    a.erase(a.begin());
    strip(a);
  }
  return a;
}

Poly monic(Poly p) {
  strip(p);
  if (p.empty()) return p;
  Scalar inv = 1 / p.front();
  for (auto& x : p) x *= inv;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

Matrix sylvester(const Vector& p, const Vector& q) {
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  Matrix s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = p[i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = q[i];
  return s;
}

Scalar power(const Scalar& x, long e) {
  Scalar r = 1;
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

std::string to_string(const BinaryForm& f) { return std::to_string(f.degree()) + ":" + join_coeffs(f.coeffs()); }

std::string to_string(const DualForm& g) { return std::to_string(g.degree()) + ":" + join_coeffs(g.coeffs()); }

BinaryForm parse_binary_form(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("form must look like d:c0,...,cd");
  std::string head(text.substr(0, colon));
  head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c) != 0; }),
             head.end());
  if (head.empty() || !std::all_of(head.begin(), head.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw ParseError("bad degree in form '" + std::string(text) + "'");
  const int d = std::stoi(head);
  Vector coeffs;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    coeffs.push_back(parse_scalar(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (static_cast<int>(coeffs.size()) != d + 1)
    throw ParseError("form of degree " + std::to_string(d) + " needs " + std::to_string(d + 1) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  return BinaryForm(std::move(coeffs));
}

// ---------------------------------------------------------------- apolarity

BinaryForm contract(const DualForm& g, const BinaryForm& f) {
  const int s = g.degree();
  const int d = f.degree();
  if (s > d) throw PreconditionError("contract: dual form degree exceeds form degree");
  BinaryForm out(d - s);
  for (int k = 0; k <= d - s; ++k) {
    for (int j = 0; j <= s; ++j) {
      if (sgn(g[j]) == 0 || sgn(f[k + j]) == 0) continue;
      out[k] += g[j] * f[k + j] * Scalar(falling_factorial(d - k - j, s - j) * falling_factorial(k + j, j));
    }
  }
  return out;
}

Matrix catalecticant(const BinaryForm& f, int s) {
  const int d = f.degree();
  if (s < 0 || s > d) throw PreconditionError("catalecticant: need 0 <= s <= d");
  Matrix m(static_cast<std::size_t>(d - s + 1), static_cast<std::size_t>(s + 1));
  for (int k = 0; k <= d - s; ++k)
    for (int j = 0; j <= s; ++j)
      if (sgn(f[k + j]) != 0)
        m(k, j) = f[k + j] * Scalar(falling_factorial(d - k - j, s - j) * falling_factorial(k + j, j));
  return m;
}

Matrix contraction_matrix(const DualForm& g, int d) {
  const int t = g.degree();
  if (t > d + 1) throw PreconditionError("contraction_matrix: dual form degree exceeds d + 1");
  const int rows = d - t + 1;
  Matrix m(static_cast<std::size_t>(std::max(rows, 0)), static_cast<std::size_t>(d + 1));
  for (int k = 0; k < rows; ++k)
    for (int i = k; i <= std::min(d, k + t); ++i) {
      const int j = i - k;
      if (sgn(g[j]) != 0) m(k, i) = g[j] * Scalar(falling_factorial(d - i, t - j) * falling_factorial(i, j));
    }
  return m;
}

DualForm ApolarSlice::combination(std::span<const Scalar> weights) const {
  DualForm g(degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(weights[i]) == 0) continue;
    for (int k = 0; k <= degree; ++k) g[k] += weights[i] * basis[i][k];
  }
  return g;
}

ApolarSlice apolar_slice(const BinaryForm& f, int t) {
  const int d = f.degree();
  if (t < 0 || t > d + 1) throw PreconditionError("apolar_slice: need 0 <= t <= d + 1");
  ApolarSlice slice{f, t, {}};
  if (t == d + 1) {
    for (int k = 0; k <= t; ++k) slice.basis.push_back(DualForm::monomial(t, k));
    return slice;
  }
  for (auto& v : kernel(catalecticant(f, t)).basis_vectors()) slice.basis.emplace_back(std::move(v));
  return slice;
}

BinaryForm power_of_linear(const Scalar& a, const Scalar& b, int d) {
  BinaryForm f(d);
  for (int i = 0; i <= d; ++i) f[i] = Scalar(binomial(d, i)) * power(a, d - i) * power(b, i);
  return f;
}

DualForm dual_linear(const Scalar& a, const Scalar& b) { return DualForm(Vector{b, -a}); }

DualForm vanishing_form(const std::vector<std::pair<Scalar, Scalar>>& points) {
  DualForm g(Vector{Scalar(1)});
  for (const auto& [a, b] : points) g = g * dual_linear(a, b);
  return g;
}

LinearSubspace root_span(const DualForm& g, int d) {
  if (g.is_zero()) throw PreconditionError("root_span: zero dual form");
  return kernel(contraction_matrix(g, d));
}

// ---------------------------------------------------------------- polynomial algebra

DualForm partial_first(const DualForm& g) {
  const int t = g.degree();
  if (t == 0) return DualForm(Vector{Scalar(0)});
  DualForm out(t - 1);
  for (int k = 0; k < t; ++k) out[k] = (t - k) * g[k];
  return out;
}

DualForm partial_second(const DualForm& g) {
  const int t = g.degree();
  if (t == 0) return DualForm(Vector{Scalar(0)});
  DualForm out(t - 1);
  for (int k = 1; k <= t; ++k) out[k - 1] = k * g[k];
  return out;
}

Scalar resultant(const DualForm& p, const DualForm& q) {
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0) return power(p[0], n);
  if (n == 0) return power(q[0], m);
  return determinant(sylvester(p.coeffs(), q.coeffs()));
}

bool squarefree(const DualForm& g) {
  if (g.is_zero()) throw PreconditionError("squarefree: zero form");
  if (g.degree() <= 1) return true;
  return sgn(resultant(partial_first(g), partial_second(g))) != 0;
}

bool squarefree_by_gcd(const DualForm& g) {
  if (g.is_zero()) throw PreconditionError("squarefree: zero form");
  if (g.degree() <= 1) return true;
  const DualForm parts[] = {g, partial_first(g), partial_second(g)};
  return gcd(parts).degree() == 0;
}

Scalar discriminant(const DualForm& g) {
  if (g.is_zero()) throw PreconditionError("discriminant: zero form");
  const int t = g.degree();
  if (t <= 1) return 1;
  // A zero leading coefficient means a root at (1 : 0); it is simple iff
  // the next coefficient is nonzero, and then contributes a squared factor.
  Scalar correction = 1;
  Poly p(g.coeffs().begin(), g.coeffs().end());
  if (sgn(p[0]) == 0) {
    if (sgn(p[1]) == 0) return 0;
    correction = p[1] * p[1];
    p.erase(p.begin());
  }
  const long n = static_cast<long>(p.size()) - 1;
  if (n <= 1) return correction;
  Poly dp(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) dp[static_cast<std::size_t>(i)] = (n - i) * p[static_cast<std::size_t>(i)];
  Scalar res = determinant(sylvester(p, dp));
  Scalar disc = res / p[0];
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return correction * disc;
}

DualForm gcd(const DualForm& g, const DualForm& h) {
  if (g.is_zero() && h.is_zero()) throw PreconditionError("gcd: both forms are zero");
  if (g.is_zero()) return gcd(h, h);
  if (h.is_zero()) return gcd(g, g);
  // Roots at (1 : 0) are the factors of the second variable; they vanish
  // under dehomogenization so they are counted separately.
  const int mg = second_variable_multiplicity(g);
  const int mh = second_variable_multiplicity(h);
  Poly pg(g.coeffs().begin() + mg, g.coeffs().end());
  Poly ph(h.coeffs().begin() + mh, h.coeffs().end());
  Poly c = poly_gcd(pg, ph);
  const int m = std::min(mg, mh);
  Vector coeffs(static_cast<std::size_t>(m), Scalar(0));
  coeffs.insert(coeffs.end(), c.begin(), c.end());
  return DualForm(std::move(coeffs));
}

DualForm gcd(std::span<const DualForm> forms) {
  if (forms.empty()) throw PreconditionError("gcd: empty list");
  DualForm acc = forms.front();
  for (std::size_t i = 1; i < forms.size(); ++i) {
    if (forms[i].is_zero()) continue;
    acc = acc.is_zero() ? gcd(forms[i], forms[i]) : gcd(acc, forms[i]);
    if (acc.degree() == 0) break;
  }
  if (acc.is_zero()) throw PreconditionError("gcd: all forms are zero");
  return gcd(acc, acc);
}

DualForm exact_divide(const DualForm& g, const DualForm& h) {
  if (h.is_zero()) throw PreconditionError("exact_divide: division by zero form");
  const int e = g.degree() - h.degree();
  if (e < 0) throw PreconditionError("exact_divide: divisor has larger degree");
  const int a = second_variable_multiplicity(h);
  DualForm q(e);
  for (int k = 0; k <= e; ++k) {
    Scalar acc = g[k + a];
    for (int i = a + 1; i <= h.degree() && i <= k + a; ++i) acc -= h[i] * q[k + a - i];
    q[k] = acc / h[a];
  }
  if (!(q * h == g)) throw PreconditionError("exact_divide: divisor does not divide");
  return q;
}

// ---------------------------------------------------------------- irredundancy

std::vector<DualForm> scaled_quotient(const DualForm& g) {
  const int t = g.degree();
  std::vector<DualForm> h(static_cast<std::size_t>(t), DualForm(t - 1));
  for (int k = 0; k < t; ++k)
    for (int i = 0; i <= k; ++i) h[static_cast<std::size_t>(k)][t - 1 - k + i] = g[i];
  return h;
}

namespace {

// Mirror of scaled_quotient, scaled by u^t instead of v^t (sign dropped).
std::vector<DualForm> scaled_quotient_u(const DualForm& g) {
  const int t = g.degree();
  std::vector<DualForm> h(static_cast<std::size_t>(t), DualForm(t - 1));
  for (int k = 0; k < t; ++k)
    for (int i = k + 1; i <= t; ++i) h[static_cast<std::size_t>(k)][i - k - 1] = g[i];
  return h;
}

std::vector<DualForm> conditions(const std::vector<DualForm>& quotient, const Matrix& cat) {
  std::vector<DualForm> p;
  const int e = quotient.front().degree();
  for (std::size_t m = 0; m < cat.rows(); ++m) {
    DualForm pm(e);
    for (std::size_t k = 0; k < cat.cols(); ++k) {
      if (sgn(cat(m, k)) == 0) continue;
      for (int j = 0; j <= e; ++j) pm[j] += cat(m, k) * quotient[k][j];
    }
    p.push_back(std::move(pm));
  }
  return p;
}

}  // namespace

DivisionFamily division_family(const DualForm& g, const BinaryForm& f) {
  const int t = g.degree();
  const int d = f.degree();
  if (t < 2 || t > d + 1) throw PreconditionError("division_family: need 2 <= deg g <= d + 1");
  if (!squarefree(g)) throw PreconditionError("division_family: g is not squarefree");
  const Matrix cat = catalecticant(f, t - 1);
  return {conditions(scaled_quotient(g), cat), conditions(scaled_quotient_u(g), cat)};
}

bool irredundant(const DualForm& g, const BinaryForm& f) {
  const int t = g.degree();
  if (t <= 1) return !g.is_zero();
  const DivisionFamily fam = division_family(g, f);
  std::vector<DualForm> forms{g};
  forms.insert(forms.end(), fam.v_scaled.begin(), fam.v_scaled.end());
  DualForm common = gcd(forms);
  // v_scaled vanishes identically at v = 0, so drop that factor and settle
  // the root (1 : 0) by dividing it out directly.
  const int mult = second_variable_multiplicity(common);
  if (common.degree() - mult >= 1) return false;
  if (sgn(g[0]) == 0) {
    DualForm h(Vector(g.coeffs().begin() + 1, g.coeffs().end()));
    if (contract(h, f).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- linear systems

std::optional<DualForm> find_squarefree_member(std::span<const DualForm> basis) {
  const std::size_t m = basis.size();
  if (m == 0) return std::nullopt;
  const int t = basis.front().degree();
  auto combine = [&](const std::vector<long>& w) {
    DualForm g(t);
    for (std::size_t i = 0; i < m; ++i) {
      if (w[i] == 0) continue;
      for (int k = 0; k <= t; ++k) g[k] += w[i] * basis[i][k];
    }
    return g;
  };
  auto accept = [](const DualForm& g) { return !g.is_zero() && squarefree(g); };

  for (const auto& b : basis)
    if (accept(b)) return b;
  std::vector<std::vector<long>> probes(3, std::vector<long>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const long x = static_cast<long>(i);
    probes[0][i] = 1;
    probes[1][i] = x + 1;
    probes[2][i] = 1 + x + x * x;
  }
  for (const auto& w : probes)
    if (auto g = combine(w); accept(g)) return g;

  // Every member is a multiple of the common factor; a repeated factor there
  // settles the question without the grid.
  const DualForm common = gcd(basis);
  if (common.degree() >= 2 && !squarefree(common)) return std::nullopt;
  if (t <= 1) return std::nullopt;

  const long top = 2L * t - 2;
  std::vector<long> w(m, 0);
  while (true) {
    std::size_t i = 0;
    while (i < m && w[i] == top) w[i++] = 0;
    if (i == m) break;
    ++w[i];
    if (auto g = combine(w); accept(g)) return g;
  }
  return std::nullopt;
}

}  // namespace waringlab
