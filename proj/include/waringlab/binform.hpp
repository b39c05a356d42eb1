#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waringlab/exactlin.hpp"

namespace waringlab {

/// Homogeneous form of degree d in two variables; coefficient i multiplies
/// (first)^(d-i) (second)^i.
///
/// The tag keeps primal forms F(x, y), which are points of P^d, apart from
/// dual forms g(X, Y), which act on them by differentiation.
template <class Tag>
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  explicit HomogeneousForm(int degree) : coeffs_(static_cast<std::size_t>(degree) + 1) {}
  explicit HomogeneousForm(Vector coeffs) : coeffs_(std::move(coeffs)) {}

  static HomogeneousForm monomial(int degree, int i) {
    HomogeneousForm f(degree);
    f.coeffs_[static_cast<std::size_t>(i)] = 1;
    return f;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Scalar& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const Vector& coeffs() const { return coeffs_; }
  bool is_zero() const { return waringlab::is_zero(coeffs_); }

  /// Value at (first, second) = (a, b).
  Scalar evaluate(const Scalar& a, const Scalar& b) const {
    Scalar s = 0;
    const int d = degree();
    for (int i = 0; i <= d; ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      Scalar term = coeffs_[i];
      for (int k = 0; k < d - i; ++k) term *= a;
      for (int k = 0; k < i; ++k) term *= b;
      s += term;
    }
    return s;
  }

  /// Coprime integer coefficients, first nonzero one positive.
  HomogeneousForm normalized() const { return HomogeneousForm(primitive(coeffs_)); }

  friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
    HomogeneousForm s = a;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] += b.coeffs_[i];
    return s;
  }
  friend HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) {
    HomogeneousForm s = a;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] -= b.coeffs_[i];
    return s;
  }
  friend HomogeneousForm operator*(const Scalar& c, const HomogeneousForm& a) {
    HomogeneousForm s = a;
    for (auto& x : s.coeffs_) x *= c;
    return s;
  }
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    HomogeneousForm p(a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i) {
      if (sgn(a[i]) == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) p[i + j] += a[i] * b[j];
    }
    return p;
  }
  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) = default;

 private:
  Vector coeffs_;
};

struct PrimalTag;
struct DualTag;

/// F(x, y): a point of P^d through the rational normal curve.
using BinaryForm = HomogeneousForm<PrimalTag>;
/// g(X, Y): X acts as d/dx and Y as d/dy. A dual form also describes a
/// finite point set implicitly: its roots (a : b) are the points (ax + by)^d.
using DualForm = HomogeneousForm<DualTag>;

/// `d:c0,c1,...,cd` with each ci an integer or p/q.
std::string to_string(const BinaryForm& f);
BinaryForm parse_binary_form(std::string_view text);
std::string to_string(const DualForm& g);

/// True when the two nonzero forms are proportional.
template <class Tag>
bool proportional(const HomogeneousForm<Tag>& a, const HomogeneousForm<Tag>& b) {
  return a.degree() == b.degree() && a.normalized() == b.normalized();
}

// ---------------------------------------------------------------- apolarity

/// g acting on F by differentiation. Throws PreconditionError if deg g > deg F.
BinaryForm contract(const DualForm& g, const BinaryForm& f);

/// Matrix of g -> contract(g, f) on dual forms of degree s;
/// (d-s+1) x (s+1), column j is the image of X^(s-j) Y^j.
Matrix catalecticant(const BinaryForm& f, int s);

/// Matrix of F' -> contract(g, F') on binary forms of degree d;
/// (d-t+1) x (d+1). Its kernel is the span of the points cut out by g.
Matrix contraction_matrix(const DualForm& g, int d);

/// The apolar forms of degree t: I(F)_t.
struct ApolarSlice {
  BinaryForm source;
  int degree = 0;
  std::vector<DualForm> basis;

  std::size_t dim() const { return basis.size(); }
  DualForm combination(std::span<const Scalar> weights) const;
};

/// Valid for 0 <= t <= d + 1; every form of degree d + 1 is apolar.
ApolarSlice apolar_slice(const BinaryForm& f, int t);

/// (a x + b y)^d, the point of the rational normal curve over (a : b).
BinaryForm power_of_linear(const Scalar& a, const Scalar& b, int d);
/// b X - a Y, the dual linear form annihilating (a x + b y)^d.
DualForm dual_linear(const Scalar& a, const Scalar& b);
/// Product of dual_linear over the given points.
DualForm vanishing_form(const std::vector<std::pair<Scalar, Scalar>>& points);

/// ⟨ν_d(roots of g)⟩ as the kernel of contraction by g, without
/// extracting roots. Requires deg g <= d + 1.
LinearSubspace root_span(const DualForm& g, int d);

// ---------------------------------------------------------------- polynomial algebra

DualForm partial_first(const DualForm& g);
DualForm partial_second(const DualForm& g);

/// Homogeneous (Sylvester) resultant of two forms of positive degree,
/// taken at their formal degrees. Zero iff they share a projective root.
Scalar resultant(const DualForm& p, const DualForm& q);

/// deg(g) distinct projective roots. Decided by the resultant of the two
/// partial derivatives. Throws PreconditionError on the zero form.
bool squarefree(const DualForm& g);
/// Same predicate through gcd(g, dg/dX, dg/dY).
bool squarefree_by_gcd(const DualForm& g);
/// Discriminant of the binary form via the dehomogenized polynomial, with
/// the leading-coefficient correction for roots at (1 : 0).
Scalar discriminant(const DualForm& g);

/// Greatest common divisor; the factor away from (1 : 0) is monic in the
/// first variable. Throws PreconditionError if both inputs are zero.
DualForm gcd(const DualForm& g, const DualForm& h);
DualForm gcd(std::span<const DualForm> forms);

/// Exact quotient; throws PreconditionError if h does not divide g.
DualForm exact_divide(const DualForm& g, const DualForm& h);

// ---------------------------------------------------------------- irredundancy

/// Conditions, as forms in a root (u : v), for "g with the root (u : v)
/// removed is still apolar to F".
///
/// For a root (u : v) of g, l = v X - u Y divides g. `v_scaled[j]` is the
/// j-th coefficient of contract(v^t g / l, F), a form of degree t - 1 in
/// (u, v); they vanish together exactly when g / l is apolar, provided
/// v != 0. `u_scaled` is the mirror family (scaled by u^t), valid for u != 0.
/// Each list has d - t + 2 entries.
struct DivisionFamily {
  std::vector<DualForm> v_scaled;
  std::vector<DualForm> u_scaled;
};

/// Requires g squarefree, 2 <= t <= d + 1.
DivisionFamily division_family(const DualForm& g, const BinaryForm& f);

/// g / l as a dual form whose coefficients are forms in (u, v), scaled by
/// v^t: entry k is the coefficient of X^(t-1-k) Y^k.
std::vector<DualForm> scaled_quotient(const DualForm& g);

/// Whether the point set cut out by g (assumed apolar to F) spans F with no
/// proper subset doing so. Redundant iff g and the division family share a
/// root; roots at (1 : 0) are settled by direct division.
bool irredundant(const DualForm& g, const BinaryForm& f);

// ---------------------------------------------------------------- linear systems

/// Searches the linear system spanned by `basis` for a squarefree member.
/// A few fixed probes are tried first, then the full grid {0..2t-2}^m. The
/// discriminant of a member has degree 2t - 2 in the weights, so exhausting
/// the grid proves that no squarefree member exists.
std::optional<DualForm> find_squarefree_member(std::span<const DualForm> basis);

}  // namespace waringlab
