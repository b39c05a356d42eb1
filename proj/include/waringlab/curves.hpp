#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waringlab/binform.hpp"
#include "waringlab/random.hpp"

namespace waringlab {

/// A rational curve of P^r given by r + 1 linearly independent binary forms
/// of a common degree e: (x : y) ↦ (f_0(x, y) : ... : f_r(x, y)).
class ParamCurve {
 public:
  /// Throws PreconditionError when the forms have mixed degrees or are
  /// linearly dependent.
  explicit ParamCurve(std::vector<BinaryForm> components, std::string name = "curve");

  int r() const { return static_cast<int>(components_.size()) - 1; }
  int e() const { return components_.front().degree(); }
  const std::vector<BinaryForm>& components() const { return components_; }
  const std::string& name() const { return name_; }
  /// e == r: the curve is a rational normal curve in some coordinates.
  bool is_rational_normal() const { return e() == r(); }

 private:
  std::vector<BinaryForm> components_;
  std::string name_;
};

/// The curve point at parameter (a : b). Throws PreconditionError at a base
/// point, where every component vanishes.
Vector curve_point(const ParamCurve& c, const Scalar& a, const Scalar& b);
/// Parameter (1 : t).
Vector curve_point(const ParamCurve& c, const Scalar& t);
/// Parameter (0 : 1), read off the y^e coefficients.
Vector curve_point_at_infinity(const ParamCurve& c);

/// Components x^(r-i) y^i.
ParamCurve rational_normal_curve(int r);
/// Monomials x^(e-k) y^k for k in `exponents`, e = the largest exponent.
ParamCurve monomial_curve(const std::vector<int>& exponents);
/// Monomial curve with exponents 0..r-1 and r+1, skipping r.
ParamCurve gap_curve(int r);
/// r + 1 random forms of degree r + 1.
ParamCurve random_curve(int r, Rng& rng, long max_coeff = 9);

/// First line `r e`, then r + 1 lines each holding e + 1 comma-separated
/// rationals (optionally prefixed `e:`). `#` comments and blank lines are
/// skipped.
ParamCurve parse_curve(std::string_view text);
std::string to_string(const ParamCurve& c);

struct SpanPair {
  /// Generator of <S> ∩ <A>.
  Vector q;
  LinearSubspace span_s;
  LinearSubspace span_a;
  bool s_irredundant = false;
  bool a_irredundant = false;
  /// For a rational normal curve: the rank of q read through the binary
  /// form engine.
  std::optional<int> rnc_rank;
};

/// q = the single point of <S> ∩ <A> for curve points S, A at parameters
/// (1 : t). Needs r even, disjoint lists of r/2 + 1 parameters each.
/// Throws PreconditionError on a bad input and DegenerateDraw when a span
/// falls short of dimension r/2, two curve points coincide, or the
/// intersection is not a single point.
SpanPair construct_span_pair(const ParamCurve& c, const std::vector<Scalar>& s_params,
                             const std::vector<Scalar>& a_params);

/// Whether q lies in the span of `points` and in the span of no proper
/// subset.
bool irredundantly_spans(const std::vector<Vector>& points, const Vector& q);

/// For a rational normal curve, the binary form whose power sum structure
/// matches q: write q = F m with m the moment vector and scale m_i by
/// C(r, i). Nullopt for other curves.
std::optional<BinaryForm> rnc_binary_form(const ParamCurve& c, const Vector& q);

/// Rows of a full-rank r x (r+1) matrix whose kernel is <o>.
Matrix projection_from(const Vector& o);
/// Images of the points under projection from o. Throws PreconditionError
/// if o is zero or one of the points.
std::vector<Vector> project_from_point(const std::vector<Vector>& points, const Vector& o);
/// The image curve in P^(r-1). The common factor of the projected
/// components is divided out, so projecting from a simple curve point
/// lowers the degree by one. Throws PreconditionError if o is zero or has
/// the wrong length.
ParamCurve project_from_point(const ParamCurve& c, const Vector& o);

}  // namespace waringlab
