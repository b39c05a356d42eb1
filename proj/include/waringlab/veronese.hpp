#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waringlab/binform.hpp"
#include "waringlab/random.hpp"

namespace waringlab {

/// Order-d Veronese embedding of P^n into P^r, r = C(n+d, n) - 1.
/// Coordinates are the degree-d monomials in lexicographically descending
/// order of their exponent vectors: for n = 2, d = 2 that is
/// x0^2, x0 x1, x0 x2, x1^2, x1 x2, x2^2.
class VeroneseMap {
 public:
  VeroneseMap(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t ambient_dim() const { return exponents_.size() - 1; }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }
  std::size_t index_of(const std::vector<int>& exponent) const;

  /// All degree-d monomials at p. Throws PreconditionError for the zero
  /// vector or a length other than n + 1.
  Vector embed(std::span<const Scalar> p) const;

  // The line L = {x2 = ... = xn = 0}, parametrized by (x0 : x1), and its
  // image Y, a rational normal curve spanning a coordinate subspace.

  /// A binary form of degree d as a point of <Y>: coefficient c_i of
  /// x^(d-i) y^i goes to the monomial x0^(d-i) x1^i as c_i / C(d, i), so
  /// that (a x + b y)^d lands on embed(a : b : 0 : ...).
  Vector include_line_form(const BinaryForm& f) const;
  /// The same inclusion applied to a subspace of P^d.
  LinearSubspace include_line_span(const LinearSubspace& s) const;
  /// <Y>.
  LinearSubspace line_span() const;

 private:
  int n_;
  int d_;
  std::vector<std::vector<int>> exponents_;
};

/// Distinct points of P^n with rational coordinates.
class PointSet {
 public:
  explicit PointSet(int n = 2) : n_(n) {}
  PointSet(int n, std::vector<Vector> points);

  int n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Vector>& points() const { return points_; }
  const Vector& operator[](std::size_t i) const { return points_[i]; }

  /// Throws PreconditionError for a zero vector, wrong length or a repeat.
  void add(Vector p);
  bool contains(std::span<const Scalar> p) const;
  PointSet subset(const std::vector<std::size_t>& indices) const;

 private:
  int n_;
  std::vector<Vector> points_;
};

bool same_point(std::span<const Scalar> a, std::span<const Scalar> b);

/// One point per line, `a0:a1:...:an`; blank lines and `#` comments are
/// skipped. Every point must have the same length.
PointSet parse_point_set(std::string_view text);
std::string to_string(const PointSet& s);

/// Rows: points; columns: degree-t monomials.
Matrix evaluation_matrix(const PointSet& s, int t);

enum class ConfigKind { Line, Conic, CubicCompleteIntersection, Cubic };
std::string to_string(ConfigKind k);

/// A subset F of S lying on a special curve, certifying h^1(I_S(d)) > 0.
struct Witness {
  ConfigKind kind = ConfigKind::Line;
  /// Indices into S.
  std::vector<std::size_t> subset;
  /// The plane (or line) containing F.
  LinearSubspace support;
  /// Coefficients of the plane curve in the coordinates of `support`'s
  /// basis, ordered like VeroneseMap(2, degree). Empty for a line.
  Vector curve;
  /// For conics: whether the conic is a pair of lines.
  bool reducible = false;
};

struct H1Report {
  int t = 0;
  long h0 = 0;
  long h1 = 0;
  std::optional<Witness> witness;
  /// The configuration search was not run (too many points).
  bool search_skipped = false;
};

/// h^0 and h^1 of the ideal sheaf of S twisted by t: h1 = |S| - rank and
/// h0 = C(n+t, n) - rank of the degree-t evaluation matrix.
H1Report h_values(const PointSet& s, int t);

/// Looks for F ⊆ S on a line (d + 2 points), a reduced conic (2d + 2), a
/// plane cubic (3d + 1), or a plane cubic meeting F in a complete
/// intersection (3d points with h^1(I_F(d)) > 0), in that order.
/// Requires d >= 6 and |S| <= 4d - 5.
H1Report detect_configuration(const PointSet& s, int d);

// ---------------------------------------------------------------- planting

/// Random point of P^n with coordinates in [-h, h].
Vector random_point(int n, Rng& rng, long h = Rng::kDefaultMaxCoeff);
/// Adds `count` random points, each new one distinct from the earlier ones
/// and off every line through two of them.
void add_general_points(PointSet& s, std::size_t count, Rng& rng, long h = Rng::kDefaultMaxCoeff);

/// `count` points on a random line of P^n.
PointSet collinear_points(int n, std::size_t count, Rng& rng);
/// `count` points on a random smooth conic in a random plane of P^n.
PointSet conic_points(int n, std::size_t count, Rng& rng);
/// `per_line` points on each of two random meeting lines, vertex excluded.
PointSet line_pair_points(int n, std::size_t per_line, Rng& rng);
/// `count` points on a random nodal plane cubic, node excluded.
PointSet cubic_points(int n, std::size_t count, Rng& rng);
/// 3d points cut on a nodal plane cubic by d lines, node excluded.
PointSet cubic_complete_intersection(int n, int d, Rng& rng);

// ---------------------------------------------------------------- mixed decompositions

/// A point q of the Veronese space irredundantly spanned by a point q' of
/// <Y> of border rank b and rank d + 2 - b together with ν_d(U) for a
/// general set U off the line.
struct MixedInstance {
  int n = 0;
  int d = 0;
  int b = 0;
  int k = 0;
  BinaryForm qprime;
  /// Vanishing form of the fixed minimal decomposition E of q' used for the
  /// Hilbert-function checks on E ∪ U.
  DualForm fixed_decomposition;
  PointSet u;
  /// q = mixing[0] q' + sum mixing[i+1] ν_d(u_i).
  Vector mixing;
  Vector q;
};

/// Checks the parameter ranges (n >= 2, d >= 8, 4 <= 2b <= d,
/// d + 3 - b <= k <= 2d - 2) and draws q', U and the mixing weights until
/// every genericity condition holds. Throws PreconditionError on a range
/// violation and DegenerateDraw when retries run out.
MixedInstance mixed_construct(int n, int d, int b, int k, std::uint64_t seed,
                              long max_coeff = Rng::kDefaultMaxCoeff);

/// Assembles q from given parts. Throws PreconditionError unless q is
/// irredundantly spanned by {q'} ∪ ν_d(U).
MixedInstance mixed_assemble(int n, int d, const BinaryForm& qprime, const PointSet& u, const Vector& mixing);

/// Whether q lies in the span of all parts and in the span of no proper
/// subset; one rank check per dropped part.
bool mixed_irredundant(const MixedInstance& inst);

struct MixedReport {
  int samples = 0;
  /// q ∈ <E ∪ U> for every sampled minimal decomposition E of q'.
  bool containment_all = false;
  LinearSubspace folded;
  LinearSubspace expected;
  /// Only asserted when k <= 2d - 3.
  bool part2_asserted = false;
  bool folded_matches = false;
  bool dimension_matches = false;
  bool qprime_recovered = false;
  bool u_span_recovered = false;
  std::vector<std::string> notes;
  bool pass = false;
};

MixedReport mixed_verify(const MixedInstance& inst, int n_samples, std::uint64_t seed,
                         long max_coeff = Rng::kDefaultMaxCoeff);

}  // namespace waringlab
