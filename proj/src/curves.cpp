#include "waringlab/curves.hpp"

#include <algorithm>
#include <sstream>

#include "waringlab/error.hpp"
#include "waringlab/rankengine.hpp"

namespace waringlab {

namespace {

Matrix coefficient_matrix(const std::vector<BinaryForm>& forms) {
  Matrix m(0, static_cast<std::size_t>(forms.front().degree()) + 1);
  for (const auto& f : forms) m.append_row(f.coeffs());
  return m;
}

std::string trim(std::string s) {
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ParamCurve::ParamCurve(std::vector<BinaryForm> components, std::string name)
    : components_(std::move(components)), name_(std::move(name)) {
  if (components_.size() < 2) throw PreconditionError("ParamCurve: need at least two components");
  const int e = components_.front().degree();
  for (const auto& f : components_)
    if (f.degree() != e) throw PreconditionError("ParamCurve: components must share one degree");
  if (rank(coefficient_matrix(components_)) != components_.size())
    throw PreconditionError("ParamCurve: components are linearly dependent");
}

Vector curve_point(const ParamCurve& c, const Scalar& a, const Scalar& b) {
  Vector p;
  for (const auto& f : c.components()) p.push_back(f.evaluate(a, b));
  if (is_zero(p)) throw PreconditionError("curve_point: base point, every component vanishes");
  return p;
}

Vector curve_point(const ParamCurve& c, const Scalar& t) { return curve_point(c, Scalar(1), t); }

Vector curve_point_at_infinity(const ParamCurve& c) { return curve_point(c, Scalar(0), Scalar(1)); }

ParamCurve rational_normal_curve(int r) {
  std::vector<int> ex(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) ex[i] = i;
  ParamCurve c = monomial_curve(ex);
  return ParamCurve(c.components(), "rnc" + std::to_string(r));
}

ParamCurve monomial_curve(const std::vector<int>& exponents) {
  if (exponents.empty()) throw PreconditionError("monomial_curve: no exponents");
  const int e = *std::max_element(exponents.begin(), exponents.end());
  std::vector<BinaryForm> comps;
  for (int k : exponents) comps.push_back(BinaryForm::monomial(e, k));
  return ParamCurve(std::move(comps), "monomial");
}

ParamCurve gap_curve(int r) {
  std::vector<int> ex;
  for (int i = 0; i < r; ++i) ex.push_back(i);
  ex.push_back(r + 1);
  ParamCurve c = monomial_curve(ex);
  return ParamCurve(c.components(), "gap" + std::to_string(r));
}

ParamCurve random_curve(int r, Rng& rng, long max_coeff) {
  while (true) {
    std::vector<BinaryForm> comps;
    for (int i = 0; i <= r; ++i) comps.emplace_back(rng.vector(static_cast<std::size_t>(r) + 2, max_coeff));
    if (rank(coefficient_matrix(comps)) != comps.size()) continue;
    // A common root would be a base point.
    std::vector<DualForm> as_dual;
    for (const auto& f : comps) as_dual.emplace_back(f.coeffs());
    if (gcd(as_dual).degree() > 0) continue;
    return ParamCurve(std::move(comps), "random" + std::to_string(r));
  }
}

ParamCurve parse_curve(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("curve file is empty");
  int r = 0, e = 0;
  {
    std::istringstream head(lines.front());
    std::string extra;
    if (!(head >> r >> e) || (head >> extra)) throw ParseError("first line must be `r e`");
  }
  if (r < 1 || e < 1) throw ParseError("need r >= 1 and e >= 1");
  if (lines.size() != static_cast<std::size_t>(r) + 2)
    throw ParseError("expected " + std::to_string(r + 1) + " component lines, got " + std::to_string(lines.size() - 1));
  std::vector<BinaryForm> comps;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string body = lines[i];
    if (body.find(':') == std::string::npos) body = std::to_string(e) + ":" + body;
    BinaryForm f;
    try {
      f = parse_binary_form(body);
    } catch (const ParseError& err) {
      throw ParseError("component " + std::to_string(i) + ": " + err.what());
    }
    if (f.degree() != e) throw ParseError("component " + std::to_string(i) + ": degree differs from e");
    comps.push_back(std::move(f));
  }
  try {
    return ParamCurve(std::move(comps), "file");
  } catch (const PreconditionError& err) {
    throw ParseError(err.what());
  }
}

std::string to_string(const ParamCurve& c) {
  std::string out = std::to_string(c.r()) + " " + std::to_string(c.e()) + "\n";
  for (const auto& f : c.components()) out += to_string(f) + "\n";
  return out;
}

bool irredundantly_spans(const std::vector<Vector>& points, const Vector& q) {
  const std::size_t amb = q.size() - 1;
  if (!LinearSubspace::span(amb, points).contains(q)) return false;
  for (std::size_t drop = 0; drop < points.size(); ++drop) {
    std::vector<Vector> rest;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (i != drop) rest.push_back(points[i]);
    if (!rest.empty() && LinearSubspace::span(amb, rest).contains(q)) return false;
  }
  return true;
}

std::optional<BinaryForm> rnc_binary_form(const ParamCurve& c, const Vector& q) {
  if (!c.is_rational_normal()) return std::nullopt;
  if (q.size() != c.components().size()) throw PreconditionError("rnc_binary_form: wrong length");
  // curve_point(t) = F m(t), F the component coefficients and m(t) the
  // moment vector (1, t, ..., t^r).
  const Vector m = rref_with_transform(coefficient_matrix(c.components())).transform.apply(q);
  const int r = c.r();
  BinaryForm f(r);
  for (int i = 0; i <= r; ++i) f[i] = m[i] * Scalar(binomial(r, i));
  return f;
}

SpanPair construct_span_pair(const ParamCurve& c, const std::vector<Scalar>& s_params,
                             const std::vector<Scalar>& a_params) {
  const int r = c.r();
  if (r % 2 != 0) throw PreconditionError("construct_span_pair: need r even");
  const std::size_t half = static_cast<std::size_t>(r / 2) + 1;
  if (s_params.size() != half || a_params.size() != half)
    throw PreconditionError("construct_span_pair: each list needs r/2 + 1 parameters");
  std::vector<Scalar> all = s_params;
  all.insert(all.end(), a_params.begin(), a_params.end());
  std::vector<Scalar> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("construct_span_pair: parameter lists must be disjoint and without repeats");

  std::vector<Vector> s_pts, a_pts;
  for (const auto& t : s_params) s_pts.push_back(curve_point(c, t));
  for (const auto& t : a_params) a_pts.push_back(curve_point(c, t));
  std::vector<Vector> both = s_pts;
  both.insert(both.end(), a_pts.begin(), a_pts.end());
  for (std::size_t i = 0; i < both.size(); ++i)
    for (std::size_t j = i + 1; j < both.size(); ++j)
      if (rank(std::vector<Vector>{both[i], both[j]}) < 2)
        throw DegenerateDraw("construct_span_pair: two parameters map to the same point");

  SpanPair out;
  const auto amb = static_cast<std::size_t>(r);
  out.span_s = LinearSubspace::span(amb, s_pts);
  out.span_a = LinearSubspace::span(amb, a_pts);
  if (out.span_s.dim() != r / 2 || out.span_a.dim() != r / 2)
    throw DegenerateDraw("construct_span_pair: a span has dimension below r/2");
  const LinearSubspace meet = intersect(out.span_s, out.span_a);
  if (!meet.is_point()) throw DegenerateDraw("construct_span_pair: the spans do not meet in a single point");
  out.q = primitive(meet.basis_vectors().front());
  out.s_irredundant = irredundantly_spans(s_pts, out.q);
  out.a_irredundant = irredundantly_spans(a_pts, out.q);
  if (auto f = rnc_binary_form(c, out.q)) out.rnc_rank = rank_profile(*f).rank;
  return out;
}

Matrix projection_from(const Vector& o) {
  if (is_zero(o)) throw PreconditionError("projection_from: the zero vector is not a point");
  Matrix row(1, o.size());
  for (std::size_t j = 0; j < o.size(); ++j) row(0, j) = o[j];
  // Linear forms vanishing at o; as a map, its kernel is <o>.
  const LinearSubspace forms = kernel(row);
  return forms.basis();
}

std::vector<Vector> project_from_point(const std::vector<Vector>& points, const Vector& o) {
  const Matrix p = projection_from(o);
  std::vector<Vector> out;
  for (const auto& x : points) {
    if (x.size() != o.size()) throw PreconditionError("project_from_point: length mismatch");
    Vector y = p.apply(x);
    if (is_zero(y)) throw PreconditionError("project_from_point: the center is one of the points");
    out.push_back(std::move(y));
  }
  return out;
}

ParamCurve project_from_point(const ParamCurve& c, const Vector& o) {
  if (o.size() != c.components().size()) throw PreconditionError("project_from_point: length mismatch");
  const Matrix p = projection_from(o);
  const Matrix image = p * coefficient_matrix(c.components());
  std::vector<DualForm> rows;
  for (std::size_t i = 0; i < image.rows(); ++i) rows.emplace_back(image.row_vector(i));
  const DualForm common = gcd(rows);
  std::vector<BinaryForm> comps;
  for (const auto& g : rows) comps.emplace_back(exact_divide(g, common).coeffs());
  return ParamCurve(std::move(comps), c.name() + "/proj");
}

}  // namespace waringlab
