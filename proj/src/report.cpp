#include "waringlab/report.hpp"

#include "waringlab/error.hpp"

namespace waringlab {

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const LinearSubspace& s) {
  Json basis = Json::array();
  for (const auto& row : s.basis_vectors()) basis.push_back(to_json(row));
  return {{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const BinaryForm& f) { return to_string(f); }
Json to_json(const DualForm& g) { return to_string(g); }

Json to_json(const RankProfile& p) {
  return {{"degree", p.degree},
          {"border_rank", p.border_rank},
          {"cactus_rank", p.cactus_rank},
          {"rank", p.rank},
          {"min_generator", to_json(p.min_generator)},
          {"z_unique", p.z_unique},
          {"on_curve", p.on_curve()}};
}

Json to_json(const WqResult& w) {
  Json gens = Json::array();
  for (const auto& g : w.generators) gens.push_back(to_json(g));
  return {{"t", w.t},
          {"subspace", to_json(w.subspace)},
          {"samples_used", w.samples_used},
          {"samples_drawn", w.samples_drawn},
          {"stabilized", w.stabilized},
          {"certified_point", w.certified_point},
          {"family_exhausted", w.family_exhausted},
          {"singleton_family", w.singleton_family},
          {"generators", gens}};
}

Json to_json(const Witness& w) {
  Json out{{"kind", to_string(w.kind)}, {"subset", w.subset}, {"support", to_json(w.support)}};
  if (!w.curve.empty()) out["curve"] = to_json(w.curve);
  if (w.kind == ConfigKind::Conic) out["reducible"] = w.reducible;
  return out;
}

Json to_json(const H1Report& r) {
  Json out{{"t", r.t}, {"h0", r.h0}, {"h1", r.h1}, {"search_skipped", r.search_skipped}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return out;
}

Json to_json(const PointSet& s) {
  Json out = Json::array();
  for (const auto& p : s.points()) out.push_back(to_json(p));
  return out;
}

Json to_json(const MixedInstance& inst) {
  return {{"n", inst.n},
          {"d", inst.d},
          {"b", inst.b},
          {"k", inst.k},
          {"qprime", to_json(inst.qprime)},
          {"fixed_decomposition", to_json(inst.fixed_decomposition)},
          {"u", to_json(inst.u)},
          {"mixing", to_json(inst.mixing)},
          {"q", to_json(inst.q)}};
}

Json to_json(const MixedReport& rep) {
  return {{"samples", rep.samples},
          {"containment_all", rep.containment_all},
          {"folded", to_json(rep.folded)},
          {"expected", to_json(rep.expected)},
          {"part2_asserted", rep.part2_asserted},
          {"folded_matches", rep.folded_matches},
          {"dimension_matches", rep.dimension_matches},
          {"qprime_recovered", rep.qprime_recovered},
          {"u_span_recovered", rep.u_span_recovered},
          {"notes", rep.notes},
          {"pass", rep.pass}};
}

Json to_json(const SpanPair& sp) {
  Json out{{"q", to_json(sp.q)},
           {"span_s", to_json(sp.span_s)},
           {"span_a", to_json(sp.span_a)},
           {"s_irredundant", sp.s_irredundant},
           {"a_irredundant", sp.a_irredundant}};
  out["rnc_rank"] = sp.rnc_rank ? Json(*sp.rnc_rank) : Json(nullptr);
  return out;
}

Json to_json(const ParamCurve& c) {
  Json comps = Json::array();
  for (const auto& f : c.components()) comps.push_back(to_json(f));
  return {{"name", c.name()}, {"r", c.r()}, {"e", c.e()}, {"components", comps}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("expected a rational string");
}

Json to_json(const Report& r) {
  return {{"schema", kReportSchema},
          {"command", r.command},
          {"anchor", r.anchor},
          {"seed", r.seed},
          {"inputs", r.inputs},
          {"outputs", r.outputs},
          {"pass", r.pass},
          {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace waringlab
