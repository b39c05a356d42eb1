#include <doctest.h>

#include "oracle.hpp"
#include "waringlab/error.hpp"
#include "waringlab/rankengine.hpp"
#include "waringlab/veronese.hpp"

using namespace waringlab;

namespace {

// Monomial values computed straight from the exponent list, independent of
// the power table used by embed.
Vector embed_by_hand(const VeroneseMap& vm, const Vector& p) {
  Vector out;
  for (const auto& e : vm.exponents()) {
    Scalar v = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) v *= p[i];
    out.push_back(v);
  }
  return out;
}

PointSet merged(const PointSet& a, const PointSet& b) {
  PointSet s(a.n());
  for (const auto& p : a.points()) s.add(p);
  for (const auto& p : b.points()) s.add(p);
  return s;
}

void check_witness_agrees(const PointSet& s, int d) {
  H1Report r = detect_configuration(s, d);
  CHECK(r.h1 == h_values(s, d).h1);
  CHECK(r.witness.has_value() == (r.h1 > 0));
}

}  // namespace

TEST_CASE("veronese coordinates") {
  VeroneseMap vm(2, 2);
  CHECK(vm.ambient_dim() == 5);
  CHECK(vm.exponents().front() == std::vector<int>{2, 0, 0});
  CHECK(vm.exponents()[1] == std::vector<int>{1, 1, 0});
  CHECK(vm.exponents().back() == std::vector<int>{0, 0, 2});
  CHECK(vm.embed(Vector{1, 2, 3}) == Vector{1, 2, 3, 4, 6, 9});
  CHECK(vm.index_of({0, 1, 1}) == 4);
  CHECK_THROWS_AS(vm.embed(Vector{0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(vm.embed(Vector{1, 2}), PreconditionError);

  CHECK(VeroneseMap(3, 4).ambient_dim() == 34);
  CHECK(VeroneseMap(2, 8).ambient_dim() == 44);

  Rng rng(5);
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 5; ++d) {
      VeroneseMap m(n, d);
      Vector p = random_point(n, rng, 7);
      CHECK(m.embed(p) == embed_by_hand(m, p));
    }
}

TEST_CASE("line inclusion") {
  Rng rng(17);
  for (int d = 2; d <= 7; ++d) {
    VeroneseMap vm(3, d);
    for (int i = 0; i < 4; ++i) {
      Scalar a = rng.coefficient(9), b = rng.nonzero_coefficient(9);
      // (a x + b y)^d lands on the image of (a : b : 0 : 0).
      CHECK(vm.include_line_form(BinaryForm(oracle::veronese_point(a, b, d))) == vm.embed(Vector{a, b, 0, 0}));
    }
    // The span of a set of roots maps onto the span of their images.
    std::vector<std::pair<Scalar, Scalar>> roots{{1, 0}, {1, 1}, {2, -3}};
    if (d < 3) roots.resize(2);
    DualForm g = vanishing_form(roots);
    std::vector<Vector> imgs;
    for (const auto& [a, b] : roots) imgs.push_back(vm.embed(Vector{a, b, 0, 0}));
    CHECK(vm.include_line_span(root_span(g, d)) == LinearSubspace::span(vm.ambient_dim(), imgs));
    CHECK(vm.line_span().dim() == d);
    CHECK(vm.line_span().contains(vm.embed(Vector{3, 5, 0, 0})));
    CHECK_FALSE(vm.line_span().contains(vm.embed(Vector{3, 5, 1, 0})));
  }
}

TEST_CASE("point files") {
  PointSet s = parse_point_set("# three points\n1:0:0\n\n0:1:0  # second\n1/2:3:-4\n");
  CHECK(s.n() == 2);
  CHECK(s.size() == 3);
  CHECK(same_point(s[2], Vector{1, 6, -8}));
  CHECK(parse_point_set(to_string(s)).points() == s.points());
  CHECK_THROWS_AS(parse_point_set("1:0:0\n2:0:0\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("1:0:0\n1:0\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("0:0:0\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("1:x:0\n"), ParseError);
  CHECK_THROWS_AS(parse_point_set("# nothing\n"), ParseError);
}

TEST_CASE("h values") {
  Rng rng(31);
  for (int d = 3; d <= 8; ++d) {
    CHECK(h_values(collinear_points(2, static_cast<std::size_t>(d) + 1, rng), d).h1 == 0);
    CHECK(h_values(collinear_points(3, static_cast<std::size_t>(d) + 2, rng), d).h1 == 1);
    CHECK(h_values(conic_points(2, 2 * static_cast<std::size_t>(d) + 2, rng), d).h1 == 1);
    PointSet g(2);
    add_general_points(g, static_cast<std::size_t>(d) + 3, rng);
    H1Report r = h_values(g, d);
    CHECK(r.h1 == 0);
    CHECK(r.h0 == (d + 1) * (d + 2) / 2 - (d + 3));
  }
  CHECK(h_values(cubic_complete_intersection(2, 6, rng), 6).h1 == 1);
  CHECK(h_values(cubic_points(2, 19, rng), 6).h1 == 1);
}

TEST_CASE("configuration detector on planted sets") {
  Rng rng(404);
  const int d = 6;
  for (int n = 2; n <= 3; ++n) {
    SUBCASE("line") {
      PointSet s = collinear_points(n, d + 2, rng);
      add_general_points(s, 9, rng);
      H1Report r = detect_configuration(s, d);
      REQUIRE(r.witness);
      CHECK(r.witness->kind == ConfigKind::Line);
      CHECK(r.witness->subset.size() == d + 2);
      CHECK(r.h1 > 0);
    }
    SUBCASE("smooth conic") {
      PointSet s = conic_points(n, 2 * d + 2, rng);
      add_general_points(s, 3, rng);
      H1Report r = detect_configuration(s, d);
      REQUIRE(r.witness);
      CHECK(r.witness->kind == ConfigKind::Conic);
      CHECK_FALSE(r.witness->reducible);
      CHECK(r.witness->subset.size() == 2 * d + 2);
    }
    SUBCASE("line pair") {
      PointSet s = line_pair_points(n, d + 1, rng);
      add_general_points(s, 2, rng);
      H1Report r = detect_configuration(s, d);
      REQUIRE(r.witness);
      CHECK(r.witness->kind == ConfigKind::Conic);
      CHECK(r.witness->reducible);
      CHECK(r.h1 > 0);
    }
    SUBCASE("cubic") {
      PointSet s = cubic_points(n, 3 * d + 1, rng);
      H1Report r = detect_configuration(s, d);
      REQUIRE(r.witness);
      CHECK(r.witness->kind == ConfigKind::Cubic);
      CHECK(r.h1 > 0);
    }
    SUBCASE("cubic complete intersection") {
      PointSet s = cubic_complete_intersection(n, d, rng);
      add_general_points(s, 1, rng);
      H1Report r = detect_configuration(s, d);
      REQUIRE(r.witness);
      CHECK(r.witness->kind == ConfigKind::CubicCompleteIntersection);
      CHECK(r.witness->subset.size() == 3 * d);
      CHECK(r.h1 > 0);
    }
    SUBCASE("general") {
      PointSet s(n);
      add_general_points(s, 4 * d - 5, rng);
      H1Report r = detect_configuration(s, d);
      CHECK_FALSE(r.witness);
      CHECK(r.h1 == 0);
    }
  }
}

TEST_CASE("detector agrees with h1 on near misses") {
  Rng rng(77);
  const int d = 6;
  // One point short of each threshold.
  PointSet a = collinear_points(2, d + 1, rng);
  add_general_points(a, 8, rng);
  check_witness_agrees(a, d);
  PointSet b = conic_points(2, 2 * d + 1, rng);
  add_general_points(b, 4, rng);
  check_witness_agrees(b, d);
  PointSet c = cubic_points(2, 3 * d, rng);
  check_witness_agrees(c, d);
  PointSet e = merged(collinear_points(3, d + 2, rng), conic_points(3, 2 * d - 1, rng));
  check_witness_agrees(e, d);

  CHECK_THROWS_AS(detect_configuration(a, 5), PreconditionError);
  PointSet big(2);
  add_general_points(big, 4 * d - 4, rng);
  CHECK_THROWS_AS(detect_configuration(big, d), PreconditionError);
}

TEST_CASE("mixed decompositions") {
  for (int k : {9, 11, 13, 14}) {
    MixedInstance inst = mixed_construct(2, 8, 2, k, 100 + static_cast<std::uint64_t>(k));
    CHECK(inst.u.size() == static_cast<std::size_t>(k - 8));
    CHECK(mixed_irredundant(inst));
    RankProfile p = rank_profile(inst.qprime);
    CHECK(p.border_rank == 2);
    CHECK(p.rank == 8);
    const int samples = default_max_samples(8, 8);
    MixedReport rep = mixed_verify(inst, samples, 9);
    CHECK(rep.samples == samples);
    CHECK(rep.containment_all);
    CHECK(rep.part2_asserted == (k <= 13));
    if (rep.part2_asserted) {
      CHECK(rep.folded_matches);
      CHECK(rep.dimension_matches);
      CHECK(rep.qprime_recovered);
      CHECK(rep.u_span_recovered);
    }
    CHECK(rep.pass);
  }

  MixedInstance inst = mixed_construct(3, 8, 3, 10, 5);
  CHECK(mixed_verify(inst, default_max_samples(8, 7), 1).pass);

  Vector zero_weight = inst.mixing;
  zero_weight[1] = 0;
  CHECK_THROWS_AS(mixed_assemble(inst.n, inst.d, inst.qprime, inst.u, zero_weight), PreconditionError);

  CHECK_THROWS_AS(mixed_construct(2, 7, 2, 9, 1), PreconditionError);
  CHECK_THROWS_AS(mixed_construct(2, 8, 5, 10, 1), PreconditionError);
  CHECK_THROWS_AS(mixed_construct(2, 8, 2, 15, 1), PreconditionError);
  CHECK_THROWS_AS(mixed_construct(2, 8, 2, 8, 1), PreconditionError);
}
