#include <doctest.h>

#include "oracle.hpp"
#include "waringlab/error.hpp"
#include "waringlab/rankengine.hpp"

using namespace waringlab;

namespace {

BinaryForm monomial_form(int d, int i) { return BinaryForm::monomial(d, i); }

BinaryForm x_pow_plus_y_pow(int d) {
  BinaryForm f(d);
  f[0] = 1;
  f[d] = 1;
  return f;
}

LinearSubspace point_of(const BinaryForm& f) { return LinearSubspace::point(f.coeffs()); }

}  // namespace

TEST_CASE("rank profile fixed cases") {
  for (int d = 1; d <= 7; ++d) {
    RankProfile p = rank_profile(power_of_linear(3, -1, d));
    CHECK(p.border_rank == 1);
    CHECK(p.rank == 1);
    CHECK(p.z_unique);
    CHECK(p.on_curve());
  }
  RankProfile p = rank_profile(monomial_form(4, 1));
  CHECK(p.border_rank == 2);
  CHECK(p.cactus_rank == 2);
  CHECK(p.rank == 4);
  CHECK(p.z_unique);
  CHECK(proportional(p.min_generator, DualForm::monomial(2, 2)));

  CHECK(rank_profile(parse_binary_form("2:1,0,1")).rank == 2);
  RankProfile cube = rank_profile(parse_binary_form("3:1,0,0,1"));
  CHECK(cube.border_rank == 2);
  CHECK(cube.rank == 2);

  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    RankProfile g = rank_profile(generic_form(4, rng));
    CHECK(g.border_rank == 3);
    CHECK(g.rank == 3);
    CHECK_FALSE(g.z_unique);
  }
  CHECK_THROWS_AS(rank_profile(BinaryForm(4)), PreconditionError);
  CHECK_THROWS_AS(rank_profile(BinaryForm(0)), PreconditionError);
}

TEST_CASE("rank profile invariants against the oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 2 + trial % 9;
    BinaryForm f;
    if (trial % 3 == 0 && d >= 3) {
      const int b = 2 + trial / 3 % ((d + 1) / 2 - 1);
      f = prescribed_profile_form(d, b, rng);
    } else {
      f = random_form(d, rng, trial % 2 ? 2 : 50);
    }
    RankProfile p = rank_profile(f);
    CHECK(p.border_rank == oracle::border_rank(f));
    CHECK(p.rank == oracle::waring_rank(f));
    CHECK(p.border_rank <= (d + 2) / 2);
    CHECK((p.rank == p.border_rank || p.rank == d + 2 - p.border_rank));
    CHECK(p.z_unique == (2 * p.border_rank <= d + 1));
    CHECK(contract(p.min_generator, f).is_zero());
    CHECK(p.min_generator.degree() == p.border_rank);
  }
}

TEST_CASE("apolar slice dimension law") {
  Rng rng(55);
  for (int d = 3; d <= 12; ++d) {
    for (int b = 2; 2 * b <= d + 1; ++b) {
      BinaryForm f = prescribed_profile_form(d, b, rng);
      for (int t = 1; t <= d + 1; ++t) {
        const std::size_t dim = apolar_slice(f, t).dim();
        if (t < b) CHECK(dim == 0);
        else if (t <= d + 1 - b) CHECK(dim == static_cast<std::size_t>(t - b + 1));
        else if (t <= d) CHECK(dim == static_cast<std::size_t>(2 * t - d));
      }
    }
  }
}

TEST_CASE("prescribed profile generator") {
  Rng rng(9);
  for (int d = 4; d <= 10; ++d)
    for (int b = 2; 2 * b <= d + 1; ++b) {
      RankProfile p = rank_profile(prescribed_profile_form(d, b, rng));
      CHECK(p.border_rank == b);
      CHECK(p.rank == d + 2 - b);
    }
  CHECK_THROWS_AS(prescribed_profile_form(6, 4, rng), PreconditionError);
  CHECK_THROWS_AS(prescribed_profile_form(6, 1, rng), PreconditionError);
}

TEST_CASE("sampling decompositions") {
  auto s = sample_decomposition(x_pow_plus_y_pow(3), 2, 1);
  REQUIRE(s.has_value());
  CHECK(s->span == LinearSubspace::span(3, {monomial_form(3, 0).coeffs(), monomial_form(3, 3).coeffs()}));
  CHECK(s->irredundant);

  BinaryForm x3y = monomial_form(4, 1);
  int found = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t4 = sample_decomposition(x3y, 4, seed);
    if (!t4) continue;
    ++found;
    CHECK(t4->span.dim() == 3);
    CHECK(t4->span.contains(x3y.coeffs()));
    CHECK(t4->irredundant);
  }
  CHECK(found >= 15);

  CHECK_THROWS_AS(sample_decomposition(x3y, 3, 1), PreconditionError);
  CHECK_THROWS_AS(sample_decomposition(x3y, 5, 1), PreconditionError);
}

TEST_CASE("binomial powers have no irredundant decompositions of middle size") {
  Rng rng(3);
  for (int d = 5; d <= 7; ++d) {
    BinaryForm f = x_pow_plus_y_pow(d);
    for (int t = 3; t <= d - 1; ++t) {
      int drawn = 0;
      for (int i = 0; i < 15; ++i) {
        auto s = sample_decomposition(f, t, rng);
        if (!s) continue;
        ++drawn;
        CHECK_FALSE(s->irredundant);
      }
      CHECK(drawn > 0);
    }
  }
}

TEST_CASE("non-uniqueness sets") {
  BinaryForm x3y = monomial_form(4, 1);
  WqResult w = non_uniqueness_set(x3y, 4, default_max_samples(4, 4), 7);
  CHECK(w.certified_point);
  CHECK(w.subspace == point_of(x3y));

  Rng rng(1);
  for (int i = 0; i < 5; ++i) {
    BinaryForm f = generic_form(4, rng);
    WqResult g = non_uniqueness_set(f, 3, default_max_samples(4, 3), 100 + i);
    CHECK(g.certified_point);
    CHECK(g.samples_used >= 2);
  }

  for (int d = 3; d <= 8; ++d) {
    BinaryForm f = x_pow_plus_y_pow(d);
    WqResult b = non_uniqueness_set(f, 2, 10, 3);
    CHECK_FALSE(b.certified_point);
    CHECK(b.samples_used == 1);
    CHECK(b.singleton_family);
    CHECK(b.subspace == LinearSubspace::span(static_cast<std::size_t>(d),
                                             {monomial_form(d, 0).coeffs(), monomial_form(d, d).coeffs()}));
    CHECK(wprime_check(f, b, 5));
  }

  WqResult curve = non_uniqueness_set(power_of_linear(1, 2, 5), 1, 10, 0);
  CHECK(curve.certified_point);

  WqResult empty = non_uniqueness_set(x_pow_plus_y_pow(6), 4, 12, 3);
  CHECK(empty.family_exhausted);
  CHECK(empty.subspace == LinearSubspace::whole(6));
  CHECK_FALSE(empty.certified_point);
}

TEST_CASE("folded intersection is monotone and always contains the form") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 5 + trial % 4;
    BinaryForm f = generic_form(d, rng);
    const int t = d - 1;
    LinearSubspace acc = LinearSubspace::whole(static_cast<std::size_t>(d));
    for (int i = 0; i < 6; ++i) {
      auto s = sample_decomposition(f, t, rng);
      if (!s || !s->irredundant) continue;
      LinearSubspace next = intersect(acc, s->span);
      CHECK(acc.contains(next));
      CHECK(next.contains(f.coeffs()));
      acc = next;
    }
  }
}

TEST_CASE("certified points are backed by valid samples") {
  Rng rng(70);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 4 + trial % 6;
    const int b = 2 + trial % ((d + 1) / 2 - 1);
    BinaryForm f = prescribed_profile_form(d, b, rng);
    const int t = d + 2 - b;
    WqResult w = non_uniqueness_set(f, t, default_max_samples(d, t), 500 + trial);
    REQUIRE(w.certified_point);
    for (const auto& g : w.generators) {
      CHECK(g.degree() == t);
      CHECK(oracle::contract(g, f).is_zero());
      CHECK(oracle::squarefree(g));
      CHECK(irredundant(g, f));
    }
  }
}

TEST_CASE("two decompositions of a generic even-degree form meet only in it") {
  Rng rng(8);
  for (int d = 4; d <= 8; d += 2) {
    for (int i = 0; i < 4; ++i) {
      BinaryForm f = generic_form(d, rng);
      std::vector<DecompositionSample> samples;
      while (samples.size() < 3) {
        auto s = sample_decomposition(f, d / 2 + 1, rng);
        if (s) samples.push_back(*s);
      }
      for (std::size_t a = 0; a < samples.size(); ++a)
        for (std::size_t c = a + 1; c < samples.size(); ++c) {
          if (proportional(samples[a].generator, samples[c].generator)) continue;
          CHECK(intersect(samples[a].span, samples[c].span) == point_of(f));
        }
    }
  }
}

TEST_CASE("cactus span intersection") {
  BinaryForm x3y = monomial_form(4, 1);
  CHECK(cactus_span_intersection(x3y, 1) == point_of(x3y));
  for (int d = 5; d <= 9; ++d) {
    BinaryForm f = monomial_form(d, 1);
    CHECK(cactus_span_intersection(f, static_cast<std::uint64_t>(d)) == point_of(f));
  }
  CHECK_THROWS_AS(cactus_span_intersection(x_pow_plus_y_pow(5), 1), PreconditionError);
}

TEST_CASE("family dimension") {
  CHECK(family_dimension(monomial_form(4, 1)) == 3);
  CHECK(family_dimension(monomial_form(6, 1)) == 5);
  BinaryForm x4y2 = monomial_form(6, 2);
  RankProfile p = rank_profile(x4y2);
  REQUIRE(p.border_rank == 3);
  CHECK(family_dimension(x4y2) == 3);
  CHECK_THROWS_AS(family_dimension(x_pow_plus_y_pow(5)), PreconditionError);
}

TEST_CASE("wprime check and irredundant decompositions of size d") {
  BinaryForm x3y = monomial_form(4, 1);
  WqResult w = non_uniqueness_set(x3y, 4, 12, 1);
  CHECK(wprime_check(x3y, w, 2));
  WqResult unstable;
  CHECK_THROWS_AS(wprime_check(x3y, unstable, 2), PreconditionError);

  Rng rng(6);
  CHECK(lemma_q2_check(generic_form(6, rng), 1));
  // Every apolar form of degree d for l^d is divisible by the dual of l, so
  // every such set contains the point itself and is redundant.
  CHECK_FALSE(lemma_q2_check(power_of_linear(2, 1, 6), 2));
  for (int d = 4; d <= 8; ++d) CHECK(lemma_q2_check(x_pow_plus_y_pow(d), 3));
}
