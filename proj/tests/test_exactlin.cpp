#include <doctest.h>

#include "waringlab/error.hpp"
#include "waringlab/exactlin.hpp"
#include "waringlab/random.hpp"

using namespace waringlab;

namespace {

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long h = 9) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(rng.uniform(-h, h)) / rng.uniform(1, 4);
  return m;
}

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

// Vector-space dimension of a + b, computed by stacking the two bases.
std::size_t sum_dim(const LinearSubspace& a, const LinearSubspace& b) {
  auto rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(v);
  return rank(rows);
}

}  // namespace

TEST_CASE("scalar text round trip") {
  for (const char* s : {"0", "-3", "7/2", "-12/35"}) CHECK(to_string(parse_scalar(s)) == s);
  CHECK(parse_scalar("4/6") == Scalar(2, 3));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("binomials and falling factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(2, 3) == 0);
}

TEST_CASE("rref fixed cases") {
  CHECK(rref(Matrix::identity(3)) == Matrix::identity(3));
  Matrix m = Matrix::from_rows({{2, 4}, {1, 2}}, 2);
  CHECK(rref(m) == Matrix::from_rows({{1, 2}, {0, 0}}, 2));
  CHECK(rank(m) == 1);
}

TEST_CASE("rref transform reproduces the reduced matrix") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 5, 7);
    RrefResult r = rref_with_transform(a);
    CHECK(r.transform * a == r.reduced);
    CHECK(determinant(r.transform) != 0);
    CHECK(r.reduced == rref(a));
    CHECK(r.pivots.size() == rank(a));
  }
}

TEST_CASE("determinant against cofactor expansion") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(rng, 3, 3);
    Scalar cof = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                 a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                 a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    CHECK(determinant(a) == cof);
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(Matrix(2, 3)).vector_dim() == 3);
  CHECK(kernel(Matrix::identity(4)).empty());
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 3 + trial % 3, 6);
    if (trial % 4 == 0) a.swap_rows(0, 1), a.append_row(a.row_vector(0));
    LinearSubspace k = kernel(a);
    CHECK(k.vector_dim() == a.cols() - rank(a));
    for (const auto& v : k.basis_vectors()) CHECK(is_zero(a.apply(v)));
  }
}

TEST_CASE("canonical form is a projector") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(rng.vector(6, 20));
    LinearSubspace s = LinearSubspace::span(5, rows);
    CHECK(LinearSubspace::span(5, s.basis_vectors()) == s);
    // Another basis of the same space.
    std::vector<Vector> mixed;
    for (int i = 0; i < 3; ++i) {
      Vector v(6);
      for (int j = 0; j < 3; ++j) {
        Scalar c = Scalar(i == j ? 1 : 0) + Scalar(j) / 7;
        for (std::size_t k = 0; k < 6; ++k) v[k] += c * rows[j][k];
      }
      mixed.push_back(v);
    }
    CHECK(LinearSubspace::span(5, mixed) == s);
    for (const auto& row : s.basis_vectors()) {
      std::size_t lead = 0;
      while (row[lead] == 0) ++lead;
      CHECK(row[lead] > 0);
      for (const auto& x : row) CHECK(x.get_den() == 1);
    }
  }
}

TEST_CASE("intersect and contains") {
  auto e = [](std::size_t i) { return unit(5, i); };
  LinearSubspace a = LinearSubspace::span(4, {e(0), e(1), e(2)});
  LinearSubspace b = LinearSubspace::span(4, {e(2), e(3), e(4)});
  CHECK(intersect(a, b) == LinearSubspace::point(e(2)));
  CHECK(intersect(a, a) == a);
  CHECK(a.contains(e(1)));
  CHECK_FALSE(LinearSubspace::span(4, {e(0), e(1)}).contains(e(3)));
  CHECK_THROWS_AS(a.contains(Vector(5)), PreconditionError);
  CHECK_THROWS_AS(a.contains(Vector(4, 1)), PreconditionError);
  CHECK_THROWS_AS(intersect(a, LinearSubspace::whole(3)), PreconditionError);
}

TEST_CASE("two planes through a common point meet exactly there") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Vector p = rng.vector(5, 30);
    if (is_zero(p)) continue;
    LinearSubspace a = LinearSubspace::span(4, {p, rng.vector(5, 30), rng.vector(5, 30)});
    LinearSubspace b = LinearSubspace::span(4, {p, rng.vector(5, 30), rng.vector(5, 30)});
    LinearSubspace c = intersect(a, b);
    // Grassmann: 3 + 3 - dim(a + b).
    CHECK(c.vector_dim() == a.vector_dim() + b.vector_dim() - sum_dim(a, b));
    if (a.dim() == 2 && b.dim() == 2 && sum_dim(a, b) == 5) CHECK(c == LinearSubspace::point(p));
  }
}

TEST_CASE("Grassmann formula on random subspaces") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vector> ra, rb;
    const int na = 1 + trial % 4, nb = 1 + (trial / 4) % 5;
    Vector shared = rng.vector(7, 5);
    for (int i = 0; i < na; ++i) ra.push_back(i == 0 ? shared : rng.vector(7, 5));
    for (int i = 0; i < nb; ++i) rb.push_back(i == 0 ? shared : rng.vector(7, 5));
    LinearSubspace a = LinearSubspace::span(6, ra), b = LinearSubspace::span(6, rb);
    LinearSubspace c = intersect(a, b);
    CHECK(c.vector_dim() + sum_dim(a, b) == a.vector_dim() + b.vector_dim());
    CHECK(a.contains(c));
    CHECK(b.contains(c));
    CHECK(join(a, b).vector_dim() == sum_dim(a, b));
  }
}

TEST_CASE("annihilator is orthogonal with complementary dimension") {
  Rng rng(4);
  LinearSubspace s = LinearSubspace::span(5, {rng.vector(6, 9), rng.vector(6, 9)});
  LinearSubspace ann = s.annihilator();
  CHECK(ann.vector_dim() + s.vector_dim() == 6);
  for (const auto& u : ann.basis_vectors())
    for (const auto& v : s.basis_vectors()) CHECK(dot(u, v) == 0);
}
