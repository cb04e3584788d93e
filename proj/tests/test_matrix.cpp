#include <random>

#include "doctest.h"
#include "wmb/matrix.hpp"

using namespace wmb;
using namespace wmb::lin;

namespace {

Mat from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  int r = int(rows.size());
  int c = int(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (auto& row : rows) {
    int j = 0;
    for (int v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Mat random_matrix(std::mt19937_64& rng, int r, int c) {
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      int num = int(rng() % 7) - 3;
      int den = 1 + int(rng() % 3);
      m.at(i, j) = Rat(num, den);
    }
  return m;
}

}  // namespace

TEST_CASE("rref canonical forms") {
  CHECK(rref(from_ints({{2, 4}, {1, 2}})) == from_ints({{1, 2}, {0, 0}}));
  CHECK(rref(Mat::identity(3)) == Mat::identity(3));
  CHECK(rref(from_ints({{0, 1}, {1, 0}})) == Mat::identity(2));
}

TEST_CASE("kernel and image basics") {
  CHECK(kernel(Mat::identity(2)).dim() == 0);
  CHECK(kernel(Mat::zero(2, 2)).dim() == 2);
  Subspace k = kernel(from_ints({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains({Rat(1), Rat(-1)}));
  CHECK(image(Mat::identity(3)).dim() == 3);
  Subspace im = image(from_ints({{1, 2}, {2, 4}}));
  REQUIRE(im.dim() == 1);
  CHECK(im.contains({Rat(1), Rat(2)}));
  CHECK(image(Mat::zero(3, 2)).dim() == 0);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
    Mat m = random_matrix(rng, r, c);
    CHECK(rank(m) == rank(rref(m)));
    CHECK(kernel(m).dim() + rank(m) == c);
    CHECK(image(m).dim() == rank(m));
  }
}

TEST_CASE("solve") {
  auto s = solve(Mat::identity(3), {Rat(1), Rat(2), Rat(3)});
  REQUIRE(s.x.has_value());
  CHECK(s.unique);
  CHECK(*s.x == Vec{Rat(1), Rat(2), Rat(3)});

  auto none = solve(Mat::zero(2, 2), {Rat(1), Rat(0)});
  CHECK(!none.x.has_value());

  auto under = solve(from_ints({{1, 1}}), {Rat(1)});
  REQUIRE(under.x.has_value());
  CHECK(!under.unique);
  CHECK((*under.x)[0] + (*under.x)[1] == 1);
}

TEST_CASE("solve agrees with residual check on random systems") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
    Mat m = random_matrix(rng, r, c);
    Vec x0(c);
    for (int j = 0; j < c; ++j) x0[size_t(j)] = Rat(int(rng() % 5) - 2);
    Vec b = m.apply(x0);
    auto s = solve(m, b);
    REQUIRE(s.x.has_value());
    CHECK(m.apply(*s.x) == b);
  }
}

TEST_CASE("split_idempotent") {
  SUBCASE("diagonal projection") {
    Mat p = from_ints({{1, 0}, {0, 0}});
    auto s = split_idempotent(p);
    CHECK(s.injection * s.surjection == p);
    CHECK(s.surjection * s.injection == Mat::identity(1));
  }
  SUBCASE("identity") {
    auto s = split_idempotent(Mat::identity(2));
    CHECK(s.injection * s.surjection == Mat::identity(2));
  }
  SUBCASE("non-orthogonal idempotent") {
    Mat p = from_ints({{1, 1}, {0, 0}});
    CHECK(p * p == p);
    auto s = split_idempotent(p);
    CHECK(s.injection * s.surjection == p);
    CHECK(s.surjection * s.injection == Mat::identity(1));
    CHECK(image(p).contains({Rat(1), Rat(0)}));
    CHECK(kernel(p).contains({Rat(1), Rat(-1)}));
  }
  SUBCASE("rejects non-idempotent") {
    CHECK_THROWS_AS(split_idempotent(from_ints({{0, 1}, {0, 0}})), NotIdempotent);
  }
  SUBCASE("random idempotents reassemble exactly") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 2 + int(rng() % 3);
      // conjugate a coordinate projection by a random invertible matrix
      Mat g;
      do {
        g = random_matrix(rng, n, n);
      } while (rank(g) != n);
      Mat d = Mat::zero(n, n);
      for (int i = 0; i < n; ++i) d.at(i, i) = (rng() % 2) ? 1 : 0;
      auto ginv = solve_matrix(g, Mat::identity(n));
      REQUIRE(ginv.has_value());
      Mat p = g * d * *ginv;
      REQUIRE(p * p == p);
      auto s = split_idempotent(p);
      CHECK(s.injection * s.surjection == p);
      CHECK(s.surjection * s.injection == Mat::identity(s.injection.cols()));
    }
  }
}

TEST_CASE("subspace equality is an equivalence on shuffled spans") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int amb = 2 + int(rng() % 4);
    std::vector<Vec> gens;
    int k = 1 + int(rng() % 3);
    for (int i = 0; i < k; ++i) {
      Vec v(amb);
      for (int j = 0; j < amb; ++j) v[size_t(j)] = Rat(int(rng() % 5) - 2);
      gens.push_back(v);
    }
    Subspace s1 = Subspace::span(amb, gens);
    // same span generated differently: add random combinations
    std::vector<Vec> gens2 = gens;
    if (!gens.empty()) {
      Vec comb(amb);
      for (const Vec& g : gens) {
        Rat c = Rat(int(rng() % 3) - 1);
        for (int j = 0; j < amb; ++j) comb[size_t(j)] += c * g[size_t(j)];
      }
      gens2.push_back(comb);
    }
    Subspace s2 = Subspace::span(amb, gens2);
    CHECK(s1 == s2);        // reflexive through canonical form
    CHECK(s2 == s1);        // symmetric
    CHECK(s1.contains(s2));
    CHECK(s2.contains(s1));
  }
}
