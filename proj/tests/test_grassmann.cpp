#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gq/grassmann.hpp"

using namespace gq;

static ExactMatrix random_plane(const FieldPtr& F, int k, int n, std::mt19937_64& rng) {
  ExactMatrix m(F, k, n);
  do {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, F->random_element(rng));
  } while (m.rank() < k);
  return m;
}

static ExactMatrix coeff_matrix(const std::vector<SparsePoly>& polys) {
  std::set<Mono> monos;
  for (auto& p : polys)
    for (auto& [m, c] : p.terms()) monos.insert(m);
  std::vector<Mono> cols(monos.begin(), monos.end());
  FieldPtr F = polys[0].ring()->field;
  ExactMatrix mat(F, (int)polys.size(), (int)cols.size());
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      auto it = polys[i].terms().find(cols[j]);
      if (it != polys[i].terms().end()) mat.set((int)i, (int)j, it->second);
    }
  return mat;
}

TEST_CASE("quadric counts and the Klein quadric") {
  auto F = Field::rationals();
  auto g24 = make_grassmannian(F, 2, 4);
  REQUIRE(g24.quadrics.size() == 1);
  auto R = g24.ring;
  auto v = [&](int i) { return SparsePoly::variable(R, i); };
  // x12*x34 - x13*x24 + x14*x23, up to sign
  auto klein = v(0) * v(5) - v(1) * v(4) + v(2) * v(3);
  CHECK((g24.quadrics[0] == klein || g24.quadrics[0] == -klein));

  CHECK(make_grassmannian(F, 2, 7).quadrics.size() == 35);
  CHECK(make_grassmannian(F, 3, 6).quadrics.size() == 35);
  CHECK(make_grassmannian(F, 2, 6).quadrics.size() == 15);
  CHECK_THROWS_AS(make_grassmannian(F, 3, 7), Unsupported);
  CHECK_THROWS_AS(make_grassmannian(F, 4, 8), Unsupported);
}

TEST_CASE("coordinate planes and sign behavior of plucker points") {
  auto F = Field::rationals();
  ExactMatrix plane(F, 2, 7);
  plane.set(0, 0, F->one());
  plane.set(1, 1, F->one());
  auto t = plucker_point(plane);
  REQUIRE(t.terms().size() == 1);
  CHECK(t.coeff({1, 2}).is_one());

  ExactMatrix swapped(F, 2, 7);
  swapped.set(0, 1, F->one());
  swapped.set(1, 0, F->one());
  auto s = plucker_point(swapped);
  CHECK(s.coeff({1, 2}) == -F->one());

  ExactMatrix bad(F, 2, 7);
  bad.set(0, 0, F->one());
  bad.set(1, 0, F->one());
  CHECK_THROWS_AS(plucker_point(bad), RankDeficient);
}

TEST_CASE("1000 random planes satisfy the quadrics") {
  auto F = Field::prime(11);
  std::mt19937_64 rng(101);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 7}, {3, 6}}) {
    auto spec = make_grassmannian(F, k, n);
    for (int trial = 0; trial < 500; ++trial) {
      auto pt = plucker_point(random_plane(F, k, n, rng)).dense();
      for (auto& q : spec.quadrics) CHECK(q.evaluate(pt).is_zero());
    }
  }
}

TEST_CASE("charts kill the quadrics") {
  auto F = Field::rationals();
  auto spec = make_grassmannian(F, 2, 7);
  auto chart = make_chart(spec, {1, 2});
  CHECK(chart.param_ring->nvars() == 10);
  // x_{1,2} restricts to the constant 1
  auto x12 = SparsePoly::variable(spec.ring, 0);
  auto pulled = chart_pullback(spec, chart, {x12});
  CHECK(pulled[0] == SparsePoly::constant(chart.param_ring, F->one()));
  for (auto& q : chart_pullback(spec, chart, spec.quadrics)) CHECK(q.is_zero());

  auto g36 = make_grassmannian(F, 3, 6);
  auto c36 = make_chart(g36, {1, 2, 3});
  CHECK(c36.param_ring->nvars() == 9);
  for (auto& q : chart_pullback(g36, c36, g36.quadrics)) CHECK(q.is_zero());

  CHECK_THROWS_AS(make_chart(spec, {1, 1}), BadPivots);
  CHECK_THROWS_AS(make_chart(spec, {1, 8}), BadPivots);
}

TEST_CASE("pfaffian and shuffle descriptions of Gr(2,7) agree") {
  auto F = Field::prime(11);
  auto g27 = make_grassmannian(F, 2, 7);
  auto shuffle = shuffle_quadrics(g27.ring, 2, 7);
  auto pf_mat = coeff_matrix(g27.quadrics);
  CHECK(pf_mat.rank() == 35);
  // both presentations span the same quadric space
  std::vector<SparsePoly> all = g27.quadrics;
  all.insert(all.end(), shuffle.begin(), shuffle.end());
  CHECK(coeff_matrix(shuffle).rank() == 35);
  CHECK(coeff_matrix(all).rank() == 35);
}

TEST_CASE("hilbert numerators") {
  auto n24 = grassmann_hilbert_numerator(2, 4, 20);
  REQUIRE(n24.size() == 2);
  CHECK(n24[0] == 1);
  CHECK(n24[1] == 1);

  auto n27 = grassmann_hilbert_numerator(2, 7, 40);
  auto n36 = grassmann_hilbert_numerator(3, 6, 40);
  CHECK(n27 == n36);
  mpz_class sum = 0;
  for (auto& c : n27) {
    CHECK(c >= 0);
    sum += c;
  }
  CHECK(sum == 42);
}

TEST_CASE("weyl dimension formula small values") {
  CHECK(grassmann_h0(2, 4, 0) == 1);
  CHECK(grassmann_h0(2, 4, 1) == 6);
  CHECK(grassmann_h0(2, 4, 2) == 20);  // Sym^2 of 6 dims minus the quadric
  CHECK(grassmann_h0(2, 7, 1) == 21);
  CHECK(grassmann_h0(3, 6, 1) == 20);
}
