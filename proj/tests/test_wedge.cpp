#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gq/wedge.hpp"

using namespace gq;

TEST_CASE("wedge basis sizes and ordering") {
  CHECK(wedge_basis(2, 7).size() == 21);
  CHECK(wedge_basis(3, 6).size() == 20);
  CHECK(wedge_basis(2, 6).size() == 15);
  auto b = wedge_basis(2, 4);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == WedgeIndex{1, 2});
  CHECK(b[1] == WedgeIndex{1, 3});
  CHECK(b[5] == WedgeIndex{3, 4});
  for (size_t i = 0; i < b.size(); ++i) CHECK(wedge_position(b[i], 4) == (int)i);
  for (auto& idx : wedge_basis(3, 7))
    CHECK(wedge_basis(3, 7)[wedge_position(idx, 7)] == idx);
  CHECK_THROWS_AS(wedge_basis(0, 3), BadRange);
  CHECK_THROWS_AS(wedge_basis(4, 3), BadRange);
}

TEST_CASE("sort sign") {
  WedgeIndex a{2, 1};
  CHECK(sort_sign(a) == -1);
  CHECK(a == WedgeIndex{1, 2});
  WedgeIndex b{3, 1, 2};
  CHECK(sort_sign(b) == 1);
  WedgeIndex c{1, 1};
  CHECK(sort_sign(c) == 0);
}

static ExactMatrix perm_with_signs(const FieldPtr& F, const std::vector<int>& img) {
  // v_i -> v_{img[i-1]}
  int n = (int)img.size();
  ExactMatrix g(F, n, n);
  for (int i = 1; i <= n; ++i) g.set(img[i - 1] - 1, i - 1, F->one());
  return g;
}

TEST_CASE("induced action examples on wedge squares") {
  auto F = Field::cyclotomic(7);
  FieldElement eps = F->root_of_unity(7);

  // v_i -> v_{7-i} on a 6-dim space
  ExactMatrix s6 = perm_with_signs(F, {6, 5, 4, 3, 2, 1});
  ExactMatrix S6 = induced_action(s6, 2);
  // v_1 ^ v_2 -> v_6 ^ v_5 = -(v_5 ^ v_6)
  int col = wedge_position({1, 2}, 6), row = wedge_position({5, 6}, 6);
  CHECK(S6.at(row, col) == -F->one());
  for (int r = 0; r < 15; ++r)
    if (r != row) CHECK(S6.at(r, col).is_zero());

  // diag(eps^{i-1}) on a 7-dim space: v_i ^ v_j has eigenvalue eps^{i+j-2}
  ExactMatrix t7(F, 7, 7);
  for (int i = 1; i <= 7; ++i) t7.set(i - 1, i - 1, eps.pow(i - 1));
  ExactMatrix T7 = induced_action(t7, 2);
  int p36 = wedge_position({3, 6}, 7);
  CHECK(T7.at(p36, p36).is_one());  // eps^7 = 1
  int p12 = wedge_position({1, 2}, 7);
  CHECK(T7.at(p12, p12) == eps);

  // v_1 fixed, v_i -> v_{9-i}: v_4 ^ v_5 -> v_5 ^ v_4 = -(v_4 ^ v_5)
  ExactMatrix s7 = perm_with_signs(F, {1, 7, 6, 5, 4, 3, 2});
  ExactMatrix S7 = induced_action(s7, 2);
  int p45 = wedge_position({4, 5}, 7);
  CHECK(S7.at(p45, p45) == -F->one());
}

TEST_CASE("induced action is a homomorphism") {
  std::mt19937_64 rng(17);
  auto F = Field::prime(29);
  for (int t = 0; t < 6; ++t) {
    ExactMatrix g(F, 5, 5), h(F, 5, 5);
    do {
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          g.set(i, j, F->random_element(rng));
          h.set(i, j, F->random_element(rng));
        }
    } while (g.det().is_zero() || h.det().is_zero());
    for (int k = 1; k <= 3; ++k)
      CHECK(induced_action(g * h, k) == induced_action(g, k) * induced_action(h, k));
  }
  ExactMatrix sing(F, 3, 3);
  CHECK_THROWS_AS(induced_action(sing, 2), SingularGenerator);
}

TEST_CASE("contraction matrix") {
  auto F = Field::rationals();
  ExactMatrix m = contraction_matrix(F, 6);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 90);
  CHECK(m.rank() == 6);
  CHECK(m.kernel_basis().size() == 84);

  // (v_1* ^ v_2*) (x) v_3 -> 0
  std::vector<FieldElement> v(90, F->zero());
  v[contraction_position(3, 1, 2, 6)] = F->one();
  for (auto& x : m.apply(v)) CHECK(x.is_zero());

  // (v_1* ^ v_2*) (x) v_1 -> v_2*
  std::vector<FieldElement> w(90, F->zero());
  w[contraction_position(1, 1, 2, 6)] = F->one();
  auto img = m.apply(w);
  CHECK(img[1].is_one());
  for (int i = 0; i < 6; ++i)
    if (i != 1) CHECK(img[i].is_zero());
}

TEST_CASE("tensor vector sign handling") {
  auto F = Field::rationals();
  TensorVector t(F, 2, 6);
  t.add_term({2, 1}, F->one());        // = -(v_1 ^ v_2)
  CHECK(t.coeff({1, 2}) == -F->one());
  t.add_term({1, 2}, F->one());        // cancels
  CHECK(t.terms().empty());
  t.add_term({3, 3}, F->one());        // repeated index: zero
  CHECK(t.terms().empty());
}

TEST_CASE("quotient bundle section kernel constraint") {
  auto F = Field::rationals();
  std::map<std::array<int, 3>, FieldElement> good;
  good[{3, 1, 2}] = F->one();  // index 3 disjoint from {1,2}: contracts to 0
  QuotientBundleSection s(F, 6, good);
  CHECK(s.coeff(3, 1, 2).is_one());
  CHECK(s.coeff(3, 2, 1) == -F->one());
  CHECK(s.coeff(4, 1, 2).is_zero());

  std::map<std::array<int, 3>, FieldElement> bad;
  bad[{1, 1, 2}] = F->one();
  CHECK_THROWS_AS(QuotientBundleSection(F, 6, bad), NotInKernel);

  // balanced combination: (v_1*^v_2*)(x)v_1 + (v_2*^v_3*)(x)v_3 contracts to
  // v_2* - v_2* = 0
  std::map<std::array<int, 3>, FieldElement> bal;
  bal[{1, 1, 2}] = F->one();
  bal[{3, 2, 3}] = F->one();
  QuotientBundleSection s2(F, 6, bal);
  CHECK(s2.entries().size() == 2);
}
