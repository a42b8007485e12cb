#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gq/group.hpp"

using namespace gq;

static ExactMatrix rows_to_matrix(const FieldPtr& F,
                                  const std::vector<std::vector<FieldElement>>& rows,
                                  int dim) {
  ExactMatrix m(F, (int)rows.size(), dim);
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < dim; ++c) m.set(r, c, rows[r][c]);
  return m;
}

TEST_CASE("group construction, orders, relations") {
  for (auto [name, order, dim] : std::vector<std::tuple<std::string, int, int>>{
           {"D7_rho6", 14, 6},
           {"D7_rho7", 14, 7},
           {"Z7", 7, 7},
           {"F21", 21, 13},
           {"G42", 42, 13},
           {"D7_perm", 14, 14},
           {"D7_gr36", 14, 6}}) {
    auto g = make_group(name);
    CHECK(g.order() == order);
    CHECK(g.dim == dim);
    for (auto& m : g.gens) CHECK(m.rows() == dim);
  }
  CHECK_THROWS_AS(make_group("D8_rho6"), UnknownGroup);
  CHECK_THROWS_AS(make_group("Z7", Field::prime(11)), FieldTooSmall);
  CHECK(make_group("Z7", Field::prime(29)).order() == 7);
  CHECK(make_group("F21", Field::prime(43)).order() == 21);
}

TEST_CASE("generator matrices act as stated") {
  auto g = make_group("D7_rho7");
  auto F = g.field;
  auto eps = F->root_of_unity(7);
  // tau scales v_3 by eps^2; sigma swaps v_2 and v_7 and fixes v_1
  CHECK(g.gens[0].at(2, 2) == eps * eps);
  CHECK(g.gens[1].at(0, 0) == F->one());
  CHECK(g.gens[1].at(6, 1) == F->one());
  CHECK(g.gens[1].at(1, 6) == F->one());

  auto f21 = make_group("F21");
  // b doubles indices: x_3 -> x_6, y_5 -> y_3, z fixed
  CHECK(f21.gens[1].at(5, 2) == F->one());
  CHECK(f21.gens[1].at(8, 10) == F->one());
  CHECK(f21.gens[1].at(12, 12) == F->one());
}

TEST_CASE("invariant hyperplane coordinates in wedge^2 V*") {
  for (auto [name, n, triple] : std::vector<std::tuple<std::string, int,
                                                       std::vector<WedgeIndex>>>{
           {"D7_rho7", 7, {{2, 7}, {3, 6}, {4, 5}}},
           {"D7_rho6", 6, {{1, 6}, {2, 5}, {3, 4}}}}) {
    auto g = make_group(name);
    auto F = g.field;
    std::vector<ExactMatrix> wedge_gens;
    for (auto& m : g.gens)
      wedge_gens.push_back(induced_action(m.inverse().transpose(), 2));

    // the honest sigma-fixed space is zero; the printed hyperplanes span the
    // chi(sigma) = -1 eigenspace
    CHECK(invariant_subspace(wedge_gens).empty());
    auto inv = invariant_subspace(wedge_gens, {F->one(), -F->one()});
    REQUIRE(inv.size() == 3);

    int nw = (int)wedge_basis(2, n).size();
    ExactMatrix expected(F, 3, nw);
    for (int r = 0; r < 3; ++r) expected.set(r, wedge_position(triple[r], n), F->one());
    CHECK(same_row_span(rows_to_matrix(F, inv, nw), expected));

    // tau alone already cuts the space down to the same three coordinates
    auto tau_only = invariant_subspace({wedge_gens[0]});
    CHECK(tau_only.size() == 3);
    CHECK(same_row_span(rows_to_matrix(F, tau_only, nw), expected));
  }
}

TEST_CASE("invariant q1 family: six two-slot parameters") {
  auto fam = invariant_q1_family();
  auto F = fam.field;
  REQUIRE(fam.params.size() == 6);
  REQUIRE(fam.basis.size() == 6);
  CHECK(fam.params == std::vector<std::string>{"c_2_6", "c_3_5", "c_3_6",
                                               "c_4_5", "c_1_2", "c_4_6"});
  // slot pattern: each parameter appears with coefficient 1 in exactly two
  // slots, paired by i -> 7-i
  const std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> pairs = {
      {{1, 2, 6}, {6, 1, 5}}, {{1, 3, 5}, {6, 2, 4}}, {{2, 3, 6}, {5, 1, 4}},
      {{2, 4, 5}, {5, 2, 3}}, {{3, 1, 2}, {4, 5, 6}}, {{3, 4, 6}, {4, 1, 3}}};
  for (int s = 0; s < 6; ++s) {
    auto& b = fam.basis[s];
    CHECK(b.entries().size() == 2);
    auto [a1, a2] = pairs[s];
    CHECK(b.coeff(a1[0], a1[1], a1[2]) == F->one());
    CHECK(b.coeff(a2[0], a2[1], a2[2]) == F->one());
  }
  // in particular v_4 (x) (v_5* ^ v_6*) carries the same parameter as
  // v_3 (x) (v_1* ^ v_2*)
  CHECK(fam.basis[4].coeff(3, 1, 2) == fam.basis[4].coeff(4, 5, 6));
}

TEST_CASE("family equivariance on random pairs") {
  auto fam = invariant_q1_family();
  auto F = fam.field;
  auto g = make_group("D7_rho6", F);
  std::mt19937_64 rng(4242);
  auto lam = fam.at(fam.random_values(rng));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FieldElement> a, b;
    for (int i = 0; i < 6; ++i) {
      a.push_back(F->random_element(rng));
      b.push_back(F->random_element(rng));
    }
    auto base = apply_section(lam, a, b);
    // tau-equivariant on the nose
    CHECK(apply_section(lam, g.gens[0].apply(a), g.gens[0].apply(b)) ==
          g.gens[0].apply(base));
    // sigma-equivariant up to the character -1
    auto lhs = apply_section(lam, g.gens[1].apply(a), g.gens[1].apply(b));
    auto rhs = g.gens[1].apply(base);
    for (int i = 0; i < 6; ++i) CHECK(lhs[i] == -rhs[i]);
    // alternating in (a, b)
    auto swapped = apply_section(lam, b, a);
    for (int i = 0; i < 6; ++i) CHECK(swapped[i] == -base[i]);
  }
  CHECK(apply_section(lam, {F->one(), F->zero(), F->zero(), F->zero(),
                            F->zero(), F->zero()},
                      {F->one(), F->zero(), F->zero(), F->zero(), F->zero(),
                       F->zero()}) ==
        std::vector<FieldElement>(6, F->zero()));
}

TEST_CASE("family works over finite fields and rejects small ones") {
  auto fam = invariant_q1_family(Field::prime(29));
  CHECK(fam.basis.size() == 6);
  CHECK_THROWS_AS(invariant_q1_family(Field::prime(11)), FieldTooSmall);
}

TEST_CASE("eigenvalue classes of triples") {
  auto classes = gr36_eigenvalue_classes();
  int total = 0;
  for (auto& [res, triples] : classes) total += (int)triples.size();
  CHECK(total == 20);
  CHECK(classes[1] == std::vector<std::array<int, 3>>{{1, 2, 5}, {1, 3, 4}, {4, 5, 6}});
  CHECK(classes[0] == std::vector<std::array<int, 3>>{{1, 2, 4}, {3, 5, 6}});
}
