#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gq/cohomology.hpp"

using namespace gq;

static WeightedBundle line_bundle(int k, int n, int t) {
  WeightedBundle b;
  b.k = k;
  b.n = n;
  b.a.assign(k, t);
  b.b.assign(n - k, 0);
  return b;
}

static std::vector<int> random_weight(int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  std::vector<int> w(len);
  for (auto& x : w) x = d(rng);
  std::sort(w.rbegin(), w.rend());
  return w;
}

TEST_CASE("the dotted-weight rule on known bundles") {
  // projective line: H^0(O(d)) = d + 1, H^1(O(-d-2)) = d + 1
  for (int d = 0; d <= 5; ++d) {
    auto t = bott_cohomology(line_bundle(1, 2, d));
    CHECK(t == CohomologyTable{{0, d + 1}});
    auto s = bott_cohomology(line_bundle(1, 2, -d - 2));
    CHECK(s == CohomologyTable{{1, d + 1}});
    CHECK(bott_cohomology(line_bundle(1, 2, -1)).empty());
  }

  // the canonical bundle of Gr(2,7) is O(-7): one-dimensional top cohomology
  auto top = bott_cohomology(line_bundle(2, 7, -7));
  CHECK(top == CohomologyTable{{10, 1}});
  CHECK(bott_cohomology(line_bundle(2, 7, -3)).empty());

  // tangent bundle S* (x) Q: the adjoint representation minus the trace
  WeightedBundle tg{2, 7, {1, 0}, {0, 0, 0, 0, -1}};
  CHECK(bott_cohomology(tg) == CohomologyTable{{0, 48}});
  CHECK(tg.rank() == 10);

  // Pluecker embedding: H^0(O(1)) = wedge^2 of the 7-dim space
  CHECK(bott_cohomology(line_bundle(2, 7, 1)) == CohomologyTable{{0, 21}});
  CHECK(bott_cohomology(line_bundle(3, 6, 1)) == CohomologyTable{{0, 20}});

  CHECK_THROWS_AS(bott_cohomology(WeightedBundle{2, 7, {0, 1}, {0, 0, 0, 0, 0}}),
                  BadWeight);
  CHECK_THROWS_AS(bott_cohomology(WeightedBundle{2, 7, {0}, {0, 0, 0, 0, 0}}),
                  BadWeight);
}

TEST_CASE("Serre duality and Euler characteristics as property tests") {
  std::mt19937_64 rng(2026);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 7}, {3, 6}, {2, 6}}) {
    int D = k * (n - k);
    for (int trial = 0; trial < 50; ++trial) {
      WeightedBundle e;
      e.k = k;
      e.n = n;
      e.a = random_weight(k, rng);
      e.b = random_weight(n - k, rng);
      auto t = bott_cohomology(e);
      CHECK(t.size() <= 1);  // irreducibles live in a single degree

      // h^q(E) = h^{D-q}(E^* (x) O(-n))
      auto dual_side = bott_cohomology(e.dual().twisted(-n));
      CohomologyTable reflected;
      for (auto& [q, v] : dual_side) reflected[D - q] = v;
      CHECK(t == reflected);

      // the closed-form Euler characteristic against the rule
      mpz_class chi = 0;
      for (auto& [q, v] : t) chi += (q % 2 ? -1 : 1) * v;
      CHECK(chi == bundle_euler(e));

      // duals have equal rank
      CHECK(e.rank() == e.dual().rank());
    }
  }
}

TEST_CASE("the Cauchy decomposition of the cotangent powers") {
  // ranks must add up to C(dim, p)
  for (int p = 0; p <= 10; ++p) {
    mpz_class total = 0;
    for (auto& term : omega_decompose(p, 2, 7, 0)) total += term.bundle.rank() * term.mult;
    mpz_class want;
    mpz_bin_uiui(want.get_mpz_t(), 10, p);
    CHECK(total == want);
  }
  {
    mpz_class total = 0;
    for (auto& term : omega_decompose(2, 2, 7, 0)) total += term.bundle.rank() * term.mult;
    CHECK(total == 45);
  }

  // Hodge numbers of the ambient Grassmannian: h^{p,p} counts partitions in
  // a 2 x 5 box, everything off-diagonal vanishes
  std::vector<int> diag = {1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1};
  for (int p = 0; p <= 10; ++p) {
    CohomologyTable col;
    for (auto& term : omega_decompose(p, 2, 7, 0))
      for (auto& [q, v] : bott_cohomology(term.bundle)) col[q] += v * term.mult;
    CHECK(col == CohomologyTable{{p, diag[p]}});
  }

  // Omega^9 (x) O(7) = T_G on Gr(2,7), degree by degree
  CohomologyTable nine;
  for (auto& term : omega_decompose(9, 2, 7, 7))
    for (auto& [q, v] : bott_cohomology(term.bundle)) nine[q] += v * term.mult;
  CHECK(nine == CohomologyTable{{0, 48}});

  CHECK_THROWS_AS(omega_decompose(11, 2, 7, 0), BadRange);
  CHECK_THROWS_AS(omega_decompose(-1, 2, 7, 0), BadRange);
}

TEST_CASE("Schur products on the quotient block") {
  // rank is multiplicative; the second factor stays narrow because the dual
  // Jacobi-Trudi expansion grows with the width of its shape
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> narrow(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    auto b1 = random_weight(5, rng);
    std::vector<int> b2(5);
    for (auto& x : b2) x = narrow(rng);
    std::sort(b2.rbegin(), b2.rend());
    mpz_class lhs = 0;
    for (auto& [w, m] : tensor_schur(b1, b2)) lhs += m * weyl_dim(w);
    CHECK(lhs == weyl_dim(b1) * weyl_dim(b2));
  }

  // a Pieri column is a sum of distinct vertical strips
  auto strips = pieri_column({2, 1, 0, 0}, 2);
  CHECK(strips.size() == 4);
  CHECK(pieri_column({1, 1, 1, 1}, 5).empty());

  CHECK_THROWS_AS(tensor_schur({0, 1}, {0, 0}), BadWeight);
  CHECK_THROWS_AS(tensor_schur({1, 0}, {0}), BadWeight);
}

TEST_CASE("restriction staircases on the three linear sections") {
  SectionVariety Z(2, 7, 6), W(2, 7, 7), S(2, 7, 8);
  CHECK(Z.dim() == 4);
  CHECK(W.dim() == 3);
  CHECK(S.dim() == 2);

  // the hyperplane class: 21 independent Pluecker coordinates minus the cuts
  CHECK(Z.restricted(line_bundle(2, 7, 1)) == CohomologyTable{{0, 15}});
  CHECK(W.restricted(line_bundle(2, 7, 1)) == CohomologyTable{{0, 14}});
  // h^2 = h^0(O_S) = 1 by Serre duality, the canonical bundle being O(1)
  CHECK(S.restricted(line_bundle(2, 7, 1)) == CohomologyTable{{0, 13}, {2, 1}});

  // canonical bundles: O(-1), O, O(1) in turn
  CHECK(Z.restricted(line_bundle(2, 7, -1)) == CohomologyTable{{4, 1}});
  CHECK(W.restricted(line_bundle(2, 7, 0)) == CohomologyTable{{0, 1}, {3, 1}});
  CHECK(S.restricted(line_bundle(2, 7, 0)) == CohomologyTable{{0, 1}, {2, 13}});

  // Euler characteristics agree with the exact Koszul sums
  for (int t = -3; t <= 3; ++t) {
    auto f = line_bundle(2, 7, t);
    for (auto* v : {&Z, &W, &S}) {
      mpz_class chi = 0;
      for (auto& [q, d] : v->restricted(f)) chi += (q % 2 ? -1 : 1) * d;
      CHECK(chi == v->euler_restricted(f));
    }
  }

  // the ambient tangent bundle restricted
  WeightedBundle tg{2, 7, {1, 0}, {0, 0, 0, 0, -1}};
  CHECK(Z.restricted(tg) == CohomologyTable{{0, 48}});
  CHECK(W.restricted(tg) == CohomologyTable{{0, 48}, {2, 1}});
  CHECK(S.restricted(tg) == CohomologyTable{{0, 48}, {2, 8}});

  CHECK_THROWS_AS(SectionVariety(2, 7, 0), BadRange);
  CHECK_THROWS_AS(SectionVariety(2, 7, 11), BadRange);
}

TEST_CASE("Hodge diamonds of the fourfold, threefold, and surface") {
  auto Z = hodge_linear_section(2, 7, 6);
  CHECK(Z.kind == "fourfold");
  std::vector<std::vector<mpz_class>> wantZ = {{1, 0, 0, 0, 0},
                                               {0, 1, 0, 6, 0},
                                               {0, 0, 57, 0, 0},
                                               {0, 6, 0, 1, 0},
                                               {0, 0, 0, 0, 1}};
  CHECK(Z.diamond == wantZ);
  CHECK(Z.e == 73);

  auto W = hodge_linear_section(2, 7, 7);
  CHECK(W.kind == "threefold");
  CHECK(W.h11 == 1);
  CHECK(W.h12 == 50);
  CHECK(W.h30 == 1);
  CHECK(W.q == 0);
  CHECK(W.chi == -98);

  auto S = hodge_linear_section(2, 7, 8);
  CHECK(S.kind == "surface");
  CHECK(S.pg == 13);
  CHECK(S.q == 0);
  CHECK(S.chiO == 14);
  CHECK(S.h11 == 98);
  CHECK(S.e == 126);
  CHECK(S.K2 == 42);

  // the Calabi-Yau linear section of Gr(3,6)
  auto Y = hodge_linear_section(3, 6, 6);
  CHECK(Y.h30 == 1);
  CHECK(Y.h11 == 1);
  CHECK(Y.h12 == 49);
  CHECK(Y.chi == -96);
}

TEST_CASE("the quotient-bundle model on Gr(2,6) matches the linear sections") {
  // hodge_q1_model throws if the diamonds disagree, so a clean return is the
  // real assertion; spot-check the headline numbers anyway
  auto Z = hodge_q1_model(0);
  CHECK(Z.e == 73);
  auto W = hodge_q1_model(1);
  CHECK(W.h12 == 50);
  auto S = hodge_q1_model(2);
  CHECK(S.pg == 13);
  CHECK(S.K2 == 42);
  CHECK_THROWS_AS(hodge_q1_model(3), BadRange);
}

TEST_CASE("deformation counts through the normal-bundle sequence") {
  auto z = deformation_number("Z");
  CHECK(z.h1 == 42);
  CHECK(z.h2 == 0);
  CHECK(z.h0_ambient_tangent == 48);
  CHECK(z.h0_normal == 90);

  auto w = deformation_number("W");
  CHECK(w.h1 == 50);
  CHECK(w.h2 == 1);  // h^2(T) = h^{1,1} on the Calabi-Yau threefold

  auto s = deformation_number("S");
  CHECK(s.h1 == 56);
  CHECK(s.h2 == 0);
  CHECK(s.h0_normal == 104);

  REQUIRE(!z.notes.empty());
  CHECK(z.notes[0].find("h^0(T_X) = 0") != std::string::npos);
  CHECK_THROWS_AS(deformation_number("X"), BadRange);
}

TEST_CASE("numerical bookkeeping for the order-7 quotients") {
  auto S = hodge_linear_section(2, 7, 8);
  auto q = quotient_invariants(S, 7, true);
  CHECK(q.chiO == 2);
  CHECK(q.K2 == 6);
  CHECK(q.e == 18);
  CHECK(q.pg == 1);
  CHECK(q.q == 0);
  CHECK(q.h11 == 14);
  // expected dimension of the moduli space
  CHECK(10 * q.chiO - 2 * q.K2 == 8);

  auto W = hodge_linear_section(2, 7, 7);
  auto qw = quotient_invariants(W, 7, true, 1);
  CHECK(qw.chi == -14);
  CHECK(qw.h12 == 8);

  // the Gr(3,6) Calabi-Yau cannot carry a free order-7 action
  auto Y = hodge_linear_section(3, 6, 6);
  CHECK_THROWS_AS(quotient_invariants(Y, 7, true), NotDivisible);
  // and a non-free action gets no formula at all
  CHECK_THROWS_AS(quotient_invariants(S, 7, false), NotDivisible);
}

TEST_CASE("involution quotients of the quotient surface") {
  auto S = hodge_linear_section(2, 7, 8);
  auto small = quotient_invariants(S, 7, true);

  // fixed locus: a conic (K.C = 2, chi(O_C) = 1) and ten isolated points
  auto conic = fixed_datum_from_curve(2, 1, 10);
  CHECK(conic.C2 == -4);
  auto g = involution_quotient(small, conic, 1, 0);
  CHECK(g.K2_quotient == -1);
  CHECK(g.e_quotient == 15);
  CHECK(g.e_resolved == 25);
  CHECK(g.K2_resolved == -1);
  CHECK(g.noether_consistent);

  // the bicanonical model: fixed curve with K.C = 6 and chi(O_C) = 0
  auto sextic = fixed_datum_from_curve(6, 0, 0);
  CHECK(sextic.C2 == -6);
  auto h = involution_quotient(small, sextic, 1, 0);
  CHECK(h.K2_quotient == -6);

  // a curve violating adjunction is rejected
  FixedDatum bad;
  bad.KC = 2;
  bad.chiOC = 1;
  bad.C2 = 0;
  bad.points = 10;
  CHECK_THROWS_AS(involution_quotient(small, bad, 1, 0), AdjunctionViolated);
}
