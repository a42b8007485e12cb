#pragma once

// Sheaf cohomology of homogeneous bundles on Grassmannians via the dotted
// Weyl-weight rule, Cauchy decomposition of Omega^p, Koszul restriction to
// zero loci of sections, Hodge diamonds of the section varieties, deformation
// counts, and the numerical bookkeeping for quotients.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gq/field.hpp"
#include "gq/wedge.hpp"

namespace gq {

struct BadWeight : FieldError {
  using FieldError::FieldError;
};
struct AmbiguousExtension : FieldError {
  using FieldError::FieldError;
};
struct NotDivisible : FieldError {
  using FieldError::FieldError;
};
struct AdjunctionViolated : FieldError {
  using FieldError::FieldError;
};

// Sigma_a(S*) (x) Sigma_b(Q*) on Gr(k, n), with S the tautological subbundle
// and Q the quotient; a has k entries, b has n-k, each weakly decreasing.
// O(1) = det S*, so a twist by O(t) adds t to every entry of a.
struct WeightedBundle {
  int k = 0, n = 0;
  std::vector<int> a, b;

  WeightedBundle twisted(int t) const;
  WeightedBundle dual() const;
  mpz_class rank() const;
};

// degree -> dimension, absent degrees zero
using CohomologyTable = std::map<int, mpz_class>;

// dim of the GL(r) module with highest weight w (weakly decreasing, r = len)
mpz_class weyl_dim(const std::vector<int>& w);

// Dotted-weight rule: concatenate (a | b), add rho = (n-1, ..., 0); a repeat
// kills all cohomology, otherwise the inversion count is the only nonzero
// degree and the dimension is the Weyl dimension of the sorted weight.
CohomologyTable bott_cohomology(const WeightedBundle& bnd);

// Euler characteristic straight from the Weyl character, sign included.
mpz_class bundle_euler(const WeightedBundle& bnd);

struct BundleTerm {
  WeightedBundle bundle;
  mpz_class mult;
};

// Omega^p(twist) on Gr(k, n) as a sum of irreducibles (Cauchy identity on
// wedge^p(S (x) Q*)); total rank C(k(n-k), p).
std::vector<BundleTerm> omega_decompose(int p, int k, int n, int twist);

// Sigma_b Q* (x) Sigma_{1^c} Q* by the Pieri column rule (vertical strips).
std::vector<std::vector<int>> pieri_column(const std::vector<int>& b, int c);
// General product on the Q*-block via dual Jacobi-Trudi; multiplicities can
// be large but never negative in the collected result.
std::vector<std::pair<std::vector<int>, mpz_class>> tensor_schur(
    const std::vector<int>& b1, const std::vector<int>& b2);

// The engine: X = zero locus of a general section of E on Gr(k, n), with E a
// sum of O(1)'s and (on Gr(2,6)) copies of Q(1).  Cohomology of restrictions
// is chased through the Koszul complex, Hodge sheaves through the conormal
// filtration; any long-exact-sequence rank the tables do not force raises
// AmbiguousExtension rather than guessing.
class SectionVariety {
 public:
  // r hyperplanes
  SectionVariety(int k, int n, int r);
  // Q(1) + O(1)^a on Gr(2,6)
  explicit SectionVariety(int a);
  ~SectionVariety();
  SectionVariety(const SectionVariety&) = delete;
  SectionVariety& operator=(const SectionVariety&) = delete;

  int dim() const;
  int k() const;
  int n() const;

  // H^q(X, F|_X) for an ambient irreducible
  CohomologyTable restricted(const WeightedBundle& f) const;
  // H^q(X, Omega^p_X (x) Sigma_w Q* (t)); w defaults to the trivial weight
  CohomologyTable hodge_sheaf(int p, int twist = 0,
                              const std::vector<int>& w = {}) const;

  // exact Euler characteristics (no extension data needed)
  mpz_class euler_restricted(const WeightedBundle& f) const;
  mpz_class euler_omega(int p, int twist = 0, const std::vector<int>& w = {}) const;

  // h^{p,q} for 0 <= p, q <= dim.  Columns the extension chase cannot settle
  // are completed by Serre duality, Hodge symmetry, and the exact Euler
  // characteristic; if a gap survives all three, AmbiguousExtension.
  std::vector<std::vector<mpz_class>> hodge_diamond() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct NumericalInvariants {
  std::string kind;  // "surface" | "threefold" | "fourfold"
  // surfaces
  mpz_class pg = 0, q = 0, K2 = 0, chiO = 0, e = 0, h11 = 0;
  // threefolds
  mpz_class h12 = 0, chi = 0, h30 = 0;
  std::vector<std::vector<mpz_class>> diamond;
};

NumericalInvariants invariants_from_diamond(
    const std::vector<std::vector<mpz_class>>& h);

// r general hyperplane sections of Gr(k, n)
NumericalInvariants hodge_linear_section(int k, int n, int r);
// zero locus of Q(1) + O(1)^a on Gr(2,6); checks against the matching
// Gr(2,7) linear section
NumericalInvariants hodge_q1_model(int a);

struct DeformationReport {
  mpz_class h1 = 0, h2 = 0;
  mpz_class h0_normal = 0, h0_ambient_tangent = 0;
  std::vector<std::string> notes;  // records the h^0(T_X) = 0 assumption
};

// kind in {"Z", "W", "S"}: codim 6 / 7 / 8 linear sections of Gr(2,7),
// via the normal-bundle sequence
DeformationReport deformation_number(const std::string& kind);

// free quotient bookkeeping; h11_quotient only enters the threefold case
NumericalInvariants quotient_invariants(const NumericalInvariants& inv,
                                        int order, bool free,
                                        int h11_quotient = 1);

struct FixedDatum {
  mpz_class C2 = 0, KC = 0, chiOC = 0;
  mpz_class points = 0;
  bool has_curve = true;
};

// C^2 forced by adjunction K.C + C^2 + 2 chi(O_C) = 0
FixedDatum fixed_datum_from_curve(const mpz_class& KC, const mpz_class& chiOC,
                                  const mpz_class& points);

struct QuotientGeometry {
  mpz_class K2_quotient = 0;
  mpz_class e_quotient = 0;
  mpz_class e_resolved = 0;
  mpz_class K2_resolved = 0;  // nodes resolve crepantly
  bool noether_consistent = false;  // against the supplied (p_g, q)
};

// order-2 quotient with the given fixed locus; (pg, q) of the resolution are
// configuration inputs for the Noether check
QuotientGeometry involution_quotient(const NumericalInvariants& inv,
                                     const FixedDatum& fix,
                                     const mpz_class& pg_res,
                                     const mpz_class& q_res);

}  // namespace gq
