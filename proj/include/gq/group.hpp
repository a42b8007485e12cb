#pragma once

// Finite matrix group actions: construction of the named groups, relation and
// order verification, invariant (character-twisted) subspaces, and the
// six-parameter invariant family of sections of Q(1) on Gr(2,6).

#include <map>

#include "gq/wedge.hpp"

namespace gq {

struct UnknownGroup : FieldError {
  using FieldError::FieldError;
};
struct FieldTooSmall : FieldError {
  using FieldError::FieldError;
};
struct RelationFailed : FieldError {
  using FieldError::FieldError;
};

struct GroupAction {
  std::string name;
  FieldPtr field;
  int dim = 0;
  std::vector<std::string> gen_names;
  std::vector<ExactMatrix> gens;       // acting on coordinate column vectors
  std::vector<ExactMatrix> elements;   // full group, closure of the generators
  int order() const { return (int)elements.size(); }
};

// Supported names: D7_rho6, D7_rho7, Z7, F21, G42, D7_perm, D7_gr36.
// field defaults to Q(zeta_7); a finite field with the needed roots works too.
GroupAction make_group(const std::string& name, FieldPtr field = nullptr);

// Basis of the simultaneous eigenspace {v : g_i v = chi_i v}; characters
// default to all 1 (the honest fixed space).
std::vector<std::vector<FieldElement>> invariant_subspace(
    const std::vector<ExactMatrix>& gens,
    const std::vector<FieldElement>& characters = {});

// The D7-invariant family of sections of Q(1) on Gr(2,6): six parameters,
// each a two-slot section; basis[i] is the section with parameter i set to 1.
struct InvariantFamily {
  FieldPtr field;
  std::vector<std::string> params;
  std::vector<QuotientBundleSection> basis;

  QuotientBundleSection at(const std::vector<FieldElement>& values) const;
  // seeded small nonzero parameter values
  std::vector<FieldElement> random_values(std::mt19937_64& rng) const;
};

InvariantFamily invariant_q1_family(FieldPtr field = nullptr);

// lambda(a, b) as a vector in V: component i is sum_{j<k} c_{i,j,k}
// (a_j b_k - b_j a_k).
std::vector<FieldElement> apply_section(const QuotientBundleSection& s,
                                        const std::vector<FieldElement>& a,
                                        const std::vector<FieldElement>& b);

// Residue class i+j+k mod 7 for each triple {i<j<k} in 1..6.
std::map<int, std::vector<std::array<int, 3>>> gr36_eigenvalue_classes();

}  // namespace gq
