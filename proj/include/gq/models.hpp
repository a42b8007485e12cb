#pragma once

// Builders for the varieties under study: the Gr(2,7) tower Z / W_Z / S_Z,
// the Pfaffian-format surface, the Gr(2,6) model Y, the Gr(3,6) surface T,
// the dual Pfaffian threefold with its Campedelli slice, and the two
// alternative 13/14-coordinate models.

#include "gq/grassmann.hpp"
#include "gq/group.hpp"

namespace gq {

struct ZeroParameter : FieldError {
  using FieldError::FieldError;
};
struct DegenerateHyperplanes : FieldError {
  using FieldError::FieldError;
};
struct AsymmetricAlpha : FieldError {
  using FieldError::FieldError;
};
struct AnnihilatorDimensionMismatch : FieldError {
  using FieldError::FieldError;
};

struct VarietyModel {
  std::string name;
  RingPtr ring;
  std::vector<SparsePoly> linear;
  std::vector<SparsePoly> quadrics;
  std::vector<SparsePoly> cubics;
  // defining skew matrix, when the model is given in Pfaffian format
  std::vector<std::vector<SparsePoly>> matrix;
  std::map<std::string, FieldElement> params;
  int expected_dim = -1;
  int expected_degree = 0;
  int canonical_degree = 0;

  std::vector<SparsePoly> equations() const;
};

// coefficients of x_{2,7}, x_{3,6}, x_{4,5} (the weight-0 coordinates)
using Hyperplane = std::array<FieldElement, 3>;

// c in the order {c_2_6, c_3_5, c_3_6, c_4_5, c_1_2, c_4_6}: six linear
// forms plus the 35 Pluecker quadrics of Gr(2,7).
VarietyModel build_Z(FieldPtr field, const std::vector<FieldElement>& c);
VarietyModel build_W_Z(FieldPtr field, const std::vector<FieldElement>& c,
                       const Hyperplane& h);
VarietyModel build_S_Z(FieldPtr field, const std::vector<FieldElement>& c,
                       const Hyperplane& h1, const Hyperplane& h2);

// Solve the two hyperplanes for x_{2,7} = eps1 x_{4,5}, x_{3,6} = eps2 x_{4,5}.
std::pair<FieldElement, FieldElement> derive_eps(const Hyperplane& h1,
                                                 const Hyperplane& h2);

// The 7x7 skew matrix in the 13 surviving coordinates; 35 quadrics are its
// 4-Pfaffians.  mu is ordered like c above.
VarietyModel build_S_format(FieldPtr field, const std::vector<FieldElement>& mu,
                            const FieldElement& eps1, const FieldElement& eps2);

// Image of the plane <a,b> under [p] -> [lambda(p), p] in wedge^2(C v_1 + V_6),
// dense in the wedge_basis(2,7) ordering.
std::vector<FieldElement> transfer_point(const QuotientBundleSection& lam,
                                         const std::vector<FieldElement>& a,
                                         const std::vector<FieldElement>& b);

// The Z-model carved out by a section of Q(1): linear forms
// x_{1,i+1} - sum_{j<k} c_{i,j,k} x_{1+j,1+k} plus the Pluecker quadrics.
VarietyModel transfer_Y_to_Z(const QuotientBundleSection& lam);

// Quadrics of Y in P^14: 3x3 minors of (a; b; lambda(a,b)) expanded in
// Pluecker coordinates, plus the Gr(2,6) quadrics.
VarietyModel build_Y_quadrics(const QuotientBundleSection& lam);

// 7 residue-class linear forms on Gr(3,6); alpha must be symmetric under
// (i,j,k) -> (7-i,7-j,7-k).
VarietyModel build_T_gr36(FieldPtr field,
                          const std::map<std::array<int, 3>, FieldElement>& alpha);
std::map<std::array<int, 3>, FieldElement> random_T_alpha(FieldPtr field,
                                                          std::mt19937_64& rng);

struct DualityDatum {
  ExactMatrix hdual;  // 7 x 21 coefficient matrix of the forms spanning H*
  std::vector<std::vector<FieldElement>> annihilator;  // 14 vectors in wedge^2 V
};

struct DualModels {
  DualityDatum datum;
  VarietyModel dual;        // 7 Pfaffian cubics in the 7 eigenvalue coordinates
  VarietyModel campedelli;  // the x_{2,7} = 0 slice, 6 coordinates
};

// H* = span of the six Z forms and one weight-0 hyperplane (h[0] != 0).
DualModels build_dual(FieldPtr field, const std::vector<FieldElement>& c,
                      const Hyperplane& h);

// 13-coordinate Pfaffian model in x_1..x_6, y_1..y_6, z with parameters
// lambda_1..lambda_6.  By default the sign of the (3,6) slot is corrected so
// that the index-doubling normalizer carries the family to itself; set
// as_printed to get the published matrix verbatim.
VarietyModel build_appendixA_reid(FieldPtr field,
                                  const std::vector<FieldElement>& lambda6,
                                  bool as_printed = false);
// 14-coordinate model: hyperplane lambda*sum(x) + mu*sum(y) plus 4-Pfaffians.
VarietyModel build_appendixA_altd7(FieldPtr field, const FieldElement& lambda,
                                   const FieldElement& mu);

std::string model_to_json(const VarietyModel& m);

}  // namespace gq
