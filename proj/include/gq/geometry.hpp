#pragma once

// Smoothness evidence (Sigma-regularity and chart Jacobians), fixed-locus
// machinery (eigenspace restriction, finite-field censuses, Groebner
// classification), free-action certificates, and ideal-invariance checks.

#include "gq/groebner.hpp"
#include "gq/models.hpp"

namespace gq {

struct EmptySystem : FieldError {
  using FieldError::FieldError;
};
struct PointNotOnModel : FieldError {
  using FieldError::FieldError;
};
struct NoChartContains : FieldError {
  using FieldError::FieldError;
};
struct FieldLacksRoot : FieldError {
  using FieldError::FieldError;
};
struct NotInvolution : FieldError {
  using FieldError::FieldError;
};
struct MixedDegrees : FieldError {
  using FieldError::FieldError;
};
struct CensusTooLarge : FieldError {
  using FieldError::FieldError;
};

// ---- Sigma-regularity ----

struct RegularityReport {
  int n = 0;
  std::vector<int> dims;          // dim H(w) per probe
  int generic_dim = 0;            // minimum over the probes
  // w itself always lies in H(w) (the forms are alternating), so the
  // meaningful count is dim H(w)/<w>; generic_excess = generic_dim - 1.
  int generic_excess = 0;
  std::vector<int> exceptional;   // probe indices with a jump above the minimum
};

// Skew coefficient matrix of a linear form in pair coordinates x_i_j.
ExactMatrix two_form_matrix(const SparsePoly& linear_form, int n);

// H(w) = {a : Omega(a, w) = 0 for all Omega}; dim = n - rank of the stacked
// rows (Omega_k w)^T.
RegularityReport sigma_regularity(const std::vector<ExactMatrix>& forms,
                                  const std::vector<std::vector<FieldElement>>& probes);
RegularityReport sigma_regularity_random(const std::vector<ExactMatrix>& forms,
                                         int probes, std::mt19937_64& rng);

// ---- Chart smoothness ----

enum class SmoothVerdict { Smooth, Singular, Inconclusive };

// Row basis of the plane with the given Pluecker vector, normalized so the
// pivot minor is the identity; throws NoChartContains when the vector is zero
// or not decomposable.
ExactMatrix plane_from_plucker(const GrassmannianSpec& gr,
                               const std::vector<FieldElement>& point);

// Pulls the model's equations to the affine chart at the point's pivot and
// compares the Jacobian rank there with the expected codimension.
SmoothVerdict smooth_at(const VarietyModel& model, const GrassmannianSpec& gr,
                        const std::vector<FieldElement>& point);
// Jacobian of the affine cone in the ambient projective space.
SmoothVerdict smooth_at_cone(const VarietyModel& model,
                             const std::vector<FieldElement>& point);

// ---- Finite-field censuses ----

struct Census {
  std::uint64_t prime = 0;
  std::uint64_t count = 0;
  std::vector<std::vector<std::uint64_t>> points;  // up to the cap
};

// All F_p-rational projective zeros (first nonzero coordinate 1); the field
// of the equations must be a prime field.
Census projective_census(const std::vector<SparsePoly>& eqs,
                         std::size_t point_cap = 4096);
// Same count over an arbitrary finite field (small spaces only).
std::uint64_t projective_census_generic(const std::vector<SparsePoly>& eqs);

// Substitute x = B t for a column basis B; the result lives in a fresh ring
// with B.cols() variables.
std::vector<SparsePoly> restrict_to_span(const std::vector<SparsePoly>& eqs,
                                         const ExactMatrix& basis_cols,
                                         const std::string& prefix = "t");

// Diagonal weight of each variable, read from its label: sum of the indices
// mod 7 (a bare letter counts as 0).
std::vector<int> tau_weights(const RingPtr& ring);

// Matrix on the coordinate vectors induced by a permutation of 1..n applied
// to the index labels, with the re-sorting signs; throws when the label set
// is not closed under the permutation.
ExactMatrix label_involution(const RingPtr& ring, const std::vector<int>& image);

// ---- Fixed loci of diagonal order-7 elements ----

struct FixedLocusSummary {
  std::string element;
  std::vector<std::vector<int>> classes;           // variable indices per weight
  std::vector<std::vector<FieldElement>> points;   // exact fixed points found
  std::vector<std::string> transcript;             // support-exclusion log
  bool resolved = true;                            // every support accounted for
  std::map<std::uint64_t, std::uint64_t> census;   // prime -> rational count

  bool empty() const { return points.empty(); }
};

// Eigenspaces of tau^power are the coordinate subspaces of constant weight;
// each is intersected with the model exactly (coordinate points plus the
// monomial-witness argument for larger supports) and, over a prime field,
// by exhaustive census.
FixedLocusSummary fixed_locus_cyclic(const VarietyModel& model, int power = 1);

struct FreeActionCertificate {
  bool free = false;
  std::vector<FixedLocusSummary> elements;  // tau^1 .. tau^6
};
FreeActionCertificate certify_free_action(const VarietyModel& model);

// ---- Fixed loci of involutions (and other semisimple elements) ----

struct EigenspaceReport {
  FieldElement eigenvalue;
  int ambient_dim = 0;       // eigenspace dimension in the coordinate space
  int cut_dim = 0;           // after the model's linear forms
  std::uint64_t rational_points = 0;
  std::vector<std::vector<std::uint64_t>> sample;  // census points, cut coords
  std::vector<mpq_class> hilbert;                  // saturated Hilbert polynomial
  std::string classification;  // "empty" | "finite(n)" | "curve(d)" |
                               // "curve(d)+finite(n)" | "linear(d)"
  int curve_degree = 0;
  std::uint64_t finite_count = 0;
  int span_dim = -1;                         // projective span of the curve
  std::map<int, std::uint64_t> span_census;  // k -> N_k inside the span
  std::map<int, int> point_degrees;          // residue degree -> multiplicity
  std::vector<std::string> notes;
};

// Intersection of the model with the chi-eigenspace of g: linear forms are
// solved exactly, the rest is census + saturated Groebner classification;
// for a finite part the residue degrees come from a split characteristic
// polynomial of a generic multiplication matrix.
EigenspaceReport analyze_eigenspace(const VarietyModel& model, const ExactMatrix& g,
                                    const FieldElement& chi, std::uint64_t seed = 1);

struct InvolutionFixedLocus {
  EigenspaceReport plus, minus;
  std::vector<mpq_class> total_hilbert;  // sum over the two eigenspaces
};
InvolutionFixedLocus fixed_locus_involution(const VarietyModel& model,
                                            const ExactMatrix& sigma,
                                            std::uint64_t seed = 1);

// ---- Ideal invariance ----

struct InvarianceCertificate {
  bool invariant = false;
  ExactMatrix change;  // transformed generators in terms of the originals
};

// True iff every generator transformed by x -> g x stays in the span of the
// originals; generators must be homogeneous of one common degree.
InvarianceCertificate ideal_invariance(const std::vector<SparsePoly>& polys,
                                       const ExactMatrix& g);

}  // namespace gq
