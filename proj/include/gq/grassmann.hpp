#pragma once

// Pluecker ideals for the supported Grassmannians, decomposable points,
// affine charts, and Hilbert numerators via the Weyl dimension formula.

#include "gq/skew.hpp"
#include "gq/wedge.hpp"

namespace gq {

struct Unsupported : FieldError {
  using FieldError::FieldError;
};
struct RankDeficient : FieldError {
  using FieldError::FieldError;
};
struct BadPivots : FieldError {
  using FieldError::FieldError;
};
struct FitFailed : FieldError {
  using FieldError::FieldError;
};

struct GrassmannianSpec {
  int k = 0, n = 0;
  RingPtr ring;                       // Pluecker coordinate ring, C(n,k) vars
  std::vector<WedgeIndex> labels;     // wedge_basis(k, n) order
  std::vector<SparsePoly> quadrics;
};

// Supported (k,n): (2,4), (2,5), (2,6), (2,7), (3,6).
GrassmannianSpec make_grassmannian(FieldPtr field, int k, int n);

// Raw quadratic shuffle relations (possibly linearly dependent), for
// cross-checks against the Pfaffian presentation.
std::vector<SparsePoly> shuffle_quadrics(const RingPtr& plucker_ring, int k, int n);
std::vector<SparsePoly> plucker_ideal(FieldPtr field, int k, int n);

// Pluecker vector of the row span: maximal minors of a k x n matrix.
TensorVector plucker_point(const ExactMatrix& plane);

struct ChartData {
  std::vector<int> pivots;            // k column indices, 1-based
  RingPtr param_ring;                 // k*(n-k) chart parameters
  std::vector<SparsePoly> label_map;  // one entry per Pluecker label
};

ChartData make_chart(const GrassmannianSpec& spec, const std::vector<int>& pivots);

// Ambient polynomials (in the Pluecker ring) restricted to the chart.
std::vector<SparsePoly> chart_pullback(const GrassmannianSpec& spec,
                                       const ChartData& chart,
                                       const std::vector<SparsePoly>& polys);

// dim H^0(Gr(k,n), O(d)) = Weyl dimension of weight (d,...,d,0,...,0).
mpz_class grassmann_h0(int k, int n, int d);

// Hilbert numerator over (1 - t)^{C(n,k)}, fitted from the h^0 series up to
// degree D; throws FitFailed if the tail has not stabilized to zero.
std::vector<mpz_class> grassmann_hilbert_numerator(int k, int n, int D);

}  // namespace gq
