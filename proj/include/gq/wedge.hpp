#pragma once

// Exterior powers of a based vector space: wedge index combinatorics, induced
// actions on \wedge^k V, and the contraction (\wedge^2 V*) (x) V -> V*.

#include <array>
#include <map>
#include <vector>

#include "gq/matrix.hpp"

namespace gq {

struct BadRange : FieldError {
  using FieldError::FieldError;
};
struct SingularGenerator : FieldError {
  using FieldError::FieldError;
};
struct NotInKernel : FieldError {
  using FieldError::FieldError;
};

// A wedge basis label: k strictly increasing indices in 1..n.
using WedgeIndex = std::vector<int>;

// All C(n,k) wedge indices in lexicographic order.
std::vector<WedgeIndex> wedge_basis(int k, int n);

// Position of a sorted index tuple within wedge_basis(k, n).
int wedge_position(const WedgeIndex& idx, int n);

// Sort idx in place; returns the sign of the sorting permutation, or 0 if an
// index repeats.
int sort_sign(WedgeIndex& idx);

// Sparse element of \wedge^k V with ambient (k, n).
class TensorVector {
 public:
  TensorVector(FieldPtr field, int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const FieldPtr& field() const { return field_; }

  // Adds c * (v_{idx}) with idx in any order; re-sorts and applies the sign.
  void add_term(WedgeIndex idx, const FieldElement& c);
  FieldElement coeff(const WedgeIndex& idx) const;
  const std::map<WedgeIndex, FieldElement>& terms() const { return c_; }

  std::vector<FieldElement> dense() const;

 private:
  FieldPtr field_;
  int k_, n_;
  std::map<WedgeIndex, FieldElement> c_;
};

// Matrix of the action of g on \wedge^k V in the wedge_basis ordering.
// Entry (I, J) is the minor of g on rows I and columns J (Cauchy-Binet makes
// this a group homomorphism, and it reproduces the re-sorting signs).
ExactMatrix induced_action(const ExactMatrix& g, int k);

// Matrix of (v_j* ^ v_k*) (x) v_i  |->  d_{ij} v_k* - d_{ik} v_j*, an n by
// n*C(n,2) matrix.  Domain ordering: outer index the wedge pair (j,k) in
// wedge_basis(2,n) order, inner index i in 1..n.
ExactMatrix contraction_matrix(FieldPtr field, int n);

// Column position of (v_j* ^ v_k*) (x) v_i in contraction_matrix's domain.
int contraction_position(int i, int j, int k, int n);

// lambda = sum c_{i,j,k} v_i (x) (v_j* ^ v_k*), constrained to the kernel of
// the contraction map.
class QuotientBundleSection {
 public:
  // entries: ((i, j, k) -> c) with j < k; throws NotInKernel if the
  // contraction of the section is nonzero.
  QuotientBundleSection(FieldPtr field, int n,
                        std::map<std::array<int, 3>, FieldElement> entries);

  int n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  FieldElement coeff(int i, int j, int k) const;
  const std::map<std::array<int, 3>, FieldElement>& entries() const { return c_; }

  // Coefficients as a vector in the contraction-domain ordering.
  std::vector<FieldElement> dense() const;

 private:
  FieldPtr field_;
  int n_;
  std::map<std::array<int, 3>, FieldElement> c_;
};

}  // namespace gq
