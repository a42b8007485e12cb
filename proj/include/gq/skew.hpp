#pragma once

// Skew-symmetric matrices of polynomials and their (sub-)Pfaffians.

#include "gq/poly.hpp"

namespace gq {

struct OddSubset : FieldError {
  using FieldError::FieldError;
};

class SkewMatrix {
 public:
  SkewMatrix(RingPtr ring, int size);

  int size() const { return m_; }
  const RingPtr& ring() const { return ring_; }

  // entry (i, j), 0-based; (j, i) is the negative, diagonal is zero.
  const SparsePoly& upper(int i, int j) const;  // requires i < j
  SparsePoly entry(int i, int j) const;
  void set(int i, int j, SparsePoly p);  // requires i < j

  // Generic skew matrix: entry (i,j) is its own variable m_{i+1}_{j+1}.
  static SkewMatrix generic(FieldPtr field, int size, const std::string& prefix = "m");

  // Pfaffian of the principal submatrix on the given 0-based rows/columns.
  SparsePoly pfaffian(const std::vector<int>& subset) const;
  SparsePoly pfaffian() const;  // full matrix

  // Determinant of the principal submatrix (for cross-checks).
  SparsePoly det(const std::vector<int>& subset) const;

  // All Pfaffians of principal submatrices of the given even size, subsets in
  // lexicographic order.
  std::vector<SparsePoly> sub_pfaffians(int size) const;

 private:
  RingPtr ring_;
  int m_;
  std::vector<SparsePoly> up_;  // packed upper triangle, row-major
};

}  // namespace gq
