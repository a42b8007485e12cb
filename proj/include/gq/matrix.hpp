#pragma once

// Dense exact linear algebra over an arbitrary Field: rref, rank, kernel,
// solve.  Matrices are immutable values once built.

#include <vector>

#include "gq/field.hpp"

namespace gq {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(FieldPtr field, int rows, int cols);
  static ExactMatrix identity(FieldPtr field, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  const FieldElement& at(int r, int c) const { return e_[(size_t)r * cols_ + c]; }
  void set(int r, int c, FieldElement v);

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const FieldElement& s) const;
  ExactMatrix transpose() const;
  bool operator==(const ExactMatrix& o) const;

  // Stack o below this.
  ExactMatrix vstack(const ExactMatrix& o) const;

  int rank() const;
  // Basis of the right kernel {v : M v = 0}; vectors as columns lists.
  std::vector<std::vector<FieldElement>> kernel_basis() const;
  FieldElement det() const;
  // Solve M x = b; returns nullopt if inconsistent.  When the solution is not
  // unique an arbitrary particular solution is returned.
  std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;
  ExactMatrix inverse() const;

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  // Row-reduced echelon form; pivots receives pivot column indices.
  ExactMatrix rref(std::vector<int>* pivots = nullptr) const;

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<FieldElement> e_;
};

// Span comparison helper: do the rows of A and B span the same subspace?
bool same_row_span(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace gq
