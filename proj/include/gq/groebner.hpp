#pragma once

// A small Buchberger engine with Hilbert-series extraction, variable-wise
// saturation, ideal intersection, and zero-dimensional tools (quotient basis,
// multiplication matrices, characteristic polynomials, distinct-degree
// splitting).  Deliberately desk-scale: a hard guard on the effective
// variable count keeps runtimes sane.

#include "gq/poly.hpp"

namespace gq {

struct ScaleExceeded : FieldError {
  using FieldError::FieldError;
};
struct NonField : FieldError {
  using FieldError::FieldError;
};
struct NotZeroDimensional : FieldError {
  using FieldError::FieldError;
};

struct GroebnerResult {
  RingPtr ring;
  std::vector<SparsePoly> basis;   // reduced basis, monic leads
  std::vector<Mono> leading;       // minimal generators of the lead-term ideal
  std::vector<mpz_class> numerator;  // Hilbert numerator over (1-t)^nvars

  int krull_dim() const;           // of the quotient ring
  int proj_dim() const { return krull_dim() - 1; }
  mpz_class degree() const;
  long hilbert_function(int d) const;
  // Hilbert polynomial coefficients c_0 + c_1 t + ...; degree krull_dim()-1.
  std::vector<mpq_class> hilbert_poly() const;
};

// Remainder of p on full division by basis (every term reduced).
SparsePoly normal_form(const SparsePoly& p, const std::vector<SparsePoly>& basis);

// Reduced Groebner basis in the ring's order.  var_guard bounds the number of
// variables actually occurring in the generators.
GroebnerResult buchberger(const std::vector<SparsePoly>& gens, int var_guard = 8);

// Generators of I : x_var^inf (homogeneous I).
std::vector<SparsePoly> saturate_variable(const std::vector<SparsePoly>& gens,
                                          int var, int var_guard = 8);

// Generators of I \cap J (same ring).
std::vector<SparsePoly> intersect_ideals(const std::vector<SparsePoly>& a,
                                         const std::vector<SparsePoly>& b,
                                         int var_guard = 8);

// Saturation by the irrelevant maximal ideal: \cap_i (I : x_i^inf).
std::vector<SparsePoly> saturate_irrelevant(const std::vector<SparsePoly>& gens,
                                            int var_guard = 8);

// I : ell^inf for a linear form ell, via a linear change of coordinates.
std::vector<SparsePoly> saturate_linear_form(const std::vector<SparsePoly>& gens,
                                             const SparsePoly& ell,
                                             int var_guard = 8);

// Set a linear form to 1: coordinates change so ell becomes the last
// variable, which is then fixed to 1; result lives in a ring with one fewer
// variable.
std::vector<SparsePoly> dehomogenize(const std::vector<SparsePoly>& gens,
                                     const SparsePoly& ell);

// Standard monomials of an affine zero-dimensional quotient; throws
// NotZeroDimensional when infinite.
std::vector<Mono> quotient_basis(const GroebnerResult& gb);

// Matrix of multiplication by g on the span of the quotient basis.
ExactMatrix mult_matrix(const GroebnerResult& gb, const std::vector<Mono>& qb,
                        const SparsePoly& g);

// Characteristic polynomial (monic, coefficients low-to-high) via Hessenberg
// reduction; works over any field.
std::vector<FieldElement> char_poly(const ExactMatrix& m);

// For squarefree-split purposes over a finite field: list of (d, k) meaning k
// irreducible factors of degree d in the squarefree part of f.
std::vector<std::pair<int, int>> distinct_degree_split(const std::vector<FieldElement>& f);

// Hilbert numerator of a monomial ideal over (1-t)^nvars.
std::vector<mpz_class> hilbert_numerator_monomial(std::vector<Mono> gens, int nvars);

}  // namespace gq
