#pragma once

// Sparse multivariate polynomials over an exact Field, with graded reverse
// lexicographic order as the order of record (an eliminate-first block order
// exists only as internal plumbing for ideal intersections).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gq/matrix.hpp"

namespace gq {

struct DimensionMismatch : FieldError {
  using FieldError::FieldError;
};

using Mono = std::vector<int>;  // exponent vector, dense

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

enum class MonOrder { Grevlex, ElimFirst };

// "Greater-than" comparator so that map::begin() is the leading term.
struct MonCmp {
  MonOrder order = MonOrder::Grevlex;
  bool operator()(const Mono& a, const Mono& b) const;
};

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

struct PolyRing : std::enable_shared_from_this<PolyRing> {
  FieldPtr field;
  std::vector<std::string> vars;
  MonOrder order = MonOrder::Grevlex;

  static RingPtr make(FieldPtr field, std::vector<std::string> vars,
                      MonOrder order = MonOrder::Grevlex);
  int nvars() const { return (int)vars.size(); }
};

class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(RingPtr ring);

  static SparsePoly zero(RingPtr ring) { return SparsePoly(std::move(ring)); }
  static SparsePoly constant(RingPtr ring, const FieldElement& c);
  static SparsePoly variable(RingPtr ring, int i);
  static SparsePoly monomial(RingPtr ring, Mono m, const FieldElement& c);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return t_.empty(); }
  int num_terms() const { return (int)t_.size(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  bool is_homogeneous() const;

  const std::map<Mono, FieldElement, MonCmp>& terms() const { return t_; }
  const Mono& leading_mono() const { return t_.begin()->first; }
  const FieldElement& leading_coeff() const { return t_.begin()->second; }

  void add_term(const Mono& m, const FieldElement& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly scaled(const FieldElement& c) const;
  SparsePoly mul_mono(const Mono& m, const FieldElement& c) const;
  bool operator==(const SparsePoly& o) const { return t_ == o.t_; }
  bool operator!=(const SparsePoly& o) const { return !(t_ == o.t_); }

  SparsePoly pow(int e) const;
  SparsePoly derivative(int var) const;
  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  // Image under x_i -> images[i]; images live in (and define) the target ring.
  SparsePoly substitute(const std::vector<SparsePoly>& images) const;
  // Same polynomial re-read in another ring with equally many variables.
  SparsePoly rename(RingPtr other) const;
  // Permute variables: new exponent of position perm[i] is old exponent of i.
  SparsePoly permute_vars(const std::vector<int>& perm, RingPtr target) const;

  // Canonical text form: terms in the ring's order, e.g. "2*x_1^2*x_3 - x_2".
  std::string str() const;

 private:
  RingPtr ring_;
  std::map<Mono, FieldElement, MonCmp> t_;
};

// Rank of the Jacobian matrix of polys at the given point.
int jacobian_rank_at(const std::vector<SparsePoly>& polys,
                     const std::vector<FieldElement>& point);

}  // namespace gq
