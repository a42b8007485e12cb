#include "gq/poly.hpp"

#include <cassert>
#include <sstream>

namespace gq {

bool MonCmp::operator()(const Mono& a, const Mono& b) const {
  size_t start = 0;
  if (order == MonOrder::ElimFirst) {
    if (a[0] != b[0]) return a[0] > b[0];
    start = 1;
  }
  int da = 0, db = 0;
  for (size_t i = start; i < a.size(); ++i) da += a[i];
  for (size_t i = start; i < b.size(); ++i) db += b[i];
  if (da != db) return da > db;
  // grevlex: larger means the LAST variable where exponents differ has the
  // SMALLER exponent
  for (size_t i = a.size(); i-- > start;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

RingPtr PolyRing::make(FieldPtr field, std::vector<std::string> vars, MonOrder order) {
  auto r = std::make_shared<PolyRing>();
  r->field = std::move(field);
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

SparsePoly::SparsePoly(RingPtr ring) : ring_(std::move(ring)) {
  t_ = std::map<Mono, FieldElement, MonCmp>(MonCmp{ring_->order});
}

SparsePoly SparsePoly::constant(RingPtr ring, const FieldElement& c) {
  SparsePoly p(std::move(ring));
  p.add_term(Mono(p.ring_->nvars(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(RingPtr ring, int i) {
  SparsePoly p(std::move(ring));
  Mono m(p.ring_->nvars(), 0);
  m[i] = 1;
  p.add_term(m, p.ring_->field->one());
  return p;
}

SparsePoly SparsePoly::monomial(RingPtr ring, Mono m, const FieldElement& c) {
  SparsePoly p(std::move(ring));
  p.add_term(m, c);
  return p;
}

int SparsePoly::degree() const {
  int d = -1;
  for (auto& [m, c] : t_) d = std::max(d, mono_degree(m));
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = mono_degree(t_.begin()->first);
  for (auto& [m, c] : t_)
    if (mono_degree(m) != d) return false;
  return true;
}

void SparsePoly::add_term(const Mono& m, const FieldElement& c) {
  assert((int)m.size() == ring_->nvars());
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(ring_);
  for (auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

SparsePoly SparsePoly::scaled(const FieldElement& c) const {
  SparsePoly r(ring_);
  if (c.is_zero()) return r;
  for (auto& [m, x] : t_) r.t_.emplace(m, x * c);
  return r;
}

SparsePoly SparsePoly::mul_mono(const Mono& mm, const FieldElement& c) const {
  SparsePoly r(ring_);
  if (c.is_zero()) return r;
  for (auto& [m, x] : t_) {
    Mono p = m;
    for (size_t i = 0; i < p.size(); ++i) p[i] += mm[i];
    r.t_.emplace(std::move(p), x * c);
  }
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r(ring_);
  // multiply by the shorter factor termwise
  const SparsePoly& big = (t_.size() >= o.t_.size()) ? *this : o;
  const SparsePoly& small = (t_.size() >= o.t_.size()) ? o : *this;
  for (auto& [m, c] : small.t_) {
    for (auto& [m2, c2] : big.t_) {
      Mono p = m;
      for (size_t i = 0; i < p.size(); ++i) p[i] += m2[i];
      r.add_term(p, c * c2);
    }
  }
  return r;
}

SparsePoly SparsePoly::pow(int e) const {
  assert(e >= 0);
  SparsePoly r = constant(ring_, ring_->field->one());
  SparsePoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

SparsePoly SparsePoly::derivative(int var) const {
  SparsePoly r(ring_);
  for (auto& [m, c] : t_) {
    if (m[var] == 0) continue;
    Mono d = m;
    --d[var];
    r.add_term(d, c * ring_->field->from_int(m[var]));
  }
  return r;
}

FieldElement SparsePoly::evaluate(const std::vector<FieldElement>& point) const {
  if ((int)point.size() != ring_->nvars())
    throw DimensionMismatch("evaluate: wrong point length");
  FieldElement acc = ring_->field->zero();
  for (auto& [m, c] : t_) {
    FieldElement t = c;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * point[i].pow(m[i]);
    acc = acc + t;
  }
  return acc;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images) const {
  if ((int)images.size() != ring_->nvars())
    throw DimensionMismatch("substitute: wrong image count");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  SparsePoly acc(target);
  for (auto& [m, c] : t_) {
    SparsePoly t = SparsePoly::constant(target, c);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * images[i].pow(m[i]);
    acc = acc + t;
  }
  return acc;
}

SparsePoly SparsePoly::rename(RingPtr other) const {
  assert(other->nvars() == ring_->nvars());
  SparsePoly r(std::move(other));
  for (auto& [m, c] : t_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::permute_vars(const std::vector<int>& perm, RingPtr target) const {
  assert((int)perm.size() == ring_->nvars());
  SparsePoly r(std::move(target));
  for (auto& [m, c] : t_) {
    Mono p(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) p[perm[i]] = m[i];
    r.add_term(p, c);
  }
  return r;
}

std::string SparsePoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    std::string cs = c.str();
    bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
    if (first) {
      if (neg) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      if (neg) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool wrote = false;
    if (cs != "1" || mono_degree(m) == 0) {
      bool needs_parens = cs.find_first_of("+-") != std::string::npos;
      if (needs_parens) os << "(" << cs << ")";
      else os << cs;
      wrote = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (wrote) os << "*";
      os << ring_->vars[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

int jacobian_rank_at(const std::vector<SparsePoly>& polys,
                     const std::vector<FieldElement>& point) {
  if (polys.empty()) return 0;
  RingPtr ring = polys[0].ring();
  int n = ring->nvars();
  if ((int)point.size() != n) throw DimensionMismatch("jacobian_rank_at");
  ExactMatrix jac(ring->field, (int)polys.size(), n);
  for (size_t i = 0; i < polys.size(); ++i)
    for (int j = 0; j < n; ++j)
      jac.set((int)i, j, polys[i].derivative(j).evaluate(point));
  return jac.rank();
}

}  // namespace gq
