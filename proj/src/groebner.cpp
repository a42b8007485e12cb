#include "gq/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <set>

namespace gq {

// ---------------------------------------------------------------------------
// monomial helpers

static bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

static Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

static Mono mono_div(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

static bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// division

SparsePoly normal_form(const SparsePoly& p, const std::vector<SparsePoly>& basis) {
  if (basis.empty()) return p;
  SparsePoly rem = SparsePoly::zero(p.ring());
  SparsePoly work = p;
  while (!work.is_zero()) {
    const Mono& lm = work.leading_mono();
    const FieldElement& lc = work.leading_coeff();
    bool reduced = false;
    for (const SparsePoly& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.leading_mono(), lm)) {
        FieldElement f = lc / g.leading_coeff();
        work = work - g.mul_mono(mono_div(lm, g.leading_mono()), f);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      // work -= leading term
      work.add_term(lm, -lc);
    }
  }
  return rem;
}

static SparsePoly s_poly(const SparsePoly& f, const SparsePoly& g) {
  Mono l = mono_lcm(f.leading_mono(), g.leading_mono());
  FieldElement one = f.ring()->field->one();
  SparsePoly a = f.mul_mono(mono_div(l, f.leading_mono()), one / f.leading_coeff());
  SparsePoly b = g.mul_mono(mono_div(l, g.leading_mono()), one / g.leading_coeff());
  return a - b;
}

// ---------------------------------------------------------------------------
// Buchberger

static int effective_vars(const std::vector<SparsePoly>& gens) {
  if (gens.empty()) return 0;
  std::vector<char> used(gens[0].ring()->nvars(), 0);
  for (auto& g : gens)
    for (auto& [m, c] : g.terms())
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i]) used[i] = 1;
  return (int)std::count(used.begin(), used.end(), 1);
}

GroebnerResult buchberger(const std::vector<SparsePoly>& gens_in, int var_guard) {
  std::vector<SparsePoly> gens;
  for (auto& g : gens_in)
    if (!g.is_zero()) gens.push_back(g);
  GroebnerResult res;
  if (gens.empty()) {
    if (!gens_in.empty()) {
      res.ring = gens_in[0].ring();
      res.numerator = hilbert_numerator_monomial({}, res.ring->nvars());
    }
    return res;
  }
  res.ring = gens[0].ring();
  int ev = effective_vars(gens);
  if (ev > var_guard)
    throw ScaleExceeded("buchberger: " + std::to_string(ev) + " effective variables");

  std::vector<SparsePoly> basis = gens;
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({(int)i, (int)j});

  MonCmp cmp{res.ring->order};
  while (!pairs.empty()) {
    // normal strategy: smallest lcm first
    size_t best = 0;
    Mono best_lcm = mono_lcm(basis[pairs[0].first].leading_mono(),
                             basis[pairs[0].second].leading_mono());
    for (size_t t = 1; t < pairs.size(); ++t) {
      Mono l = mono_lcm(basis[pairs[t].first].leading_mono(),
                        basis[pairs[t].second].leading_mono());
      if (cmp(best_lcm, l)) {  // l smaller than best_lcm
        best = t;
        best_lcm = l;
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + best);
    if (mono_coprime(basis[i].leading_mono(), basis[j].leading_mono())) continue;
    SparsePoly r = normal_form(s_poly(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    for (size_t t = 0; t < basis.size(); ++t) pairs.push_back({(int)t, (int)basis.size()});
    basis.push_back(std::move(r));
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<SparsePoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (mono_divides(basis[j].leading_mono(), basis[i].leading_mono())) {
        if (basis[j].leading_mono() == basis[i].leading_mono() && j > i) continue;
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // reduce each element against the others and normalize
  std::vector<SparsePoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<SparsePoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    SparsePoly r = normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.scaled(r.leading_coeff().inverse()));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const SparsePoly& a, const SparsePoly& b) {
              return cmp(b.leading_mono(), a.leading_mono());  // ascending
            });
  res.basis = std::move(reduced);
  for (auto& g : res.basis) res.leading.push_back(g.leading_mono());
  res.numerator = hilbert_numerator_monomial(res.leading, res.ring->nvars());
  return res;
}

// ---------------------------------------------------------------------------
// Hilbert series of a monomial ideal: numerator over (1-t)^n by pivot
// splitting  N(I) = N(I + (x)) + t * N(I : x).

static void poly_add_shifted(std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                             int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

static std::vector<mpz_class> hilbert_num_rec(std::vector<Mono> gens, int nvars) {
  // minimalize
  std::vector<Mono> min;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool red = false;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      if (mono_divides(gens[j], gens[i]) &&
          !(gens[j] == gens[i] && j > i)) {
        red = true;
        break;
      }
    }
    if (!red) min.push_back(gens[i]);
  }
  gens = std::move(min);
  if (gens.empty()) return {1};
  for (auto& g : gens)
    if (mono_degree(g) == 0) return {0};  // unit ideal

  // base case: pairwise coprime generators
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!mono_coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    std::vector<mpz_class> num{1};
    for (auto& g : gens) {
      std::vector<mpz_class> factor(mono_degree(g) + 1, 0);
      factor[0] = 1;
      factor[mono_degree(g)] -= 1;
      std::vector<mpz_class> prod(num.size() + factor.size() - 1, 0);
      for (size_t i = 0; i < num.size(); ++i)
        for (size_t j = 0; j < factor.size(); ++j) prod[i + j] += num[i] * factor[j];
      num = std::move(prod);
    }
    return num;
  }

  // pivot on the most frequent variable
  std::vector<int> freq(nvars, 0);
  for (auto& g : gens)
    for (int i = 0; i < nvars; ++i)
      if (g[i]) ++freq[i];
  int pv = (int)(std::max_element(freq.begin(), freq.end()) - freq.begin());

  std::vector<Mono> plus, colon;
  Mono pvm(nvars, 0);
  pvm[pv] = 1;
  plus.push_back(pvm);
  for (auto& g : gens) {
    if (g[pv] == 0) plus.push_back(g);
    Mono c = g;
    if (c[pv]) --c[pv];
    colon.push_back(std::move(c));
  }
  std::vector<mpz_class> a = hilbert_num_rec(std::move(plus), nvars);
  std::vector<mpz_class> b = hilbert_num_rec(std::move(colon), nvars);
  // N = a + t*b - t*a_from_colon? no: N(I) = N(I + (x)) + t*(N(I:x) - N(I + (x) : ...))
  // Standard identity: HS(I) = HS(I + (x)) + t * HS(I : x) does NOT hold for
  // numerators of the quotient directly; the correct short exact sequence is
  //   0 -> (R/(I:x))(-1) --x--> R/I -> R/(I+(x)) -> 0
  // giving N(I) = N(I+(x)) + t * N(I:x).
  std::vector<mpz_class> num = a;
  poly_add_shifted(num, b, 1);
  return num;
}

std::vector<mpz_class> hilbert_numerator_monomial(std::vector<Mono> gens, int nvars) {
  return hilbert_num_rec(std::move(gens), nvars);
}

// ---------------------------------------------------------------------------
// GroebnerResult accessors

static int one_multiplicity(std::vector<mpz_class> num, std::vector<mpz_class>* out) {
  // divide by (1-t) while the value at t=1 vanishes
  int e = 0;
  auto value_at_one = [&](const std::vector<mpz_class>& v) {
    mpz_class s = 0;
    for (auto& c : v) s += c;
    return s;
  };
  bool zero = std::all_of(num.begin(), num.end(), [](const mpz_class& c) { return c == 0; });
  while (!zero && value_at_one(num) == 0) {
    // num / (1 - t): q_i = sum_{j<=i} num_j
    std::vector<mpz_class> q(num.size() - 1);
    mpz_class acc = 0;
    for (size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    num = std::move(q);
    ++e;
    zero = num.empty();
  }
  if (out) *out = std::move(num);
  return e;
}

int GroebnerResult::krull_dim() const {
  bool zero = std::all_of(numerator.begin(), numerator.end(),
                          [](const mpz_class& c) { return c == 0; });
  if (zero || numerator.empty()) return 0;
  int e = one_multiplicity(numerator, nullptr);
  return ring->nvars() - e;
}

mpz_class GroebnerResult::degree() const {
  std::vector<mpz_class> q;
  bool zero = std::all_of(numerator.begin(), numerator.end(),
                          [](const mpz_class& c) { return c == 0; });
  if (zero || numerator.empty()) return 0;
  one_multiplicity(numerator, &q);
  mpz_class s = 0;
  for (auto& c : q) s += c;
  return s;
}

long GroebnerResult::hilbert_function(int d) const {
  int n = ring->nvars();
  mpz_class s = 0;
  for (size_t i = 0; i < numerator.size(); ++i) {
    long m = d - (long)i;
    if (m < 0) continue;
    // C(m + n - 1, n - 1)
    mpz_class b = 1;
    for (int j = 1; j <= n - 1; ++j) {
      b *= (m + j);
      b /= j;
    }
    if (n == 0) b = (m == 0) ? 1 : 0;
    s += numerator[i] * b;
  }
  return (long)s.get_si();
}

std::vector<mpq_class> GroebnerResult::hilbert_poly() const {
  std::vector<mpz_class> q;
  bool zero = std::all_of(numerator.begin(), numerator.end(),
                          [](const mpz_class& c) { return c == 0; });
  if (zero || numerator.empty()) return {};
  int e = one_multiplicity(numerator, &q);
  int D = ring->nvars() - e;  // Krull dimension of the quotient
  if (D <= 0) return {};
  // HP(d) = sum_i q_i * C(d - i + D - 1, D - 1), expanded in d
  std::vector<mpq_class> hp(D, 0);
  mpz_class fact = 1;
  for (int j = 1; j <= D - 1; ++j) fact *= j;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    // poly prod_{o=1}^{D-1} (d + (o - i))
    std::vector<mpq_class> prod{1};
    for (int o = 1; o <= D - 1; ++o) {
      std::vector<mpq_class> next(prod.size() + 1, 0);
      mpq_class c(o - (long)i);
      for (size_t t = 0; t < prod.size(); ++t) {
        next[t] += prod[t] * c;
        next[t + 1] += prod[t];
      }
      prod = std::move(next);
    }
    for (size_t t = 0; t < prod.size(); ++t)
      hp[t] += prod[t] * mpq_class(q[i]) / mpq_class(fact);
  }
  while (hp.size() > 1 && hp.back() == 0) hp.pop_back();
  return hp;
}

// ---------------------------------------------------------------------------
// saturation / intersection

static std::vector<int> move_to_last(int var, int n) {
  // permutation sending position var to n-1, order of the rest preserved
  std::vector<int> perm(n);
  int t = 0;
  for (int i = 0; i < n; ++i) {
    if (i == var) perm[i] = n - 1;
    else perm[i] = t++;
  }
  return perm;
}

std::vector<SparsePoly> saturate_variable(const std::vector<SparsePoly>& gens,
                                          int var, int var_guard) {
  if (gens.empty()) return gens;
  RingPtr ring = gens[0].ring();
  int n = ring->nvars();
  std::vector<int> perm = move_to_last(var, n);
  std::vector<std::string> pv(n);
  for (int i = 0; i < n; ++i) pv[perm[i]] = ring->vars[i];
  RingPtr pring = PolyRing::make(ring->field, pv, MonOrder::Grevlex);
  std::vector<SparsePoly> pg;
  for (auto& g : gens) pg.push_back(g.permute_vars(perm, pring));
  GroebnerResult gb = buchberger(pg, var_guard);
  // divide each basis element by the largest power of the last variable
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<SparsePoly> out;
  for (auto& g : gb.basis) {
    int c = INT32_MAX;
    for (auto& [m, coef] : g.terms()) c = std::min(c, m[n - 1]);
    SparsePoly h = SparsePoly::zero(pring);
    for (auto& [m, coef] : g.terms()) {
      Mono mm = m;
      mm[n - 1] -= c;
      h.add_term(mm, coef);
    }
    out.push_back(h.permute_vars(inv, ring));
  }
  return out;
}

std::vector<SparsePoly> intersect_ideals(const std::vector<SparsePoly>& a,
                                         const std::vector<SparsePoly>& b,
                                         int var_guard) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  RingPtr ring = a[0].ring();
  int n = ring->nvars();
  std::vector<std::string> ev{"t_elim_"};
  for (auto& v : ring->vars) ev.push_back(v);
  RingPtr ering = PolyRing::make(ring->field, ev, MonOrder::ElimFirst);
  auto lift = [&](const SparsePoly& p) {
    SparsePoly r(ering);
    for (auto& [m, c] : p.terms()) {
      Mono mm(n + 1, 0);
      for (int i = 0; i < n; ++i) mm[i + 1] = m[i];
      r.add_term(mm, c);
    }
    return r;
  };
  SparsePoly t = SparsePoly::variable(ering, 0);
  SparsePoly omt = SparsePoly::constant(ering, ring->field->one()) - t;
  std::vector<SparsePoly> gens;
  for (auto& f : a) gens.push_back(t * lift(f));
  for (auto& g : b) gens.push_back(omt * lift(g));
  GroebnerResult gb = buchberger(gens, var_guard + 1);
  std::vector<SparsePoly> out;
  for (auto& g : gb.basis) {
    bool has_t = false;
    for (auto& [m, c] : g.terms())
      if (m[0]) has_t = true;
    if (has_t) continue;
    SparsePoly r(ring);
    for (auto& [m, c] : g.terms()) {
      Mono mm(n);
      for (int i = 0; i < n; ++i) mm[i] = m[i + 1];
      r.add_term(mm, c);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SparsePoly> saturate_irrelevant(const std::vector<SparsePoly>& gens,
                                            int var_guard) {
  if (gens.empty()) return gens;
  RingPtr ring = gens[0].ring();
  int n = ring->nvars();
  std::vector<char> used(n, 0);
  for (auto& g : gens)
    for (auto& [m, c] : g.terms())
      for (int i = 0; i < n; ++i)
        if (m[i]) used[i] = 1;
  std::vector<SparsePoly> acc;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!used[i]) continue;  // absent variable is a nonzerodivisor
    auto sat = saturate_variable(gens, i, var_guard);
    if (first) {
      acc = std::move(sat);
      first = false;
    } else {
      acc = intersect_ideals(acc, sat, var_guard);
    }
  }
  return first ? gens : acc;
}

// linear change of coordinates sending ell to variable `var`; returns the
// forward images (old variable -> poly in new variables) and backward images.
static void linear_change(const SparsePoly& ell, int var,
                          std::vector<SparsePoly>* fwd,
                          std::vector<SparsePoly>* bwd) {
  RingPtr ring = ell.ring();
  int n = ring->nvars();
  FieldPtr F = ring->field;
  std::vector<FieldElement> coef(n, F->zero());
  for (auto& [m, c] : ell.terms()) {
    assert(mono_degree(m) == 1);
    for (int i = 0; i < n; ++i)
      if (m[i]) coef[i] = c;
  }
  assert(!coef[var].is_zero());
  // new_var = ell(old).  old_var = (new_var - sum_{i != var} a_i new_i)/a_var
  fwd->clear();
  bwd->clear();
  for (int i = 0; i < n; ++i) {
    fwd->push_back(SparsePoly::variable(ring, i));
    bwd->push_back(SparsePoly::variable(ring, i));
  }
  SparsePoly expr = SparsePoly::variable(ring, var);
  for (int i = 0; i < n; ++i)
    if (i != var && !coef[i].is_zero())
      expr = expr - SparsePoly::variable(ring, i).scaled(coef[i]);
  (*fwd)[var] = expr.scaled(coef[var].inverse());
  (*bwd)[var] = ell;
}

std::vector<SparsePoly> saturate_linear_form(const std::vector<SparsePoly>& gens,
                                             const SparsePoly& ell, int var_guard) {
  if (gens.empty()) return gens;
  RingPtr ring = gens[0].ring();
  int n = ring->nvars();
  int var = -1;
  for (auto& [m, c] : ell.terms())
    for (int i = 0; i < n; ++i)
      if (m[i]) var = i;
  assert(var >= 0);
  std::vector<SparsePoly> fwd, bwd;
  linear_change(ell, var, &fwd, &bwd);
  std::vector<SparsePoly> moved;
  for (auto& g : gens) moved.push_back(g.substitute(fwd));
  auto sat = saturate_variable(moved, var, var_guard);
  std::vector<SparsePoly> out;
  for (auto& g : sat) out.push_back(g.substitute(bwd));
  return out;
}

std::vector<SparsePoly> dehomogenize(const std::vector<SparsePoly>& gens,
                                     const SparsePoly& ell) {
  assert(!gens.empty());
  RingPtr ring = gens[0].ring();
  int n = ring->nvars();
  int var = -1;
  for (auto& [m, c] : ell.terms())
    for (int i = 0; i < n; ++i)
      if (m[i]) var = i;
  std::vector<SparsePoly> fwd, bwd;
  linear_change(ell, var, &fwd, &bwd);
  // target ring drops `var`
  std::vector<std::string> tv;
  for (int i = 0; i < n; ++i)
    if (i != var) tv.push_back(ring->vars[i]);
  RingPtr tring = PolyRing::make(ring->field, tv, MonOrder::Grevlex);
  std::vector<SparsePoly> images;  // old var -> target poly, with ell -> 1
  int t = 0;
  for (int i = 0; i < n; ++i) {
    if (i == var) {
      images.push_back(SparsePoly::zero(tring));  // placeholder
      continue;
    }
    images.push_back(SparsePoly::variable(tring, t++));
  }
  // old x_var expressed via fwd, then new var set to 1
  SparsePoly one_t = SparsePoly::constant(tring, ring->field->one());
  std::vector<SparsePoly> full;
  for (int i = 0; i < n; ++i) {
    // fwd[i] is in old-name space where position `var` now means ell-value
    SparsePoly img = SparsePoly::zero(tring);
    for (auto& [m, c] : fwd[i].terms()) {
      SparsePoly term = SparsePoly::constant(tring, c);
      for (int j = 0; j < n; ++j)
        for (int e = 0; e < m[j]; ++e) term = term * (j == var ? one_t : images[j]);
      img = img + term;
    }
    full.push_back(std::move(img));
  }
  std::vector<SparsePoly> out;
  for (auto& g : gens) {
    SparsePoly img = SparsePoly::zero(tring);
    for (auto& [m, c] : g.terms()) {
      SparsePoly term = SparsePoly::constant(tring, c);
      for (int j = 0; j < n; ++j)
        for (int e = 0; e < m[j]; ++e) term = term * full[j];
      img = img + term;
    }
    if (!img.is_zero()) out.push_back(std::move(img));
  }
  return out;
}

// ---------------------------------------------------------------------------
// zero-dimensional tools

std::vector<Mono> quotient_basis(const GroebnerResult& gb) {
  int n = gb.ring->nvars();
  // finiteness: every variable needs a pure-power leading monomial
  for (int i = 0; i < n; ++i) {
    bool ok = false;
    for (auto& m : gb.leading) {
      bool pure = m[i] > 0;
      for (int j = 0; j < n && pure; ++j)
        if (j != i && m[j]) pure = false;
      if (pure) ok = true;
    }
    if (!ok) throw NotZeroDimensional("quotient not finite-dimensional");
  }
  std::vector<Mono> out;
  std::set<Mono> seen;
  std::vector<Mono> queue{Mono(n, 0)};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    Mono m = queue.back();
    queue.pop_back();
    bool in_lt = false;
    for (auto& l : gb.leading)
      if (mono_divides(l, m)) in_lt = true;
    if (in_lt) continue;
    out.push_back(m);
    for (int i = 0; i < n; ++i) {
      Mono c = m;
      ++c[i];
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
    if (out.size() > 100000) throw NotZeroDimensional("quotient basis too large");
  }
  std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) {
    MonCmp cmp{gb.ring->order};
    return cmp(b, a);  // ascending
  });
  return out;
}

ExactMatrix mult_matrix(const GroebnerResult& gb, const std::vector<Mono>& qb,
                        const SparsePoly& g) {
  int N = (int)qb.size();
  ExactMatrix m(gb.ring->field, N, N);
  std::map<Mono, int> pos;
  for (int i = 0; i < N; ++i) pos[qb[i]] = i;
  for (int j = 0; j < N; ++j) {
    SparsePoly p = normal_form(g.mul_mono(qb[j], gb.ring->field->one()), gb.basis);
    for (auto& [mm, c] : p.terms()) {
      auto it = pos.find(mm);
      assert(it != pos.end());
      m.set(it->second, j, c);
    }
  }
  return m;
}

std::vector<FieldElement> char_poly(const ExactMatrix& mat) {
  int n = mat.rows();
  FieldPtr F = mat.field();
  if (n == 0) return {F->one()};
  ExactMatrix h = mat;
  // Hessenberg reduction by similarity
  for (int c = 0; c + 2 < n; ++c) {
    int pr = -1;
    for (int r = c + 1; r < n; ++r)
      if (!h.at(r, c).is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != c + 1) {
      for (int j = 0; j < n; ++j) {
        FieldElement t = h.at(c + 1, j);
        h.set(c + 1, j, h.at(pr, j));
        h.set(pr, j, t);
      }
      for (int i = 0; i < n; ++i) {
        FieldElement t = h.at(i, c + 1);
        h.set(i, c + 1, h.at(i, pr));
        h.set(i, pr, t);
      }
    }
    FieldElement inv = h.at(c + 1, c).inverse();
    for (int r = c + 2; r < n; ++r) {
      if (h.at(r, c).is_zero()) continue;
      FieldElement f = h.at(r, c) * inv;
      for (int j = 0; j < n; ++j) h.set(r, j, h.at(r, j) - f * h.at(c + 1, j));
      for (int i = 0; i < n; ++i) h.set(i, c + 1, h.at(i, c + 1) + f * h.at(i, r));
    }
  }
  // recurrence on leading principal minors of xI - H
  std::vector<std::vector<FieldElement>> p(n + 1);
  p[0] = {F->one()};
  for (int m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * p[m-1]
    std::vector<FieldElement> cur(m + 1, F->zero());
    for (int i = 0; i < m; ++i) {
      cur[i + 1] = cur[i + 1] + p[m - 1][i];
      cur[i] = cur[i] - h.at(m - 1, m - 1) * p[m - 1][i];
    }
    FieldElement run = F->one();
    for (int i = 1; i < m; ++i) {
      run = run * h.at(m - i, m - i - 1);
      FieldElement coef = h.at(m - 1 - i, m - 1) * run;
      if (coef.is_zero()) continue;
      for (size_t t = 0; t < p[m - 1 - i].size(); ++t)
        cur[t] = cur[t] - coef * p[m - 1 - i][t];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

// ---------------------------------------------------------------------------
// univariate helpers over an arbitrary (finite) field

using UPoly = std::vector<FieldElement>;

static void utrim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

static UPoly umul(const UPoly& a, const UPoly& b, const FieldPtr& F) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, F->zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  utrim(r);
  return r;
}

static UPoly umod(UPoly a, const UPoly& b, const FieldPtr& F) {
  utrim(a);
  FieldElement lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    FieldElement f = a.back() * lead_inv;
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
    utrim(a);
    if (a.empty()) break;
  }
  return a;
}

static UPoly udiv(UPoly a, const UPoly& b, const FieldPtr& F) {
  utrim(a);
  FieldElement lead_inv = b.back().inverse();
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, F->zero());
  while (a.size() >= b.size()) {
    FieldElement f = a.back() * lead_inv;
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
    utrim(a);
    if (a.empty()) break;
  }
  utrim(q);
  return q;
}

static UPoly ugcd(UPoly a, UPoly b, const FieldPtr& F) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    FieldElement inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

static UPoly upowmod(UPoly base, mpz_class e, const UPoly& mod, const FieldPtr& F) {
  UPoly r{F->one()};
  base = umod(std::move(base), mod, F);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = umod(umul(r, base, F), mod, F);
    base = umod(umul(base, base, F), mod, F);
    e /= 2;
  }
  return r;
}

std::vector<std::pair<int, int>> distinct_degree_split(const std::vector<FieldElement>& f_in) {
  assert(!f_in.empty());
  FieldPtr F = f_in[0].field();
  if (F->characteristic() == 0)
    throw NonField("distinct_degree_split needs a finite field");
  mpz_class q = 1;
  for (int i = 0; i < F->degree(); ++i) q *= (unsigned long)F->characteristic();
  UPoly f = f_in;
  utrim(f);
  assert(f.size() >= 2);
  // monic + squarefree part
  {
    FieldElement inv = f.back().inverse();
    for (auto& c : f) c = c * inv;
    UPoly df(f.size() - 1, F->zero());
    for (size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * F->from_int((long)i);
    utrim(df);
    if (!df.empty()) {
      UPoly g = ugcd(f, df, F);
      if (g.size() > 1) f = udiv(f, g, F);
    }
  }
  std::vector<std::pair<int, int>> out;
  UPoly x{F->zero(), F->one()};
  UPoly h = x;
  int d = 0;
  while ((int)f.size() - 1 > 0) {
    ++d;
    if (2 * d > (int)f.size() - 1) {
      out.push_back({(int)f.size() - 1, 1});
      break;
    }
    h = upowmod(std::move(h), q, f, F);
    UPoly hmx = h;
    if (hmx.size() < 2) hmx.resize(2, F->zero());
    hmx[1] = hmx[1] - F->one();
    utrim(hmx);
    UPoly g = hmx.empty() ? f : ugcd(f, hmx, F);
    if (g.size() > 1) {
      out.push_back({d, (int)((g.size() - 1) / d)});
      f = udiv(f, g, F);
      h = umod(std::move(h), f, F);
    }
  }
  return out;
}

}  // namespace gq
