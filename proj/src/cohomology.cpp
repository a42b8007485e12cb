#include "gq/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace gq {

namespace {

mpz_class binom(unsigned long n, unsigned long r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

void check_decreasing(const std::vector<int>& w, const char* what) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) throw BadWeight(std::string(what) + " weight not weakly decreasing");
}

// Affine expression in unknown long-exact-sequence ranks.  Dimensions are
// carried symbolically through the staircases and pinned at the end by
// duality, Hodge symmetry, and Euler characteristics.
struct Aff {
  mpz_class c;
  std::map<int, mpz_class> v;  // var id -> coefficient

  Aff(mpz_class cc = 0) : c(std::move(cc)) {}

  bool is_const() const { return v.empty(); }
  bool is_zero() const { return v.empty() && c == 0; }

  Aff& operator+=(const Aff& o) {
    c += o.c;
    for (auto& [i, x] : o.v) {
      v[i] += x;
      if (v[i] == 0) v.erase(i);
    }
    return *this;
  }
  Aff operator+(const Aff& o) const {
    Aff r = *this;
    r += o;
    return r;
  }
  Aff operator-() const {
    Aff r;
    r.c = -c;
    for (auto& [i, x] : v) r.v[i] = -x;
    return r;
  }
  Aff operator-(const Aff& o) const { return *this + (-o); }
  Aff scaled(const mpz_class& m) const {
    if (m == 0) return Aff(0);
    Aff r;
    r.c = c * m;
    for (auto& [i, x] : v) r.v[i] = x * m;
    return r;
  }
};

using AffTable = std::map<int, Aff>;

Aff table_get(const AffTable& t, int q) {
  auto it = t.find(q);
  return it == t.end() ? Aff(0) : it->second;
}

void table_add(AffTable& t, int q, const Aff& a) {
  if (a.is_zero()) return;
  t[q] += a;
  if (t[q].is_zero()) t.erase(q);
}

struct VarPool {
  int next = 0;
  int fresh() { return next++; }
};

// 0 -> A -> B -> C -> 0 with H(A), H(B) known.  H^0(A) -> H^0(B) is always
// injective; surj_deg marks a degree where the map is known surjective (the
// top degree of a multiplication-by-section sequence, via Serre duality);
// vanish_above, when >= 0, is dim supp C and back-solves the top ranks.
// A rank no rule reaches becomes a fresh unknown.
AffTable solve_C(const AffTable& A, const AffTable& B, VarPool& pool,
                 int surj_deg = -1, int vanish_above = -1) {
  int top = 0;
  for (auto& [q, v] : A) top = std::max(top, q + 1);
  for (auto& [q, v] : B) top = std::max(top, q);
  std::vector<std::optional<Aff>> rk(top + 3);
  rk[top + 1] = Aff(0);
  rk[top + 2] = Aff(0);
  for (int q = 0; q <= top; ++q) {
    Aff ha = table_get(A, q), hb = table_get(B, q);
    if (q == 0) rk[q] = ha;  // left exactness
    else if (ha.is_zero() || hb.is_zero()) rk[q] = Aff(0);
    else if (q == surj_deg) rk[q] = hb;
  }
  if (vanish_above >= 0)
    for (int q = top; q > vanish_above; --q)
      if (!rk[q] && rk[q + 1])
        rk[q] = table_get(B, q) + table_get(A, q + 1) - *rk[q + 1];
  for (int q = 0; q <= top; ++q)
    if (!rk[q]) rk[q] = Aff(0) + [&] { Aff a; a.v[pool.fresh()] = 1; return a; }();
  AffTable C;
  for (int q = 0; q <= top; ++q) {
    Aff v = (table_get(B, q) - *rk[q]) + (table_get(A, q + 1) - *rk[q + 1]);
    if (v.is_const() && v.c < 0)
      throw AmbiguousExtension("negative dimension while solving a cokernel");
    table_add(C, q, v);
  }
  return C;
}

// 0 -> A -> B -> C -> 0 with H(A), H(C) known.
AffTable solve_B(const AffTable& A, const AffTable& C, VarPool& pool) {
  int top = 0;
  for (auto& [q, v] : A) top = std::max(top, q);
  for (auto& [q, v] : C) top = std::max(top, q);
  std::vector<Aff> delta(top + 2, Aff(0));  // H^q(C) -> H^{q+1}(A)
  for (int q = 0; q <= top; ++q) {
    Aff hc = table_get(C, q), ha = table_get(A, q + 1);
    if (hc.is_zero() || ha.is_zero()) continue;
    Aff d;
    d.v[pool.fresh()] = 1;
    delta[q] = d;
  }
  AffTable B;
  for (int q = 0; q <= top; ++q) {
    Aff v = (table_get(A, q) - (q ? delta[q - 1] : Aff(0))) + (table_get(C, q) - delta[q]);
    if (v.is_const() && v.c < 0)
      throw AmbiguousExtension("negative dimension while solving an extension");
    table_add(B, q, v);
  }
  return B;
}

std::vector<int> conjugate(const std::vector<int>& lam) {
  std::vector<int> out;
  for (int c = 1; lam.empty() ? false : c <= lam[0]; ++c) {
    int rows = 0;
    for (int x : lam)
      if (x >= c) ++rows;
    out.push_back(rows);
  }
  return out;
}

void partitions_rec(int rest, int maxpart, int maxlen, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  if ((int)cur.size() == maxlen) return;
  int cap = cur.empty() ? maxpart : std::min(maxpart, cur.back());
  for (int x = std::min(cap, rest); x >= 1; --x) {
    cur.push_back(x);
    partitions_rec(rest - x, maxpart, maxlen, cur, out);
    cur.pop_back();
  }
}

}  // namespace

WeightedBundle WeightedBundle::twisted(int t) const {
  WeightedBundle out = *this;
  for (auto& x : out.a) x += t;
  return out;
}

WeightedBundle WeightedBundle::dual() const {
  WeightedBundle out = *this;
  for (int i = 0; i < (int)a.size(); ++i) out.a[i] = -a[a.size() - 1 - i];
  for (int i = 0; i < (int)b.size(); ++i) out.b[i] = -b[b.size() - 1 - i];
  return out;
}

mpz_class WeightedBundle::rank() const { return weyl_dim(a) * weyl_dim(b); }

mpz_class weyl_dim(const std::vector<int>& w) {
  check_decreasing(w, "Weyl");
  int r = (int)w.size();
  mpz_class num = 1, den = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      num *= w[i] - w[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

CohomologyTable bott_cohomology(const WeightedBundle& bnd) {
  if ((int)bnd.a.size() != bnd.k || (int)bnd.b.size() != bnd.n - bnd.k)
    throw BadWeight("weight block lengths do not match the Grassmannian");
  check_decreasing(bnd.a, "S*");
  check_decreasing(bnd.b, "Q");
  int n = bnd.n;
  std::vector<int> c;
  for (int x : bnd.a) c.push_back(x);
  for (int x : bnd.b) c.push_back(x);
  for (int i = 0; i < n; ++i) c[i] += n - 1 - i;  // add rho
  int ell = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (c[i] == c[j]) return {};
      if (c[i] < c[j]) ++ell;
    }
  std::sort(c.rbegin(), c.rend());
  for (int i = 0; i < n; ++i) c[i] -= n - 1 - i;
  CohomologyTable out;
  out[ell] = weyl_dim(c);
  return out;
}

mpz_class bundle_euler(const WeightedBundle& bnd) {
  // antisymmetrized Weyl product on the undotted sequence
  int n = bnd.n;
  std::vector<int> c;
  for (int x : bnd.a) c.push_back(x);
  for (int x : bnd.b) c.push_back(x);
  for (int i = 0; i < n; ++i) c[i] += n - 1 - i;
  mpz_class num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= c[i] - c[j];
      den *= j - i;
    }
  return num / den;
}

std::vector<BundleTerm> omega_decompose(int p, int k, int n, int twist) {
  if (p < 0 || p > k * (n - k)) throw BadRange("Omega^p outside 0..dim");
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions_rec(p, n - k, k, cur, parts);
  if (p == 0) parts = {{}};
  std::vector<BundleTerm> out;
  for (auto& lam : parts) {
    WeightedBundle b;
    b.k = k;
    b.n = n;
    b.a.assign(k, twist);
    for (int i = 0; i < (int)lam.size(); ++i) b.a[k - 1 - i] -= lam[i];
    auto t = conjugate(lam);
    t.resize(n - k, 0);
    b.b = t;
    out.push_back({b, 1});
  }
  return out;
}

std::vector<std::vector<int>> pieri_column(const std::vector<int>& b, int c) {
  int q = (int)b.size();
  std::vector<std::vector<int>> out;
  if (c < 0 || c > q) return out;
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    if (__builtin_popcount(mask) != c) continue;
    std::vector<int> w = b;
    for (int i = 0; i < q; ++i)
      if (mask & (1u << i)) ++w[i];
    bool ok = true;
    for (int i = 1; i < q; ++i)
      if (w[i - 1] < w[i]) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<std::pair<std::vector<int>, mpz_class>> tensor_schur(
    const std::vector<int>& b1, const std::vector<int>& b2) {
  check_decreasing(b1, "tensor");
  check_decreasing(b2, "tensor");
  int q = (int)b1.size();
  if ((int)b2.size() != q) throw BadWeight("tensor factors of different rank");
  int shift = b2.empty() ? 0 : b2.back();
  std::vector<int> nu;
  for (int x : b2) nu.push_back(x - shift);
  int L = nu.empty() ? 0 : nu[0];
  std::map<std::vector<int>, mpz_class> acc;
  if (L == 0) {
    acc[b1] = 1;
  } else {
    auto nut = conjugate(nu);
    nut.resize(L, 0);
    std::vector<int> perm(L);
    std::iota(perm.begin(), perm.end(), 0);
    // dual Jacobi-Trudi: s_nu = det(e_{nu^T_i - i + j})
    do {
      int sign = 1;
      for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j)
          if (perm[i] > perm[j]) sign = -sign;
      std::vector<std::pair<std::vector<int>, mpz_class>> cur = {{b1, 1}};
      bool dead = false;
      for (int i = 0; i < L && !dead; ++i) {
        int col = nut[i] - i + perm[i];
        if (col == 0) continue;
        if (col < 0 || col > q) {
          dead = true;
          break;
        }
        std::map<std::vector<int>, mpz_class> next;
        for (auto& [w, m] : cur)
          for (auto& w2 : pieri_column(w, col)) next[w2] += m;
        cur.assign(next.begin(), next.end());
      }
      if (!dead)
        for (auto& [w, m] : cur) acc[w] += sign * m;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::pair<std::vector<int>, mpz_class>> out;
  for (auto& [w, m] : acc) {
    if (m < 0) throw BadWeight("tensor decomposition produced a negative multiplicity");
    if (m == 0) continue;
    std::vector<int> ws = w;
    for (auto& x : ws) x += shift;
    out.push_back({ws, m});
  }
  return out;
}

// ---- the staircase engine ----

struct SectionVariety::Impl {
  int k, n, dim;
  bool q1 = false;   // cut by Q(1) first (the Gr(2,6) model)
  int lin = 0;       // number of hyperplane cuts after the base
  int base_dim = 0;  // dimension before the hyperplane cuts
  std::vector<std::vector<BundleTerm>> koszul;  // wedge^j E*, full cutting bundle
  mutable VarPool pool;
  mutable std::map<std::string, AffTable> memo;

  AffTable base_table(const WeightedBundle& f) const {
    if (!q1) {
      AffTable out;
      for (auto& [q, v] : bott_cohomology(f)) out[q] = Aff(v);
      return out;
    }
    // peel the Koszul complex of the Q(1) section on Gr(2,6):
    // M_j = im(wedge^j E* -> wedge^{j-1} E*), M_0 = F restricted
    std::vector<AffTable> amb(5);
    for (int w = 0; w <= 4; ++w) {
      std::vector<int> col(4, 0);
      for (int i = 0; i < w; ++i) col[i] = 1;
      for (auto& [u, m] : tensor_schur(f.b, col)) {
        WeightedBundle h = f;
        for (auto& x : h.a) x -= w;  // wedge^w(Q*(-1)) twists by O(-w)
        h.b = u;
        for (auto& [deg, d] : bott_cohomology(h)) table_add(amb[w], deg, Aff(d * m));
      }
    }
    AffTable M = amb[4];
    for (int j = 3; j >= 0; --j)
      M = solve_C(M, amb[j], pool, -1, j == 0 ? base_dim : -1);
    return M;
  }

  AffTable step_table(const WeightedBundle& f, int s) const {
    std::ostringstream key;
    key << "r" << s;
    for (int x : f.a) key << "|" << x;
    for (int x : f.b) key << "," << x;
    auto hit = memo.find(key.str());
    if (hit != memo.end()) return hit->second;
    AffTable out;
    if (s == 0) {
      out = base_table(f);
    } else {
      // one hyperplane at a time: 0 -> F(-1)|_{s-1} -> F|_{s-1} -> F|_s -> 0,
      // multiplication by the section: injective on H^0, surjective (Serre
      // duality) on the top cohomology of the bigger variety
      auto A = step_table(f.twisted(-1), s - 1);
      auto B = step_table(f, s - 1);
      out = solve_C(A, B, pool, base_dim - (s - 1), base_dim - s);
    }
    memo[key.str()] = out;
    return out;
  }

  AffTable restricted(const WeightedBundle& f) const { return step_table(f, lin); }

  AffTable hodge_sheaf(int p, int twist, const std::vector<int>& w) const {
    if (p < 0 || p > dim) return {};
    std::vector<int> wq = w;
    wq.resize(n - k, 0);
    check_decreasing(wq, "coefficient");
    std::ostringstream key;
    key << "p" << p << "|" << twist;
    for (int x : wq) key << "," << x;
    auto hit = memo.find(key.str());
    if (hit != memo.end()) return hit->second;

    AffTable result;
    if (p == 0) {
      WeightedBundle f;
      f.k = k;
      f.n = n;
      f.a.assign(k, twist);
      f.b = wq;
      result = restricted(f);
    } else {
      // F^0 = (Omega^p_G (x) Sigma_w Q* (twist)) restricted, via Koszul
      AffTable F0;
      for (auto& term : omega_decompose(p, k, n, twist))
        for (auto& [u, m] : tensor_schur(term.bundle.b, wq)) {
          WeightedBundle g = term.bundle;
          g.b = u;
          auto t = restricted(g);
          for (auto& [deg, d] : t) table_add(F0, deg, d.scaled(m * term.mult));
        }
      // conormal filtration: gr^j = wedge^j N* (x) Omega^{p-j}_X (x) coeffs
      int R = (int)koszul.size() - 1;
      int J = std::min(p, R);
      std::vector<AffTable> gr(J + 1);
      for (int j = 1; j <= J; ++j)
        for (auto& term : koszul[j]) {
          int tw = term.bundle.a[0];
          for (auto& [u, m] : tensor_schur(term.bundle.b, wq)) {
            auto t = hodge_sheaf(p - j, twist + tw, u);
            for (auto& [deg, d] : t) table_add(gr[j], deg, d.scaled(m * term.mult));
          }
        }
      AffTable F = gr[J];
      for (int j = J - 1; j >= 1; --j) F = solve_B(F, gr[j], pool);
      result = solve_C(F, F0, pool, -1, dim);
    }
    memo[key.str()] = result;
    return result;
  }

  mpz_class euler_restricted(const WeightedBundle& f) const {
    mpz_class chi = 0;
    for (int j = 0; j < (int)koszul.size(); ++j) {
      int sign = j % 2 ? -1 : 1;
      for (auto& term : koszul[j]) {
        int tw = term.bundle.a[0];
        for (auto& [u, m] : tensor_schur(f.b, term.bundle.b)) {
          WeightedBundle g = f;
          for (auto& x : g.a) x += tw;
          g.b = u;
          chi += sign * bundle_euler(g) * m * term.mult;
        }
      }
    }
    return chi;
  }

  mpz_class euler_omega(int p, int twist, const std::vector<int>& w) const {
    if (p < 0 || p > dim) return 0;
    std::vector<int> wq = w;
    wq.resize(n - k, 0);
    mpz_class chi = 0;
    for (auto& term : omega_decompose(p, k, n, twist))
      for (auto& [u, m] : tensor_schur(term.bundle.b, wq)) {
        WeightedBundle g = term.bundle;
        g.b = u;
        chi += euler_restricted(g) * m * term.mult;
      }
    int R = (int)koszul.size() - 1;
    for (int j = 1; j <= std::min(p, R); ++j)
      for (auto& term : koszul[j]) {
        int tw = term.bundle.a[0];
        for (auto& [u, m] : tensor_schur(term.bundle.b, wq))
          chi -= euler_omega(p - j, twist + tw, u) * m * term.mult;
      }
    return chi;
  }
};

SectionVariety::SectionVariety(int k, int n, int r) : impl_(new Impl) {
  impl_->k = k;
  impl_->n = n;
  impl_->dim = k * (n - k) - r;
  if (r < 1 || impl_->dim < 0) throw BadRange("bad number of hyperplanes");
  impl_->lin = r;
  impl_->base_dim = k * (n - k);
  for (int j = 0; j <= r; ++j) {
    WeightedBundle b;
    b.k = k;
    b.n = n;
    b.a.assign(k, -j);
    b.b.assign(n - k, 0);
    impl_->koszul.push_back({{b, binom(r, j)}});
  }
}

SectionVariety::SectionVariety(int a) : impl_(new Impl) {
  if (a < 0 || a > 2) throw BadRange("Q(1) model supports 0..2 extra hyperplanes");
  impl_->k = 2;
  impl_->n = 6;
  impl_->dim = 4 - a;
  impl_->q1 = true;
  impl_->lin = a;
  impl_->base_dim = 4;
  int R = 4 + a;
  for (int j = 0; j <= R; ++j) {
    std::vector<BundleTerm> terms;
    for (int c = std::max(0, j - 4); c <= std::min(a, j); ++c) {
      int w = j - c;  // wedge power of Q*(-1)
      WeightedBundle b;
      b.k = 2;
      b.n = 6;
      b.a.assign(2, -j);
      b.b.assign(4, 0);
      for (int i = 0; i < w; ++i) b.b[i] = 1;
      terms.push_back({b, binom(a, c)});
    }
    impl_->koszul.push_back(terms);
  }
}

SectionVariety::~SectionVariety() = default;

int SectionVariety::dim() const { return impl_->dim; }
int SectionVariety::k() const { return impl_->k; }
int SectionVariety::n() const { return impl_->n; }

namespace {
CohomologyTable demand_const(const AffTable& t, const char* what) {
  CohomologyTable out;
  for (auto& [q, v] : t) {
    if (!v.is_const())
      throw AmbiguousExtension(std::string(what) + ": a rank is left undetermined");
    if (v.c != 0) out[q] = v.c;
  }
  return out;
}
}  // namespace

CohomologyTable SectionVariety::restricted(const WeightedBundle& f) const {
  return demand_const(impl_->restricted(f), "restriction");
}

CohomologyTable SectionVariety::hodge_sheaf(int p, int twist,
                                            const std::vector<int>& w) const {
  return demand_const(impl_->hodge_sheaf(p, twist, w), "Hodge sheaf");
}

mpz_class SectionVariety::euler_restricted(const WeightedBundle& f) const {
  return impl_->euler_restricted(f);
}

mpz_class SectionVariety::euler_omega(int p, int twist,
                                      const std::vector<int>& w) const {
  return impl_->euler_omega(p, twist, w);
}

std::vector<std::vector<mpz_class>> SectionVariety::hodge_diamond() const {
  int d = impl_->dim;
  std::vector<std::vector<Aff>> h(d + 1, std::vector<Aff>(d + 1));
  for (int p = 0; p <= d; ++p) {
    auto t = impl_->hodge_sheaf(p, 0, {});
    for (int q = 0; q <= d; ++q) h[p][q] = table_get(t, q);
  }
  // linear constraints: Serre duality, Hodge symmetry, exact Euler
  // characteristics of each column
  std::vector<Aff> eqs;
  for (int p = 0; p <= d; ++p) {
    Aff chi(-impl_->euler_omega(p, 0, {}));
    for (int q = 0; q <= d; ++q) {
      chi += (q % 2 ? -h[p][q] : h[p][q]);
      eqs.push_back(h[p][q] - h[d - p][d - q]);
      eqs.push_back(h[p][q] - h[q][p]);
    }
    eqs.push_back(chi);
  }
  // Gaussian elimination over the unknown ranks
  std::map<int, Aff> solved;  // pivot var -> expression in later vars
  auto reduce = [&](Aff e) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (auto& [var, expr] : solved) {
        auto it = e.v.find(var);
        if (it == e.v.end()) continue;
        mpz_class coef = it->second;
        e.v.erase(it);
        e += expr.scaled(coef);
        moved = true;
      }
    }
    return e;
  };
  for (auto& raw : eqs) {
    Aff e = reduce(raw);
    if (e.v.empty()) {
      if (e.c != 0)
        throw AmbiguousExtension("inconsistent Hodge constraints");
      continue;
    }
    // pick a pivot with unit coefficient if possible
    int pivot = -1;
    for (auto& [var, coef] : e.v)
      if (coef == 1 || coef == -1) {
        pivot = var;
        break;
      }
    if (pivot == -1) {
      // integral pinning only through unit pivots; try divisibility
      auto& [var, coef] = *e.v.begin();
      pivot = var;
      Aff rest = e;
      rest.v.erase(pivot);
      bool divides = mpz_divisible_p(rest.c.get_mpz_t(), coef.get_mpz_t());
      for (auto& [v2, c2] : rest.v)
        divides = divides && mpz_divisible_p(c2.get_mpz_t(), coef.get_mpz_t());
      if (!divides) throw AmbiguousExtension("non-integral Hodge constraint");
      mpz_class cf = e.v[pivot];
      Aff expr;
      expr.c = -rest.c / cf;
      for (auto& [v2, c2] : rest.v) expr.v[v2] = -c2 / cf;
      solved[pivot] = expr;
      continue;
    }
    mpz_class cf = e.v[pivot];
    Aff rest = e;
    rest.v.erase(pivot);
    solved[pivot] = (cf == 1 ? -rest : rest);  // pivot = -rest / cf, cf = +-1
  }
  std::vector<std::vector<mpz_class>> out(d + 1, std::vector<mpz_class>(d + 1, 0));
  for (int p = 0; p <= d; ++p)
    for (int q = 0; q <= d; ++q) {
      Aff e = reduce(h[p][q]);
      if (!e.is_const())
        throw AmbiguousExtension("Hodge number h^{" + std::to_string(p) + "," +
                                 std::to_string(q) + "} left undetermined");
      if (e.c < 0)
        throw AmbiguousExtension("negative Hodge number from the constraint solve");
      out[p][q] = e.c;
    }
  return out;
}

NumericalInvariants invariants_from_diamond(
    const std::vector<std::vector<mpz_class>>& h) {
  NumericalInvariants out;
  int d = (int)h.size() - 1;
  out.diamond = h;
  mpz_class e = 0;
  for (int p = 0; p <= d; ++p)
    for (int q = 0; q <= d; ++q)
      e += ((p + q) % 2 ? -1 : 1) * h[p][q];
  if (d == 2) {
    out.kind = "surface";
    out.pg = h[2][0];
    out.q = h[1][0];
    out.h11 = h[1][1];
    out.chiO = 1 - out.q + out.pg;
    out.e = e;
    out.K2 = 12 * out.chiO - out.e;
  } else if (d == 3) {
    out.kind = "threefold";
    out.h11 = h[1][1];
    out.h12 = h[1][2];
    out.h30 = h[3][0];
    out.q = h[1][0];
    out.chi = e;
    out.e = e;
  } else {
    out.kind = "fourfold";
    out.h11 = h[1][1];
    out.e = e;
    out.chi = e;
  }
  return out;
}

NumericalInvariants hodge_linear_section(int k, int n, int r) {
  static std::map<std::tuple<int, int, int>, NumericalInvariants> cache;
  auto key = std::make_tuple(k, n, r);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;
  SectionVariety sv(k, n, r);
  auto inv = invariants_from_diamond(sv.hodge_diamond());
  cache[key] = inv;
  return inv;
}

NumericalInvariants hodge_q1_model(int a) {
  SectionVariety sv(a);
  auto inv = invariants_from_diamond(sv.hodge_diamond());
  auto ref = hodge_linear_section(2, 7, 6 + a);
  if (inv.diamond != ref.diamond)
    throw AmbiguousExtension(
        "quotient-bundle model disagrees with the linear-section diamond");
  return inv;
}

DeformationReport deformation_number(const std::string& kind) {
  int r = kind == "Z" ? 6 : kind == "W" ? 7 : kind == "S" ? 8 : 0;
  if (r == 0) throw BadRange("kind must be Z, W, or S");
  SectionVariety sv(2, 7, r);
  WeightedBundle tangent{2, 7, {1, 0}, {0, 0, 0, 0, -1}};  // S* (x) Q
  auto tg = sv.restricted(tangent);
  WeightedBundle o1{2, 7, {1, 1}, {0, 0, 0, 0, 0}};
  auto nt = sv.restricted(o1);
  CohomologyTable N;
  for (auto& [q, v] : nt) N[q] = v * r;
  auto get = [](const CohomologyTable& t, int q) {
    auto it = t.find(q);
    return it == t.end() ? mpz_class(0) : it->second;
  };

  DeformationReport rep;
  rep.h0_ambient_tangent = get(tg, 0);
  rep.h0_normal = get(N, 0);
  rep.notes.push_back("h^0(T_X) = 0 assumed (no infinitesimal automorphisms)");
  // 0 -> T_X -> T_G|_X -> N -> 0; with h^0(T_X) = 0 the map of global
  // sections has full rank, the rest must be forced by vanishing
  auto rank_gamma = [&](int q) -> mpz_class {
    if (q == 0) return get(tg, 0);
    mpz_class hb = get(tg, q), hc = get(N, q);
    if (hb == 0 || hc == 0) return 0;
    if (q == sv.dim()) return hc;  // H^{dim+1}(T_X) = 0, so surjective on top
    throw AmbiguousExtension("tangent restriction map undetermined in degree " +
                             std::to_string(q));
  };
  rep.h1 = (get(N, 0) - rank_gamma(0)) + (get(tg, 1) - rank_gamma(1));
  rep.h2 = (get(N, 1) - rank_gamma(1)) + (get(tg, 2) - rank_gamma(2));
  if (rep.h1 < 0 || rep.h2 < 0)
    throw AmbiguousExtension("normal-bundle chain gave a negative dimension");
  return rep;
}

NumericalInvariants quotient_invariants(const NumericalInvariants& inv, int order,
                                        bool free, int h11_quotient) {
  if (!free) throw NotDivisible("quotient formulas apply to free actions only");
  NumericalInvariants out;
  out.kind = inv.kind;
  if (inv.kind == "surface") {
    if (inv.chiO % order != 0 || inv.K2 % order != 0 || inv.e % order != 0)
      throw NotDivisible("characteristic numbers not divisible by the group order");
    out.chiO = inv.chiO / order;
    out.K2 = inv.K2 / order;
    out.e = inv.e / order;
    out.q = inv.q;  // regularity preserved
    out.pg = out.chiO - 1 + out.q;
    out.h11 = out.e - 2 + 4 * out.q - 2 * out.pg;
  } else if (inv.kind == "threefold") {
    if (inv.chi % order != 0)
      throw NotDivisible("Euler characteristic not divisible by the group order");
    out.chi = inv.chi / order;
    out.e = out.chi;
    out.h11 = h11_quotient;
    out.h12 = out.h11 - out.chi / 2;
    out.q = inv.q;
  } else {
    throw BadRange("quotient bookkeeping covers surfaces and threefolds");
  }
  return out;
}

FixedDatum fixed_datum_from_curve(const mpz_class& KC, const mpz_class& chiOC,
                                  const mpz_class& points) {
  FixedDatum f;
  f.KC = KC;
  f.chiOC = chiOC;
  f.points = points;
  f.C2 = -KC - 2 * chiOC;
  return f;
}

QuotientGeometry involution_quotient(const NumericalInvariants& inv,
                                     const FixedDatum& fix, const mpz_class& pg_res,
                                     const mpz_class& q_res) {
  if (fix.has_curve && fix.KC + fix.C2 + 2 * fix.chiOC != 0)
    throw AdjunctionViolated("fixed curve violates adjunction");
  QuotientGeometry out;
  mpz_class C2 = fix.has_curve ? fix.C2 : mpz_class(0);
  mpz_class KC = fix.has_curve ? fix.KC : mpz_class(0);
  mpz_class e_fix = (fix.has_curve ? mpz_class(2 * fix.chiOC) : mpz_class(0)) + fix.points;
  out.K2_quotient = (inv.K2 + C2 - 2 * KC) / 2;
  out.e_quotient = (inv.e + e_fix) / 2;
  out.e_resolved = out.e_quotient + fix.points;
  out.K2_resolved = out.K2_quotient;  // nodes resolve crepantly
  out.noether_consistent =
      out.K2_resolved + out.e_resolved == 12 * (1 - q_res + pg_res);
  return out;
}

}  // namespace gq
