#include "gq/field.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace gq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> fs;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) n /= d, ++e;
      fs.push_back({d, e});
    }
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

// --- integer polynomial helpers (low-to-high coefficient vectors) ---

std::vector<mpz_class> zpoly_div_exact(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b) {
  // exact division of a by b; b monic up to leading unit
  std::vector<mpz_class> r = a;
  std::vector<mpz_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (r.size() >= b.size() && !(r.size() == 1 && r[0] == 0)) {
    size_t dr = r.size() - 1, db = b.size() - 1;
    mpz_class c = r[dr] / b[db];
    q[dr - db] = c;
    for (size_t i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    if (r.size() == 1 && r[0] == 0) break;
    if (r.size() - 1 < db) break;
  }
  return q;
}

int euler_phi(int n) {
  int result = n;
  for (auto [p, e] : factorize((u64)n)) result = result / (int)p * ((int)p - 1);
  return result;
}

// --- F_p[x] helpers for extension fields ---

std::vector<u64> fpx_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (u64)(((u128)a[i] * b[j] + c[i + j]) % p);
  return c;
}

void fpx_trim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m, m monic
std::vector<u64> fpx_mod(std::vector<u64> a, const std::vector<u64>& m, u64 p) {
  fpx_trim(a);
  size_t dm = m.size() - 1;
  while (a.size() > dm) {
    u64 c = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) {
      u64 t = (u64)(((u128)c * m[i]) % p);
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    fpx_trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::vector<u64> fpx_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  fpx_trim(a);
  fpx_trim(b);
  while (!b.empty()) {
    // normalize b monic
    u64 li = mod_inv(b.back(), p);
    for (auto& c : b) c = (u64)(((u128)c * li) % p);
    auto r = fpx_mod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

bool fpx_irreducible(const std::vector<u64>& f, u64 p) {
  // f monic of degree k; check x^{p^k} == x mod f and gcd(x^{p^d}-x, f)=1 for
  // proper divisors d of k
  size_t k = f.size() - 1;
  auto frob = [&](std::vector<u64> x, int times) {
    // x -> x^{p^times} mod f by repeated powering
    for (int t = 0; t < times; ++t) {
      // compute x^p mod f by square and multiply
      std::vector<u64> r{1}, base = x;
      u64 e = p;
      while (e) {
        if (e & 1) r = fpx_mod(fpx_mul(r, base, p), f, p);
        base = fpx_mod(fpx_mul(base, base, p), f, p);
        e >>= 1;
      }
      x = r;
    }
    return x;
  };
  std::vector<u64> x{0, 1};
  auto xpk = frob(x, (int)k);
  auto diff = xpk;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  fpx_trim(diff);
  if (!diff.empty()) return false;
  for (size_t d = 1; d < k; ++d) {
    if (k % d) continue;
    auto xd = frob(x, (int)d);
    auto g = xd;
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    fpx_trim(g);
    auto gc = fpx_gcd(f, g, p);
    if (!(gc.size() == 1)) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (u64)(((u128)r * b) % p);
    b = (u64)(((u128)b * b) % p);
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a % p, p - 2, p); }

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto phi_d = cyclotomic_polynomial(d);
    num = zpoly_div_exact(num, phi_d);
  }
  return num;
}

// ---------------------------------------------------------------------------
// Field construction

FieldPtr Field::make(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::Rationals:
      return rationals();
    case FieldKind::Cyclotomic:
      return cyclotomic(spec.n);
    case FieldKind::Prime:
      return prime(spec.p);
    case FieldKind::Extension: {
      if (!is_prime_u64(spec.p)) throw NotPrime("extension characteristic not prime");
      if (!spec.modulus.empty()) {
        auto f = std::shared_ptr<Field>(new Field());
        f->spec_ = spec;
        f->deg_ = (int)spec.modulus.size() - 1;
        f->modp_ = spec.modulus;
        if (!fpx_irreducible(f->modp_, spec.p))
          throw ReducibleModulus("extension modulus is reducible");
        return f;
      }
      return extension(spec.p, spec.k);
    }
  }
  throw FieldError("bad field spec");
}

FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->spec_.kind = FieldKind::Rationals;
    f->deg_ = 1;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::cyclotomic(int n) {
  if (n < 1) throw FieldError("cyclotomic order must be >= 1");
  auto f = std::shared_ptr<Field>(new Field());
  f->spec_.kind = FieldKind::Cyclotomic;
  f->spec_.n = n;
  f->mod0_ = cyclotomic_polynomial(n);
  f->deg_ = (int)f->mod0_.size() - 1;
  return f;
}

FieldPtr Field::prime(u64 p) {
  if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 31)) throw FieldError("prime too large for this artifact");
  auto f = std::shared_ptr<Field>(new Field());
  f->spec_.kind = FieldKind::Prime;
  f->spec_.p = p;
  f->deg_ = 1;
  return f;
}

FieldPtr Field::extension(u64 p, int k, u64 seed) {
  if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("extension degree must be >= 1");
  auto f = std::shared_ptr<Field>(new Field());
  f->spec_.kind = FieldKind::Extension;
  f->spec_.p = p;
  f->spec_.k = k;
  f->deg_ = k;
  // random irreducibility search for a monic modulus
  std::mt19937_64 rng(seed * 1000003 + p * 131 + (u64)k);
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  while (true) {
    std::vector<u64> m(k + 1, 0);
    m[k] = 1;
    for (int i = 0; i < k; ++i) m[i] = coeff(rng);
    if (m[0] == 0) continue;
    if (fpx_irreducible(m, p)) {
      f->modp_ = m;
      f->spec_.modulus = m;
      return f;
    }
  }
}

u64 Field::characteristic() const {
  return (spec_.kind == FieldKind::Prime || spec_.kind == FieldKind::Extension) ? spec_.p : 0;
}

bool Field::same(const Field& o) const {
  if (this == &o) return true;
  if (spec_.kind != o.spec_.kind) return false;
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return true;
    case FieldKind::Cyclotomic:
      return spec_.n == o.spec_.n;
    case FieldKind::Prime:
      return spec_.p == o.spec_.p;
    case FieldKind::Extension:
      return spec_.p == o.spec_.p && modp_ == o.modp_;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Element construction / reduction

FieldElement Field::wrap(std::vector<mpq_class> qc) const {
  FieldElement e;
  e.field_ = shared_from_this();
  reduce_char0(qc);
  e.qc_ = std::move(qc);
  return e;
}

FieldElement Field::wrap(std::vector<u64> pc) const {
  FieldElement e;
  e.field_ = shared_from_this();
  reduce_charp(pc);
  e.pc_ = std::move(pc);
  return e;
}

void Field::reduce_char0(std::vector<mpq_class>& c) const {
  c.resize(std::max<size_t>(c.size(), (size_t)deg_), 0);
  if (mod0_.empty()) {
    c.resize(1);
    return;
  }
  size_t dm = mod0_.size() - 1;
  while (c.size() > dm) {
    mpq_class lead = c.back();
    size_t shift = c.size() - 1 - dm;
    if (lead != 0)
      for (size_t i = 0; i <= dm; ++i) c[shift + i] -= lead * mod0_[i];
    c.pop_back();
  }
  c.resize(dm, 0);
}

void Field::reduce_charp(std::vector<u64>& c) const {
  u64 p = spec_.p;
  for (auto& x : c) x %= p;
  c.resize(std::max<size_t>(c.size(), (size_t)deg_), 0);
  if (modp_.empty()) {
    c.resize(1);
    return;
  }
  c = fpx_mod(c, modp_, p);
  c.resize(modp_.size() - 1, 0);
}

FieldElement Field::zero() const {
  if (characteristic()) return wrap(std::vector<u64>{});
  return wrap(std::vector<mpq_class>{});
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long v) const {
  if (characteristic()) {
    long m = (long)(v % (long)spec_.p);
    if (m < 0) m += (long)spec_.p;
    return wrap(std::vector<u64>{(u64)m});
  }
  return wrap(std::vector<mpq_class>{mpq_class(v)});
}

FieldElement Field::from_rational(const mpq_class& v_in) const {
  mpq_class v = v_in;
  v.canonicalize();
  if (characteristic()) {
    u64 p = spec_.p;
    mpz_class num = v.get_num() % mpz_class((unsigned long)p);
    mpz_class den = v.get_den() % mpz_class((unsigned long)p);
    if (den == 0 || mpz_class(den) % mpz_class((unsigned long)p) == 0)
      throw FieldError("denominator divisible by p");
    u64 n = mpz_class((num % (long)p + (long)p) % (long)p).get_ui();
    u64 d = mpz_class((den % (long)p + (long)p) % (long)p).get_ui();
    return wrap(std::vector<u64>{(u64)(((u128)n * mod_inv(d, p)) % p)});
  }
  return wrap(std::vector<mpq_class>{v});
}

FieldElement Field::generator() const {
  if (deg_ == 1) return one();
  if (characteristic()) {
    std::vector<u64> c(deg_, 0);
    c[1] = 1;
    return wrap(c);
  }
  std::vector<mpq_class> c(deg_, 0);
  c[1] = 1;
  return wrap(c);
}

bool Field::has_root_of_unity(int n) const {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return n <= 2;
    case FieldKind::Cyclotomic: {
      int m = spec_.n % 2 == 1 ? 2 * spec_.n : spec_.n;  // Q(zeta_n) contains zeta_{2n} for odd n
      return m % n == 0;
    }
    case FieldKind::Prime:
      return (spec_.p - 1) % (u64)n == 0;
    case FieldKind::Extension: {
      u64 q = 1;
      for (int i = 0; i < spec_.k; ++i) q *= spec_.p;
      return (q - 1) % (u64)n == 0;
    }
  }
  return false;
}

FieldElement Field::root_of_unity(int n) const {
  if (!has_root_of_unity(n))
    throw NoRootOfUnity("no primitive " + std::to_string(n) + "-th root of unity");
  if (n == 1) return one();
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return from_int(-1);
    case FieldKind::Cyclotomic: {
      if (spec_.n % n == 0) {
        // zeta_n = generator^(N/n)
        return generator().pow(spec_.n / n);
      }
      // odd N, n divides 2N: zeta_{2N} = -zeta_N^{(N+1)/2}
      int N = spec_.n;
      FieldElement z2N = -generator().pow((N + 1) / 2);
      return z2N.pow(2 * N / n);
    }
    case FieldKind::Prime: {
      u64 p = spec_.p;
      // find a generator of F_p^*
      auto fs = factorize(p - 1);
      u64 g = 2;
      for (;; ++g) {
        bool ok = true;
        for (auto [q, e] : fs)
          if (mod_pow(g, (p - 1) / q, p) == 1) {
            ok = false;
            break;
          }
        if (ok) break;
      }
      return wrap(std::vector<u64>{mod_pow(g, (p - 1) / (u64)n, p)});
    }
    case FieldKind::Extension: {
      u64 q = 1;
      for (int i = 0; i < spec_.k; ++i) q *= spec_.p;
      auto fs = factorize(q - 1);
      std::mt19937_64 rng(12345);
      while (true) {
        FieldElement g = random_element(rng);
        if (g.is_zero()) continue;
        bool ok = true;
        for (auto [f, e] : fs)
          if (g.pow((long)((q - 1) / f)).is_one()) {
            ok = false;
            break;
          }
        if (ok) return g.pow((long)((q - 1) / (u64)n));
      }
    }
  }
  throw NoRootOfUnity("unreachable");
}

FieldElement Field::random_element(std::mt19937_64& rng) const {
  if (characteristic()) {
    std::uniform_int_distribution<u64> d(0, spec_.p - 1);
    std::vector<u64> c(deg_);
    for (auto& x : c) x = d(rng);
    return wrap(c);
  }
  std::uniform_int_distribution<long> d(-20, 20);
  std::vector<mpq_class> c(deg_);
  for (auto& x : c) x = d(rng);
  return wrap(c);
}

FieldElement Field::random_small_nonzero(std::mt19937_64& rng, int bound) const {
  std::uniform_int_distribution<long> d(-bound, bound);
  while (true) {
    long v = d(rng);
    if (v == 0) continue;
    FieldElement e = from_int(v);
    if (!e.is_zero()) return e;
  }
}

// ---------------------------------------------------------------------------
// Arithmetic

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (characteristic()) {
    std::vector<u64> c(deg_, 0);
    for (int i = 0; i < deg_; ++i) c[i] = (a.pc_[i] + b.pc_[i]) % spec_.p;
    return wrap(c);
  }
  std::vector<mpq_class> c(deg_);
  for (int i = 0; i < deg_; ++i) c[i] = a.qc_[i] + b.qc_[i];
  return wrap(c);
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  if (characteristic()) {
    std::vector<u64> c(deg_, 0);
    for (int i = 0; i < deg_; ++i) c[i] = (a.pc_[i] + spec_.p - b.pc_[i]) % spec_.p;
    return wrap(c);
  }
  std::vector<mpq_class> c(deg_);
  for (int i = 0; i < deg_; ++i) c[i] = a.qc_[i] - b.qc_[i];
  return wrap(c);
}

FieldElement Field::neg(const FieldElement& a) const {
  if (characteristic()) {
    std::vector<u64> c(deg_, 0);
    for (int i = 0; i < deg_; ++i) c[i] = a.pc_[i] ? spec_.p - a.pc_[i] : 0;
    return wrap(c);
  }
  std::vector<mpq_class> c(deg_);
  for (int i = 0; i < deg_; ++i) c[i] = -a.qc_[i];
  return wrap(c);
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (characteristic()) {
    if (deg_ == 1)
      return wrap(std::vector<u64>{(u64)(((u128)a.pc_[0] * b.pc_[0]) % spec_.p)});
    return wrap(fpx_mul(a.pc_, b.pc_, spec_.p));
  }
  if (deg_ == 1) return wrap(std::vector<mpq_class>{a.qc_[0] * b.qc_[0]});
  std::vector<mpq_class> c(2 * deg_ - 1, 0);
  for (int i = 0; i < deg_; ++i) {
    if (a.qc_[i] == 0) continue;
    for (int j = 0; j < deg_; ++j) c[i + j] += a.qc_[i] * b.qc_[j];
  }
  return wrap(c);
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw FieldError("division by zero");
  if (characteristic()) {
    if (deg_ == 1) return wrap(std::vector<u64>{mod_inv(a.pc_[0], spec_.p)});
    // extended Euclid in F_p[x] mod modulus
    u64 p = spec_.p;
    std::vector<u64> r0 = modp_, r1 = a.pc_;
    fpx_trim(r1);
    std::vector<u64> s0{}, s1{1};
    while (!r1.empty()) {
      // divide r0 by r1
      std::vector<u64> q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
      std::vector<u64> rem = r0;
      u64 li = mod_inv(r1.back(), p);
      while (rem.size() >= r1.size() && !rem.empty()) {
        u64 c = (u64)(((u128)rem.back() * li) % p);
        size_t shift = rem.size() - r1.size();
        q[shift] = c;
        for (size_t i = 0; i < r1.size(); ++i) {
          u64 t = (u64)(((u128)c * r1[i]) % p);
          rem[shift + i] = (rem[shift + i] + p - t) % p;
        }
        fpx_trim(rem);
        if (rem.empty()) break;
      }
      // s2 = s0 - q*s1
      auto qs1 = fpx_mul(q, s1, p);
      std::vector<u64> s2(std::max(s0.size(), qs1.size()), 0);
      for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
      for (size_t i = 0; i < qs1.size(); ++i) s2[i] = (s2[i] + p - qs1[i]) % p;
      fpx_trim(s2);
      r0 = r1;
      r1 = rem;
      s0 = s1;
      s1 = s2;
    }
    // r0 = gcd (degree 0 since modulus irreducible)
    u64 gi = mod_inv(r0[0], p);
    for (auto& c : s0) c = (u64)(((u128)c * gi) % p);
    return wrap(s0);
  }
  if (deg_ == 1) return wrap(std::vector<mpq_class>{1 / a.qc_[0]});
  // extended Euclid in Q[x] mod mod0_
  auto tomq = [](const std::vector<mpz_class>& v) {
    std::vector<mpq_class> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
  };
  auto trim = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto qmul = [](const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
    if (x.empty() || y.empty()) return std::vector<mpq_class>{};
    std::vector<mpq_class> c(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
    return c;
  };
  std::vector<mpq_class> r0 = tomq(mod0_), r1 = a.qc_;
  trim(r1);
  std::vector<mpq_class> s0{}, s1{1};
  while (!r1.empty()) {
    std::vector<mpq_class> q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    std::vector<mpq_class> rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      mpq_class c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
      if (rem.empty()) break;
    }
    auto qs1 = qmul(q, s1);
    std::vector<mpq_class> s2(std::max(s0.size(), qs1.size()), 0);
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  for (auto& c : s0) c /= r0[0];
  return wrap(s0);
}

bool Field::eq(const FieldElement& a, const FieldElement& b) const {
  if (characteristic()) return a.pc_ == b.pc_;
  return a.qc_ == b.qc_;
}

bool Field::is_zero(const FieldElement& a) const {
  if (characteristic()) {
    for (auto c : a.pc_)
      if (c) return false;
    return true;
  }
  for (const auto& c : a.qc_)
    if (c != 0) return false;
  return true;
}

std::string Field::to_string(const FieldElement& a) const {
  std::ostringstream os;
  if (characteristic()) {
    if (deg_ == 1) {
      os << a.pc_[0];
      return os.str();
    }
    bool first = true;
    os << "(";
    for (int i = 0; i < deg_; ++i) {
      if (a.pc_[i] == 0) continue;
      if (!first) os << "+";
      os << a.pc_[i];
      if (i >= 1) os << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    if (first) os << "0";
    os << ")";
    return os.str();
  }
  if (deg_ == 1) {
    os << a.qc_[0];
    return os.str();
  }
  os << "(";
  bool first = true;
  for (int i = 0; i < deg_; ++i) {
    if (a.qc_[i] == 0) continue;
    if (!first && a.qc_[i] > 0) os << "+";
    os << a.qc_[i];
    if (i >= 1) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

FieldElement Field::map_from(const FieldElement& a, const FieldElement& image_of_gen) const {
  // a lives in a (possibly different) field; evaluate its residue polynomial
  // at image_of_gen inside *this.
  FieldElement acc = zero();
  FieldElement pw = one();
  if (a.field()->characteristic()) {
    for (size_t i = 0; i < a.pc_.size(); ++i) {
      acc = add(acc, mul(from_int((long)a.pc_[i]), pw));
      pw = mul(pw, image_of_gen);
    }
  } else {
    for (size_t i = 0; i < a.qc_.size(); ++i) {
      acc = add(acc, mul(from_rational(a.qc_[i]), pw));
      pw = mul(pw, image_of_gen);
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// FieldElement operators

static const Field& common(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field()) throw MixedFields("uninitialized element");
  if (!a.field()->same(*b.field())) throw MixedFields("elements from different fields");
  return *a.field();
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return common(*this, o).add(*this, o); }
FieldElement FieldElement::operator-(const FieldElement& o) const { return common(*this, o).sub(*this, o); }
FieldElement FieldElement::operator*(const FieldElement& o) const { return common(*this, o).mul(*this, o); }
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return common(*this, o).mul(*this, o.inverse());
}
FieldElement FieldElement::operator-() const { return field_->neg(*this); }
FieldElement FieldElement::inverse() const { return field_->inv(*this); }

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = field_->one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const { return common(*this, o).eq(*this, o); }
bool FieldElement::is_zero() const { return field_->is_zero(*this); }
bool FieldElement::is_one() const { return field_->eq(*this, field_->one()); }
std::string FieldElement::str() const { return field_->to_string(*this); }

}  // namespace gq
