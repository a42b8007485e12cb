#include "gq/grassmann.hpp"

#include <cassert>
#include <map>

namespace gq {

static bool supported_pair(int k, int n) {
  return (k == 2 && n >= 4 && n <= 7) || (k == 3 && n == 6);
}

static std::string label_name(const WedgeIndex& idx) {
  std::string s = "x";
  for (int i : idx) s += "_" + std::to_string(i);
  return s;
}

static RingPtr plucker_ring(FieldPtr field, int k, int n) {
  std::vector<std::string> names;
  for (auto& idx : wedge_basis(k, n)) names.push_back(label_name(idx));
  return PolyRing::make(std::move(field), std::move(names));
}

// Quadratic shuffle relations: for a (k-1)-tuple A and a (k+1)-tuple B,
//   sum_t (-1)^t  p_{A + B_t} p_{B - B_t} = 0.
std::vector<SparsePoly> shuffle_quadrics(const RingPtr& ring, int k, int n) {
  auto labels = wedge_basis(k, n);
  auto As = wedge_basis(k - 1, n);
  auto Bs = wedge_basis(k + 1, n);
  FieldPtr F = ring->field;
  std::vector<SparsePoly> rels;
  for (auto& A : As) {
    for (auto& B : Bs) {
      SparsePoly rel(ring);
      for (int t = 0; t < k + 1; ++t) {
        WedgeIndex left = A;
        left.push_back(B[t]);
        int sl = sort_sign(left);
        if (sl == 0) continue;
        WedgeIndex right;
        for (int u = 0; u < k + 1; ++u)
          if (u != t) right.push_back(B[u]);
        int sign = ((t % 2) ? -1 : 1) * sl;
        Mono m(ring->nvars(), 0);
        ++m[wedge_position(left, n)];
        ++m[wedge_position(right, n)];
        rel.add_term(m, sign > 0 ? F->one() : -F->one());
      }
      if (!rel.is_zero()) rels.push_back(std::move(rel));
    }
  }
  return rels;
}

// Row-echelon basis of the linear span of homogeneous polynomials.
static std::vector<SparsePoly> independent_span(const std::vector<SparsePoly>& polys) {
  if (polys.empty()) return {};
  MonCmp cmp{polys[0].ring()->order};
  std::map<Mono, SparsePoly, MonCmp> rows{cmp};
  for (const SparsePoly& p : polys) {
    SparsePoly r = p;
    while (!r.is_zero()) {
      auto it = rows.find(r.leading_mono());
      if (it == rows.end()) break;
      r = r - it->second.scaled(r.leading_coeff());
    }
    if (!r.is_zero()) {
      r = r.scaled(r.leading_coeff().inverse());
      rows.emplace(r.leading_mono(), std::move(r));
    }
  }
  std::vector<SparsePoly> out;
  for (auto& [m, p] : rows) out.push_back(p);
  return out;
}

GrassmannianSpec make_grassmannian(FieldPtr field, int k, int n) {
  if (!supported_pair(k, n))
    throw Unsupported("Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
  GrassmannianSpec spec;
  spec.k = k;
  spec.n = n;
  spec.labels = wedge_basis(k, n);
  spec.ring = plucker_ring(field, k, n);
  if (k == 2) {
    // Pluecker quadrics of Gr(2,n) are the 4-Pfaffians of the generic skew
    // n x n matrix whose entries are the Pluecker coordinates.
    SkewMatrix sk(spec.ring, n);
    int v = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sk.set(i, j, SparsePoly::variable(spec.ring, v++));
    spec.quadrics = sk.sub_pfaffians(4);
  } else {
    spec.quadrics = independent_span(shuffle_quadrics(spec.ring, k, n));
  }
  return spec;
}

std::vector<SparsePoly> plucker_ideal(FieldPtr field, int k, int n) {
  return make_grassmannian(std::move(field), k, n).quadrics;
}

TensorVector plucker_point(const ExactMatrix& plane) {
  int k = plane.rows(), n = plane.cols();
  if (plane.rank() < k) throw RankDeficient("plucker_point: rank-deficient plane");
  TensorVector t(plane.field(), k, n);
  for (auto& idx : wedge_basis(k, n)) {
    ExactMatrix sub(plane.field(), k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub.set(a, b, plane.at(a, idx[b] - 1));
    t.add_term(idx, sub.det());
  }
  return t;
}

// determinant of a small matrix of polynomials by cofactor expansion
static SparsePoly poly_det(const std::vector<std::vector<SparsePoly>>& m, RingPtr ring) {
  size_t n = m.size();
  if (n == 0) return SparsePoly::constant(ring, ring->field->one());
  if (n == 1) return m[0][0];
  SparsePoly acc = SparsePoly::zero(ring);
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<SparsePoly>> sub;
    for (size_t r = 1; r < n; ++r) {
      std::vector<SparsePoly> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    SparsePoly term = m[0][c] * poly_det(sub, ring);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

ChartData make_chart(const GrassmannianSpec& spec, const std::vector<int>& pivots) {
  int k = spec.k, n = spec.n;
  if ((int)pivots.size() != k) throw BadPivots("need k pivot columns");
  std::vector<char> is_pivot(n + 1, 0);
  for (int p : pivots) {
    if (p < 1 || p > n || is_pivot[p]) throw BadPivots("bad pivot column");
    is_pivot[p] = 1;
  }
  ChartData chart;
  chart.pivots = pivots;
  std::vector<std::string> pnames;
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= n; ++c)
      if (!is_pivot[c]) pnames.push_back("a_" + std::to_string(r) + "_" + std::to_string(c));
  chart.param_ring = PolyRing::make(spec.ring->field, pnames);
  // plane matrix: identity in the pivot columns, parameters elsewhere
  std::vector<std::vector<SparsePoly>> plane(
      k, std::vector<SparsePoly>(n, SparsePoly::zero(chart.param_ring)));
  int v = 0;
  for (int r = 0; r < k; ++r)
    for (int c = 1; c <= n; ++c) {
      if (is_pivot[c]) {
        int which = 0;
        while (pivots[which] != c) ++which;
        if (which == r)
          plane[r][c - 1] = SparsePoly::constant(chart.param_ring,
                                                 spec.ring->field->one());
      } else {
        plane[r][c - 1] = SparsePoly::variable(chart.param_ring, v++);
      }
    }
  for (auto& idx : spec.labels) {
    std::vector<std::vector<SparsePoly>> sub(k, std::vector<SparsePoly>(k, SparsePoly::zero(chart.param_ring)));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub[a][b] = plane[a][idx[b] - 1];
    chart.label_map.push_back(poly_det(sub, chart.param_ring));
  }
  return chart;
}

std::vector<SparsePoly> chart_pullback(const GrassmannianSpec& spec,
                                       const ChartData& chart,
                                       const std::vector<SparsePoly>& polys) {
  std::vector<SparsePoly> out;
  for (auto& p : polys) out.push_back(p.substitute(chart.label_map));
  return out;
}

mpz_class grassmann_h0(int k, int n, int d) {
  // Weyl dimension formula for highest weight (d,...,d,0,...,0), k copies
  mpq_class dim = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long li = (i <= k) ? d : 0;
      long lj = (j <= k) ? d : 0;
      dim *= mpq_class(li - lj + j - i, j - i);
    }
  dim.canonicalize();
  assert(dim.get_den() == 1);
  return dim.get_num();
}

std::vector<mpz_class> grassmann_hilbert_numerator(int k, int n, int D) {
  if (!supported_pair(k, n))
    throw Unsupported("Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
  long N = 1;
  for (int i = 1; i <= k; ++i) N = N * (n - k + i) / i;  // C(n, k)
  // numerator = (sum h_d t^d) * (1 - t)^N, truncated at degree D
  std::vector<mpz_class> h(D + 1);
  for (int d = 0; d <= D; ++d) h[d] = grassmann_h0(k, n, d);
  std::vector<mpz_class> binom(N + 1);
  binom[0] = 1;
  for (int i = 1; i <= N; ++i) {
    binom[i] = binom[i - 1] * (N - i + 1);
    binom[i] /= i;
  }
  std::vector<mpz_class> num(D + 1, 0);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; j <= std::min<long>(i, N); ++j) {
      mpz_class term = binom[j] * h[i - j];
      if (j % 2) num[i] -= term;
      else num[i] += term;
    }
  // the exact numerator has degree well below D; require a stable zero tail
  for (int i = D; i > D - 4; --i)
    if (num[i] != 0) throw FitFailed("hilbert numerator tail not stabilized");
  while (!num.empty() && num.back() == 0) num.pop_back();
  // cancel every (1-t) factor so the value at 1 is the Grassmannian degree
  auto at_one = [](const std::vector<mpz_class>& v) {
    mpz_class s = 0;
    for (auto& c : v) s += c;
    return s;
  };
  while (!num.empty() && at_one(num) == 0) {
    std::vector<mpz_class> q(num.size() - 1);
    mpz_class acc = 0;
    for (size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    num = std::move(q);
  }
  return num;
}

}  // namespace gq
