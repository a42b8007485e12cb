#include "gq/wedge.hpp"

#include <algorithm>
#include <cassert>

namespace gq {

std::vector<WedgeIndex> wedge_basis(int k, int n) {
  if (k < 1 || k > n) throw BadRange("wedge_basis: need 1 <= k <= n");
  std::vector<WedgeIndex> out;
  WedgeIndex cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + 1 + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

static long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int wedge_position(const WedgeIndex& idx, int n) {
  // lexicographic rank of a strictly increasing tuple
  int k = (int)idx.size();
  long rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < idx[i]; ++v) rank += binom(n - v, k - 1 - i);
    prev = idx[i];
  }
  return (int)rank;
}

int sort_sign(WedgeIndex& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

TensorVector::TensorVector(FieldPtr field, int k, int n)
    : field_(std::move(field)), k_(k), n_(n) {
  if (k < 1 || k > n) throw BadRange("TensorVector: need 1 <= k <= n");
}

void TensorVector::add_term(WedgeIndex idx, const FieldElement& c) {
  assert((int)idx.size() == k_);
  int s = sort_sign(idx);
  if (s == 0 || c.is_zero()) return;
  FieldElement v = (s > 0) ? c : -c;
  auto it = c_.find(idx);
  if (it == c_.end()) {
    c_.emplace(std::move(idx), v);
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

FieldElement TensorVector::coeff(const WedgeIndex& idx) const {
  auto it = c_.find(idx);
  return it == c_.end() ? field_->zero() : it->second;
}

std::vector<FieldElement> TensorVector::dense() const {
  std::vector<FieldElement> v((size_t)binom(n_, k_), field_->zero());
  for (auto& [idx, c] : c_) v[wedge_position(idx, n_)] = c;
  return v;
}

ExactMatrix induced_action(const ExactMatrix& g, int k) {
  int n = g.rows();
  assert(g.cols() == n);
  if (g.det().is_zero()) throw SingularGenerator("induced_action: singular matrix");
  auto basis = wedge_basis(k, n);
  int N = (int)basis.size();
  ExactMatrix m(g.field(), N, N);
  for (int col = 0; col < N; ++col) {
    const WedgeIndex& J = basis[col];
    for (int row = 0; row < N; ++row) {
      const WedgeIndex& I = basis[row];
      ExactMatrix sub(g.field(), k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub.set(a, b, g.at(I[a] - 1, J[b] - 1));
      m.set(row, col, sub.det());
    }
  }
  return m;
}

int contraction_position(int i, int j, int k, int n) {
  WedgeIndex jk{j, k};
  return wedge_position(jk, n) * n + (i - 1);
}

ExactMatrix contraction_matrix(FieldPtr field, int n) {
  if (n < 2) throw BadRange("contraction_matrix: need n >= 2");
  auto pairs = wedge_basis(2, n);
  ExactMatrix m(field, n, n * (int)pairs.size());
  for (auto& jk : pairs) {
    int j = jk[0], k = jk[1];
    // (v_j* ^ v_k*) (x) v_j  |->  v_k*
    m.set(k - 1, contraction_position(j, j, k, n), field->one());
    // (v_j* ^ v_k*) (x) v_k  |->  -v_j*
    m.set(j - 1, contraction_position(k, j, k, n), -field->one());
  }
  return m;
}

QuotientBundleSection::QuotientBundleSection(
    FieldPtr field, int n, std::map<std::array<int, 3>, FieldElement> entries)
    : field_(std::move(field)), n_(n), c_(std::move(entries)) {
  for (auto it = c_.begin(); it != c_.end();) {
    auto [i, j, k] = it->first;
    if (i < 1 || i > n_ || j < 1 || k > n_ || j >= k)
      throw BadRange("QuotientBundleSection: bad index triple");
    if (it->second.is_zero())
      it = c_.erase(it);
    else
      ++it;
  }
  ExactMatrix m = contraction_matrix(field_, n_);
  auto img = m.apply(dense());
  for (auto& x : img)
    if (!x.is_zero()) throw NotInKernel("section has nonzero contraction");
}

FieldElement QuotientBundleSection::coeff(int i, int j, int k) const {
  int s = 1;
  if (j > k) {
    std::swap(j, k);
    s = -1;
  }
  if (j == k) return field_->zero();
  auto it = c_.find({i, j, k});
  if (it == c_.end()) return field_->zero();
  return s > 0 ? it->second : -it->second;
}

std::vector<FieldElement> QuotientBundleSection::dense() const {
  size_t dim = (size_t)n_ * (size_t)wedge_basis(2, n_).size();
  std::vector<FieldElement> v(dim, field_->zero());
  for (auto& [ijk, c] : c_) v[contraction_position(ijk[0], ijk[1], ijk[2], n_)] = c;
  return v;
}

}  // namespace gq
