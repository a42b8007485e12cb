#include "gq/skew.hpp"

#include <cassert>
#include <functional>

namespace gq {

SkewMatrix::SkewMatrix(RingPtr ring, int size) : ring_(std::move(ring)), m_(size) {
  up_.assign((size_t)size * (size - 1) / 2, SparsePoly::zero(ring_));
}

static size_t tri_index(int i, int j, int m) {
  // packed index of (i, j), i < j, row-major over the strict upper triangle
  return (size_t)i * m - (size_t)i * (i + 1) / 2 + (j - i - 1);
}

const SparsePoly& SkewMatrix::upper(int i, int j) const {
  assert(i < j);
  return up_[tri_index(i, j, m_)];
}

SparsePoly SkewMatrix::entry(int i, int j) const {
  if (i == j) return SparsePoly::zero(ring_);
  if (i < j) return upper(i, j);
  return -upper(j, i);
}

void SkewMatrix::set(int i, int j, SparsePoly p) {
  assert(i < j);
  up_[tri_index(i, j, m_)] = std::move(p);
}

SkewMatrix SkewMatrix::generic(FieldPtr field, int size, const std::string& prefix) {
  std::vector<std::string> vars;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      vars.push_back(prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  RingPtr ring = PolyRing::make(std::move(field), std::move(vars));
  SkewMatrix sk(ring, size);
  int v = 0;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) sk.set(i, j, SparsePoly::variable(ring, v++));
  return sk;
}

SparsePoly SkewMatrix::pfaffian(const std::vector<int>& subset) const {
  if (subset.size() % 2) throw OddSubset("pfaffian: odd subset");
  if (subset.empty()) return SparsePoly::constant(ring_, ring_->field->one());
  // expand along the first row of the subset
  SparsePoly acc = SparsePoly::zero(ring_);
  int a = subset[0];
  for (size_t t = 1; t < subset.size(); ++t) {
    int b = subset[t];
    std::vector<int> rest;
    rest.reserve(subset.size() - 2);
    for (size_t u = 1; u < subset.size(); ++u)
      if (u != t) rest.push_back(subset[u]);
    SparsePoly term = entry(a, b) * pfaffian(rest);
    acc = (t % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

SparsePoly SkewMatrix::pfaffian() const {
  std::vector<int> all(m_);
  for (int i = 0; i < m_; ++i) all[i] = i;
  return pfaffian(all);
}

SparsePoly SkewMatrix::det(const std::vector<int>& subset) const {
  // cofactor expansion; fine at size <= 7
  size_t n = subset.size();
  if (n == 0) return SparsePoly::constant(ring_, ring_->field->one());
  SparsePoly acc = SparsePoly::zero(ring_);
  for (size_t t = 0; t < n; ++t) {
    SparsePoly e = entry(subset[0], subset[t]);
    if (e.is_zero()) continue;
    std::vector<int> rr(subset.begin() + 1, subset.end());
    std::vector<int> cc;
    for (size_t u = 0; u < n; ++u)
      if (u != t) cc.push_back(subset[u]);
    // minor over rows rr, cols cc
    std::function<SparsePoly(std::vector<int>, std::vector<int>)> minor =
        [&](std::vector<int> rows, std::vector<int> cols) -> SparsePoly {
      if (rows.empty()) return SparsePoly::constant(ring_, ring_->field->one());
      SparsePoly s = SparsePoly::zero(ring_);
      for (size_t c = 0; c < cols.size(); ++c) {
        SparsePoly e2 = entry(rows[0], cols[c]);
        if (e2.is_zero()) continue;
        std::vector<int> r2(rows.begin() + 1, rows.end());
        std::vector<int> c2;
        for (size_t u = 0; u < cols.size(); ++u)
          if (u != c) c2.push_back(cols[u]);
        SparsePoly sub = e2 * minor(std::move(r2), std::move(c2));
        s = (c % 2 == 0) ? s + sub : s - sub;
      }
      return s;
    };
    SparsePoly sub = e * minor(std::move(rr), std::move(cc));
    acc = (t % 2 == 0) ? acc + sub : acc - sub;
  }
  return acc;
}

std::vector<SparsePoly> SkewMatrix::sub_pfaffians(int size) const {
  if (size % 2) throw OddSubset("sub_pfaffians: odd size");
  assert(size <= m_);
  std::vector<SparsePoly> out;
  std::vector<int> sel(size);
  for (int i = 0; i < size; ++i) sel[i] = i;
  while (true) {
    out.push_back(pfaffian(sel));
    int i = size - 1;
    while (i >= 0 && sel[i] == m_ - size + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < size; ++j) sel[j] = sel[j - 1] + 1;
  }
  return out;
}

}  // namespace gq
