#include "gq/matrix.hpp"

#include <cassert>

namespace gq {

ExactMatrix::ExactMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  e_.assign((size_t)rows * cols, field_->zero());
}

ExactMatrix ExactMatrix::identity(FieldPtr field, int n) {
  ExactMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, field->one());
  return m;
}

void ExactMatrix::set(int r, int c, FieldElement v) {
  e_[(size_t)r * cols_ + c] = std::move(v);
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  assert(cols_ == o.rows_);
  ExactMatrix m(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        m.set(i, j, m.at(i, j) + at(i, k) * o.at(k, j));
      }
    }
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix m(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  ExactMatrix m(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

ExactMatrix ExactMatrix::scaled(const FieldElement& s) const {
  ExactMatrix m(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& o) const {
  assert(cols_ == o.cols_);
  ExactMatrix m(field_, rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(rows_ + i, j, o.at(i, j));
  return m;
}

ExactMatrix ExactMatrix::rref(std::vector<int>* pivots) const {
  ExactMatrix m = *this;
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pr = -1;
    for (int i = r; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols_; ++j) {
        FieldElement t = m.at(r, j);
        m.set(r, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    FieldElement inv = m.at(r, c).inverse();
    for (int j = c; j < cols_; ++j) m.set(r, j, m.at(r, j) * inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      FieldElement f = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.set(i, j, m.at(i, j) - f * m.at(r, j));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

int ExactMatrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return (int)piv.size();
}

std::vector<std::vector<FieldElement>> ExactMatrix::kernel_basis() const {
  std::vector<int> piv;
  ExactMatrix m = rref(&piv);
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_piv[c]) continue;
    std::vector<FieldElement> v(cols_, field_->zero());
    v[c] = field_->one();
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at((int)r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldElement ExactMatrix::det() const {
  assert(rows_ == cols_);
  ExactMatrix m = *this;
  FieldElement d = field_->one();
  for (int c = 0; c < cols_; ++c) {
    int pr = -1;
    for (int i = c; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) return field_->zero();
    if (pr != c) {
      d = -d;
      for (int j = 0; j < cols_; ++j) {
        FieldElement t = m.at(c, j);
        m.set(c, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    }
    d = d * m.at(c, c);
    FieldElement inv = m.at(c, c).inverse();
    for (int i = c + 1; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      FieldElement f = m.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) m.set(i, j, m.at(i, j) - f * m.at(c, j));
    }
  }
  return d;
}

std::optional<std::vector<FieldElement>> ExactMatrix::solve(
    const std::vector<FieldElement>& b) const {
  assert((int)b.size() == rows_);
  ExactMatrix aug(field_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, b[i]);
  }
  std::vector<int> piv;
  ExactMatrix r = aug.rref(&piv);
  for (int c : piv)
    if (c == cols_) return std::nullopt;  // inconsistent
  std::vector<FieldElement> x(cols_, field_->zero());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at((int)i, cols_);
  return x;
}

ExactMatrix ExactMatrix::inverse() const {
  assert(rows_ == cols_);
  ExactMatrix aug(field_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_ + i, field_->one());
  }
  std::vector<int> piv;
  ExactMatrix r = aug.rref(&piv);
  if ((int)piv.size() != rows_) throw FieldError("matrix not invertible");
  ExactMatrix inv(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.set(i, j, r.at(i, cols_ + j));
  return inv;
}

std::vector<FieldElement> ExactMatrix::apply(const std::vector<FieldElement>& v) const {
  assert((int)v.size() == cols_);
  std::vector<FieldElement> out(rows_, field_->zero());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + at(i, j) * v[j];
  return out;
}

bool same_row_span(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) return false;
  int ra = a.rank(), rb = b.rank();
  if (ra != rb) return false;
  return a.vstack(b).rank() == ra;
}

}  // namespace gq
