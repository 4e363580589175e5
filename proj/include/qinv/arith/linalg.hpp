// qinv — exact invariants and reduction types of plane quartics.
//
// arith/linalg.hpp: dense exact linear algebra over a field K.
// Row-echelon reduction, canonical kernel bases, determinants, and linear
// solves. Everything is deterministic: given the same matrix, the same
// reduced form and the same kernel basis come out, which the stratum
// reconstruction relies on when comparing kernels across different primes.

#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "qinv/arith/fpext.hpp"

namespace qinv {

template <class K>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, K()) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  const K& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  K& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }

  void append_row(const std::vector<K>& row) {
    assert(static_cast<int>(row.size()) == c_ || r_ == 0);
    if (r_ == 0 && c_ == 0) c_ = static_cast<int>(row.size());
    a_.insert(a_.end(), row.begin(), row.end());
    ++r_;
  }

 private:
  int r_, c_;
  std::vector<K> a_;
};

// In-place reduced row echelon form. Returns the rank; if pivot_cols is
// non-null it receives the pivot column indices in order.
template <class K>
int rref(Mat<K>& m, std::vector<int>* pivot_cols = nullptr) {
  int rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (!field_ops<K>::is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
    K ip = field_ops<K>::inv(m.at(rank, col));
    for (int j = col; j < m.cols(); ++j) m.at(rank, j) = ip * m.at(rank, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      const K f = m.at(i, col);
      if (field_ops<K>::is_zero(f)) continue;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

// Canonical kernel basis of m (as row vectors of length cols). One basis
// vector per free column, with entry 1 in the free column and the pivot
// columns filled from the reduced form. The basis depends only on the row
// space of m, so two matrices with equal row spaces give identical output.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m, const K& one) {
  std::vector<int> piv;
  int rank = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<K>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<K> v(m.cols(), K());
    v[f] = one;
    for (int r = 0; r < rank; ++r) v[piv[r]] = -m.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
int rank_of(Mat<K> m) {
  return rref(m);
}

template <class K>
K det(Mat<K> m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  if (n == 0) throw domain_error("det: empty matrix");
  std::optional<K> result;  // product of pivots, built lazily
  bool neg = false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!field_ops<K>::is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) return K();  // singular
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      neg = !neg;
    }
    result = result ? (*result * m.at(col, col)) : m.at(col, col);
    K ip = field_ops<K>::inv(m.at(col, col));
    for (int i = col + 1; i < n; ++i) {
      const K f = m.at(i, col) * ip;
      if (field_ops<K>::is_zero(f)) continue;
      for (int j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return neg ? -*result : *result;
}

// Solve A x = b. Returns one solution if consistent, nullopt otherwise.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& A, const std::vector<K>& b) {
  assert(static_cast<int>(b.size()) == A.rows());
  Mat<K> aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  std::vector<int> piv;
  int rank = rref(aug, &piv);
  for (int r = 0; r < rank; ++r)
    if (piv[r] == A.cols()) return std::nullopt;  // pivot in constants column
  std::vector<K> x(A.cols(), K());
  for (int r = 0; r < rank; ++r) x[piv[r]] = aug.at(r, A.cols());
  return x;
}

}  // namespace qinv
