#include "verlinde/cyclo_matrix.hpp"

#include <stdexcept>

namespace verlinde {

CycloLU::CycloLU(CycloMat a) : n_(a.size()), lu_(std::move(a)), perm_(n_) {
  for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && lu_[pivot][col].is_zero()) ++pivot;
    if (pivot == n_) throw std::domain_error("CycloLU: singular matrix");
    if (pivot != col) {
      std::swap(lu_[pivot], lu_[col]);
      std::swap(perm_[pivot], perm_[col]);
    }
    Cyclo inv_pivot = lu_[col][col].inverse();
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (lu_[r][col].is_zero()) continue;
      Cyclo f = lu_[r][col] * inv_pivot;
      for (std::size_t j = col + 1; j < n_; ++j) lu_[r][j] -= f * lu_[col][j];
      lu_[r][col] = f;
    }
  }
}

std::vector<Cyclo> CycloLU::solve(std::vector<Cyclo> b) const {
  if (b.size() != n_) throw std::invalid_argument("CycloLU::solve: size mismatch");
  std::vector<Cyclo> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Cyclo acc = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_[i][j] * y[j];
    y[i] = acc;
  }
  std::vector<Cyclo> x(n_);
  for (std::size_t ii = n_; ii-- > 0;) {
    Cyclo acc = y[ii];
    for (std::size_t j = ii + 1; j < n_; ++j) acc -= lu_[ii][j] * x[j];
    x[ii] = acc / lu_[ii][ii];
  }
  return x;
}

std::size_t cyclo_rank(CycloMat a) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    Cyclo inv_pivot = a[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      Cyclo f = a[r][col] * inv_pivot;
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

CycloMat cyclo_inverse(CycloMat a) {
  std::size_t n = a.size();
  CycloMat inv(n, std::vector<Cyclo>(n, Cyclo::zero()));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Cyclo::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("cyclo_inverse: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Cyclo inv_pivot = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= inv_pivot;
      inv[col][j] *= inv_pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Cyclo f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace verlinde
