#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace verlinde {

// Fusion multiplicities N_{ij}^k on a fixed ordered list of simples; the label
// list itself lives with whichever module produced the table.
class FusionTable {
 public:
  explicit FusionTable(std::size_t n) : n_(n), c_(n * n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const { return c_[idx(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, std::int64_t v) { c_[idx(i, j, k)] = v; }
  void add(std::size_t i, std::size_t j, std::size_t k, std::int64_t v) { c_[idx(i, j, k)] += v; }

  // N_{0,j}^k = delta_{jk} with the unit at index 0.
  bool has_unit_row() const;
  bool is_symmetric() const;
  // sum_m N_ij^m N_mk^l == sum_m N_jk^m N_im^l for all i, j, k, l.
  bool is_associative() const;

  friend bool operator==(const FusionTable& a, const FusionTable& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FusionTable& a, const FusionTable& b) { return !(a == b); }

 private:
  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * n_ + j) * n_ + k;
  }
  std::size_t n_;
  std::vector<std::int64_t> c_;
};

}  // namespace verlinde
