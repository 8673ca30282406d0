#include "verlinde/fusion_table.hpp"

namespace verlinde {

bool FusionTable::has_unit_row() const {
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k)
      if (at(0, j, k) != (j == k ? 1 : 0)) return false;
  return true;
}

bool FusionTable::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (at(i, j, k) != at(j, i, k)) return false;
  return true;
}

bool FusionTable::is_associative() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n_; ++m) {
            lhs += at(i, j, m) * at(m, k, l);
            rhs += at(j, k, m) * at(i, m, l);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace verlinde
