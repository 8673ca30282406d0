#pragma once

#include <cstddef>
#include <vector>

#include "verlinde/cyclotomic.hpp"

namespace verlinde {

using CycloMat = std::vector<std::vector<Cyclo>>;

// Exact LU factorization with row pivoting over the cyclotomic field.
// Factor once, solve many right-hand sides: this is how fusion coefficients
// are extracted without ever forming an inverse.
class CycloLU {
 public:
  explicit CycloLU(CycloMat a);  // throws std::domain_error if singular
  std::size_t size() const { return n_; }
  std::vector<Cyclo> solve(std::vector<Cyclo> b) const;

 private:
  std::size_t n_;
  CycloMat lu_;             // L below the diagonal (unit diag implicit), U on/above
  std::vector<std::size_t> perm_;
};

// Exact rank by Gaussian elimination; no numerical estimation anywhere.
std::size_t cyclo_rank(CycloMat a);

// Full inverse; used by the verification mode that cross-checks the linear
// solve against the S * diag * S^{-1} triple product on small instances.
CycloMat cyclo_inverse(CycloMat a);

}  // namespace verlinde
