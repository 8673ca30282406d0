#include "oracle_minimal_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mm {

MinimalModel::MinimalModel(long p, long q) : p_(p), q_(q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("MinimalModel: need coprime p, q >= 2");
  for (long r = 1; r < p; ++r)
    for (long s = 1; s < q; ++s) {
      Label l{r, s};
      if (canonical(l) == l) labels_.push_back(l);
    }
  std::sort(labels_.begin(), labels_.end());
}

Label MinimalModel::canonical(Label a) const {
  Label mirror{p_ - a.first, q_ - a.second};
  return std::min(a, mirror);
}

long MinimalModel::fuse(Label a, Label b, Label c) const {
  auto in_window = [](long x1, long x2, long x3, long top) {
    // x3 in {|x1-x2|+1, |x1-x2|+3, ..., min(x1+x2-1, 2*top-1-x1-x2)}
    long lo = std::max(x1 - x2, x2 - x1) + 1;
    long hi = std::min(x1 + x2 - 1, 2 * top - 1 - x1 - x2);
    return x3 >= lo && x3 <= hi && (x3 - lo) % 2 == 0;
  };
  Label cc = canonical(c);
  // No Kac label is its own mirror when gcd(p, q) = 1, so the class of c has
  // exactly two representatives; it appears in a x b iff either one fits.
  for (Label cand : {cc, Label{p_ - cc.first, q_ - cc.second}}) {
    if (in_window(a.first, b.first, cand.first, p_) &&
        in_window(a.second, b.second, cand.second, q_))
      return 1;
  }
  return 0;
}

}  // namespace mm
