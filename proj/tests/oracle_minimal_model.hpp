#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Independent Virasoro minimal-model fusion oracle, coded straight from the
// BPZ truncated Clebsch-Gordan rules. Shares nothing with the library's
// S-matrix or Weyl-sum code paths; used to cross-check W-algebra fusion for
// rank one.
namespace mm {

using Label = std::pair<long, long>;  // Kac label (r, s), 1 <= r < p, 1 <= s < q

class MinimalModel {
 public:
  MinimalModel(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }

  // Canonical representative of (r, s) under (r, s) ~ (p - r, q - s).
  Label canonical(Label a) const;
  // All inequivalent primaries, canonical and lexicographically sorted.
  const std::vector<Label>& labels() const { return labels_; }

  // Fusion multiplicity (0 or 1) of c in a x b.
  long fuse(Label a, Label b, Label c) const;

 private:
  long p_, q_;
  std::vector<Label> labels_;
};

}  // namespace mm
