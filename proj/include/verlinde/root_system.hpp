#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
char family_char(Family f);

// Integer coordinates in the fundamental-weight basis. Dominance is a
// predicate, not a constructor requirement: arbitrary integer labels are fine.
struct Weight {
  std::vector<long> labels;

  Weight() = default;
  explicit Weight(std::vector<long> l) : labels(std::move(l)) {}
  static Weight zero(int rank) { return Weight(std::vector<long>(static_cast<std::size_t>(rank), 0)); }

  std::size_t rank() const { return labels.size(); }
  long operator[](std::size_t i) const { return labels[i]; }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(long k) const;

  auto operator<=>(const Weight&) const = default;  // lexicographic

  std::string str() const;  // "[a1,...,ar]"
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// Weyl group element as an integer matrix acting on Dynkin-label coordinates.
struct WeylElement {
  std::vector<long> mat;  // row-major rank x rank
  int rank = 0;
  int sign = 1;
  int length = 0;

  Weight apply(const Weight& w) const;
  long det() const;
};

struct DiscriminantGroup;

// Immutable root-system data for one simple Lie algebra, long roots normalized
// to squared length 2. Copies share state; the Weyl group is enumerated once
// per instance behind a thread-safe lazy cache.
class RootSystem {
 public:
  static RootSystem build(Family family, int rank);
  static RootSystem build(const std::string& name);  // "A1", "D4", ...

  Family family() const;
  int rank() const;
  std::string name() const;

  const std::vector<std::vector<long>>& cartan() const;
  const std::vector<std::vector<Rat>>& gram() const;  // (omega_i, omega_j)
  // Half squared lengths (alpha_i, alpha_i)/2; 1 for long simple roots.
  const std::vector<Rat>& root_norms_half() const;

  const Weight& rho() const;
  const Weight& theta() const;  // highest root
  long coxeter_number() const;
  long dual_coxeter_number() const;
  long lacety() const;
  // Smallest N with N*(x, y) integral for all weights x, y: the lcm of the
  // Gram-matrix denominators.
  long lattice_level() const;
  // Smallest N with N^2 * (x, y) integral instead; recorded in reports next to
  // lattice_level() because the two readings differ (e.g. A3: 2 vs 4).
  long lattice_level_alt() const;

  bool simply_laced() const;
  RootSystem dual() const;  // Langlands dual: B <-> C, others self-dual

  Rat inner(const Weight& x, const Weight& y) const;
  // Pairing (x, y^vee) of a weight of this system against a weight of the dual
  // system interpreted as a coweight. Coincides with inner() when simply laced.
  Rat inner_dual(const Weight& x, const Weight& y_dual) const;

  long level_of(const Weight& w) const;  // (w, theta^vee)
  bool is_dominant(const Weight& w) const;
  Weight simple_reflection(int i, const Weight& w) const;

  std::vector<Weight> dominant_weights_of_level(long m, const Limits& lim = {}) const;
  bool in_root_lattice(const Weight& w) const;

  // Positive roots in fundamental-weight coordinates, by increasing height.
  const std::vector<Weight>& positive_roots() const;

  // Complete enumeration, identity first, closed under simple reflections.
  // Deterministic BFS order; throws CapExceededError past lim.weyl_max.
  const std::vector<WeylElement>& weyl_group(const Limits& lim = {}) const;

  DiscriminantGroup discriminant_group() const;  // simply-laced only

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family() == b.family() && a.rank() == b.rank();
  }

 private:
  struct Data;
  std::shared_ptr<Data> d_;
  explicit RootSystem(std::shared_ptr<Data> d) : d_(std::move(d)) {}
  // Construction without the public rank-range validation; dual() needs C2.
  static RootSystem build_impl(Family family, int rank);
};

// P/Q as a finite abelian group with coset representatives among the level-1
// dominant weights; reps[0] is the zero class.
struct DiscriminantGroup {
  RootSystem rs;
  std::vector<Weight> reps;
  std::vector<std::vector<int>> add;  // add[i][j] = index of reps[i] + reps[j] mod Q

  int order() const { return static_cast<int>(reps.size()); }
  int class_of(const Weight& w) const;  // works for arbitrary integer weights
  int inverse_of(int i) const;
};

}  // namespace verlinde
