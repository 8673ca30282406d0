#pragma once

#include <map>
#include <vector>

#include "verlinde/cyclotomic.hpp"
#include "verlinde/fusion_table.hpp"
#include "verlinde/report.hpp"
#include "verlinde/root_system.hpp"

namespace verlinde {

// Rational principal W-algebra level k = -h^vee + u/v inside the rationality
// window: u >= h^vee and v >= h when gcd(v, lacety) = 1; u >= h and
// v >= lacety * h^vee when gcd(v, lacety) = lacety.
struct WLevel {
  RootSystem rs;
  RootSystem dual_rs;
  long u = 0;
  long v = 0;

  static WLevel make(RootSystem rs, long u, long v);
  Rat level() const { return frac(1, 1) * u / v - rs.dual_coxeter_number(); }
  long left_level() const { return u - rs.dual_coxeter_number(); }
  // Level on the Langlands-dual side: q - h^vee(dual) with q = v when
  // gcd(v, lacety) = 1 and q = v / lacety otherwise.
  long langlands_q() const;
  long right_level() const;
};

// Simple-module label (left, right) with the right component realized as a
// weight of the dual root system. Stored values are arbitrary representatives;
// canonical representatives come from w_label_set.
struct WLabel {
  Weight left;
  Weight right;
  auto operator<=>(const WLabel&) const = default;
  std::string str() const;
};

struct WLabelSet {
  std::vector<WLabel> canonical;  // lexicographically smallest orbit reps, sorted
  std::vector<long> orbit_sizes;
  bool canonicalized = false;  // false when the identification group is skipped
  std::map<WLabel, std::size_t> raw_index;  // raw pair -> canonical slot
};

// Full label set modulo the simultaneous simple-current identification
// (simply-laced); non-simply-laced labels stay raw with canonicalized=false.
WLabelSet w_label_set(const WLevel& K, const Limits& lim = {});
std::vector<WLabel> w_labels(const WLevel& K, const Limits& lim = {});

// Which Weyl vector enters the mixed exponent (lambda, mu' + rho'): the dual
// system's own (default), or the base system's via the weight-coweight
// pairing. The two coincide for simply-laced algebras; reports flag runs where
// they differ instead of choosing silently.
enum class DualRho { DualWeylVector, BaseWeylVector };

// Normalized S-ratio
//   e^(2 pi i ((lambda', mu+rho) + (lambda, mu'+rho'))) *
//   chi(mu, lambda at -v/u) / chi(mu, 0) * chi'(mu', lambda' at -u/v) / chi'(mu', 0);
// the global (uv)^{rank/2} |J|^{1/2} prefactor cancels in every ratio and is
// never computed.
Cyclo w_s_ratio(const WLevel& K, const WLabel& x, const WLabel& y, const Limits& lim = {},
                DualRho conv = DualRho::DualWeylVector);

// Fusion from the two factor rings, outputs canonicalized.
FusionTable w_fusion(const WLevel& K, const Limits& lim = {});

// Monodromy scalar between (lambda, 0) and (0, lambda') from S-ratio data,
// with no expectation attached; verifiers compare it themselves.
Cyclo monodromy_ratio(const WLevel& K, const Weight& lambda, const Weight& lambda_dual,
                      const Limits& lim = {});

// Monodromy scalar, asserted to equal e^(2 pi i (lambda, lambda')) exactly.
Cyclo centralizer_phase(const WLevel& K, const Weight& lambda, const Weight& lambda_dual,
                        const Limits& lim = {});

// S^chi ratio of (lambda, lambda') factorizes through the (lambda, 0) and
// (0, lambda') ratios against every column.
Report verify_factorization(const WLevel& K, const Limits& lim = {});

Report verify_centralizer(const WLevel& K, const Limits& lim = {});

}  // namespace verlinde
