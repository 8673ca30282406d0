#pragma once

#include <utility>
#include <vector>

#include "verlinde/admissible.hpp"
#include "verlinde/report.hpp"
#include "verlinde/walg.hpp"

namespace verlinde {

// One branching L_ell(mu) x L_1(nu) = sum over lambda = mu + nu mod Q of
// L_{ell+1}(lambda) x W(lambda, mu); the W-algebra sits at (u+v, u).
struct CosetDecomposition {
  AdmissibleLevel L;
  Weight mu, nu;
  WLevel K;
  std::vector<std::pair<Weight, WLabel>> terms;
};

CosetDecomposition gko_decompose(const AdmissibleLevel& L, const Weight& mu, const Weight& nu,
                                 const Limits& lim = {});

// Lowest conformal weight (lambda, lambda + 2 rho) * v / (2u) at level -h^vee + u/v.
Rat affine_conformal_weight(const RootSystem& rs, long u, long v, const Weight& lambda);

// W-module conformal weight mod 1 extracted from the coset grading:
// h_ell(mu) + h_1(nu) - h_{ell+1}(lambda) with nu the level-1 representative
// of lambda - mu mod Q. Only defined for coset-shaped levels (K.u > K.v).
Rat coset_weight_mod1(const WLevel& K, const Weight& left, const Weight& right);

// Twist phases from coset weights against centralizer phases, one global sign
// convention recorded in the report; also checks orbit invariance of the
// weights and that every phase is a 2N-th root of unity.
Report verify_twist_balance(const WLevel& K, const Limits& lim = {});

// The map (mu, nu, term) -> (lambda, mu) is a bijection onto
// P_+^{u+v-h^vee} x P_+^{u-h^vee}.
Report verify_partition(const AdmissibleLevel& L, const Limits& lim = {});

}  // namespace verlinde
