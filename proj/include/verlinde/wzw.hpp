#pragma once

#include <map>
#include <vector>

#include "verlinde/cyclo_matrix.hpp"
#include "verlinde/cyclotomic.hpp"
#include "verlinde/fusion_table.hpp"
#include "verlinde/report.hpp"
#include "verlinde/root_system.hpp"

namespace verlinde {

// Weyl alternating sum at e(-r/u):
//   sum over w in W of sign(w) * e^(-2*pi*i*(r/u)*(lambda+rho, w(mu+rho))).
// Symmetric in (lambda, mu); vanishes when lambda+rho sits on a wall.
Cyclo chi(const RootSystem& rs, const Weight& lambda, const Weight& mu, long r, long u,
          const Limits& lim = {});

// chi re-evaluated at a different root of unity e(-r2/u). This realizes the
// Galois-type twist on Weyl-sum values even when it is not a field
// automorphism (gcd(r2, order) > 1).
Cyclo reevaluate_at(const RootSystem& rs, const Weight& lambda, const Weight& mu, long r2, long u,
                    const Limits& lim = {});

// Normalized S-matrix ratio chi(lambda,mu,1,u) / chi(0,mu,1,u) at u = m + h^vee;
// the denominator is a quantum dimension and never vanishes for dominant mu.
Cyclo s_ratio_integer_level(const RootSystem& rs, long m, const Weight& lambda, const Weight& mu,
                            const Limits& lim = {});

// Ratio matrix R[i][j] = s_ratio(simples[i], simples[j]) over P_+^m in
// lexicographic order, entries computed by parallel map.
CycloMat s_ratio_matrix(const RootSystem& rs, long m, const Limits& lim = {});

// Generic ratio matrix at evaluation point e(-r/u) over P_+^{u-h^vee}.
CycloMat ratio_matrix(const RootSystem& rs, long r, long u, const Limits& lim = {});

// Fusion rules at level m via exact linear solves against the ratio matrix:
// the pointwise product of two ratio rows must be the N-weighted sum of rows.
// Throws std::logic_error if any solved coefficient is not a nonnegative
// integer (that would be an arithmetic bug, not a data condition).
FusionTable verlinde_fusion(const RootSystem& rs, long m, const Limits& lim = {});

// Same table through the inverse-matrix triple product; small-instance
// verification partner of verlinde_fusion.
FusionTable verlinde_fusion_via_inverse(const RootSystem& rs, long m, const Limits& lim = {});

// Weights of the irreducible V(lambda) with exact Freudenthal multiplicities.
std::map<Weight, long> weight_multiplicities(const RootSystem& rs, const Weight& lambda);

// Finite-dimensional tensor product decomposition by weight-multiset
// convolution and repeated highest-weight extraction. Independent of every
// S-matrix code path; this is the oracle side.
std::map<Weight, long> tensor_oracle(const RootSystem& rs, const Weight& lambda, const Weight& nu);

// Level-m fusion row by folding the tensor decomposition into the alcove with
// the shifted affine Weyl action.
std::map<Weight, long> kac_walton_fusion(const RootSystem& rs, long m, const Weight& lambda,
                                         const Weight& nu);

FusionTable kac_walton_table(const RootSystem& rs, long m, const Limits& lim = {});

// Permutation of P_+^m induced by fusing with the simple current m*gamma,
// gamma a nonzero level-1 representative of P/Q.
std::vector<std::size_t> simple_current_action(const RootSystem& rs, long m, const Weight& gamma,
                                               const Limits& lim = {});

// Dual-route check at level m: the Verlinde solve against the alcove-folded
// tensor oracle, plus the fusion-ring axioms and the root-lattice congruence.
Report verify_wzw_oracle(const RootSystem& rs, long m, const Limits& lim = {});

}  // namespace verlinde
