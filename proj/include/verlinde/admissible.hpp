#pragma once

#include <vector>

#include "verlinde/cyclo_matrix.hpp"
#include "verlinde/fusion_table.hpp"
#include "verlinde/report.hpp"
#include "verlinde/root_system.hpp"
#include "verlinde/wzw.hpp"

namespace verlinde {

// Level -h^vee + u/v with gcd(u, v) = 1 inside the admissibility window:
// u >= h^vee when gcd(v, lacety) = 1, and u >= h, v >= lacety * h^vee when
// gcd(v, lacety) = lacety.
struct AdmissibleLevel {
  RootSystem rs;
  long u = 0;
  long v = 0;

  static AdmissibleLevel make(RootSystem rs, long u, long v);
  Rat level() const { return frac(1, 1) * u / v - rs.dual_coxeter_number(); }
  long top_level() const { return u - rs.dual_coxeter_number(); }  // u - h^vee
};

std::vector<Weight> ordinary_simples(const AdmissibleLevel& L, const Limits& lim = {});

// Normalized character S-ratio chi(lambda,mu,v,u)/chi(0,mu,v,u); equals the
// normalized open Hopf link on ordinary simples.
Cyclo hopf_ratio(const AdmissibleLevel& L, const Weight& lambda, const Weight& mu,
                 const Limits& lim = {});

CycloMat hopf_matrix(const AdmissibleLevel& L, const Limits& lim = {});

// Ordinary-category fusion: the level-(u - h^vee) fusion ring with labels
// reinterpreted; simply-laced only.
FusionTable ordinary_fusion(const AdmissibleLevel& L, const Limits& lim = {});

// Ring-representation identities: for every column mu and pair (lambda, nu),
// R(lambda,mu) R(nu,mu) = sum_phi N_{lambda nu}^phi R(phi,mu), exactly.
Report verify_verlinde_ordinary(const AdmissibleLevel& L, const Limits& lim = {});

// Galois twist: sigma_v applied to the integer-level ratios reproduces the
// admissible ratios entrywise; requires gcd(N, v) = 1.
Report verify_galois_twist(const AdmissibleLevel& L, const Limits& lim = {});

struct ModularityResult {
  bool gcd_test = false;   // gcd(N, v) = 1
  bool rank_test = false;  // Hopf ratio matrix invertible (exact elimination)
  std::size_t rank = 0;
  std::size_t dimension = 0;
  long lattice_n = 0;
};

ModularityResult is_modular(const AdmissibleLevel& L, const Limits& lim = {});

Report verify_modularity(const AdmissibleLevel& L, const Limits& lim = {});

}  // namespace verlinde
