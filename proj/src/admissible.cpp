#include "verlinde/admissible.hpp"

#include <numeric>
#include <stdexcept>

#include "verlinde/parallel.hpp"

namespace verlinde {

AdmissibleLevel AdmissibleLevel::make(RootSystem rs, long u, long v) {
  if (u <= 0 || v <= 0) throw InvalidInputError("admissible level: u, v must be positive");
  if (std::gcd(u, v) != 1) throw InvalidInputError("admissible level: gcd(u, v) != 1");
  long r = rs.lacety();
  long g = std::gcd(v, r);
  if (g == 1) {
    if (u < rs.dual_coxeter_number())
      throw InvalidInputError("admissible level: u below the dual Coxeter number");
  } else if (g == r) {
    if (u < rs.coxeter_number() || v < r * rs.dual_coxeter_number())
      throw InvalidInputError("admissible level: outside the twisted window");
  } else {
    throw InvalidInputError("admissible level: gcd(v, lacety) must be 1 or the lacety");
  }
  return AdmissibleLevel{std::move(rs), u, v};
}

std::vector<Weight> ordinary_simples(const AdmissibleLevel& L, const Limits& lim) {
  return L.rs.dominant_weights_of_level(L.top_level(), lim);
}

Cyclo hopf_ratio(const AdmissibleLevel& L, const Weight& lambda, const Weight& mu,
                 const Limits& lim) {
  Cyclo den = chi(L.rs, Weight::zero(L.rs.rank()), mu, L.v, L.u, lim);
  if (den.is_zero()) throw std::logic_error("hopf_ratio: vanishing denominator");
  return chi(L.rs, lambda, mu, L.v, L.u, lim) / den;
}

CycloMat hopf_matrix(const AdmissibleLevel& L, const Limits& lim) {
  return ratio_matrix(L.rs, L.v, L.u, lim);
}

FusionTable ordinary_fusion(const AdmissibleLevel& L, const Limits& lim) {
  if (!L.rs.simply_laced())
    throw InvalidInputError("ordinary_fusion: simply-laced algebras only");
  return verlinde_fusion(L.rs, L.top_level(), lim);
}

namespace {

Report base_report(const AdmissibleLevel& L, const std::string& theorem) {
  Report r;
  r.theorem = theorem;
  r.algebra = std::string(1, family_char(L.rs.family()));
  r.rank = L.rs.rank();
  r.u = L.u;
  r.v = L.v;
  return r;
}

}  // namespace

Report verify_verlinde_ordinary(const AdmissibleLevel& L, const Limits& lim) {
  Report rep = base_report(L, "hopf-verlinde");
  auto simples = ordinary_simples(L, lim);
  auto ratios = hopf_matrix(L, lim);
  FusionTable fusion = ordinary_fusion(L, lim);
  std::size_t n = simples.size();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Cyclo lhs = ratios[a][mu] * ratios[b][mu];
        Cyclo rhs;
        for (std::size_t phi = 0; phi < n; ++phi) {
          auto mult = fusion.at(a, b, phi);
          if (mult != 0) rhs += Cyclo(mult) * ratios[phi][mu];
        }
        rep.check("ring-rep " + simples[a].str() + "*" + simples[b].str() + " @mu=" +
                      simples[mu].str(),
                  lhs == rhs, Json{{"lhs", cyclo_json(lhs)}, {"rhs", cyclo_json(rhs)}});
      }
  return rep;
}

Report verify_galois_twist(const AdmissibleLevel& L, const Limits& lim) {
  long n_lat = L.rs.lattice_level();
  if (std::gcd(n_lat, L.v) != 1)
    throw InvalidInputError("verify_galois_twist: requires gcd(N, v) = 1, N = " +
                            std::to_string(n_lat));
  Report rep = base_report(L, "galois");
  rep.extra = Json{{"lattice_level_N", n_lat}, {"lattice_level_alt", L.rs.lattice_level_alt()}};
  auto simples = ordinary_simples(L, lim);
  long m = L.top_level();
  std::size_t n = simples.size();
  auto integer_ratios = s_ratio_matrix(L.rs, m, lim);
  auto admissible_ratios = hopf_matrix(L, lim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cyclo twisted = integer_ratios[i][j].galois(L.v);
      rep.check("galois " + simples[i].str() + "," + simples[j].str(),
                twisted == admissible_ratios[i][j],
                Json{{"twisted", cyclo_json(twisted)},
                     {"admissible", cyclo_json(admissible_ratios[i][j])}});
    }
  return rep;
}

ModularityResult is_modular(const AdmissibleLevel& L, const Limits& lim) {
  if (!L.rs.simply_laced()) throw InvalidInputError("is_modular: simply-laced algebras only");
  ModularityResult r;
  r.lattice_n = L.rs.lattice_level();
  r.gcd_test = std::gcd(r.lattice_n, L.v) == 1;
  auto m = hopf_matrix(L, lim);
  r.dimension = m.size();
  r.rank = cyclo_rank(std::move(m));
  r.rank_test = r.rank == r.dimension;
  if (r.gcd_test && !r.rank_test)
    throw std::logic_error("is_modular: gcd(N, v) = 1 must force an invertible Hopf matrix");
  return r;
}

// "Pass" means the category is modular; a singular Hopf matrix is reported
// (and exits nonzero) so scripted runs can branch on it.
Report verify_modularity(const AdmissibleLevel& L, const Limits& lim) {
  Report rep = base_report(L, "modularity");
  auto r = is_modular(L, lim);
  rep.extra = Json{{"lattice_level_N", r.lattice_n},
                   {"lattice_level_alt", L.rs.lattice_level_alt()},
                   {"verdict", r.rank_test ? "modular" : "singular"}};
  rep.check("gcd(N,v)=1", r.gcd_test, Json{{"N", r.lattice_n}, {"v", L.v}});
  rep.check("hopf-matrix-full-rank", r.rank_test,
            Json{{"rank", r.rank},
                 {"dimension", r.dimension},
                 {"verdict", r.rank_test ? "full-rank" : "singular"}});
  return rep;
}

}  // namespace verlinde
