#include "verlinde/coset.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace verlinde {

namespace {

void require_simply_laced(const RootSystem& rs, const char* who) {
  if (!rs.simply_laced())
    throw InvalidInputError(std::string(who) + ": simply-laced algebras only");
}

// (u, v) of the admissible level a coset-shaped W level came from.
std::pair<long, long> coset_shape(const WLevel& K) {
  long u = K.v, v = K.u - K.v;
  if (v < 1) throw InvalidInputError("coset: W level is not of the form (u+v, u)");
  return {u, v};
}

}  // namespace

CosetDecomposition gko_decompose(const AdmissibleLevel& L, const Weight& mu, const Weight& nu,
                                 const Limits& lim) {
  require_simply_laced(L.rs, "gko_decompose");
  if (!L.rs.is_dominant(mu) || L.rs.level_of(mu) > L.top_level())
    throw InvalidInputError("gko_decompose: mu outside P_+^{u-h^vee}");
  if (!L.rs.is_dominant(nu) || L.rs.level_of(nu) > 1)
    throw InvalidInputError("gko_decompose: nu outside P_+^1");
  WLevel K = WLevel::make(L.rs, L.u + L.v, L.u);
  CosetDecomposition dec{L, mu, nu, K, {}};
  Weight target = mu + nu;
  for (const auto& lambda :
       L.rs.dominant_weights_of_level(L.u + L.v - L.rs.dual_coxeter_number(), lim)) {
    if (!L.rs.in_root_lattice(lambda - target)) continue;
    dec.terms.emplace_back(lambda, WLabel{lambda, mu});
  }
  return dec;
}

Rat affine_conformal_weight(const RootSystem& rs, long u, long v, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw InvalidInputError("affine_conformal_weight: dominant weights only");
  return rs.inner(lambda, lambda + rs.rho() * 2) * frac(v, 2 * u);
}

Rat coset_weight_mod1(const WLevel& K, const Weight& left, const Weight& right) {
  require_simply_laced(K.rs, "coset_weight_mod1");
  auto [u, v] = coset_shape(K);
  auto group = K.rs.discriminant_group();
  const Weight& nu = group.reps[static_cast<std::size_t>(group.class_of(left - right))];
  Rat h_mu = affine_conformal_weight(K.rs, u, v, right);
  Rat h_nu = affine_conformal_weight(K.rs, K.rs.dual_coxeter_number() + 1, 1, nu);
  Rat h_lambda = affine_conformal_weight(K.rs, u + v, v, left);
  return mod1(h_mu + h_nu - h_lambda);
}

Report verify_twist_balance(const WLevel& K, const Limits& lim) {
  require_simply_laced(K.rs, "verify_twist_balance");
  coset_shape(K);  // validates the (u+v, u) shape
  Report rep;
  rep.theorem = "twist-balance";
  rep.algebra = std::string(1, family_char(K.rs.family()));
  rep.rank = K.rs.rank();
  rep.u = K.u;
  rep.v = K.v;
  // Orientation h(x) + h(y) - h(x*y) matches the centralizer phase directly;
  // the Ising coset leaves the sign ambiguous (all its phases are real), the
  // first coset with a cube-root phase pins it. Asserted globally, recorded here.
  rep.extra = Json{{"twist_sign", "+1"},
                   {"twist_exponent", "h(x) + h(y) - h(x boxtimes y) mod 1"}};

  auto set = w_label_set(K, lim);
  // Orbit invariance of the coset weights.
  std::map<std::size_t, std::vector<WLabel>> orbits;
  for (const auto& [raw, idx] : set.raw_index) orbits[idx].push_back(raw);
  for (const auto& [idx, members] : orbits) {
    Rat w0 = coset_weight_mod1(K, members[0].left, members[0].right);
    bool ok = true;
    for (const auto& m : members) ok = ok && coset_weight_mod1(K, m.left, m.right) == w0;
    rep.check("orbit-weight " + set.canonical[idx].str(), ok,
              Json{{"weight_mod1", rat_json(w0)}, {"orbit_size", members.size()}});
  }

  auto lefts = K.rs.dominant_weights_of_level(K.left_level(), lim);
  auto rights = K.dual_rs.dominant_weights_of_level(K.right_level(), lim);
  Weight zl = Weight::zero(K.rs.rank());
  Weight zr = Weight::zero(K.dual_rs.rank());
  long two_n = 2 * K.rs.lattice_level();
  for (const auto& lambda : lefts)
    for (const auto& lambda_d : rights) {
      Rat exponent = coset_weight_mod1(K, lambda, zr) + coset_weight_mod1(K, zl, lambda_d) -
                     coset_weight_mod1(K, lambda, lambda_d);
      Cyclo twist = Cyclo::root_of_unity(exponent);
      Cyclo central = monodromy_ratio(K, lambda, lambda_d, lim);
      bool match = twist == central;
      bool root_ok = rat_is_integer(exponent * Rat(two_n));
      rep.check("twist " + lambda.str() + "," + lambda_d.str(), match && root_ok,
                Json{{"twist", cyclo_json(twist)},
                     {"centralizer", cyclo_json(central)},
                     {"is_2N_root", root_ok}});
    }
  return rep;
}

Report verify_partition(const AdmissibleLevel& L, const Limits& lim) {
  require_simply_laced(L.rs, "verify_partition");
  Report rep;
  rep.theorem = "coset-partition";
  rep.algebra = std::string(1, family_char(L.rs.family()));
  rep.rank = L.rs.rank();
  rep.u = L.u;
  rep.v = L.v;
  auto mus = L.rs.dominant_weights_of_level(L.top_level(), lim);
  auto nus = L.rs.dominant_weights_of_level(1, lim);
  auto lambdas =
      L.rs.dominant_weights_of_level(L.u + L.v - L.rs.dual_coxeter_number(), lim);
  std::map<std::pair<Weight, Weight>, long> hits;  // (lambda, mu) -> count
  long total_terms = 0;
  for (const auto& mu : mus)
    for (const auto& nu : nus) {
      auto dec = gko_decompose(L, mu, nu, lim);
      total_terms += static_cast<long>(dec.terms.size());
      for (const auto& [lambda, wl] : dec.terms) {
        (void)wl;
        hits[{lambda, mu}] += 1;
      }
    }
  bool once = true;
  for (const auto& lambda : lambdas)
    for (const auto& mu : mus) {
      auto it = hits.find({lambda, mu});
      if (it == hits.end() || it->second != 1) once = false;
    }
  long expected = static_cast<long>(lambdas.size()) * static_cast<long>(mus.size());
  rep.check("each-pair-once", once && static_cast<long>(hits.size()) == expected,
            Json{{"pairs", hits.size()}, {"expected", expected}});
  rep.check("term-count", total_terms == expected,
            Json{{"terms", total_terms}, {"expected", expected}});
  return rep;
}

}  // namespace verlinde
