#include "verlinde/wzw.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "verlinde/parallel.hpp"

namespace verlinde {

namespace {

std::vector<long> root_coords(const RootSystem& rs, const Weight& w) {
  // labels = cartan * coords, so coords = cartan^{-1} * labels; integral iff
  // w lies in the root lattice.
  int n = rs.rank();
  std::vector<long> rc(static_cast<std::size_t>(n));
  const auto& a = rs.cartan();
  // Solve by rational elimination is overkill here; reuse inner data via
  // Cramer-free forward substitution is not available, so do small Gauss.
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n),
                                  std::vector<Rat>(static_cast<std::size_t>(n) + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rat(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = Rat(w[static_cast<std::size_t>(i)]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
    Rat lead = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int j = col; j <= n; ++j) m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j <= n; ++j)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
    }
  }
  for (int i = 0; i < n; ++i) {
    const Rat& c = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
    if (!rat_is_integer(c)) throw std::logic_error("root_coords: weight not in the root lattice");
    rc[static_cast<std::size_t>(i)] = static_cast<long>(c.get_num().get_si());
  }
  return rc;
}

long height_below(const RootSystem& rs, const Weight& top, const Weight& w) {
  auto rc = root_coords(rs, top - w);
  return std::accumulate(rc.begin(), rc.end(), 0L);
}

// Memoized irreducible weight multisets; tensor decompositions hit the same
// highest weights over and over.
struct CharKey {
  char family;
  int rank;
  std::vector<long> labels;
  auto operator<=>(const CharKey&) const = default;
};

std::mutex g_char_mutex;
std::map<CharKey, std::shared_ptr<const std::map<Weight, long>>> g_char_cache;

std::map<Weight, long> compute_weight_multiplicities(const RootSystem& rs, const Weight& lambda);

std::shared_ptr<const std::map<Weight, long>> cached_character(const RootSystem& rs,
                                                               const Weight& lambda) {
  CharKey key{family_char(rs.family()), rs.rank(), lambda.labels};
  {
    std::lock_guard<std::mutex> lock(g_char_mutex);
    auto it = g_char_cache.find(key);
    if (it != g_char_cache.end()) return it->second;
  }
  auto value = std::make_shared<const std::map<Weight, long>>(
      compute_weight_multiplicities(rs, lambda));
  std::lock_guard<std::mutex> lock(g_char_mutex);
  return g_char_cache.emplace(key, std::move(value)).first->second;
}

std::map<Weight, long> compute_weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw InvalidInputError("weight_multiplicities: weight must be dominant");
  // Weight diagram closure: if <mu, alpha_i^vee> = k > 0 then the string
  // mu - alpha_i, ..., mu - k*alpha_i stays inside the diagram.
  std::map<Weight, long> height;  // diagram weights -> height below lambda
  std::vector<Weight> queue{lambda};
  height[lambda] = 0;
  const auto& cartan = rs.cartan();
  int n = rs.rank();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Weight mu = queue[head];
    for (int i = 0; i < n; ++i) {
      long k = mu[static_cast<std::size_t>(i)];
      Weight step = mu;
      for (long j = 1; j <= k; ++j) {
        for (int r = 0; r < n; ++r)
          step.labels[static_cast<std::size_t>(r)] -=
              cartan[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
        if (!height.count(step)) {
          height[step] = static_cast<long>(height[mu]) + j;
          queue.push_back(step);
        }
      }
    }
  }
  // Freudenthal recursion in increasing height order (heights were recorded
  // during the closure).
  std::vector<std::pair<long, Weight>> order;
  order.reserve(height.size());
  for (const auto& [w, h] : height) order.emplace_back(h, w);
  std::sort(order.begin(), order.end());
  const Weight& rho = rs.rho();
  Rat top_norm = rs.inner(lambda + rho, lambda + rho);
  std::map<Weight, long> mult;
  for (const auto& [ht, mu] : order) {
    (void)ht;
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rat denom = top_norm - rs.inner(mu + rho, mu + rho);
    if (denom == 0) throw std::logic_error("Freudenthal: zero denominator inside diagram");
    Rat num(0);
    for (const Weight& alpha : rs.positive_roots()) {
      Weight up = mu;
      while (true) {
        up = up + alpha;
        auto it = mult.find(up);
        if (it == mult.end()) {
          if (!height.count(up)) break;
          throw std::logic_error("Freudenthal: processing order violated");
        }
        num += Rat(2) * Rat(it->second) * rs.inner(up, alpha);
      }
    }
    Rat value = num / denom;
    if (!rat_is_integer(value) || value < 0)
      throw std::logic_error("Freudenthal: non-integer multiplicity");
    mult[mu] = static_cast<long>(value.get_num().get_si());
  }
  return mult;
}

}  // namespace

Cyclo chi(const RootSystem& rs, const Weight& lambda, const Weight& mu, long r, long u,
          const Limits& lim) {
  if (u <= 0) throw InvalidInputError("chi: u must be positive");
  const auto& weyl = rs.weyl_group(lim);
  Weight x = lambda + rs.rho();
  Weight y = mu + rs.rho();
  Rat scale = frac(-r, u);
  std::vector<std::pair<Rat, long>> terms;
  terms.reserve(weyl.size());
  for (const auto& w : weyl) terms.emplace_back(scale * rs.inner(x, w.apply(y)), w.sign);
  return Cyclo::root_of_unity_sum(terms);
}

Cyclo reevaluate_at(const RootSystem& rs, const Weight& lambda, const Weight& mu, long r2, long u,
                    const Limits& lim) {
  return chi(rs, lambda, mu, r2, u, lim);
}

Cyclo s_ratio_integer_level(const RootSystem& rs, long m, const Weight& lambda, const Weight& mu,
                            const Limits& lim) {
  long u = m + rs.dual_coxeter_number();
  Cyclo den = chi(rs, Weight::zero(rs.rank()), mu, 1, u, lim);
  if (den.is_zero()) throw std::logic_error("s_ratio: vanishing quantum dimension");
  return chi(rs, lambda, mu, 1, u, lim) / den;
}

CycloMat ratio_matrix(const RootSystem& rs, long r, long u, const Limits& lim) {
  auto simples = rs.dominant_weights_of_level(u - rs.dual_coxeter_number(), lim);
  std::size_t n = simples.size();
  rs.weyl_group(lim);  // materialize once before the parallel section
  CycloMat raw(n, std::vector<Cyclo>(n));
  parallel_for(n * n, [&](std::size_t idx) {
    std::size_t i = idx / n, j = idx % n;
    raw[i][j] = chi(rs, simples[i], simples[j], r, u, lim);
  });
  for (std::size_t j = 0; j < n; ++j)
    if (raw[0][j].is_zero()) throw std::logic_error("ratio_matrix: vanishing quantum dimension");
  CycloMat out(n, std::vector<Cyclo>(n));
  parallel_for(n * n, [&](std::size_t idx) {
    std::size_t i = idx / n, j = idx % n;
    out[i][j] = raw[i][j] / raw[0][j];
  });
  return out;
}

CycloMat s_ratio_matrix(const RootSystem& rs, long m, const Limits& lim) {
  return ratio_matrix(rs, 1, m + rs.dual_coxeter_number(), lim);
}

namespace {

FusionTable fusion_from_ratio_rows(const RootSystem& rs, long m, const CycloMat& ratios,
                                   bool via_inverse) {
  std::size_t n = ratios.size();
  FusionTable table(n);
  // Equations are indexed by the column mu: sum_phi N_phi R[phi][mu] =
  // R[lambda][mu] * R[nu][mu].
  CycloMat system(n, std::vector<Cyclo>(n));
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t phi = 0; phi < n; ++phi) system[mu][phi] = ratios[phi][mu];

  auto record = [&](std::size_t i, std::size_t j, std::size_t k, const Cyclo& value) {
    if (!value.is_nonnegative_integer())
      throw std::logic_error("verlinde_fusion: coefficient not a nonnegative integer at " +
                             rs.name() + " level " + std::to_string(m));
    long long v = value.rational_value().get_num().get_si();
    table.set(i, j, k, v);
    table.set(j, i, k, v);
  };

  if (via_inverse) {
    CycloMat inv = cyclo_inverse(system);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Cyclo acc;
          for (std::size_t mu = 0; mu < n; ++mu)
            acc += ratios[i][mu] * ratios[j][mu] * inv[k][mu];
          record(i, j, k, acc);
        }
    return table;
  }

  CycloLU lu(system);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<Cyclo>> solutions(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [i, j] = pairs[p];
    std::vector<Cyclo> rhs(n);
    for (std::size_t mu = 0; mu < n; ++mu) rhs[mu] = ratios[i][mu] * ratios[j][mu];
    solutions[p] = lu.solve(std::move(rhs));
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    for (std::size_t k = 0; k < n; ++k) record(i, j, k, solutions[p][k]);
  }
  return table;
}

}  // namespace

FusionTable verlinde_fusion(const RootSystem& rs, long m, const Limits& lim) {
  if (m < 0) throw InvalidInputError("verlinde_fusion: negative level");
  return fusion_from_ratio_rows(rs, m, s_ratio_matrix(rs, m, lim), false);
}

FusionTable verlinde_fusion_via_inverse(const RootSystem& rs, long m, const Limits& lim) {
  if (m < 0) throw InvalidInputError("verlinde_fusion: negative level");
  return fusion_from_ratio_rows(rs, m, s_ratio_matrix(rs, m, lim), true);
}

std::map<Weight, long> weight_multiplicities(const RootSystem& rs, const Weight& lambda) {
  return *cached_character(rs, lambda);
}

std::map<Weight, long> tensor_oracle(const RootSystem& rs, const Weight& lambda, const Weight& nu) {
  if (!rs.is_dominant(lambda) || !rs.is_dominant(nu))
    throw InvalidInputError("tensor_oracle: weights must be dominant");
  auto left = cached_character(rs, lambda);
  auto right = cached_character(rs, nu);
  std::map<Weight, long> conv;
  for (const auto& [w1, m1] : *left)
    for (const auto& [w2, m2] : *right) conv[w1 + w2] += m1 * m2;

  Weight top = lambda + nu;
  std::map<Weight, long> ht_cache;
  auto ht_of = [&](const Weight& w) {
    auto it = ht_cache.find(w);
    if (it == ht_cache.end()) it = ht_cache.emplace(w, height_below(rs, top, w)).first;
    return it->second;
  };
  std::map<Weight, long> result;
  while (true) {
    // Highest remaining weight: minimal height below lambda+nu; ties broken
    // lexicographically for determinism. Maximality forces dominance.
    const Weight* best = nullptr;
    long best_ht = 0;
    for (const auto& [w, mult] : conv) {
      if (mult == 0) continue;
      long ht = ht_of(w);
      if (!best || ht < best_ht || (ht == best_ht && w > *best)) {
        best = &w;
        best_ht = ht;
      }
    }
    if (!best) break;
    Weight head = *best;
    long mult = conv[head];
    if (mult < 0 || !rs.is_dominant(head))
      throw std::logic_error("tensor_oracle: extraction reached an invalid summand");
    result[head] += mult;
    for (const auto& [w, m] : *cached_character(rs, head)) {
      auto it = conv.find(w);
      if (it == conv.end()) throw std::logic_error("tensor_oracle: summand leaves the multiset");
      it->second -= mult * m;
      if (it->second == 0) conv.erase(it);
    }
  }
  return result;
}

std::map<Weight, long> kac_walton_fusion(const RootSystem& rs, long m, const Weight& lambda,
                                         const Weight& nu) {
  if (m < 0) throw InvalidInputError("kac_walton_fusion: negative level");
  if (rs.level_of(lambda) > m || rs.level_of(nu) > m)
    throw InvalidInputError("kac_walton_fusion: weights above the level");
  long u = m + rs.dual_coxeter_number();
  const Weight& rho = rs.rho();
  const Weight& theta = rs.theta();
  std::map<Weight, long> row;
  for (const auto& [phi, mult] : tensor_oracle(rs, lambda, nu)) {
    Weight x = phi + rho;
    int sign = 1;
    bool dead = false;
    for (int guard = 0; guard < 100000; ++guard) {
      bool on_wall = false;
      int neg = -1;
      for (std::size_t i = 0; i < x.rank(); ++i) {
        if (x[i] == 0) on_wall = true;
        if (x[i] < 0 && neg < 0) neg = static_cast<int>(i);
      }
      long lvl = rs.level_of(x);
      if (on_wall || (neg < 0 && lvl == u)) {
        dead = true;
        break;
      }
      if (neg >= 0) {
        x = rs.simple_reflection(neg, x);
        sign = -sign;
        continue;
      }
      if (lvl < u) break;  // strictly inside the alcove
      x = x - theta * (lvl - u);  // affine reflection about (x, theta^vee) = u
      sign = -sign;
    }
    if (dead) continue;
    Weight folded = x - rho;
    row[folded] += sign * mult;
  }
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [w, c] : row)
    if (c < 0) throw std::logic_error("kac_walton_fusion: negative folded multiplicity");
  return row;
}

FusionTable kac_walton_table(const RootSystem& rs, long m, const Limits& lim) {
  auto simples = rs.dominant_weights_of_level(m, lim);
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < simples.size(); ++i) index[simples[i]] = i;
  FusionTable table(simples.size());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = i; j < simples.size(); ++j) pairs.emplace_back(i, j);
  std::vector<std::map<Weight, long>> rows(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    rows[p] = kac_walton_fusion(rs, m, simples[pairs[p].first], simples[pairs[p].second]);
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    for (const auto& [w, c] : rows[p]) {
      table.set(i, j, index.at(w), c);
      table.set(j, i, index.at(w), c);
    }
  }
  return table;
}

Report verify_wzw_oracle(const RootSystem& rs, long m, const Limits& lim) {
  Report rep;
  rep.theorem = "wzw-oracle";
  rep.algebra = std::string(1, family_char(rs.family()));
  rep.rank = rs.rank();
  rep.u = m + rs.dual_coxeter_number();
  rep.v = 1;
  auto simples = rs.dominant_weights_of_level(m, lim);
  FusionTable ver = verlinde_fusion(rs, m, lim);
  FusionTable kw = kac_walton_table(rs, m, lim);
  rep.check("verlinde-equals-kac-walton", ver == kw,
            Json{{"level", m}, {"simples", simples.size()}});
  rep.check("unit-row", ver.has_unit_row());
  rep.check("symmetry", ver.is_symmetric());
  rep.check("associativity", ver.is_associative());
  bool congruent = true;
  std::size_t n = simples.size();
  for (std::size_t i = 0; i < n && congruent; ++i)
    for (std::size_t j = 0; j < n && congruent; ++j)
      for (std::size_t k = 0; k < n && congruent; ++k)
        if (ver.at(i, j, k) != 0 &&
            !rs.in_root_lattice(simples[i] + simples[j] - simples[k]))
          congruent = false;
  rep.check("root-lattice-congruence", congruent);
  return rep;
}

std::vector<std::size_t> simple_current_action(const RootSystem& rs, long m, const Weight& gamma,
                                               const Limits& lim) {
  auto simples = rs.dominant_weights_of_level(m, lim);
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < simples.size(); ++i) index[simples[i]] = i;
  std::vector<std::size_t> perm(simples.size());
  if (m == 0 || rs.level_of(gamma) == 0) {
    std::iota(perm.begin(), perm.end(), 0);
    return perm;
  }
  if (rs.level_of(gamma) != 1)
    throw InvalidInputError("simple_current_action: gamma must be a level-1 weight");
  Weight current = gamma * m;
  std::vector<bool> hit(simples.size(), false);
  for (std::size_t i = 0; i < simples.size(); ++i) {
    auto row = kac_walton_fusion(rs, m, current, simples[i]);
    if (row.size() != 1 || row.begin()->second != 1)
      throw std::logic_error("simple_current_action: current row is not a permutation");
    std::size_t target = index.at(row.begin()->first);
    if (hit[target]) throw std::logic_error("simple_current_action: collision");
    hit[target] = true;
    perm[i] = target;
  }
  return perm;
}

}  // namespace verlinde
