// Acceptance suite: one line per criterion, exact arithmetic throughout.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "oracle_minimal_model.hpp"
#include "verlinde/admissible.hpp"
#include "verlinde/coset.hpp"
#include "verlinde/walg.hpp"
#include "verlinde/wzw.hpp"

using namespace verlinde;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

Weight wt(std::vector<long> l) { return Weight(std::move(l)); }

// --- criterion 1: verlinde == kac-walton across the level matrix, < 120 s ---
void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string bad;
  auto run = [&](Family f, int rank, long mmax) {
    auto rs = RootSystem::build(f, rank);
    for (long m = 1; m <= mmax; ++m) {
      if (!(verlinde_fusion(rs, m) == kac_walton_table(rs, m))) {
        ok = false;
        bad += rs.name() + "@" + std::to_string(m) + " ";
      }
    }
  };
  run(Family::A, 1, 8);
  run(Family::A, 2, 4);
  run(Family::A, 3, 2);
  run(Family::D, 4, 1);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = secs < 120.0;
  report(1, "WZW oracle equivalence (A1 1-8, A2 1-4, A3 1-2, D4 1)", ok && in_budget,
         "runtime " + std::to_string(secs) + " s" + (bad.empty() ? "" : ", mismatch: " + bad));
}

// --- criterion 2: ordinary-category ring identities ---
void criterion_2() {
  bool ok = true;
  std::string bad;
  auto run = [&](Family f, int rank, long u, long v) {
    auto L = AdmissibleLevel::make(RootSystem::build(f, rank), u, v);
    if (!verify_verlinde_ordinary(L).pass()) {
      ok = false;
      bad += L.rs.name() + "(" + std::to_string(u) + "," + std::to_string(v) + ") ";
    }
  };
  for (auto [u, v] : std::vector<std::pair<long, long>>{{3, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}})
    run(Family::A, 1, u, v);
  for (auto [u, v] : std::vector<std::pair<long, long>>{{4, 5}, {5, 4}})
    run(Family::A, 2, u, v);
  report(2, "ordinary fusion ring identities (Hopf = normalized S-ratio characters)", ok, bad);
}

// --- criterion 3: modularity ranks ---
void criterion_3() {
  bool ok = true;
  std::string detail;
  auto expect = [&](Family f, int rank, long u, long v, bool modular) {
    auto L = AdmissibleLevel::make(RootSystem::build(f, rank), u, v);
    auto r = is_modular(L);
    bool this_ok = (r.gcd_test == modular) && (r.rank_test == modular);
    if (!this_ok)
      detail += L.rs.name() + "(" + std::to_string(u) + "," + std::to_string(v) + ") ";
    ok = ok && this_ok;
  };
  expect(Family::A, 1, 4, 3, true);
  expect(Family::A, 1, 5, 3, true);
  expect(Family::A, 2, 4, 5, true);
  expect(Family::A, 2, 5, 4, true);
  expect(Family::A, 1, 3, 2, false);  // singular, denominator even
  expect(Family::A, 1, 5, 2, false);
  report(3, "modularity: full rank iff gcd(N,v)=1 on the test matrix; exact ranks", ok, detail);
}

// --- criterion 4: Galois twist entrywise equality ---
void criterion_4() {
  bool ok = true;
  std::string bad;
  auto run = [&](Family f, int rank, long u, long v) {
    auto L = AdmissibleLevel::make(RootSystem::build(f, rank), u, v);
    if (!verify_galois_twist(L).pass()) {
      ok = false;
      bad += L.rs.name() + "(" + std::to_string(u) + "," + std::to_string(v) + ") ";
    }
  };
  run(Family::A, 1, 4, 3);
  run(Family::A, 1, 5, 3);
  run(Family::A, 2, 4, 5);
  run(Family::A, 2, 5, 4);
  report(4, "Galois-twisted integer-level ratios equal admissible ratios", ok, bad);
}

// --- criterion 5: W-algebra fusion against the BPZ oracle ---
void criterion_5() {
  bool ok = true;
  std::string bad;
  auto a1 = RootSystem::build(Family::A, 1);
  for (auto [u, v] : std::vector<std::pair<long, long>>{
           {3, 4}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {2, 5}, {3, 5}}) {
    auto K = WLevel::make(a1, u, v);
    auto set = w_label_set(K);
    auto table = w_fusion(K);
    mm::MinimalModel oracle(u, v);
    bool this_ok = set.canonical.size() == oracle.labels().size();
    if (u == 3 && v == 4) this_ok = this_ok && set.canonical.size() == 3;
    auto to_kac = [&](const WLabel& l) {
      return oracle.canonical({l.left[0] + 1, l.right[0] + 1});
    };
    std::size_t n = set.canonical.size();
    for (std::size_t i = 0; i < n && this_ok; ++i)
      for (std::size_t j = 0; j < n && this_ok; ++j)
        for (std::size_t k = 0; k < n && this_ok; ++k)
          if (table.at(i, j, k) != oracle.fuse(to_kac(set.canonical[i]), to_kac(set.canonical[j]),
                                               to_kac(set.canonical[k])))
            this_ok = false;
    if (!this_ok) {
      ok = false;
      bad += "(" + std::to_string(u) + "," + std::to_string(v) + ") ";
    }
  }
  report(5, "W-algebra fusion equals the independent minimal-model oracle (7 levels)", ok, bad);
}

// --- criterion 6: centralizer phases ---
void criterion_6() {
  bool ok = true;
  std::string bad;
  auto run = [&](Family f, int rank, long u, long v) {
    auto K = WLevel::make(RootSystem::build(f, rank), u, v);
    bool this_ok = verify_centralizer(K).pass();
    // lambda in Q: phase exactly 1.
    auto lefts = K.rs.dominant_weights_of_level(K.left_level());
    auto rights = K.dual_rs.dominant_weights_of_level(K.right_level());
    for (const auto& lam : lefts) {
      if (!K.rs.in_root_lattice(lam)) continue;
      for (const auto& ld : rights)
        if (!(monodromy_ratio(K, lam, ld) == Cyclo::one())) this_ok = false;
    }
    // and in general the phase is e(2 pi i (lambda, lambda')).
    for (const auto& lam : lefts)
      for (const auto& ld : rights)
        if (!(monodromy_ratio(K, lam, ld) ==
              Cyclo::root_of_unity(K.rs.inner_dual(lam, ld))))
          this_ok = false;
    if (!this_ok) {
      ok = false;
      bad += K.rs.name() + "(" + std::to_string(u) + "," + std::to_string(v) + ") ";
    }
  };
  run(Family::A, 1, 4, 3);
  run(Family::A, 2, 5, 3);
  run(Family::A, 2, 5, 4);
  report(6, "centralizer phases: 1 on the root lattice, e(2 pi i (lambda,lambda')) in general",
         ok, bad);
}

// --- criterion 7: coset bookkeeping ---
void criterion_7() {
  bool ok = true;
  std::string bad;
  auto a1 = RootSystem::build(Family::A, 1);
  auto a2 = RootSystem::build(Family::A, 2);
  for (auto [u, v] : std::vector<std::pair<long, long>>{{3, 1}, {3, 2}, {4, 1}}) {
    if (!verify_partition(AdmissibleLevel::make(a1, u, v)).pass()) {
      ok = false;
      bad += "partition A1(" + std::to_string(u) + "," + std::to_string(v) + ") ";
    }
  }
  if (!verify_partition(AdmissibleLevel::make(a2, 4, 1)).pass()) {
    ok = false;
    bad += "partition A2(4,1) ";
  }

  auto K = WLevel::make(a1, 4, 3);
  std::set<Rat> weights;
  for (const auto& l : w_labels(K)) weights.insert(coset_weight_mod1(K, l.left, l.right));
  if (!(weights == std::set<Rat>{Rat(0), frac(1, 2), frac(1, 16)})) {
    ok = false;
    bad += "ising-weights ";
  }
  for (auto [f, rank, u, v] : std::vector<std::tuple<Family, int, long, long>>{
           {Family::A, 1, 4, 3}, {Family::A, 1, 5, 3}, {Family::A, 1, 5, 4},
           {Family::A, 2, 5, 4}}) {
    auto rep = verify_twist_balance(WLevel::make(RootSystem::build(f, rank), u, v));
    if (!rep.pass() || rep.extra.at("twist_sign") != "+1") {
      ok = false;
      bad += "twist(" + std::to_string(u) + "," + std::to_string(v) + ") ";
    }
  }
  report(7, "coset partition, Ising weights {0, 1/2, 1/16}, twist balance with recorded sign",
         ok, bad);
}

// --- criterion 8: field sanity ---
void criterion_8() {
  std::mt19937 rng(20260810);
  std::vector<long> orders{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 20, 24, 30};
  std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  auto random_cyclo = [&](long order) {
    Cyclo x;
    long phi = euler_phi(order);
    for (long j = 0; j < phi; ++j)
      x += Cyclo(frac(num(rng), den(rng))) * Cyclo::root_of_unity(frac(j, order));
    return x;
  };
  bool ok = true;
  long checks = 0;
  // 10^4 exact field-axiom checks (2500 quadruples x 4 identities).
  for (int i = 0; i < 2500 && ok; ++i) {
    Cyclo a = random_cyclo(orders[pick(rng)]);
    Cyclo b = random_cyclo(orders[pick(rng)]);
    Cyclo c = random_cyclo(orders[pick(rng)]);
    ok = ok && (a + b) + c == a + (b + c);
    ok = ok && (a * b) * c == a * (b * c);
    ok = ok && a * (b + c) == a * b + a * c;
    Cyclo d = random_cyclo(orders[pick(rng)]);
    if (!d.is_zero()) ok = ok && d.inverse() * d == Cyclo::one();
    checks += 4;
  }
  // Galois composition on Q(zeta_60).
  std::vector<long> units60;
  for (long t = 1; t < 60; ++t)
    if (std::gcd(t, 60L) == 1) units60.push_back(t);
  std::uniform_int_distribution<std::size_t> pick_unit(0, units60.size() - 1);
  for (int i = 0; i < 100 && ok; ++i) {
    Cyclo x = random_cyclo(60);
    long s = units60[pick_unit(rng)], t = units60[pick_unit(rng)];
    ok = ok && x.galois(s).galois(t) == x.galois((s * t) % 60);
    checks += 1;
  }
  report(8, "field sanity: randomized axioms and Galois composition on Q(zeta_60)", ok,
         std::to_string(checks) + " checks");
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << g_failures << " failures, " << secs << " s total)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
