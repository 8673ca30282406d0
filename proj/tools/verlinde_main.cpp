// verlinde - exact modular data and fusion rings for affine Lie algebras at
// admissible levels and for rational principal W-algebras.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "verlinde/admissible.hpp"
#include "verlinde/cache.hpp"
#include "verlinde/coset.hpp"
#include "verlinde/walg.hpp"
#include "verlinde/wzw.hpp"

namespace {

using namespace verlinde;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

struct RunConfig {
  std::string family;
  int rank = 0;
  long u = 0;
  long v = 1;
  std::string format = "json";
  std::string cache_dir;
  long weyl_max = 1'000'000;
  long simples_max = 2'000;
  int precision = 53;
  std::vector<long> mu, nu;
  std::string theorem;
};

Limits limits_of(const RunConfig& cfg) { return Limits{cfg.weyl_max, cfg.simples_max}; }

RootSystem algebra_of(const RunConfig& cfg) {
  if (cfg.family.size() != 1) throw InvalidInputError("algebra family must be a single letter");
  return RootSystem::build(family_from_char(cfg.family[0]), cfg.rank);
}

Weight weight_arg(const std::vector<long>& labels, int rank) {
  if (labels.empty()) return Weight::zero(rank);
  if (static_cast<int>(labels.size()) != rank)
    throw InvalidInputError("weight label length must equal the rank");
  return Weight(labels);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_simples(const RunConfig& cfg) {
  auto L = AdmissibleLevel::make(algebra_of(cfg), cfg.u, cfg.v);
  auto simples = ordinary_simples(L, limits_of(cfg));
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& w : simples) arr.push_back(weight_json(w));
    emit(Json{{"algebra", cfg.family},
              {"rank", cfg.rank},
              {"u", cfg.u},
              {"v", cfg.v},
              {"level", rat_json(L.level())},
              {"simples", arr}});
  } else if (cfg.format == "csv") {
    for (const auto& w : simples) {
      for (std::size_t i = 0; i < w.rank(); ++i) std::cout << (i ? "," : "") << w[i];
      std::cout << "\n";
    }
  } else {
    for (const auto& w : simples) std::cout << w.str() << "\n";
  }
  return kExitOk;
}

int run_s_matrix(const RunConfig& cfg) {
  auto L = AdmissibleLevel::make(algebra_of(cfg), cfg.u, cfg.v);
  auto simples = ordinary_simples(L, limits_of(cfg));
  auto m = hopf_matrix(L, limits_of(cfg));
  std::size_t n = m.size();
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(cyclo_json(m[i][j]));
      rows.push_back(row);
    }
    Json labels = Json::array();
    for (const auto& w : simples) labels.push_back(weight_json(w));
    emit(Json{{"algebra", cfg.family},
              {"rank", cfg.rank},
              {"u", cfg.u},
              {"v", cfg.v},
              {"simples", labels},
              {"hopf_ratios", rows}});
  } else if (cfg.format == "csv") {
    std::cout << "i,j,re,im\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto z = m[i][j].to_complex();
        std::cout << i << ',' << j << ',' << z.real() << ',' << z.imag() << "\n";
      }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto z = m[i][j].to_complex();
        std::cout << "(" << z.real() << "," << z.imag() << ")\t";
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_fusion(const RunConfig& cfg) {
  auto L = AdmissibleLevel::make(algebra_of(cfg), cfg.u, cfg.v);
  auto simples = ordinary_simples(L, limits_of(cfg));
  auto table = ordinary_fusion(L, limits_of(cfg));
  if (cfg.format == "json") {
    Json labels = Json::array();
    for (const auto& w : simples) labels.push_back(weight_json(w));
    emit(fusion_table_json(cfg.family, cfg.rank, rat_json(L.level()), labels, table));
  } else if (cfg.format == "csv") {
    std::cout << fusion_table_csv(table);
  } else {
    std::vector<std::string> names;
    for (const auto& w : simples) names.push_back(w.str());
    std::cout << fusion_table_text(names, table);
  }
  return kExitOk;
}

int run_w_fusion(const RunConfig& cfg) {
  auto K = WLevel::make(algebra_of(cfg), cfg.u, cfg.v);
  auto set = w_label_set(K, limits_of(cfg));
  auto table = w_fusion(K, limits_of(cfg));
  if (cfg.format == "json") {
    Json labels = Json::array();
    for (const auto& l : set.canonical)
      labels.push_back(Json{{"left", weight_json(l.left)}, {"right", weight_json(l.right)}});
    Json j = fusion_table_json(cfg.family, cfg.rank, rat_json(K.level()), labels, table);
    j["orbit_sizes"] = set.orbit_sizes;
    j["labels_canonicalized"] = set.canonicalized;
    emit(j);
  } else if (cfg.format == "csv") {
    std::cout << fusion_table_csv(table);
  } else {
    std::vector<std::string> names;
    for (const auto& l : set.canonical) names.push_back(l.str());
    std::cout << fusion_table_text(names, table);
  }
  return kExitOk;
}

int run_coset_decompose(const RunConfig& cfg) {
  auto L = AdmissibleLevel::make(algebra_of(cfg), cfg.u, cfg.v);
  Weight mu = weight_arg(cfg.mu, cfg.rank);
  Weight nu = weight_arg(cfg.nu, cfg.rank);
  auto dec = gko_decompose(L, mu, nu, limits_of(cfg));
  if (cfg.format == "json") {
    Json terms = Json::array();
    for (const auto& [lambda, wl] : dec.terms)
      terms.push_back(Json{
          {"lambda", weight_json(lambda)},
          {"wlabel", Json{{"left", weight_json(wl.left)}, {"right", weight_json(wl.right)}}},
          {"weight_mod1", rat_json(coset_weight_mod1(dec.K, wl.left, wl.right))}});
    emit(Json{{"algebra", cfg.family},
              {"rank", cfg.rank},
              {"u", cfg.u},
              {"v", cfg.v},
              {"ell", rat_json(L.level())},
              {"mu", weight_json(mu)},
              {"nu", weight_json(nu)},
              {"terms", terms}});
  } else {
    for (const auto& [lambda, wl] : dec.terms)
      std::cout << lambda.str() << " x W" << wl.str() << "  h mod 1 = "
                << rat_json(coset_weight_mod1(dec.K, wl.left, wl.right)) << "\n";
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg) {
  auto rs = algebra_of(cfg);
  auto lim = limits_of(cfg);
  Report rep;
  if (cfg.theorem == "hopf-verlinde")
    rep = verify_verlinde_ordinary(AdmissibleLevel::make(rs, cfg.u, cfg.v), lim);
  else if (cfg.theorem == "galois")
    rep = verify_galois_twist(AdmissibleLevel::make(rs, cfg.u, cfg.v), lim);
  else if (cfg.theorem == "modularity")
    rep = verify_modularity(AdmissibleLevel::make(rs, cfg.u, cfg.v), lim);
  else if (cfg.theorem == "w-factorization")
    rep = verify_factorization(WLevel::make(rs, cfg.u, cfg.v), lim);
  else if (cfg.theorem == "centralizer")
    rep = verify_centralizer(WLevel::make(rs, cfg.u, cfg.v), lim);
  else if (cfg.theorem == "twist-balance")
    rep = verify_twist_balance(WLevel::make(rs, cfg.u, cfg.v), lim);
  else if (cfg.theorem == "coset-partition")
    rep = verify_partition(AdmissibleLevel::make(rs, cfg.u, cfg.v), lim);
  else if (cfg.theorem == "wzw-oracle") {
    if (cfg.v != 1) throw InvalidInputError("wzw-oracle runs at integer level; use --v 1");
    rep = verify_wzw_oracle(rs, cfg.u - rs.dual_coxeter_number(), lim);
  } else
    throw InvalidInputError("unknown verify theorem '" + cfg.theorem + "'");

  if (cfg.format == "json") {
    emit(rep.to_json());
  } else if (cfg.format == "csv") {
    std::cout << "name,pass\n";
    for (const auto& c : rep.checks) std::cout << c.name << ',' << (c.pass ? 1 : 0) << "\n";
  } else {
    for (const auto& c : rep.checks)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    std::cout << (rep.pass() ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << "\n";
  }
  return rep.pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"exact fusion rings and modular data for affine and W-algebras"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("family", cfg.family, "algebra family letter (A..G)")->required();
    sub->add_option("rank", cfg.rank, "algebra rank")->required();
    sub->add_option("--u", cfg.u, "numerator of the shifted level")->required();
    sub->add_option("--v", cfg.v, "denominator of the shifted level (default 1)");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (env VERLINDE_CACHE_DIR)");
    sub->add_option("--weyl-max", cfg.weyl_max, "Weyl group enumeration cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--simples-max", cfg.simples_max, "simple-object enumeration cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--precision", cfg.precision, "display precision in bits")
        ->check(CLI::PositiveNumber);
  };

  auto* simples = app.add_subcommand("simples", "list ordinary simple modules");
  add_common(simples);
  auto* smatrix = app.add_subcommand("s-matrix", "normalized character S-ratio matrix");
  add_common(smatrix);
  auto* fusion = app.add_subcommand("fusion", "ordinary-category fusion table");
  add_common(fusion);
  auto* wfusion = app.add_subcommand("w-fusion", "principal W-algebra fusion table");
  add_common(wfusion);
  auto* coset = app.add_subcommand("coset-decompose", "GKO branching of L_ell(mu) x L_1(nu)");
  add_common(coset);
  coset->add_option("--mu", cfg.mu, "left weight labels")->delimiter(',');
  coset->add_option("--nu", cfg.nu, "level-1 weight labels")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "machine-check one of the exact identities");
  verify
      ->add_option("theorem", cfg.theorem,
                   "hopf-verlinde | galois | modularity | w-factorization | centralizer | "
                   "twist-balance | coset-partition | wzw-oracle")
      ->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (cfg.cache_dir.empty()) {
    if (const char* env = std::getenv("VERLINDE_CACHE_DIR")) cfg.cache_dir = env;
  }
  if (!cfg.cache_dir.empty()) cache::set_directory(cfg.cache_dir);
  set_display_precision(cfg.precision);

  try {
    if (simples->parsed()) return run_simples(cfg);
    if (smatrix->parsed()) return run_s_matrix(cfg);
    if (fusion->parsed()) return run_fusion(cfg);
    if (wfusion->parsed()) return run_w_fusion(cfg);
    if (coset->parsed()) return run_coset_decompose(cfg);
    if (verify->parsed()) return run_verify(cfg);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
