#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(VERLINDE_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("fusion table for A1 at (3,2)") {
  auto r = run_cli("fusion A 1 --u 3 --v 2 --format table");
  CHECK(r.exit_code == 0);
  // two simples; w x w = vacuum
  CHECK(r.out.find("[1]  [1]  [0]") != std::string::npos);
}

TEST_CASE("fusion json schema") {
  auto r = run_cli("fusion A 1 --u 3 --v 2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("algebra") == "A");
  CHECK(j.at("rank") == 1);
  CHECK(j.at("simples").size() == 2);
  CHECK(j.at("level") == "-1/2");
  // entries hold [i, j, k, N] rows
  for (const auto& e : j.at("entries")) CHECK(e.size() == 4);
}

TEST_CASE("fusion csv format") {
  auto r = run_cli("fusion A 1 --u 3 --v 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("i,j,k,N\n", 0) == 0);
  CHECK(r.out.find("1,1,0,1") != std::string::npos);
}

TEST_CASE("modularity verdicts and exit codes") {
  auto bad = run_cli("verify modularity A 1 --u 3 --v 2");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("singular") != std::string::npos);
  auto good = run_cli("verify modularity A 1 --u 4 --v 3");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("simples listing") {
  auto r = run_cli("simples A 2 --u 4 --v 5");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("simples").size() == 3);
  CHECK(j.at("level") == "-11/5");
}

TEST_CASE("invalid input exits 2") {
  CHECK(run_cli("verify nonsense A 1 --u 3 --v 2").exit_code == 2);
  CHECK(run_cli("simples C 2 --u 9 --v 1").exit_code == 2);
  CHECK(run_cli("simples A 1 --u 4 --v 2").exit_code == 2);  // gcd
  CHECK(run_cli("bogus-subcommand A 1 --u 3").exit_code == 2);
}

TEST_CASE("cap exceeded exits 3") {
  CHECK(run_cli("fusion A 3 --u 6 --v 1 --weyl-max 5").exit_code == 3);
  CHECK(run_cli("simples A 2 --u 9 --v 1 --simples-max 2").exit_code == 3);
}

TEST_CASE("verify subcommands cover every theorem") {
  CHECK(run_cli("verify hopf-verlinde A 1 --u 3 --v 2").exit_code == 0);
  CHECK(run_cli("verify galois A 1 --u 4 --v 3").exit_code == 0);
  CHECK(run_cli("verify w-factorization A 1 --u 3 --v 4").exit_code == 0);
  CHECK(run_cli("verify centralizer A 1 --u 4 --v 3").exit_code == 0);
  CHECK(run_cli("verify twist-balance A 1 --u 4 --v 3").exit_code == 0);
  CHECK(run_cli("verify coset-partition A 1 --u 3 --v 2").exit_code == 0);
  CHECK(run_cli("verify wzw-oracle A 1 --u 5 --v 1").exit_code == 0);
}

TEST_CASE("w-fusion output") {
  auto r = run_cli("w-fusion A 1 --u 3 --v 4");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("simples").size() == 3);
  CHECK(j.at("labels_canonicalized") == true);
  CHECK(j.at("orbit_sizes") == nlohmann::json({2, 2, 2}));
}

TEST_CASE("coset decomposition output") {
  auto r = run_cli("coset-decompose A 1 --u 3 --v 1 --mu 1 --nu 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("ell") == "1");
  CHECK(j.at("terms").size() == 2);
  CHECK(j.at("terms")[0].at("lambda") == nlohmann::json({0}));
  CHECK(j.at("terms")[0].at("wlabel").at("right") == nlohmann::json({1}));
  CHECK(j.at("terms")[0].contains("weight_mod1"));
}

TEST_CASE("byte-identical output across cold and warm cache") {
  auto dir = std::filesystem::temp_directory_path() / "verlinde-cache-test";
  std::filesystem::remove_all(dir);
  std::string flag = " --cache-dir " + dir.string();
  auto plain = run_cli("verify galois A 2 --u 4 --v 5");
  auto cold = run_cli("verify galois A 2 --u 4 --v 5" + flag);
  auto warm = run_cli("verify galois A 2 --u 4 --v 5" + flag);
  CHECK(plain.exit_code == 0);
  CHECK(cold.out == plain.out);
  CHECK(warm.out == plain.out);
  CHECK(std::filesystem::exists(dir));  // cache files were written
  bool has_weyl = false;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().filename().string().rfind("weyl-A2", 0) == 0) has_weyl = true;
  CHECK(has_weyl);
  auto s1 = run_cli("s-matrix A 1 --u 5 --v 3" + flag);
  auto s2 = run_cli("s-matrix A 1 --u 5 --v 3" + flag);
  CHECK(s1.out == s2.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt cache entries are recomputed") {
  auto dir = std::filesystem::temp_directory_path() / "verlinde-cache-corrupt";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  {
    FILE* f = fopen((dir / "weyl-A1-v1.json").string().c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("{ not json", f);
    fclose(f);
  }
  auto r = run_cli("fusion A 1 --u 3 --v 2 --cache-dir " + dir.string());
  CHECK(r.exit_code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("s-matrix precision flag changes only the float rendering") {
  auto low = run_cli("s-matrix A 1 --u 3 --v 2 --precision 10");
  auto high = run_cli("s-matrix A 1 --u 3 --v 2 --precision 50");
  CHECK(low.exit_code == 0);
  auto jl = nlohmann::json::parse(low.out);
  auto jh = nlohmann::json::parse(high.out);
  CHECK(jl.at("hopf_ratios")[1][1].at("coeffs") == jh.at("hopf_ratios")[1][1].at("coeffs"));
  CHECK(jl.at("hopf_ratios")[1][1].at("M") == jh.at("hopf_ratios")[1][1].at("M"));
}
