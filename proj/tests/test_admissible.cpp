#include "doctest.h"
#include "verlinde/admissible.hpp"

using namespace verlinde;

namespace {
Weight wt(std::vector<long> l) { return Weight(std::move(l)); }
}  // namespace

TEST_CASE("admissible level validation") {
  auto a1 = RootSystem::build(Family::A, 1);
  CHECK_THROWS_AS(AdmissibleLevel::make(a1, 4, 2), InvalidInputError);  // gcd
  CHECK_THROWS_AS(AdmissibleLevel::make(a1, 1, 2), InvalidInputError);  // u < h^vee
  CHECK_THROWS_AS(AdmissibleLevel::make(a1, 0, 1), InvalidInputError);
  auto L = AdmissibleLevel::make(a1, 2, 3);
  CHECK(L.level() == frac(-4, 3));
  CHECK(ordinary_simples(L) == std::vector<Weight>{wt({0})});

  // Twisted window for non-simply-laced denominators.
  auto b3 = RootSystem::build(Family::B, 3);  // h=6, h^vee=5, lacety 2
  CHECK_THROWS_AS(AdmissibleLevel::make(b3, 5, 2), InvalidInputError);   // v even needs u>=h, v>=2h^vee
  CHECK(AdmissibleLevel::make(b3, 7, 10).u == 7);
  CHECK(AdmissibleLevel::make(b3, 5, 3).u == 5);  // gcd(v, 2) = 1 branch
}

TEST_CASE("ordinary simples examples") {
  auto a1 = RootSystem::build(Family::A, 1);
  CHECK(ordinary_simples(AdmissibleLevel::make(a1, 3, 2)) ==
        std::vector<Weight>{wt({0}), wt({1})});
  auto a2 = RootSystem::build(Family::A, 2);
  CHECK(ordinary_simples(AdmissibleLevel::make(a2, 4, 5)).size() == 3);
}

TEST_CASE("hopf ratio closed forms") {
  auto a1 = RootSystem::build(Family::A, 1);
  auto L32 = AdmissibleLevel::make(a1, 3, 2);
  for (long b = 0; b <= 1; ++b) CHECK(hopf_ratio(L32, wt({0}), wt({b})) == Cyclo::one());
  CHECK(hopf_ratio(L32, wt({1}), wt({1})) == Cyclo(-1));

  // A1 (5,2): sin(8 pi/5)/sin(4 pi/5), the negative golden ratio.
  auto L52 = AdmissibleLevel::make(a1, 5, 2);
  Cyclo expected = (Cyclo::root_of_unity(frac(-4, 5)) - Cyclo::root_of_unity(frac(4, 5))) /
                   (Cyclo::root_of_unity(frac(-2, 5)) - Cyclo::root_of_unity(frac(2, 5)));
  Cyclo got = hopf_ratio(L52, wt({1}), wt({1}));
  CHECK(got == expected);
  CHECK(std::abs(got.to_complex().real() + 1.6180339887498949) < 1e-12);
  CHECK(std::abs(got.to_complex().imag()) < 1e-12);
}

TEST_CASE("hopf column of the vacuum never vanishes") {
  auto a1 = RootSystem::build(Family::A, 1);
  for (auto [u, v] : std::vector<std::pair<long, long>>{{3, 2}, {5, 3}, {5, 4}, {4, 3}}) {
    auto L = AdmissibleLevel::make(a1, u, v);
    for (const auto& lam : ordinary_simples(L))
      CHECK_FALSE(hopf_ratio(L, lam, wt({0})).is_zero());
  }
}

TEST_CASE("ordinary fusion delegates to the integer level") {
  auto a1 = RootSystem::build(Family::A, 1);
  auto L = AdmissibleLevel::make(a1, 3, 2);
  auto t = ordinary_fusion(L);
  CHECK(t.size() == 2);
  CHECK(t.at(1, 1, 0) == 1);
  CHECK(t.at(1, 1, 1) == 0);
  auto a2 = RootSystem::build(Family::A, 2);
  auto t2 = ordinary_fusion(AdmissibleLevel::make(a2, 4, 5));
  auto group = a2.discriminant_group();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(t2.at(i, j, k) == (group.add[i][j] == static_cast<int>(k) ? 1 : 0));

  auto b3 = RootSystem::build(Family::B, 3);
  CHECK_THROWS_AS(ordinary_fusion(AdmissibleLevel::make(b3, 5, 3)), InvalidInputError);
}

TEST_CASE("hopf-verlinde ring identities") {
  auto a1 = RootSystem::build(Family::A, 1);
  auto rep = verify_verlinde_ordinary(AdmissibleLevel::make(a1, 3, 2));
  CHECK(rep.pass());
  CHECK(rep.theorem == "hopf-verlinde");
  // (-1)*(-1) = 1 = ratio of phi=0: check detail of one identity by hand.
  Cyclo lhs = hopf_ratio(AdmissibleLevel::make(a1, 3, 2), wt({1}), wt({1})) *
              hopf_ratio(AdmissibleLevel::make(a1, 3, 2), wt({1}), wt({1}));
  CHECK(lhs == Cyclo::one());
}

TEST_CASE("galois twist equals admissible ratios") {
  auto a1 = RootSystem::build(Family::A, 1);
  CHECK(verify_galois_twist(AdmissibleLevel::make(a1, 4, 3)).pass());
  // v = 1 is the identity twist.
  CHECK(verify_galois_twist(AdmissibleLevel::make(a1, 3, 1)).pass());
  // Precondition: gcd(N, v) = 1 fails for (3,2) since N = 2.
  CHECK_THROWS_AS(verify_galois_twist(AdmissibleLevel::make(a1, 3, 2)), InvalidInputError);
}

TEST_CASE("modularity decision") {
  auto a1 = RootSystem::build(Family::A, 1);
  auto m32 = is_modular(AdmissibleLevel::make(a1, 3, 2));
  CHECK_FALSE(m32.gcd_test);
  CHECK_FALSE(m32.rank_test);
  CHECK(m32.rank == 1);
  CHECK(m32.dimension == 2);
  // The closed-form matrix [[1,1],[-1,-1]].
  auto h = hopf_matrix(AdmissibleLevel::make(a1, 3, 2));
  CHECK(h[0][0] == Cyclo::one());
  CHECK(h[0][1] == Cyclo::one());
  CHECK(h[1][0] == Cyclo(-1));
  CHECK(h[1][1] == Cyclo(-1));

  auto m31 = is_modular(AdmissibleLevel::make(a1, 3, 1));
  CHECK(m31.gcd_test);
  CHECK(m31.rank_test);
  auto m43 = is_modular(AdmissibleLevel::make(a1, 4, 3));
  CHECK(m43.gcd_test);
  CHECK(m43.rank_test);
  // (5,4): even denominator, singular by the rank-one parity criterion.
  auto m54 = is_modular(AdmissibleLevel::make(a1, 5, 4));
  CHECK_FALSE(m54.gcd_test);
  CHECK_FALSE(m54.rank_test);

  auto rep = verify_modularity(AdmissibleLevel::make(a1, 3, 2));
  CHECK_FALSE(rep.pass());
  CHECK(rep.extra.at("verdict") == "singular");
}
