#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "etapair/dicke.hpp"
#include "etapair/witness.hpp"

using namespace etapair;
using dicke::DickeSpec;

namespace {

double two_site_negativity(const DickeSpec& spec) {
  const auto rho = dicke::assemble_two_site_rho(dicke::two_site_abc(spec));
  return witness::negativity(witness::DensityMatrix(rho, 2, 2));
}

}  // namespace

TEST_CASE("dicke state amplitudes") {
  SUBCASE("(2,1) is the one-excitation Bell pair") {
    const auto state = dicke::dicke_state({.n = 2, .k = 1});
    CHECK(state.size() == 4);
    CHECK(state(0b01).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(state(0b10).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(state(0b00)) == 0.0);
    CHECK(std::abs(state(0b11)) == 0.0);
  }
  SUBCASE("(3,3) is the all-ones product state") {
    const auto state = dicke::dicke_state({.n = 3, .k = 3});
    CHECK(state(0b111).real() == doctest::Approx(1.0));
    CHECK(state.norm() == doctest::Approx(1.0));
  }
  SUBCASE("(4,2) spreads over the six weight-2 strings") {
    const auto state = dicke::dicke_state({.n = 4, .k = 2});
    int populated = 0;
    for (Eigen::Index b = 0; b < state.size(); ++b) {
      if (std::abs(state(b)) > 0) {
        ++populated;
        CHECK(std::popcount(static_cast<std::uint64_t>(b)) == 2);
        CHECK(std::abs(state(b)) == doctest::Approx(1.0 / std::sqrt(6.0)));
      }
    }
    CHECK(populated == 6);
  }
  SUBCASE("capacity") {
    CHECK_THROWS_AS(dicke::dicke_state({.n = 25, .k = 1}), std::length_error);
    CHECK_THROWS_AS(dicke::dicke_state({.n = 3, .k = 5}), std::domain_error);
  }
}

TEST_CASE("closed-form two-site weights") {
  SUBCASE("(2,1) is forced to the symmetric coherence") {
    const auto abc = dicke::two_site_abc({.n = 2, .k = 1});
    CHECK(abc.a == doctest::Approx(0.0));
    CHECK(abc.b == doctest::Approx(0.0));
    CHECK(abc.c == doctest::Approx(1.0));
  }
  SUBCASE("(4,2)") {
    const auto abc = dicke::two_site_abc({.n = 4, .k = 2});
    CHECK(abc.a == doctest::Approx(1.0 / 6.0));
    CHECK(abc.b == doctest::Approx(1.0 / 6.0));
    CHECK(abc.c == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("(5,0) is the all-zeros product state") {
    const auto abc = dicke::two_site_abc({.n = 5, .k = 0});
    CHECK(abc.a == doctest::Approx(0.0));
    CHECK(abc.b == doctest::Approx(1.0));
    CHECK(abc.c == doctest::Approx(0.0));
  }
  SUBCASE("n = 1 has no two-site reduction") {
    CHECK_THROWS_AS(dicke::two_site_abc({.n = 1, .k = 0}), std::domain_error);
  }
}

TEST_CASE("weights sum to one, exactly in integers") {
  for (int n = 2; n <= 100; ++n) {
    for (int k = 0; k <= n; ++k) {
      const long long lhs = static_cast<long long>(k) * (k - 1) +
                            static_cast<long long>(n - k) * (n - k - 1) +
                            2LL * k * (n - k);
      REQUIRE(lhs == static_cast<long long>(n) * (n - 1));
    }
  }
  const auto abc = dicke::two_site_abc({.n = 37, .k = 11});
  CHECK(abc.a + abc.b + abc.c == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("brute-force reductions") {
  SUBCASE("single site of (2,1) is maximally mixed") {
    const auto rho = dicke::reduce_to_sites(dicke::dicke_state({.n = 2, .k = 1}),
                                            std::vector<int>{0});
    CHECK(rho(0, 0).real() == doctest::Approx(0.5));
    CHECK(rho(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(rho(0, 1)) < 1e-14);
  }
  SUBCASE("(3,3) reduces to a pure |11>") {
    const auto rho = dicke::reduce_to_sites(dicke::dicke_state({.n = 3, .k = 3}),
                                            std::vector<int>{0, 2});
    CHECK(rho(3, 3).real() == doctest::Approx(1.0));
    CHECK(rho.cwiseAbs().sum() == doctest::Approx(1.0));
  }
  SUBCASE("validation") {
    const auto state = dicke::dicke_state({.n = 3, .k = 1});
    CHECK_THROWS_AS(dicke::reduce_to_sites(state, std::vector<int>{0, 3}), std::domain_error);
    CHECK_THROWS_AS(dicke::reduce_to_sites(state, std::vector<int>{0, 0}), std::domain_error);
    CHECK_THROWS_AS(dicke::reduce_to_sites(state, std::vector<int>{}), std::domain_error);
  }
}

TEST_CASE("closed form equals the brute-force partial trace") {
  for (int n = 2; n <= 9; ++n) {
    const auto full = [&](int k) { return dicke::dicke_state({.n = n, .k = k}); };
    for (int k = 0; k <= n; ++k) {
      const auto brute = dicke::reduce_to_sites(full(k), std::vector<int>{0, 1});
      const Eigen::Matrix4cd closed =
          dicke::assemble_two_site_rho(dicke::two_site_abc({.n = n, .k = k}));
      CHECK((brute - closed).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("entanglement verdict") {
  CHECK(dicke::is_two_site_entangled({.n = 2, .k = 1}));
  CHECK_FALSE(dicke::is_two_site_entangled({.n = 7, .k = 0}));
  CHECK_FALSE(dicke::is_two_site_entangled({.n = 7, .k = 7}));
  CHECK(dicke::is_two_site_entangled({.n = 40, .k = 20}));

  SUBCASE("verdict equals the numeric PPT sign") {
    for (int n = 2; n <= 12; ++n) {
      for (int k = 0; k <= n; ++k) {
        const bool ppt = witness::is_ppt(witness::DensityMatrix(
            dicke::assemble_two_site_rho(dicke::two_site_abc({.n = n, .k = k})), 2, 2));
        CHECK(dicke::is_two_site_entangled({.n = n, .k = k}) == !ppt);
      }
    }
  }

  SUBCASE("pairwise entanglement fades with size") {
    CHECK(two_site_negativity({.n = 40, .k = 20}) < two_site_negativity({.n = 10, .k = 5}));
    double previous = two_site_negativity({.n = 10, .k = 5});
    for (int n : {20, 40, 80, 160}) {
      const double current = two_site_negativity({.n = n, .k = n / 2});
      CHECK(current < previous - 1e-9);
      previous = current;
    }
  }
}

TEST_CASE("block entropy") {
  SUBCASE("one site of (4,2) carries ln 2") {
    CHECK(dicke::block_entropy({.n = 4, .k = 2}, 1) == doctest::Approx(std::log(2.0)));
  }
  SUBCASE("two sites of (4,2) carry the (1/6, 2/3, 1/6) mixture") {
    const double expected = -(std::log(1.0 / 6.0) / 6.0 + 2.0 / 3.0 * std::log(2.0 / 3.0) +
                              std::log(1.0 / 6.0) / 6.0);
    CHECK(dicke::block_entropy({.n = 4, .k = 2}, 2) == doctest::Approx(expected).epsilon(1e-12));
    const auto weights = dicke::hypergeometric_weights({.n = 4, .k = 2}, 2);
    REQUIRE(weights.size() == 3);
    CHECK(weights[0] == doctest::Approx(1.0 / 6.0));
    CHECK(weights[1] == doctest::Approx(2.0 / 3.0));
    CHECK(weights[2] == doctest::Approx(1.0 / 6.0));
  }
  SUBCASE("product states carry nothing") {
    for (int m = 1; m <= 5; ++m) {
      CHECK(dicke::block_entropy({.n = 6, .k = 0}, m) == doctest::Approx(0.0));
      CHECK(dicke::block_entropy({.n = 6, .k = 6}, m) == doctest::Approx(0.0));
    }
  }
  SUBCASE("strictly positive between the product extremes") {
    for (int n = 2; n <= 10; ++n) {
      for (int k = 1; k <= n - 1; ++k) {
        CHECK(dicke::block_entropy({.n = n, .k = k}, 1) > 0.0);
      }
    }
  }
  SUBCASE("closed form equals the reduction spectrum") {
    for (int n = 2; n <= 12; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto state = dicke::dicke_state({.n = n, .k = k});
        for (int m = 1; m <= std::min(6, n - 1); ++m) {
          std::vector<int> sites(m);
          for (int s = 0; s < m; ++s) sites[s] = s;
          const auto rho = dicke::reduce_to_sites(state, sites);
          const double spectral =
              witness::von_neumann_entropy(witness::DensityMatrix(rho, 1, rho.rows()));
          CHECK(std::abs(dicke::block_entropy({.n = n, .k = k}, m) - spectral) < 1e-10);
        }
      }
    }
  }
  SUBCASE("weights normalize") {
    for (int n : {10, 60, 160}) {
      double total = 0.0;
      for (double p : dicke::hypergeometric_weights({.n = n, .k = n / 3}, n / 2)) total += p;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("range checks") {
    CHECK_THROWS_AS(dicke::block_entropy({.n = 4, .k = 2}, 0), std::domain_error);
    CHECK_THROWS_AS(dicke::block_entropy({.n = 4, .k = 2}, 4), std::domain_error);
  }
}

TEST_CASE("pair correlations imply classical two-site correlations") {
  // positive mutual information whenever 1 <= k <= n-1
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const double single = dicke::block_entropy({.n = n, .k = k}, 1);
      const auto rho = dicke::assemble_two_site_rho(dicke::two_site_abc({.n = n, .k = k}));
      const double joint = witness::von_neumann_entropy(witness::DensityMatrix(rho, 2, 2));
      CHECK(2.0 * single - joint > 1e-9);
    }
  }
}

TEST_CASE("exact binomials") {
  CHECK(dicke::binomial(4, 2) == 6.0);
  CHECK(dicke::binomial(160, 80) == doctest::Approx(9.18e46).epsilon(1e-2));
  CHECK(dicke::binomial(5, -1) == 0.0);
  CHECK_THROWS_AS(dicke::binomial(1200, 600), std::length_error);
}
