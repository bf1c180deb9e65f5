#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "wavepatterns/gas.hpp"

using namespace wavepatterns;

TEST_CASE("pressure") {
  GasParams gp;
  CHECK(pressure(gp, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(pressure(gp, 2.0, 1.0) == doctest::Approx(0.5));
  GasParams gp2{2.0, 5.0 / 3.0, 1.0, 1.0};
  CHECK(pressure(gp2, 4.0, 3.0) == doctest::Approx(1.5));
  CHECK_THROWS_AS(pressure(gp, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(pressure(gp, 1.0, 0.0), DomainError);
}

TEST_CASE("entropy closed form") {
  GasParams gp{1.0, 2.0, 1.0, 1.0};
  CHECK(entropy(gp, 1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(entropy(gp, std::exp(1.0), 1.0) == doctest::Approx(1.0));
  GasParams gp53{1.0, 5.0 / 3.0, 1.0, 1.0};
  CHECK(entropy(gp53, 2.0, 3.0) ==
        doctest::Approx(1.5 * std::log(3.0) + std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("entropy / theta_from_entropy round trip") {
  GasParams gp{1.0, 2.0, 1.0, 1.0};
  CHECK(theta_from_entropy(gp, 1.0, 0.0) == doctest::Approx(1.0));
  GasParams gp53{1.0, 5.0 / 3.0, 1.0, 1.0};
  CHECK(theta_from_entropy(gp53, 2.0, 1.5 * std::log(3.0) + std::log(2.0)) ==
        doctest::Approx(3.0).epsilon(1e-12));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u01(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    const GasParams g{u01(rng), 1.0 + u01(rng) / 4.0, u01(rng), 1.0};
    const double v = u01(rng), theta = u01(rng);
    const double s = entropy(g, v, theta);
    CHECK(theta_from_entropy(g, v, s) ==
          doctest::Approx(theta).epsilon(1e-12));
    // The two expressions for the pressure agree.
    CHECK(pressure_isentropic(g, v, s) ==
          doctest::Approx(pressure(g, v, theta)).epsilon(1e-12));
  }
}

TEST_CASE("characteristic speeds") {
  GasParams gp3{1.0, 3.0, 1.0, 1.0};
  CHECK(char_speed(gp3, 1.0, 0.0, Family::k1) ==
        doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
  GasParams gp53{1.0, 5.0 / 3.0, 1.0, 1.0};  // A = 1 makes p(1, 0) = 1
  CHECK(char_speed(gp53, 1.0, 0.0, Family::k3) ==
        doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u01(0.2, 5.0);
  for (int i = 0; i < 50; ++i) {
    const GasParams g{u01(rng), 1.0 + u01(rng) / 3.0, u01(rng), 1.0};
    const double v = u01(rng), s = u01(rng) - 2.5;
    const double l1 = char_speed(g, v, s, Family::k1);
    const double l3 = char_speed(g, v, s, Family::k3);
    CHECK(l3 == doctest::Approx(-l1).epsilon(1e-15));
    CHECK(l1 < 0.0);
    CHECK(l3 > 0.0);
    // lambda_1 strictly increasing in v
    CHECK(char_speed(g, v * 1.01, s, Family::k1) > l1);
  }
}

TEST_CASE("volume_from_char_speed inverts char_speed") {
  GasParams gp{1.3, 1.7, 0.8, 1.0};
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u01(0.3, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double v = u01(rng), s = u01(rng) - 1.5;
    for (Family fam : {Family::k1, Family::k3}) {
      const double w = char_speed(gp, v, s, fam);
      CHECK(volume_from_char_speed(gp, w, s, fam) ==
            doctest::Approx(v).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(volume_from_char_speed(gp, 1.0, 0.0, Family::k1),
                  DomainError);
}

TEST_CASE("rarefaction velocity integral") {
  GasParams gp3{1.0, 3.0, 1.0, 1.0};
  CHECK(rarefaction_velocity_integral(gp3, 1.3, 1.3, 0.0, Family::k1) == 0.0);
  // gamma = 3: lambda_1 = -sqrt(3) eta^-2, integral 1 -> 2 is -sqrt(3)/2.
  CHECK(rarefaction_velocity_integral(gp3, 1.0, 2.0, 0.0, Family::k1) ==
        doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-12));

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u01(0.3, 3.0);
  for (int i = 0; i < 30; ++i) {
    const GasParams g{u01(rng), 1.0 + u01(rng) / 3.0, u01(rng), 1.0};
    const double s = u01(rng) - 1.5;
    const double a = u01(rng), b = u01(rng), c = u01(rng);
    for (Family fam : {Family::k1, Family::k3}) {
      // additivity
      const double i_ab = rarefaction_velocity_integral(g, a, b, s, fam);
      const double i_bc = rarefaction_velocity_integral(g, b, c, s, fam);
      const double i_ac = rarefaction_velocity_integral(g, a, c, s, fam);
      CHECK(i_ab + i_bc == doctest::Approx(i_ac).epsilon(1e-12));
      // quadrature oracle
      const double q = testing::adaptive_simpson(
          [&](double eta) { return char_speed(g, eta, s, fam); }, a, b);
      CHECK(i_ab == doctest::Approx(q).epsilon(1e-10));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(GasParams{1.0, 1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(validate(GasParams{-1.0, 1.4, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(validate(GasParams{1.0, 1.4, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(ThermoState{0.0, 0.0, 1.0}), DomainError);
  CHECK_NOTHROW(validate(GasParams{}));
}
