#include <doctest.h>

#include <random>

#include "squant/units.hpp"

using namespace squant;

TEST_CASE("dbm / watt conversions") {
  CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dbm_to_watt(15.0) == doctest::Approx(0.03162277660168379).epsilon(1e-12));
  // thermal noise floor for a 6 MHz band
  CHECK(dbm_to_watt(-106.0) == doctest::Approx(2.5118864315095823e-14).epsilon(1e-12));
  CHECK(dbm_to_watt(-200.0) == doctest::Approx(1e-23).epsilon(1e-12));

  CHECK(watt_to_dbm(1.0) == doctest::Approx(30.0).epsilon(1e-15));
  CHECK_THROWS_AS(watt_to_dbm(0.0), std::domain_error);
  CHECK_THROWS_AS(watt_to_dbm(-1.0), std::domain_error);
}

TEST_CASE("round-trip within 1e-12 relative") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-200.0, 60.0);
  for (int i = 0; i < 1000; ++i) {
    const double dbm = u(rng);
    const double back = watt_to_dbm(dbm_to_watt(dbm));
    CHECK(std::abs(back - dbm) <= 1e-12 * std::max(1.0, std::abs(dbm)));
    const double w = dbm_to_watt(dbm);
    CHECK(std::abs(dbm_to_watt(watt_to_dbm(w)) - w) <= 1e-12 * w);
  }
}

TEST_CASE("db / linear") {
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(linear_to_db(100.0) == doctest::Approx(20.0).epsilon(1e-15));
  CHECK_THROWS_AS(linear_to_db(0.0), std::domain_error);
}
