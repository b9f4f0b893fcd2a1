#include <doctest.h>

#include <cmath>
#include <random>

#include "squant/estimation.hpp"
#include "squant/presets.hpp"
#include "squant/units.hpp"

using namespace squant;

namespace {

EstimationInputs inputs_for(const Scenario& sc) {
  EstimationInputs in;
  for (const auto* t : transmitters_of(sc)) in.known_txs.push_back(*t);
  for (const auto& n : sc.networks)
    for (const auto& rx : n.receivers) in.declared_rxs.push_back(rx);
  in.bounds = sc.bounds;
  in.bound_form = sc.bound_form;
  return in;
}

}  // namespace

TEST_CASE("sensor grid deployment") {
  const SensorGrid g = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, 3);
  CHECK(g.section_count() == 16);
  CHECK(g.sensors.size() == 48);
  int per_section[16] = {};
  for (const auto& s : g.sensors) {
    CHECK(g.section_of(s.location) == s.section);
    ++per_section[s.section];
  }
  for (int c : per_section) CHECK(c == 3);  // at least one per section by construction
  CHECK_THROWS_AS(SensorGrid::regular({0, 0}, 100, 100, 2, 2, 0), ConfigError);
}

TEST_CASE("measurement simulation") {
  const Scenario sc = presets::estimation_scene();
  const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, 4);

  SUBCASE("noiseless measurements equal the link budget") {
    const auto meas = simulate_measurements(sc, sensors, 0.0, 1);
    const auto txs = transmitters_of(sc);
    for (const auto& m : meas) {
      const auto& s = sensors.sensors[m.sensor_id];
      for (std::size_t t = 0; t < txs.size(); ++t)
        CHECK(m.per_tx_w[t] == doctest::Approx(received_power(*txs[t], s.location, sc.prop)));
    }
  }
  SUBCASE("deterministic per seed") {
    const auto a = simulate_measurements(sc, sensors, 6.0, 12);
    const auto b = simulate_measurements(sc, sensors, 6.0, 12);
    const auto c = simulate_measurements(sc, sensors, 6.0, 13);
    REQUIRE(a.size() == b.size());
    bool all_equal = true, any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t t = 0; t < a[i].per_tx_w.size(); ++t) {
        all_equal = all_equal && a[i].per_tx_w[t] == b[i].per_tx_w[t];
        any_diff = any_diff || a[i].per_tx_w[t] != c[i].per_tx_w[t];
      }
    CHECK(all_equal);
    CHECK(any_diff);
  }
  SUBCASE("shadowing spread matches the configured sigma") {
    // Sample standard deviation of (measured - true) in dB across many draws.
    const auto txs = transmitters_of(sc);
    double sum = 0.0, sum2 = 0.0;
    int n = 0;
    for (std::uint64_t seed = 0; seed < 70; ++seed) {
      const auto meas = simulate_measurements(sc, sensors, 8.0, 1000 + seed);
      for (const auto& m : meas) {
        const auto& s = sensors.sensors[m.sensor_id];
        for (std::size_t t = 0; t < txs.size(); ++t) {
          const double truth = received_power(*txs[t], s.location, sc.prop);
          const double db = 10.0 * std::log10(m.per_tx_w[t] / truth);
          sum += db;
          sum2 += db * db;
          ++n;
        }
      }
    }
    REQUIRE(n >= 10000);
    const double mean = sum / n;
    const double sd = std::sqrt(sum2 / n - mean * mean);
    CHECK(sd > 7.0);
    CHECK(sd < 9.0);
  }
}

TEST_CASE("propagation estimation") {
  const Scenario sc = presets::estimation_scene();
  const auto txs = transmitters_of(sc);

  SUBCASE("noiseless fit recovers the exponent exactly") {
    const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, 4);
    const auto meas = simulate_measurements(sc, sensors, 0.0, 1);
    const auto est = estimate_propagation(meas, sensors, txs);
    for (const auto& s : est.sections) {
      CHECK_FALSE(s.underdetermined);
      CHECK(std::abs(s.alpha_hat - 3.5) < 1e-6);
      CHECK(std::abs(s.shadow_db) < 1e-6);
    }
  }
  SUBCASE("a single sample leaves the section underdetermined") {
    // One sensor, one transmitter: one (distance, power) pair per section.
    Scenario one_tx = sc;
    one_tx.networks.resize(1);
    one_tx.networks[0].receivers.clear();
    const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 2, 2, 1);
    const auto meas = simulate_measurements(one_tx, sensors, 0.0, 1);
    const auto one = transmitters_of(one_tx);
    const auto est = estimate_propagation(meas, sensors, one);
    for (const auto& s : est.sections) CHECK(s.underdetermined);
    // They inherit the region-wide fit, which pools the four samples.
    CHECK(est.sections[0].alpha_hat == doctest::Approx(est.region.alpha_hat));
  }
  SUBCASE("exponent recovered within 0.3 in at least 90 of 100 seeds at sigma 4") {
    const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, 16);
    int good = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto meas = simulate_measurements(sc, sensors, 4.0, 2000 + seed);
      const auto est = estimate_propagation(meas, sensors, txs);
      bool ok = true;
      for (const auto& s : est.sections) ok = ok && std::abs(s.alpha_hat - 3.5) < 0.3;
      if (ok) ++good;
    }
    CHECK(good >= 90);
  }
}

TEST_CASE("estimated maps") {
  const Scenario sc = presets::estimation_scene();
  const HexGrid grid = sc.grid.build();
  const ConsumptionMap truth = aggregate(sc, grid);
  const auto txs = transmitters_of(sc);

  SUBCASE("noiseless pipeline reproduces the ground truth") {
    const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, 4);
    const auto meas = simulate_measurements(sc, sensors, 0.0, 1);
    const auto prop = estimate_propagation(meas, sensors, txs);
    const auto est = estimate_maps(meas, sensors, prop, inputs_for(sc), grid);
    for (std::size_t i = 0; i < truth.cells.size(); ++i) {
      CHECK(est.map.cells[i].occupancy_w ==
            doctest::Approx(truth.cells[i].occupancy_w).epsilon(1e-9));
      CHECK(est.map.cells[i].opportunity_w ==
            doctest::Approx(truth.cells[i].opportunity_w).epsilon(1e-9));
    }
    const auto err = map_error(est.map, truth);
    CHECK(err.mean_abs_occupancy_db < 1e-9);
    CHECK(err.availability_confusion[1][0] == 0);
    CHECK(err.availability_confusion[0][1] == 0);
  }

  SUBCASE("error is non-increasing in sensor density") {
    double prev = 1e300;
    for (int k : {1, 4, 16}) {
      const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, k);
      double mean = 0.0;
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto meas = simulate_measurements(sc, sensors, 6.0, 3000 + seed);
        const auto prop = estimate_propagation(meas, sensors, txs);
        const auto est = estimate_maps(meas, sensors, prop, inputs_for(sc), grid);
        mean += map_error(est.map, truth).mean_abs_occupancy_db / 50.0;
      }
      CHECK(mean <= prev);
      prev = mean;
    }
  }

  SUBCASE("zero transmitters leave the noise floor everywhere") {
    Scenario empty;
    empty.grid = sc.grid;
    empty.ambient_noise_w = sc.ambient_noise_w;
    const SensorGrid sensors = SensorGrid::regular({0, 0}, 2000, 2000, 4, 4, 4);
    const auto meas = simulate_measurements(empty, sensors, 0.0, 1);
    const auto prop = estimate_propagation(meas, sensors, {});
    EstimationInputs in;
    in.bounds = empty.bounds;
    const auto est = estimate_maps(meas, sensors, prop, in, grid);
    for (const auto& c : est.map.cells)
      CHECK(c.occupancy_w == doctest::Approx(empty.ambient_noise_w));
  }

  SUBCASE("cells far from every sensor are low-confidence") {
    // All sensors packed into one corner section.
    SensorGrid sensors = SensorGrid::regular({0, 0}, 500, 500, 1, 1, 4);
    const auto meas = simulate_measurements(sc, sensors, 0.0, 1);
    const auto prop = estimate_propagation(meas, sensors, txs);
    const auto est = estimate_maps(meas, sensors, prop, inputs_for(sc), grid);
    bool saw_low = false, saw_high = false;
    for (std::size_t i = 0; i < est.confidence.size(); ++i) {
      saw_low = saw_low || est.confidence[i] < 1.0;
      saw_high = saw_high || est.confidence[i] == 1.0;
    }
    CHECK(saw_low);
    CHECK(saw_high);
  }
}

TEST_CASE("map error scoring") {
  const Scenario sc = presets::estimation_scene();
  const ConsumptionMap truth = aggregate(sc);

  SUBCASE("identical maps score zero") {
    const auto err = map_error(truth, truth);
    CHECK(err.mean_abs_occupancy_db == 0.0);
    CHECK(err.max_abs_occupancy_db == 0.0);
  }
  SUBCASE("a uniform +3 dB bias scores exactly 3") {
    ConsumptionMap biased = truth;
    for (auto& c : biased.cells) c.occupancy_w *= db_to_linear(3.0);
    const auto err = map_error(biased, truth);
    CHECK(err.mean_abs_occupancy_db == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(err.max_abs_occupancy_db == doctest::Approx(3.0).epsilon(1e-9));
  }
  SUBCASE("random perturbations match a direct recomputation") {
    ConsumptionMap noisy = truth;
    std::mt19937_64 rng(4);
    std::normal_distribution<double> n(0.0, 5.0);
    double want = 0.0;
    for (auto& c : noisy.cells) {
      const double db = n(rng);
      c.occupancy_w *= db_to_linear(db);
      want += std::abs(db);
    }
    want /= static_cast<double>(noisy.cells.size());
    const auto err = map_error(noisy, truth);
    CHECK(err.mean_abs_occupancy_db == doctest::Approx(want).epsilon(1e-9));
  }
  SUBCASE("grid mismatch is rejected") {
    Scenario other = sc;
    other.grid.cols -= 1;
    const ConsumptionMap small = aggregate(other);
    CHECK_THROWS_AS(map_error(small, truth), ConfigError);
  }
}
