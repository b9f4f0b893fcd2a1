#include <doctest.h>

#include "squant/presets.hpp"
#include "squant/scenario_io.hpp"
#include "squant/sweeps.hpp"
#include "squant/units.hpp"

using namespace squant;

TEST_CASE("band and quantum activity masks") {
  // Two bands x two quanta; one network transmits only in band 0, the other
  // only in quantum 1.
  Scenario sc;
  sc.grid = {100.0, 6, 6, {0, 0}};
  sc.frame.bands = {Band{600e6, 6e6}, Band{606e6, 6e6}};
  sc.frame.quanta = 2;

  Network a;
  a.id = "a";
  a.transmitter = {"a-tx", {300.0, 300.0}, dbm_to_watt(20.0), {}};
  a.bands = {0};
  sc.networks.push_back(a);

  Network b;
  b.id = "b";
  b.transmitter = {"b-tx", {600.0, 600.0}, dbm_to_watt(20.0), {}};
  b.quanta = {1};
  sc.networks.push_back(b);
  sc.validate();

  const HexGrid g = sc.grid.build();
  const ConsumptionMap m = aggregate(sc, g);
  REQUIRE(m.cells.size() == static_cast<std::size_t>(g.cell_count()) * 4);

  // Per-slice occupancy sums match the active transmitters of each slice.
  auto slice_sum = [&](int t, int bidx) {
    double s = 0.0;
    for (std::int64_t i = 0; i < g.cell_count(); ++i) s += m.at(i, t, bidx).occupancy_w;
    return s;
  };
  double a_alone = 0.0, b_alone = 0.0;
  for (std::int64_t i = 0; i < g.cell_count(); ++i) {
    const Point ctr = g.center(g.cell_at(i));
    a_alone += received_power(a.transmitter, ctr, sc.prop);
    b_alone += received_power(b.transmitter, ctr, sc.prop);
  }
  CHECK(slice_sum(0, 0) == doctest::Approx(a_alone).epsilon(1e-12));          // a only
  CHECK(slice_sum(0, 1) == doctest::Approx(0.0));                             // nobody
  CHECK(slice_sum(1, 0) == doctest::Approx(a_alone + b_alone).epsilon(1e-12));  // both
  CHECK(slice_sum(1, 1) == doctest::Approx(b_alone).epsilon(1e-12));          // b only

  // Totals span all four slices and conserve the enlarged spectrum space.
  CHECK(m.totals.total == doctest::Approx(4.0 * static_cast<double>(g.cell_count())));
  CHECK(m.totals.utilized + m.totals.forbidden + m.totals.available ==
        doctest::Approx(m.totals.total).epsilon(1e-12));

  SUBCASE("masks survive the JSON round-trip") {
    const Scenario back = scenario_from_json_text(scenario_to_json_text(sc));
    CHECK(back.frame.band_count() == 2);
    CHECK(back.frame.quantum_count() == 2);
    REQUIRE(back.networks[0].bands.size() == 1);
    CHECK(back.networks[0].bands[0] == 0);
    REQUIRE(back.networks[1].quanta.size() == 1);
    CHECK(back.networks[1].quanta[0] == 1);
    CHECK(scenario_to_json_text(back) == scenario_to_json_text(sc));
  }
  SUBCASE("out-of-range mask indices are rejected") {
    Scenario bad = sc;
    bad.networks[0].bands = {5};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
  }
}

TEST_CASE("sweeps are deterministic per seed") {
  const Mechanism mechs[] = {Mechanism::underlay, Mechanism::stppov};
  const int ns[] = {6};
  const auto base = presets::mechanism_comparison_topology(6, 1);
  const auto cfg = presets::comparison_config();
  const auto a = compare_sams(mechs, ns, 3, 7, base, cfg);
  const auto b = compare_sams(mechs, ns, 3, 7, base, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].metrics.n_scheduled == b[i].metrics.n_scheduled);
    CHECK(a[i].metrics.post_available == b[i].metrics.post_available);
    CHECK(a[i].metrics.lost_available == b[i].metrics.lost_available);
  }
}
