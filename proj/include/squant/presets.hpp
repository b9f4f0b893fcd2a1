#pragma once

#include "squant/sam.hpp"
#include "squant/scenario.hpp"
#include "squant/topology.hpp"

namespace squant {

/// Canonical experiment setups used by the CLI and the test suites.
namespace presets {

/// 676-cell default region, one omnidirectional 15 dBm transmitter at
/// (1000, 2000).
Scenario single_transmitter();

/// single_transmitter() plus an omnidirectional receiver at (1200, 1200) with
/// beta_min 6 dB, -106 dBm noise and an experienced SINR of 33 dB.
Scenario transmitter_and_receiver();

/// Short-range link on a 2000 x 2000 m region with the receiver placed at a
/// hexagon vertex, maximally distant from the side-100 cell centers. Used for
/// the discretization-error sweep.
Scenario discretization_probe();

/// 16 secondary networks with 112 transceivers over 4.3 km x 3.7 km, no
/// incumbent: the spectrum-recovery setup.
TopologyParams recovery_topology(std::uint64_t seed);

/// Incumbent active at the region center (30 dBm, service range 500 m,
/// worst-case receivers on the range circle with 20 dB experienced SINR and
/// 10 dB minimum); secondary networks with 100 m range and 3 dB minimum SINR.
TopologyParams mechanism_comparison_topology(int n_secondary, std::uint64_t seed);

/// Incumbent playing an active role: primary receivers moved to 250 m with
/// physical link budgets and positions known to the scheduler.
TopologyParams active_incumbent_topology(int n_requests, std::uint64_t seed);

/// Shared mechanism configuration for the comparison experiments.
SamConfig comparison_config();

/// Three omnidirectional transmitters and one declared receiver on a
/// 2 km x 2 km region with a thermal noise floor: the sensing / estimation
/// testbed.
Scenario estimation_scene();

}  // namespace presets

}  // namespace squant
