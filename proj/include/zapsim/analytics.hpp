// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <span>
#include <string>

#include "zapsim/grid.hpp"
#include "zapsim/popularity.hpp"

namespace zapsim {

// Exact closed-form evaluation over a grid: no random numbers involved.
// Complements the Monte Carlo engine as an independent cross-check.

struct SwitchCountReport {
    std::string grid_label;
    int session_count = 0;
    double shape = 0.0;
    double expected_switches = 0.0;
};

// Mean minimal circular switch count over all ordered (source, dest) pairs,
// weighted by watch probability of the source and switch probability of the
// destination. Requires at least two sessions.
double expected_switches(const ChannelGrid& grid, const SwitchingModel& switching);

SwitchCountReport make_switch_count_report(const std::string& label, const ChannelGrid& grid,
                                           const SwitchingModel& switching);

// Euclidean (L2) distance between two position-indexed probability vectors.
// Lengths must match.
double distribution_distance(std::span<const double> a, std::span<const double> b);

} // namespace zapsim
