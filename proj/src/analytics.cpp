// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "zapsim/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace zapsim {

double expected_switches(const ChannelGrid& grid, const SwitchingModel& switching) {
    const int n = grid.session_count();
    if (n < 2)
        throw std::invalid_argument("expected_switches: need at least two sessions");
    if (switching.underlying.session_count != n)
        throw std::invalid_argument("expected_switches: grid / switching model size mismatch");

    double total = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double watch = switching.underlying.watch_prob[i - 1];
        double inner = 0.0;
        for (int j = 1; j <= n; ++j) {
            if (j == i)
                continue;
            inner += switch_prob(switching, i, j) * grid_distances(grid, i, j).min;
        }
        total += watch * inner;
    }
    return total;
}

SwitchCountReport make_switch_count_report(const std::string& label, const ChannelGrid& grid,
                                           const SwitchingModel& switching) {
    SwitchCountReport report;
    report.grid_label = label;
    report.session_count = grid.session_count();
    report.shape = switching.underlying.shape;
    report.expected_switches = expected_switches(grid, switching);
    return report;
}

double distribution_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distribution_distance: length mismatch");
    double sumsq = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sumsq += diff * diff;
    }
    return std::sqrt(sumsq);
}

} // namespace zapsim
