// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <vector>

namespace zapsim {

// Zipf watch distribution over N sessions ranked by popularity.
// Ranks are 1-based throughout: rank 1 is the most popular session.
struct PopularityModel {
    int session_count = 0;
    double shape = 1.0;
    std::vector<double> watch_prob; // watch_prob[r-1] = pi(r)
    std::vector<double> watch_cdf;  // prefix sums, watch_cdf[N-1] == 1
};

// pi(i) = (1/i^s) / sum_n (1/n^s). Throws std::invalid_argument if
// session_count < 1 or shape < 0.
PopularityModel build_zipf(int session_count, double shape);

// Smallest rank r with watch_cdf(r) > uniform; clamps to N for draws in the
// sub-1e-12 gap above the final CDF entry.
int sample_watch(const PopularityModel& model, double uniform);

enum class SwitchingKind { destination_proportional };

// Inter-channel switching probabilities p_{i,j}, driven by the watch
// distribution. Immutable once built; safe to share across workers.
struct SwitchingModel {
    SwitchingKind kind = SwitchingKind::destination_proportional;
    PopularityModel underlying;
};

SwitchingModel make_switching_model(PopularityModel model);

// p_{source,dest}. Destination-proportional: pi(dest) / (1 - pi(source)),
// i.e. the watch distribution conditioned on leaving the source session.
// Throws std::invalid_argument if source == dest or either rank is out of range.
double switch_prob(const SwitchingModel& model, int source, int dest);

} // namespace zapsim
