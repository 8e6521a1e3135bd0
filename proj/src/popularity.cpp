// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "zapsim/popularity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace zapsim {

PopularityModel build_zipf(int session_count, double shape) {
    if (session_count < 1)
        throw std::invalid_argument("build_zipf: session_count must be >= 1");
    if (!(shape >= 0.0))
        throw std::invalid_argument("build_zipf: shape must be nonnegative");

    PopularityModel model;
    model.session_count = session_count;
    model.shape = shape;
    model.watch_prob.resize(session_count);
    model.watch_cdf.resize(session_count);

    double norm = 0.0;
    for (int i = 1; i <= session_count; ++i)
        norm += 1.0 / std::pow(static_cast<double>(i), shape);
    double cum = 0.0;
    for (int i = 1; i <= session_count; ++i) {
        double p = (1.0 / std::pow(static_cast<double>(i), shape)) / norm;
        model.watch_prob[i - 1] = p;
        cum += p;
        model.watch_cdf[i - 1] = cum;
    }
    model.watch_cdf[session_count - 1] = 1.0;
    return model;
}

int sample_watch(const PopularityModel& model, double uniform) {
    const auto& cdf = model.watch_cdf;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), uniform);
    if (it == cdf.end())
        return model.session_count;
    return static_cast<int>(it - cdf.begin()) + 1;
}

SwitchingModel make_switching_model(PopularityModel model) {
    SwitchingModel sw;
    sw.kind = SwitchingKind::destination_proportional;
    sw.underlying = std::move(model);
    return sw;
}

double switch_prob(const SwitchingModel& model, int source, int dest) {
    const int n = model.underlying.session_count;
    if (source < 1 || source > n || dest < 1 || dest > n)
        throw std::invalid_argument("switch_prob: rank out of range");
    if (source == dest)
        throw std::invalid_argument("switch_prob: source and dest must differ");
    const auto& pi = model.underlying.watch_prob;
    return pi[dest - 1] / (1.0 - pi[source - 1]);
}

} // namespace zapsim
