// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "zapsim/grid.hpp"

#include <stdexcept>
#include <utility>

namespace zapsim {

const char* to_string(OrderingKind kind) {
    switch (kind) {
    case OrderingKind::identity: return "identity";
    case OrderingKind::one_step: return "one-step";
    case OrderingKind::two_step: return "two-step";
    case OrderingKind::randomized: return "randomized";
    }
    return "?";
}

ChannelGrid::ChannelGrid(std::vector<int> rank_at_position, OrderingKind kind)
    : rank_at_(std::move(rank_at_position)), kind_(kind) {
    const int n = static_cast<int>(rank_at_.size());
    if (n < 1)
        throw std::invalid_argument("ChannelGrid: needs at least one session");
    position_of_.assign(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        int rank = rank_at_[pos];
        if (rank < 1 || rank > n || position_of_[rank - 1] != -1)
            throw std::invalid_argument("ChannelGrid: placement is not a bijection");
        position_of_[rank - 1] = pos;
    }
}

ChannelGrid make_identity_grid(int session_count) {
    if (session_count < 1)
        throw std::invalid_argument("make_identity_grid: session_count must be >= 1");
    std::vector<int> ranks(session_count);
    for (int i = 0; i < session_count; ++i)
        ranks[i] = i + 1;
    return ChannelGrid(std::move(ranks), OrderingKind::identity);
}

ChannelGrid make_one_step_grid(int session_count) {
    if (session_count < 1)
        throw std::invalid_argument("make_one_step_grid: session_count must be >= 1");
    const int n = session_count;
    std::vector<int> ranks(n, 0);
    ranks[0] = 1;
    for (int r = 2; r <= n; ++r) {
        int pos = (r % 2 == 0) ? r / 2 : n - (r - 1) / 2;
        ranks[pos] = r;
    }
    return ChannelGrid(std::move(ranks), OrderingKind::one_step);
}

ChannelGrid make_two_step_grid(int session_count) {
    if (session_count < 1)
        throw std::invalid_argument("make_two_step_grid: session_count must be >= 1");
    const int n = session_count;
    std::vector<int> ranks(n, 0);
    int cw = 0, ccw = n - 1;
    bool clockwise = true;
    int r = 1;
    while (r <= n) {
        for (int k = 0; k < 2 && r <= n; ++k, ++r) {
            if (clockwise)
                ranks[cw++] = r;
            else
                ranks[ccw--] = r;
        }
        clockwise = !clockwise;
    }
    return ChannelGrid(std::move(ranks), OrderingKind::two_step);
}

ChannelGrid make_randomized_grid(const PopularityModel& base, std::span<const double> uniforms) {
    const int n = base.session_count;
    if (static_cast<int>(uniforms.size()) != n)
        throw std::invalid_argument("make_randomized_grid: need one uniform per session");

    std::vector<int> unassigned(n);   // popularity-ordered
    std::vector<double> weight(n);
    for (int i = 0; i < n; ++i) {
        unassigned[i] = i + 1;
        weight[i] = base.watch_prob[i];
    }
    std::vector<int> ranks(n);
    double total = 1.0;
    for (int k = 0; k < n; ++k) {
        const int remaining = n - k;
        const double target = uniforms[k] * total;
        double cum = 0.0;
        int loc = remaining - 1; // fp fallback: final cumulative may undershoot total
        for (int i = 0; i < remaining; ++i) {
            cum += weight[i];
            if (target <= cum) {
                loc = i;
                break;
            }
        }
        ranks[k] = unassigned[loc];
        total -= weight[loc];
        unassigned.erase(unassigned.begin() + loc);
        weight.erase(weight.begin() + loc);
    }
    return ChannelGrid(std::move(ranks), OrderingKind::randomized);
}

GridDistances grid_distances(const ChannelGrid& grid, int from_rank, int to_rank) {
    if (from_rank == to_rank)
        throw std::invalid_argument("grid_distances: from and to must differ");
    const int n = grid.session_count();
    const int pf = grid.position_of(from_rank);
    const int pt = grid.position_of(to_rank);
    const int up = ((pt - pf) % n + n) % n;
    const int down = n - up;
    return GridDistances{up, down, up < down ? up : down};
}

std::vector<double> remap_probabilities(const PopularityModel& base, const ChannelGrid& original,
                                        const ChannelGrid& randomized) {
    const int n = base.session_count;
    if (original.session_count() != n || randomized.session_count() != n)
        throw std::invalid_argument("remap_probabilities: session counts differ");
    std::vector<double> profile(n);
    for (int pos = 0; pos < n; ++pos)
        profile[pos] = base.watch_prob[randomized.rank_at(pos) - 1];
    return profile;
}

std::string grid_csv_line(const ChannelGrid& grid) {
    std::string line;
    for (int pos = 0; pos < grid.session_count(); ++pos) {
        if (pos > 0)
            line += ',';
        line += std::to_string(grid.rank_at(pos));
    }
    return line;
}

} // namespace zapsim
