// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "zapsim/popularity.hpp"

namespace zapsim {

enum class OrderingKind { identity, one_step, two_step, randomized };

const char* to_string(OrderingKind kind);

// Circular placement of N sessions on N slots: a bijection between popularity
// ranks (1-based) and circular positions (0-based, clockwise = increasing).
class ChannelGrid {
  public:
    ChannelGrid(std::vector<int> rank_at_position, OrderingKind kind);

    int session_count() const { return static_cast<int>(rank_at_.size()); }
    OrderingKind kind() const { return kind_; }
    int position_of(int rank) const { return position_of_[rank - 1]; }
    int rank_at(int position) const { return rank_at_[position]; }

  private:
    std::vector<int> rank_at_;     // position -> rank
    std::vector<int> position_of_; // rank-1 -> position
    OrderingKind kind_;
};

// Ranks laid out in rank order: position i holds rank i+1.
ChannelGrid make_identity_grid(int session_count);

// Rank 1 at position 0; even ranks continue clockwise, odd ranks run
// counterclockwise from the other side.
ChannelGrid make_one_step_grid(int session_count);

// Ranks assigned two at a time, alternating direction: ranks 1,2 clockwise,
// 3,4 counterclockwise, 5,6 clockwise, ...
ChannelGrid make_two_step_grid(int session_count);

// Pseudo-randomized client ordering: slot k receives a session drawn from the
// watch distribution renormalized over the still-unassigned sessions
// (inverse-CDF on uniforms[k], smallest index whose cumulative weight covers
// the draw). Popular sessions are biased toward early slots.
// uniforms must hold one value in [0,1) per session.
ChannelGrid make_randomized_grid(const PopularityModel& base, std::span<const double> uniforms);

struct GridDistances {
    int up;  // switches pressing "up" (clockwise)
    int down;
    int min;
};

// Throws std::invalid_argument if from == to.
GridDistances grid_distances(const ChannelGrid& grid, int from_rank, int to_rank);

// Watch probability sitting at each circular position under the randomized
// placement, in the shared position frame of the original grid. Original and
// randomized grids must agree on N.
std::vector<double> remap_probabilities(const PopularityModel& base, const ChannelGrid& original,
                                        const ChannelGrid& randomized);

// Position-ordered rank list, e.g. "1,2,4,6,5,3". One line, no trailing newline.
std::string grid_csv_line(const ChannelGrid& grid);

} // namespace zapsim
