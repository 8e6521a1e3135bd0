// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zapsim/phase.hpp"

namespace zapsim {

enum class SurfDirection { up, down };

const char* to_string(SurfDirection direction);

struct PlanEntry {
    int session;   // popularity rank
    int sched_pos; // position in the schedule's grid (the network grid)
};

// One surfing period's switching order. Entry i (0-based) is the channel at
// original order index i+1: the (i+1)-th channel from the start channel along
// the surf direction on the client's grid. Mutable per-episode state; confine
// to one worker.
struct SurfPlan {
    SurfDirection direction = SurfDirection::up;
    std::vector<PlanEntry> order;
    std::vector<bool> visited; // aligned with order
    int next_due = 0;          // r_min as a 0-based index
    int selected = 0;

    int size() const { return static_cast<int>(order.size()); }
    bool exhausted() const { return selected >= size(); }
};

SurfPlan make_surf_plan(SurfDirection direction, std::vector<PlanEntry> order);

struct PolicyParams {
    int max_wait = 1;   // dW, in requests; 1 disables reordering
    int separation = 0; // S, carried for reporting only
};

// Unvisited original indices eligible at the next press: the due channel
// r_min plus look-ahead up to r_min + dW - 1. 1-based, ascending, never empty
// while the plan has unvisited entries.
std::vector<int> candidate_window(const SurfPlan& plan, const PolicyParams& params);

struct Selection {
    int orig_index; // 1-based original order index
    int session;
    int sched_pos;
    double wait_ms;
};

// Window member with the minimum key-frame wait at now_ms; ties go to the
// smallest original index. Does not touch the plan.
Selection peek_next(const SurfPlan& plan, const PolicyParams& params,
                    const PhaseSchedule& schedule, double now_ms);

// Marks the selection visited and advances next_due past the visited prefix.
void apply_selection(SurfPlan& plan, const Selection& selection);

// peek_next + apply_selection.
Selection select_next(SurfPlan& plan, const PolicyParams& params, const PhaseSchedule& schedule,
                      double now_ms);

// True iff every (request index n, original index r) pair satisfies
// |n - r| <= dW - 1. Both indices 1-based.
bool deferral_bound_check(std::span<const std::pair<int, int>> trace, const PolicyParams& params);

} // namespace zapsim
