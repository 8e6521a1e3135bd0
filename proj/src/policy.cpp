// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "zapsim/policy.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zapsim {

const char* to_string(SurfDirection direction) {
    return direction == SurfDirection::up ? "up" : "down";
}

SurfPlan make_surf_plan(SurfDirection direction, std::vector<PlanEntry> order) {
    SurfPlan plan;
    plan.direction = direction;
    plan.order = std::move(order);
    plan.visited.assign(plan.order.size(), false);
    plan.next_due = 0;
    plan.selected = 0;
    return plan;
}

std::vector<int> candidate_window(const SurfPlan& plan, const PolicyParams& params) {
    if (params.max_wait < 1)
        throw std::invalid_argument("candidate_window: max_wait must be >= 1");
    if (plan.exhausted())
        throw std::invalid_argument("candidate_window: plan has no unvisited entries");
    std::vector<int> window;
    const int last = std::min(plan.next_due + params.max_wait, plan.size());
    for (int r = plan.next_due; r < last; ++r)
        if (!plan.visited[r])
            window.push_back(r + 1);
    return window;
}

Selection peek_next(const SurfPlan& plan, const PolicyParams& params,
                    const PhaseSchedule& schedule, double now_ms) {
    if (params.max_wait < 1)
        throw std::invalid_argument("peek_next: max_wait must be >= 1");
    if (plan.exhausted())
        throw std::invalid_argument("peek_next: plan has no unvisited entries");

    const int last = std::min(plan.next_due + params.max_wait, plan.size());
    int best = -1;
    double best_wait = 0.0;
    for (int r = plan.next_due; r < last; ++r) {
        if (plan.visited[r])
            continue;
        double wait = wait_until_keyframe(schedule, plan.order[r].sched_pos, now_ms);
        if (best < 0 || wait < best_wait) { // strict: equal waits keep the earlier index
            best = r;
            best_wait = wait;
        }
    }
    return Selection{best + 1, plan.order[best].session, plan.order[best].sched_pos, best_wait};
}

void apply_selection(SurfPlan& plan, const Selection& selection) {
    const int idx = selection.orig_index - 1;
    if (idx < 0 || idx >= plan.size() || plan.visited[idx])
        throw std::invalid_argument("apply_selection: selection does not fit the plan");
    plan.visited[idx] = true;
    plan.selected += 1;
    while (plan.next_due < plan.size() && plan.visited[plan.next_due])
        plan.next_due += 1;
}

Selection select_next(SurfPlan& plan, const PolicyParams& params, const PhaseSchedule& schedule,
                      double now_ms) {
    Selection selection = peek_next(plan, params, schedule, now_ms);
    apply_selection(plan, selection);
    return selection;
}

bool deferral_bound_check(std::span<const std::pair<int, int>> trace, const PolicyParams& params) {
    for (const auto& [n, r] : trace)
        if (std::abs(n - r) > params.max_wait - 1)
            return false;
    return true;
}

} // namespace zapsim
