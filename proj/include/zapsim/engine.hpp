// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <vector>

#include "zapsim/grid.hpp"
#include "zapsim/phase.hpp"
#include "zapsim/policy.hpp"
#include "zapsim/popularity.hpp"
#include "zapsim/rng.hpp"

namespace zapsim {

// Who decides the surfing order the viewer walks through.
enum class ClientOrderingKind {
    same_as_network, // client surfs the network grid directly
    randomized       // client surfs a popularity-biased shuffle, redrawn per episode
};

// What happens between the moment a channel is shown and the next press.
enum class DwellKind { zero, fixed, uniform_gop };

const char* to_string(ClientOrderingKind kind);
const char* to_string(DwellKind kind);

struct ScenarioConfig {
    int session_count = 100;
    double shape = 1.0;
    double gop_ms = 1000.0;
    int separation = 4; // S: channels per full cycle of key-frame phases
    int max_wait = 4;   // deferral bound; 1 = surf strictly in order
    OrderingKind ordering = OrderingKind::one_step;
    ClientOrderingKind client_ordering = ClientOrderingKind::same_as_network;
    ShiftKind shifts = ShiftKind::laddered;
    DwellKind dwell = DwellKind::uniform_gop;
    double dwell_fixed_ms = 0.0; // used when dwell == fixed
    long long event_budget = 1'000'000;
    std::uint64_t master_seed = 1;
};

// Throws std::invalid_argument on the first violated constraint.
void validate(const ScenarioConfig& config);

// Immutable inputs shared by every episode of a scenario.
struct ScenarioInputs {
    ChannelGrid network;
    PhaseSchedule laddered; // indexed by network position; basis for laddered runs
    PopularityModel popularity;
    SwitchingModel switching;
};

ScenarioInputs build_inputs(const ScenarioConfig& config);

struct SwitchRecord {
    int request_index; // n-th press of the episode, 1-based
    int orig_index;    // slot in the original surfing order, 1-based
    int session;       // rank shown by this switch
    int sched_pos;     // network position whose key-frame shift applied
    double press_ms;   // absolute time of the press
    double wait_ms;    // latency until the key frame
};

struct EpisodeResult {
    int start = 0;
    int target = 0;
    SurfDirection direction = SurfDirection::up;
    int switch_count = 0;
    double accum_wait_ms = 0.0;
    std::vector<SwitchRecord> switches;
};

// Test hook: sees every selection between its computation and its application,
// with the plan still in its pre-selection state.
class EpisodeProbe {
  public:
    virtual ~EpisodeProbe() = default;
    virtual void on_switch(const SurfPlan& plan, const PolicyParams& params,
                           const PhaseSchedule& schedule, double now_ms,
                           const Selection& chosen) = 0;
};

// One surfing period: draws start and target, walks the client grid in the
// shorter direction under the reordering policy until the target is shown.
// All randomness comes from `rng`; per-episode client grids and shift
// schedules are drawn here when the config asks for them.
EpisodeResult run_episode(const ScenarioConfig& config, const ScenarioInputs& inputs,
                          SplitMix64& rng, EpisodeProbe* probe = nullptr);

// Order-independent accumulator for per-switch waits and per-episode totals.
// Wait quantiles come from a fixed 10000-bin histogram over [0, gop), so the
// reported median/p95 are upper bin edges (0.1 ms resolution at gop = 1000).
class AggregateStats {
  public:
    AggregateStats() = default;
    explicit AggregateStats(double gop_ms);

    void add_wait(double wait_ms);
    void add_episode(int switch_count, double accum_wait_ms, double target_wait_ms);

    long long event_count() const { return event_count_; }
    long long episode_count() const { return episode_count_; }
    double gop_ms() const { return gop_ms_; }

    double mean_wait_ms() const;
    double median_wait_ms() const;
    double p95_wait_ms() const;
    double frac_le_250ms() const;
    double mean_switches() const;
    double mean_accum_wait_ms() const;
    double mean_target_wait_ms() const;
    double se_mean_wait_ms() const;
    double se_mean_switches() const;

    // Fraction of waits strictly below an edge, resolved on the fine grid.
    double fraction_below(double edge_ms) const;
    double quantile_ms(double q) const; // upper edge of the q-quantile bin

    const std::vector<long long>& fine_histogram() const { return bins_; }
    double fine_bin_width_ms() const { return bin_width_; }

    static constexpr int kFineBins = 10000;
    static constexpr double kCriticalMs = 250.0;

  private:
    double gop_ms_ = 0.0;
    double bin_width_ = 0.0;
    std::vector<long long> bins_;
    long long event_count_ = 0;
    long long le_critical_ = 0;
    double wait_sum_ = 0.0;
    double wait_sumsq_ = 0.0;
    long long episode_count_ = 0;
    long long switches_sum_ = 0;
    double switches_sumsq_ = 0.0;
    double accum_sum_ = 0.0;
    double target_wait_sum_ = 0.0;
};

// Runs episodes until `event_budget` switch events have been recorded; the
// episode that crosses the budget still completes. Episode i draws from a
// substream keyed by (master_seed, i), and statistics are folded strictly in
// episode order, so the result is bit-identical for every thread count.
AggregateStats run_scenario(const ScenarioConfig& config, int threads = 1);

// 100 * (baseline - value) / baseline; positive = better than baseline.
// Throws std::invalid_argument when the baseline mean is zero.
double improvement_pct(double baseline_mean, double scenario_mean);
double improvement_vs_baseline(const AggregateStats& stats, const AggregateStats& baseline);
double accum_improvement_vs_baseline(const AggregateStats& stats, const AggregateStats& baseline);
double switch_overhead_pct(const AggregateStats& stats, const AggregateStats& baseline);

} // namespace zapsim
