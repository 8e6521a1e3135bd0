// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "zapsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>

namespace zapsim {

const char* to_string(ClientOrderingKind kind) {
    return kind == ClientOrderingKind::same_as_network ? "same-as-network" : "randomized";
}

const char* to_string(DwellKind kind) {
    switch (kind) {
    case DwellKind::zero: return "zero";
    case DwellKind::fixed: return "fixed";
    default: return "uniform-gop";
    }
}

void validate(const ScenarioConfig& config) {
    if (config.session_count < 2)
        throw std::invalid_argument("config: session_count must be >= 2");
    if (config.shape < 0.0 || !std::isfinite(config.shape))
        throw std::invalid_argument("config: shape must be finite and >= 0");
    if (config.gop_ms <= 0.0 || !std::isfinite(config.gop_ms))
        throw std::invalid_argument("config: gop_ms must be finite and > 0");
    if (config.shifts == ShiftKind::laddered && config.separation < 2)
        throw std::invalid_argument("config: separation must be >= 2 with laddered shifts");
    if (config.max_wait < 1)
        throw std::invalid_argument("config: max_wait must be >= 1");
    if (config.dwell == DwellKind::fixed &&
        (config.dwell_fixed_ms < 0.0 || !std::isfinite(config.dwell_fixed_ms)))
        throw std::invalid_argument("config: fixed dwell must be finite and >= 0");
    if (config.event_budget < 1)
        throw std::invalid_argument("config: event_budget must be >= 1");
    if (config.ordering == OrderingKind::randomized)
        throw std::invalid_argument(
            "config: the network grid must be deterministic; randomized placements are "
            "selected through client_ordering");
}

ScenarioInputs build_inputs(const ScenarioConfig& config) {
    validate(config);
    PopularityModel popularity = build_zipf(config.session_count, config.shape);
    SwitchingModel switching = make_switching_model(popularity);

    ChannelGrid network = [&] {
        switch (config.ordering) {
        case OrderingKind::identity: return make_identity_grid(config.session_count);
        case OrderingKind::two_step: return make_two_step_grid(config.session_count);
        default: return make_one_step_grid(config.session_count);
        }
    }();

    PhaseSchedule laddered;
    if (config.shifts == ShiftKind::laddered || config.separation >= 2) {
        laddered = build_laddered(config.gop_ms, config.separation, config.session_count);
    } else {
        // Placeholder carrier; randomized runs redraw shifts per episode.
        laddered.gop_ms = config.gop_ms;
        laddered.separation = config.separation;
        laddered.shift_ms.assign(static_cast<std::size_t>(config.session_count), 0.0);
        laddered.kind = ShiftKind::laddered;
    }

    return ScenarioInputs{std::move(network), std::move(laddered), std::move(popularity),
                          std::move(switching)};
}

EpisodeResult run_episode(const ScenarioConfig& config, const ScenarioInputs& inputs,
                          SplitMix64& rng, EpisodeProbe* probe) {
    const int n = config.session_count;

    // Draw order is part of the reproducibility contract: start, target,
    // client grid, shifts, press phase, then one dwell between presses.
    const int start = sample_watch(inputs.popularity, rng.next_double());
    int target = start;
    while (target == start)
        target = sample_watch(inputs.popularity, rng.next_double());

    ChannelGrid client = inputs.network;
    if (config.client_ordering == ClientOrderingKind::randomized) {
        std::vector<double> uniforms(static_cast<std::size_t>(n));
        for (double& u : uniforms)
            u = rng.next_double();
        client = make_randomized_grid(inputs.popularity, uniforms);
    }

    PhaseSchedule schedule = inputs.laddered;
    if (config.shifts == ShiftKind::randomized) {
        std::vector<double> uniforms(static_cast<std::size_t>(n));
        for (double& u : uniforms)
            u = rng.next_double();
        schedule = build_randomized_shifts(config.gop_ms, uniforms);
    }

    double now = rng.next_double() * config.gop_ms;

    const GridDistances dist = grid_distances(client, start, target);
    const SurfDirection direction = dist.up <= dist.down ? SurfDirection::up : SurfDirection::down;
    const int step = direction == SurfDirection::up ? 1 : -1;

    // Original surfing order: every other session once, walking the client
    // grid in the chosen direction. Phases always follow network positions.
    const int start_pos = client.position_of(start);
    std::vector<PlanEntry> order;
    order.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k) {
        const int pos = ((start_pos + step * k) % n + n) % n;
        const int session = client.rank_at(pos);
        order.push_back(PlanEntry{session, inputs.network.position_of(session)});
    }

    SurfPlan plan = make_surf_plan(direction, std::move(order));
    const PolicyParams params{config.max_wait, config.separation};

    EpisodeResult result;
    result.start = start;
    result.target = target;
    result.direction = direction;

    for (;;) {
        const Selection chosen = peek_next(plan, params, schedule, now);
        if (probe)
            probe->on_switch(plan, params, schedule, now, chosen);
        apply_selection(plan, chosen);

        result.switch_count += 1;
        result.switches.push_back(SwitchRecord{result.switch_count, chosen.orig_index,
                                               chosen.session, chosen.sched_pos, now,
                                               chosen.wait_ms});
        result.accum_wait_ms += chosen.wait_ms;
        now += chosen.wait_ms;

        if (chosen.session == target)
            break;

        switch (config.dwell) {
        case DwellKind::zero: break;
        case DwellKind::fixed: now += config.dwell_fixed_ms; break;
        case DwellKind::uniform_gop: now += rng.next_double() * config.gop_ms; break;
        }
    }
    return result;
}

AggregateStats::AggregateStats(double gop_ms) : gop_ms_(gop_ms) {
    if (gop_ms <= 0.0 || !std::isfinite(gop_ms))
        throw std::invalid_argument("AggregateStats: gop_ms must be finite and > 0");
    bin_width_ = gop_ms_ / kFineBins;
    bins_.assign(kFineBins, 0);
}

void AggregateStats::add_wait(double wait_ms) {
    if (bins_.empty())
        throw std::logic_error("AggregateStats: add_wait on an uninitialized accumulator");
    event_count_ += 1;
    wait_sum_ += wait_ms;
    wait_sumsq_ += wait_ms * wait_ms;
    if (wait_ms <= kCriticalMs)
        le_critical_ += 1;
    auto bin = static_cast<long long>(wait_ms / bin_width_);
    bin = std::clamp<long long>(bin, 0, kFineBins - 1);
    bins_[static_cast<std::size_t>(bin)] += 1;
}

void AggregateStats::add_episode(int switch_count, double accum_wait_ms, double target_wait_ms) {
    episode_count_ += 1;
    switches_sum_ += switch_count;
    switches_sumsq_ += static_cast<double>(switch_count) * switch_count;
    accum_sum_ += accum_wait_ms;
    target_wait_sum_ += target_wait_ms;
}

double AggregateStats::mean_wait_ms() const {
    return event_count_ ? wait_sum_ / static_cast<double>(event_count_) : 0.0;
}

double AggregateStats::quantile_ms(double q) const {
    if (q <= 0.0 || q > 1.0)
        throw std::invalid_argument("quantile_ms: q must be in (0, 1]");
    if (!event_count_)
        return 0.0;
    const double threshold = q * static_cast<double>(event_count_);
    long long cum = 0;
    for (std::size_t k = 0; k < bins_.size(); ++k) {
        cum += bins_[k];
        if (static_cast<double>(cum) >= threshold)
            return (static_cast<double>(k) + 1.0) * bin_width_;
    }
    return gop_ms_;
}

double AggregateStats::median_wait_ms() const { return quantile_ms(0.5); }
double AggregateStats::p95_wait_ms() const { return quantile_ms(0.95); }

double AggregateStats::frac_le_250ms() const {
    return event_count_ ? static_cast<double>(le_critical_) / static_cast<double>(event_count_)
                        : 0.0;
}

double AggregateStats::mean_switches() const {
    return episode_count_ ? static_cast<double>(switches_sum_) / static_cast<double>(episode_count_)
                          : 0.0;
}

double AggregateStats::mean_accum_wait_ms() const {
    return episode_count_ ? accum_sum_ / static_cast<double>(episode_count_) : 0.0;
}

double AggregateStats::mean_target_wait_ms() const {
    return episode_count_ ? target_wait_sum_ / static_cast<double>(episode_count_) : 0.0;
}

double AggregateStats::se_mean_wait_ms() const {
    if (event_count_ < 2)
        return 0.0;
    const double n = static_cast<double>(event_count_);
    const double mean = wait_sum_ / n;
    const double var = std::max(0.0, wait_sumsq_ / n - mean * mean);
    return std::sqrt(var / n);
}

double AggregateStats::se_mean_switches() const {
    if (episode_count_ < 2)
        return 0.0;
    const double n = static_cast<double>(episode_count_);
    const double mean = static_cast<double>(switches_sum_) / n;
    const double var = std::max(0.0, switches_sumsq_ / n - mean * mean);
    return std::sqrt(var / n);
}

double AggregateStats::fraction_below(double edge_ms) const {
    if (!event_count_)
        return 0.0;
    auto limit = static_cast<long long>(std::llround(edge_ms / bin_width_));
    limit = std::clamp<long long>(limit, 0, kFineBins);
    long long cum = 0;
    for (long long k = 0; k < limit; ++k)
        cum += bins_[static_cast<std::size_t>(k)];
    return static_cast<double>(cum) / static_cast<double>(event_count_);
}

namespace {

// Folding waits in episode order keeps every floating-point addition in a
// fixed global sequence, which is what makes thread counts interchangeable.
void fold_episode(AggregateStats& stats, std::span<const double> waits) {
    double accum = 0.0;
    for (double w : waits) {
        stats.add_wait(w);
        accum += w;
    }
    stats.add_episode(static_cast<int>(waits.size()), accum, waits.empty() ? 0.0 : waits.back());
}

struct BlockPartial {
    std::vector<int> switch_counts;
    std::vector<double> waits; // episode-major concatenation
};

constexpr long long kBlockEpisodes = 1024;

BlockPartial compute_block(const ScenarioConfig& config, const ScenarioInputs& inputs,
                           long long block) {
    BlockPartial part;
    part.switch_counts.reserve(kBlockEpisodes);
    for (long long k = 0; k < kBlockEpisodes; ++k) {
        const auto episode_index = static_cast<std::uint64_t>(block * kBlockEpisodes + k);
        SplitMix64 rng = substream(config.master_seed, episode_index);
        EpisodeResult ep = run_episode(config, inputs, rng);
        part.switch_counts.push_back(ep.switch_count);
        for (const SwitchRecord& rec : ep.switches)
            part.waits.push_back(rec.wait_ms);
    }
    return part;
}

AggregateStats run_sequential(const ScenarioConfig& config, const ScenarioInputs& inputs) {
    AggregateStats stats(config.gop_ms);
    std::vector<double> waits;
    for (std::uint64_t idx = 0; stats.event_count() < config.event_budget; ++idx) {
        SplitMix64 rng = substream(config.master_seed, idx);
        EpisodeResult ep = run_episode(config, inputs, rng);
        waits.clear();
        for (const SwitchRecord& rec : ep.switches)
            waits.push_back(rec.wait_ms);
        fold_episode(stats, waits);
    }
    return stats;
}

AggregateStats run_parallel(const ScenarioConfig& config, const ScenarioInputs& inputs,
                            int threads) {
    AggregateStats stats(config.gop_ms);

    std::mutex mu;
    std::condition_variable cv_ready;
    std::condition_variable cv_space;
    std::map<long long, BlockPartial> ready;
    std::atomic<long long> next_block{0};
    long long merged_blocks = 0;
    bool done = false;
    std::exception_ptr failure;
    const long long lookahead = std::max<long long>(2LL * threads, 4);

    auto worker = [&] {
        try {
            for (;;) {
                const long long block = next_block.fetch_add(1);
                {
                    std::unique_lock lk(mu);
                    cv_space.wait(lk, [&] { return done || block < merged_blocks + lookahead; });
                    if (done)
                        return;
                }
                BlockPartial part = compute_block(config, inputs, block);
                {
                    std::lock_guard lk(mu);
                    ready.emplace(block, std::move(part));
                }
                cv_ready.notify_all();
            }
        } catch (...) {
            std::lock_guard lk(mu);
            if (!failure)
                failure = std::current_exception();
            done = true;
            cv_ready.notify_all();
            cv_space.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);

    for (long long block = 0; stats.event_count() < config.event_budget; ++block) {
        BlockPartial part;
        {
            std::unique_lock lk(mu);
            cv_ready.wait(lk, [&] { return failure || ready.count(block) != 0; });
            if (failure)
                break;
            part = std::move(ready.at(block));
            ready.erase(block);
            merged_blocks = block + 1;
        }
        cv_space.notify_all();

        std::size_t offset = 0;
        for (int count : part.switch_counts) {
            fold_episode(stats,
                         std::span<const double>(part.waits).subspan(offset,
                                                                     static_cast<std::size_t>(count)));
            offset += static_cast<std::size_t>(count);
            if (stats.event_count() >= config.event_budget)
                break;
        }
    }

    {
        std::lock_guard lk(mu);
        done = true;
    }
    cv_space.notify_all();
    cv_ready.notify_all();
    for (std::thread& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return stats;
}

} // namespace

AggregateStats run_scenario(const ScenarioConfig& config, int threads) {
    validate(config);
    if (threads < 1)
        throw std::invalid_argument("run_scenario: threads must be >= 1");
    const ScenarioInputs inputs = build_inputs(config);
    if (threads == 1)
        return run_sequential(config, inputs);
    return run_parallel(config, inputs, threads);
}

double improvement_pct(double baseline_mean, double scenario_mean) {
    if (baseline_mean == 0.0)
        throw std::invalid_argument("improvement_pct: baseline mean is zero");
    return 100.0 * (baseline_mean - scenario_mean) / baseline_mean;
}

double improvement_vs_baseline(const AggregateStats& stats, const AggregateStats& baseline) {
    return improvement_pct(baseline.mean_wait_ms(), stats.mean_wait_ms());
}

double accum_improvement_vs_baseline(const AggregateStats& stats, const AggregateStats& baseline) {
    return improvement_pct(baseline.mean_accum_wait_ms(), stats.mean_accum_wait_ms());
}

double switch_overhead_pct(const AggregateStats& stats, const AggregateStats& baseline) {
    if (baseline.mean_switches() == 0.0)
        throw std::invalid_argument("switch_overhead_pct: baseline mean is zero");
    return 100.0 * (stats.mean_switches() - baseline.mean_switches()) / baseline.mean_switches();
}

} // namespace zapsim
