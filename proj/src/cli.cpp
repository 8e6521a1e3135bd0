// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "zapsim/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "zapsim/analytics.hpp"
#include "zapsim/engine.hpp"
#include "zapsim/grid.hpp"
#include "zapsim/report.hpp"

namespace zapsim {
namespace {

constexpr long long kDefaultEvents = 1'000'000;

struct CliSettings {
    int channels = 100;
    double shape = 1.0;
    double gop_ms = 1000.0;
    int sep = 4;
    int wait = 4;
    std::string ordering = "one-step";
    std::string client_ordering = "same-as-network";
    std::string shifts = "laddered";
    std::string dwell = "uniform-gop";
    double dwell_ms = 0.0;
    long long events = kDefaultEvents;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    double bins_ms = 10.0;
    int threads = 1;
    // list-valued axes (analyze and sweep)
    std::vector<int> channel_list{100, 200, 300, 400, 500};
    std::vector<std::string> ordering_list{"one-step", "two-step"};
    std::vector<int> sep_list{3, 4, 5, 6};
    std::vector<int> wait_list{2, 3, 4, 5, 6, 7, 8, 9, 10};
};

OrderingKind parse_ordering(const std::string& name) {
    if (name == "identity")
        return OrderingKind::identity;
    if (name == "one-step")
        return OrderingKind::one_step;
    if (name == "two-step")
        return OrderingKind::two_step;
    if (name == "randomized")
        throw std::invalid_argument("--ordering randomized is not a network placement; randomize "
                                    "the client side with --client-ordering randomized");
    throw std::invalid_argument("unknown ordering: " + name);
}

ClientOrderingKind parse_client_ordering(const std::string& name) {
    if (name == "same-as-network" || name == "same")
        return ClientOrderingKind::same_as_network;
    if (name == "randomized")
        return ClientOrderingKind::randomized;
    throw std::invalid_argument("unknown client ordering: " + name);
}

ShiftKind parse_shifts(const std::string& name) {
    if (name == "laddered")
        return ShiftKind::laddered;
    if (name == "randomized")
        return ShiftKind::randomized;
    throw std::invalid_argument("unknown shift kind: " + name);
}

DwellKind parse_dwell(const std::string& name) {
    if (name == "zero")
        return DwellKind::zero;
    if (name == "fixed")
        return DwellKind::fixed;
    if (name == "uniform-gop")
        return DwellKind::uniform_gop;
    throw std::invalid_argument("unknown dwell model: " + name);
}

ScenarioConfig to_config(const CliSettings& s) {
    ScenarioConfig cfg;
    cfg.session_count = s.channels;
    cfg.shape = s.shape;
    cfg.gop_ms = s.gop_ms;
    cfg.separation = s.sep;
    cfg.max_wait = s.wait;
    cfg.ordering = parse_ordering(s.ordering);
    cfg.client_ordering = parse_client_ordering(s.client_ordering);
    cfg.shifts = parse_shifts(s.shifts);
    cfg.dwell = parse_dwell(s.dwell);
    cfg.dwell_fixed_ms = s.dwell_ms;
    cfg.event_budget = s.events;
    cfg.master_seed = s.seed;
    validate(cfg);
    return cfg;
}

// ---------------------------------------------------------------- config file

const std::set<std::string>& config_keys() {
    static const std::set<std::string> keys{
        "channels", "shape",  "gop-ms", "sep",  "wait",    "ordering", "client-ordering",
        "shifts",   "dwell",  "dwell-ms", "events", "seed", "out",      "bins-ms",
        "threads"};
    return keys;
}

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

// Flat key=value lines; '#' starts a comment; unknown keys are rejected so a
// typo cannot silently fall back to a default.
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config file: " + path);
    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!config_keys().count(key))
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        values[key] = value;
    }
    return values;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (in.fail() || !in.eof())
        throw std::invalid_argument("config key '" + key + "': cannot parse '" + text + "'");
    return value;
}

void apply_config_values(CliSettings& s, const std::map<std::string, std::string>& values) {
    for (const auto& [key, value] : values) {
        if (key == "channels") s.channels = parse_number<int>(key, value);
        else if (key == "shape") s.shape = parse_number<double>(key, value);
        else if (key == "gop-ms") s.gop_ms = parse_number<double>(key, value);
        else if (key == "sep") s.sep = parse_number<int>(key, value);
        else if (key == "wait") s.wait = parse_number<int>(key, value);
        else if (key == "ordering") s.ordering = value;
        else if (key == "client-ordering") s.client_ordering = value;
        else if (key == "shifts") s.shifts = value;
        else if (key == "dwell") s.dwell = value;
        else if (key == "dwell-ms") s.dwell_ms = parse_number<double>(key, value);
        else if (key == "events") s.events = parse_number<long long>(key, value);
        else if (key == "seed") s.seed = parse_number<std::uint64_t>(key, value);
        else if (key == "out") s.out_dir = value;
        else if (key == "bins-ms") s.bins_ms = parse_number<double>(key, value);
        else if (key == "threads") s.threads = parse_number<int>(key, value);
    }
}

// The config file must be located before CLI11 parses, because its values
// become the defaults the flags are allowed to override.
std::string find_config_arg(int argc, const char* const* argv) {
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg == "--config" && k + 1 < argc)
            return argv[k + 1];
        if (arg.rfind("--config=", 0) == 0)
            return arg.substr(9);
    }
    return "";
}

// ------------------------------------------------------------------- outputs

// Tracks files written by one subcommand so a failure can undo them all.
class OutputSet {
  public:
    explicit OutputSet(std::string dir) : dir_(std::move(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec)
            throw std::runtime_error("cannot create output directory: " + dir_);
    }

    std::string write(const std::string& name, const std::string& content) {
        const std::string path = (std::filesystem::path(dir_) / name).string();
        write_text_file(path, content);
        written_.push_back(path);
        return path;
    }

    void discard_all() {
        for (const std::string& path : written_) {
            std::error_code ec;
            std::filesystem::remove(path, ec);
        }
        written_.clear();
    }

    const std::vector<std::string>& paths() const { return written_; }

  private:
    std::string dir_;
    std::vector<std::string> written_;
};

// Scenario runs repeat across exhibits (shared baselines, S-independent
// randomized-shift cells); memoize within one invocation.
class RunCache {
  public:
    explicit RunCache(int threads) : threads_(threads) {}

    const AggregateStats& run(const ScenarioConfig& cfg, std::ostream& progress) {
        const std::string key = fingerprint(cfg);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        progress << "run: ordering=" << to_string(cfg.ordering)
                 << " client=" << to_string(cfg.client_ordering)
                 << " shifts=" << to_string(cfg.shifts) << " sep=" << cfg.separation
                 << " wait=" << cfg.max_wait << " events=" << cfg.event_budget << '\n';
        AggregateStats stats = run_scenario(cfg, threads_);
        return cache_.emplace(key, std::move(stats)).first->second;
    }

  private:
    static std::string fingerprint(const ScenarioConfig& cfg) {
        std::ostringstream key;
        key << cfg.session_count << '|' << format_fixed(cfg.shape) << '|'
            << format_fixed(cfg.gop_ms) << '|' << cfg.separation << '|' << cfg.max_wait << '|'
            << to_string(cfg.ordering) << '|' << to_string(cfg.client_ordering) << '|'
            << to_string(cfg.shifts) << '|' << to_string(cfg.dwell) << '|'
            << format_fixed(cfg.dwell_fixed_ms) << '|' << cfg.event_budget << '|'
            << cfg.master_seed;
        return key.str();
    }

    int threads_;
    std::map<std::string, AggregateStats> cache_;
};

// --------------------------------------------------------------- subcommands

int cmd_simulate(const CliSettings& s, std::ostream& out) {
    const ScenarioConfig cfg = to_config(s);
    OutputSet outputs(s.out_dir);
    try {
        const AggregateStats stats = run_scenario(cfg, s.threads);
        AggregateStats baseline = stats;
        if (cfg.max_wait != 1) {
            ScenarioConfig base_cfg = cfg;
            base_cfg.max_wait = 1;
            baseline = run_scenario(base_cfg, s.threads);
        }
        const SummaryRecord record = make_summary(cfg, stats, &baseline);
        outputs.write("summary.csv", record.csv());
        outputs.write("summary.json", record.json());
        outputs.write("cdf.csv", cdf_csv(emit_cdf(stats, s.bins_ms)));

        out << "events=" << stats.event_count() << " episodes=" << stats.episode_count()
            << " mean_wait_ms=" << format_fixed(stats.mean_wait_ms())
            << " improvement_pct=" << *record.find("improvement_pct") << '\n';
        for (const std::string& path : outputs.paths())
            out << "wrote " << path << '\n';
        return 0;
    } catch (...) {
        outputs.discard_all();
        throw;
    }
}

int cmd_analyze(const CliSettings& s, std::ostream& out) {
    std::vector<std::pair<std::string, std::vector<double>>> rows;
    for (const std::string& name : s.ordering_list) {
        const OrderingKind kind = parse_ordering(name);
        std::vector<double> values;
        for (int n : s.channel_list) {
            const PopularityModel pop = build_zipf(n, s.shape);
            const SwitchingModel switching = make_switching_model(pop);
            const ChannelGrid grid = kind == OrderingKind::identity ? make_identity_grid(n)
                                     : kind == OrderingKind::two_step ? make_two_step_grid(n)
                                                                      : make_one_step_grid(n);
            values.push_back(expected_switches(grid, switching));
        }
        rows.emplace_back(name, std::move(values));
    }

    const std::string csv = table1_csv(s.channel_list, rows);
    OutputSet outputs(s.out_dir);
    try {
        outputs.write("table1.csv", csv);
        out << csv;
        for (const std::string& path : outputs.paths())
            out << "wrote " << path << '\n';
        return 0;
    } catch (...) {
        outputs.discard_all();
        throw;
    }
}

const std::vector<std::string>& sweep_header() {
    static const std::vector<std::string> header{
        "separation",     "max_wait",           "ordering",
        "client_ordering", "shifts",            "dwell",
        "events",         "episodes",           "mean_wait_ms",
        "median_wait_ms", "p95_wait_ms",        "frac_le_250ms",
        "mean_switches",  "mean_accum_wait_ms", "improvement_pct",
        "overhead_pct",   "accum_improvement_pct"};
    return header;
}

std::vector<std::string> sweep_row(const ScenarioConfig& cfg, const AggregateStats& stats,
                                   const AggregateStats& baseline) {
    return {std::to_string(cfg.separation),
            std::to_string(cfg.max_wait),
            to_string(cfg.ordering),
            to_string(cfg.client_ordering),
            to_string(cfg.shifts),
            to_string(cfg.dwell),
            std::to_string(stats.event_count()),
            std::to_string(stats.episode_count()),
            format_fixed(stats.mean_wait_ms()),
            format_fixed(stats.median_wait_ms()),
            format_fixed(stats.p95_wait_ms()),
            format_fixed(stats.frac_le_250ms()),
            format_fixed(stats.mean_switches()),
            format_fixed(stats.mean_accum_wait_ms()),
            format_fixed(improvement_vs_baseline(stats, baseline)),
            format_fixed(switch_overhead_pct(stats, baseline)),
            format_fixed(accum_improvement_vs_baseline(stats, baseline))};
}

// One baseline (max_wait = 1) per separation, then every requested window.
std::string run_sweep_table(const CliSettings& s, const std::vector<int>& seps,
                            const std::vector<int>& waits, RunCache& cache, std::ostream& out) {
    std::vector<std::vector<std::string>> rows;
    for (int sep : seps) {
        CliSettings cell = s;
        cell.sep = sep;
        cell.wait = 1;
        const ScenarioConfig base_cfg = to_config(cell);
        const AggregateStats& baseline = cache.run(base_cfg, out);
        rows.push_back(sweep_row(base_cfg, baseline, baseline));
        for (int wait : waits) {
            if (wait == 1)
                continue;
            cell.wait = wait;
            const ScenarioConfig cfg = to_config(cell);
            const AggregateStats& stats = cache.run(cfg, out);
            rows.push_back(sweep_row(cfg, stats, baseline));
        }
    }
    return csv_table(sweep_header(), rows);
}

int cmd_sweep(const CliSettings& s, std::ostream& out) {
    RunCache cache(s.threads);
    const std::string csv = run_sweep_table(s, s.sep_list, s.wait_list, cache, out);
    OutputSet outputs(s.out_dir);
    try {
        outputs.write("sweep.csv", csv);
        for (const std::string& path : outputs.paths())
            out << "wrote " << path << '\n';
        return 0;
    } catch (...) {
        outputs.discard_all();
        throw;
    }
}

// ---------------------------------------------------------------- reproduce

CliSettings wiring_synchronized(CliSettings s) {
    s.ordering = "one-step";
    s.client_ordering = "same-as-network";
    s.shifts = "laddered";
    return s;
}

CliSettings wiring_randomized_ordering(CliSettings s) {
    s = wiring_synchronized(std::move(s));
    s.client_ordering = "randomized";
    return s;
}

CliSettings wiring_randomized_shifts(CliSettings s) {
    s = wiring_synchronized(std::move(s));
    s.shifts = "randomized";
    return s;
}

int cmd_reproduce(const CliSettings& s, const std::string& id, std::ostream& out) {
    static const std::set<std::string> ids{"table1", "fig4",  "fig5", "fig6", "fig7",
                                           "fig8",   "fig9",  "fig10", "table2"};
    if (!ids.count(id)) {
        std::string valid;
        for (const std::string& v : ids)
            valid += (valid.empty() ? "" : ", ") + v;
        throw std::invalid_argument("unknown reproduce id '" + id + "'; valid ids: " + valid);
    }

    if (id == "table1") {
        CliSettings t = s;
        t.channel_list = {100, 200, 300, 400, 500};
        t.ordering_list = {"one-step", "two-step"};
        return cmd_analyze(t, out);
    }

    RunCache cache(s.threads);
    OutputSet outputs(s.out_dir);
    try {
        if (id == "fig4" || id == "fig5" || id == "fig7") {
            const CliSettings wired = id == "fig7" ? wiring_randomized_ordering(s)
                                                   : wiring_synchronized(s);
            const std::string csv = run_sweep_table(wired, {3, 4, 5, 6},
                                                    {2, 3, 4, 5, 6, 7, 8, 9, 10}, cache, out);
            outputs.write("sweep.csv", csv);
        } else if (id == "fig6") {
            const std::vector<std::pair<int, int>> cells{{3, 2}, {4, 3}, {6, 5}};
            std::vector<std::string> labels;
            std::vector<CdfTable> tables;
            for (const auto& [sep, wait] : cells) {
                CliSettings cell = wiring_synchronized(s);
                cell.sep = sep;
                cell.wait = wait;
                const ScenarioConfig cfg = to_config(cell);
                tables.push_back(emit_cdf(cache.run(cfg, out), s.bins_ms));
                labels.push_back("s" + std::to_string(sep) + "_w" + std::to_string(wait));
            }
            outputs.write("cdf.csv", cdf_csv_multi(labels, tables));
        } else if (id == "fig8") {
            const CliSettings wired = wiring_randomized_shifts(s);
            const std::string csv =
                run_sweep_table(wired, {wired.sep}, {2, 3, 4, 5, 6, 7, 8, 9, 10}, cache, out);
            outputs.write("sweep.csv", csv);
        } else if (id == "fig9") {
            // Randomized shifts ignore the separation parameter, so one
            // randomized run per window serves every separation row.
            std::vector<std::vector<std::string>> rows;
            for (int sep : {3, 4, 5, 6}) {
                for (int wait : {2, 3, 4, 5, 6, 7, 8, 9, 10}) {
                    CliSettings lad = wiring_synchronized(s);
                    lad.sep = sep;
                    lad.wait = wait;
                    CliSettings rnd = wiring_randomized_shifts(s);
                    rnd.wait = wait;
                    const AggregateStats& a = cache.run(to_config(lad), out);
                    const AggregateStats& c = cache.run(to_config(rnd), out);
                    const double degradation =
                        -improvement_pct(a.mean_wait_ms(), c.mean_wait_ms());
                    rows.push_back({std::to_string(sep), std::to_string(wait),
                                    format_fixed(a.mean_wait_ms()), format_fixed(c.mean_wait_ms()),
                                    format_fixed(degradation)});
                }
            }
            outputs.write("sweep.csv",
                          csv_table({"separation", "max_wait", "mean_wait_laddered_ms",
                                     "mean_wait_randomized_ms", "degradation_pct"},
                                    rows));
        } else if (id == "fig10") {
            const std::vector<std::pair<int, int>> cells{{3, 2}, {4, 3}, {6, 5}};
            const std::vector<std::pair<std::string, CliSettings (*)(CliSettings)>> scenarios{
                {"synchronized", &wiring_synchronized},
                {"randomized-ordering", &wiring_randomized_ordering},
                {"randomized-shifts", &wiring_randomized_shifts}};
            std::vector<std::vector<std::string>> rows;
            for (const auto& [label, wire] : scenarios) {
                for (const auto& [sep, wait] : cells) {
                    CliSettings cell = wire(s);
                    cell.sep = sep;
                    cell.wait = wait;
                    const ScenarioConfig cfg = to_config(cell);
                    CliSettings base = cell;
                    base.wait = 1;
                    const ScenarioConfig base_cfg = to_config(base);
                    const AggregateStats& stats = cache.run(cfg, out);
                    const AggregateStats& baseline = cache.run(base_cfg, out);
                    rows.push_back({label, std::to_string(sep), std::to_string(wait),
                                    format_fixed(baseline.mean_accum_wait_ms()),
                                    format_fixed(stats.mean_accum_wait_ms()),
                                    format_fixed(accum_improvement_vs_baseline(stats, baseline))});
                }
            }
            outputs.write("sweep.csv",
                          csv_table({"scenario", "separation", "max_wait",
                                     "mean_accum_baseline_ms", "mean_accum_wait_ms",
                                     "accum_improvement_pct"},
                                    rows));
        } else if (id == "table2") {
            std::map<std::pair<int, int>, double> degradation;
            for (int sep : {3, 4, 5}) {
                for (int wait : {sep - 1, sep, sep + 1}) {
                    CliSettings a_cell = wiring_synchronized(s);
                    a_cell.sep = sep;
                    a_cell.wait = wait;
                    CliSettings b_cell = wiring_randomized_ordering(s);
                    b_cell.sep = sep;
                    b_cell.wait = wait;
                    const AggregateStats& a = cache.run(to_config(a_cell), out);
                    const AggregateStats& b = cache.run(to_config(b_cell), out);
                    degradation[{sep, wait}] = -improvement_pct(a.mean_wait_ms(), b.mean_wait_ms());
                }
            }
            const std::string csv = table2_csv({3, 4, 5}, degradation);
            outputs.write("table2.csv", csv);
            out << csv;
        }

        for (const std::string& path : outputs.paths())
            out << "wrote " << path << '\n';
        return 0;
    } catch (...) {
        outputs.discard_all();
        throw;
    }
}

void add_scenario_flags(CLI::App* cmd, CliSettings& s) {
    cmd->add_option("--channels", s.channels, "Number of sessions N")->capture_default_str();
    cmd->add_option("--shape", s.shape, "Zipf shape parameter s")->capture_default_str();
    cmd->add_option("--gop-ms", s.gop_ms, "GOP duration in milliseconds")->capture_default_str();
    cmd->add_option("--sep", s.sep, "Separation S (channels per full phase cycle)")
        ->capture_default_str();
    cmd->add_option("--wait", s.wait, "Maximum wait window (presses); 1 = no reordering")
        ->capture_default_str();
    cmd->add_option("--ordering", s.ordering, "Network grid: identity|one-step|two-step")
        ->capture_default_str();
    cmd->add_option("--client-ordering", s.client_ordering,
                    "Client surfing order: same-as-network|randomized")
        ->capture_default_str();
    cmd->add_option("--shifts", s.shifts, "Key-frame shifts: laddered|randomized")
        ->capture_default_str();
    cmd->add_option("--dwell", s.dwell, "Between-press dwell: zero|fixed|uniform-gop")
        ->capture_default_str();
    cmd->add_option("--dwell-ms", s.dwell_ms, "Fixed dwell duration (with --dwell fixed)")
        ->capture_default_str();
    cmd->add_option("--events", s.events, "Switch-event budget")->capture_default_str();
    cmd->add_option("--seed", s.seed, "Master seed (64-bit)")->capture_default_str();
    cmd->add_option("--threads", s.threads, "Worker threads")->capture_default_str();
    cmd->add_option("--bins-ms", s.bins_ms, "CDF bin width in milliseconds")
        ->capture_default_str();
    cmd->add_option("--out", s.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--config", "Flat key=value config file (flags win)");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliSettings s;
    if (const char* env_out = std::getenv("ZAPSIM_OUT"); env_out && *env_out)
        s.out_dir = env_out;

    try {
        const std::string config_path = find_config_arg(argc, argv);
        if (!config_path.empty())
            apply_config_values(s, load_config_file(config_path));
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }

    CLI::App app{"Channel-change latency simulator and analyzer"};
    app.require_subcommand(1);

    CLI::App* simulate = app.add_subcommand("simulate", "Run one scenario and write summary/CDF");
    add_scenario_flags(simulate, s);

    CLI::App* analyze =
        app.add_subcommand("analyze", "Exact expected switch counts per ordering and N");
    analyze->add_option("--channels", s.channel_list, "Channel counts (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    analyze->add_option("--ordering", s.ordering_list, "Orderings (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    analyze->add_option("--shape", s.shape, "Zipf shape parameter s")->capture_default_str();
    analyze->add_option("--out", s.out_dir, "Output directory")->capture_default_str();
    analyze->add_option("--config", "Flat key=value config file (flags win)");

    CLI::App* sweep = app.add_subcommand("sweep", "Cartesian sweep over separations and windows");
    add_scenario_flags(sweep, s);
    sweep->add_option("--sep-list", s.sep_list, "Separation values (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--wait-list", s.wait_list, "Window values (comma separated)")
        ->delimiter(',')
        ->capture_default_str();

    CLI::App* reproduce = app.add_subcommand("reproduce", "Re-run a bundled experiment preset");
    std::string exhibit;
    reproduce->add_option("id", exhibit, "table1|fig4|fig5|fig6|fig7|fig8|fig9|fig10|table2")
        ->required();
    add_scenario_flags(reproduce, s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed())
            return cmd_simulate(s, out);
        if (analyze->parsed())
            return cmd_analyze(s, out);
        if (sweep->parsed())
            return cmd_sweep(s, out);
        return cmd_reproduce(s, exhibit, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace zapsim
