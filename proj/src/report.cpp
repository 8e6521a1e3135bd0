// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include "zapsim/report.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zapsim {

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string SummaryRecord::csv() const {
    std::string header;
    std::string row;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) {
            header += ',';
            row += ',';
        }
        header += fields[k].first;
        row += fields[k].second;
    }
    return header + '\n' + row + '\n';
}

namespace {

// Values that parse fully as integers or reals become JSON numbers; the rest
// stay strings. Keeps the two emissions field-for-field comparable.
nlohmann::ordered_json json_value(const std::string& text) {
    if (!text.empty()) {
        std::size_t used = 0;
        try {
            if (text.find_first_not_of("0123456789") == std::string::npos) {
                const unsigned long long u = std::stoull(text, &used);
                if (used == text.size())
                    return u;
            }
            const double d = std::stod(text, &used);
            if (used == text.size())
                return d;
        } catch (const std::exception&) {
        }
    }
    return text;
}

} // namespace

std::string SummaryRecord::json() const {
    nlohmann::ordered_json obj;
    for (const auto& [key, value] : fields)
        obj[key] = json_value(value);
    return obj.dump(2) + '\n';
}

const std::string* SummaryRecord::find(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key)
            return &v;
    return nullptr;
}

SummaryRecord make_summary(const ScenarioConfig& config, const AggregateStats& stats,
                           const AggregateStats* baseline) {
    SummaryRecord rec;
    auto put = [&rec](const std::string& key, std::string value) {
        rec.fields.emplace_back(key, std::move(value));
    };

    put("channels", std::to_string(config.session_count));
    put("shape", format_fixed(config.shape));
    put("gop_ms", format_fixed(config.gop_ms));
    put("separation", std::to_string(config.separation));
    put("max_wait", std::to_string(config.max_wait));
    put("ordering", to_string(config.ordering));
    put("client_ordering", to_string(config.client_ordering));
    put("shifts", to_string(config.shifts));
    put("dwell", to_string(config.dwell));
    put("dwell_ms", format_fixed(config.dwell_fixed_ms));
    put("event_budget", std::to_string(config.event_budget));
    put("seed", std::to_string(config.master_seed));
    put("events", std::to_string(stats.event_count()));
    put("episodes", std::to_string(stats.episode_count()));
    put("mean_wait_ms", format_fixed(stats.mean_wait_ms()));
    put("median_wait_ms", format_fixed(stats.median_wait_ms()));
    put("p95_wait_ms", format_fixed(stats.p95_wait_ms()));
    put("frac_le_250ms", format_fixed(stats.frac_le_250ms()));
    put("mean_switches", format_fixed(stats.mean_switches()));
    put("mean_accum_wait_ms", format_fixed(stats.mean_accum_wait_ms()));
    put("mean_target_wait_ms", format_fixed(stats.mean_target_wait_ms()));

    const bool self = baseline == nullptr || baseline == &stats;
    put("switch_overhead_pct", format_fixed(self ? 0.0 : switch_overhead_pct(stats, *baseline)));
    put("improvement_pct", format_fixed(self ? 0.0 : improvement_vs_baseline(stats, *baseline)));
    put("accum_improvement_pct",
        format_fixed(self ? 0.0 : accum_improvement_vs_baseline(stats, *baseline)));
    return rec;
}

CdfTable emit_cdf(const AggregateStats& stats, double bin_ms) {
    if (bin_ms <= 0.0 || !std::isfinite(bin_ms))
        throw std::invalid_argument("emit_cdf: bin width must be finite and > 0");
    const double gop = stats.gop_ms();
    CdfTable table;
    for (long long k = 1;; ++k) {
        double edge = static_cast<double>(k) * bin_ms;
        if (edge >= gop - 1e-9 * gop)
            edge = gop; // truncate so the table always closes at the GOP length
        table.edges_ms.push_back(edge);
        table.fractions.push_back(stats.fraction_below(edge));
        if (edge == gop)
            break;
    }
    return table;
}

std::string cdf_csv(const CdfTable& table) {
    std::string out = "edge_ms,fraction\n";
    for (std::size_t k = 0; k < table.edges_ms.size(); ++k)
        out += format_fixed(table.edges_ms[k]) + ',' + format_fixed(table.fractions[k]) + '\n';
    return out;
}

std::string cdf_csv_multi(const std::vector<std::string>& labels,
                          const std::vector<CdfTable>& tables) {
    if (labels.size() != tables.size() || tables.empty())
        throw std::invalid_argument("cdf_csv_multi: one label per table required");
    for (const CdfTable& t : tables)
        if (t.edges_ms != tables.front().edges_ms)
            throw std::invalid_argument("cdf_csv_multi: tables must share bin edges");

    std::string out = "edge_ms";
    for (const std::string& label : labels)
        out += ',' + label;
    out += '\n';
    for (std::size_t row = 0; row < tables.front().edges_ms.size(); ++row) {
        out += format_fixed(tables.front().edges_ms[row]);
        for (const CdfTable& t : tables)
            out += ',' + format_fixed(t.fractions[row]);
        out += '\n';
    }
    return out;
}

std::string table1_csv(const std::vector<int>& channel_counts,
                       const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
    std::vector<std::string> header{"ordering"};
    for (int n : channel_counts)
        header.push_back("n" + std::to_string(n));
    std::vector<std::vector<std::string>> body;
    for (const auto& [label, values] : rows) {
        if (values.size() != channel_counts.size())
            throw std::invalid_argument("table1_csv: row width mismatch for " + label);
        std::vector<std::string> cells{label};
        for (double v : values)
            cells.push_back(format_fixed(v));
        body.push_back(std::move(cells));
    }
    return csv_table(header, body);
}

std::string table2_csv(const std::vector<int>& separations,
                       const std::map<std::pair<int, int>, double>& degradation_pct) {
    std::vector<std::string> header{"max_wait"};
    for (int s : separations)
        header.push_back("s" + std::to_string(s));

    const std::vector<std::pair<std::string, int>> row_specs{{"s-1", -1}, {"s", 0}, {"s+1", +1}};
    std::vector<std::vector<std::string>> body;
    for (const auto& [label, offset] : row_specs) {
        std::vector<std::string> cells{label};
        for (int s : separations) {
            const auto it = degradation_pct.find({s, s + offset});
            if (it == degradation_pct.end())
                throw std::invalid_argument("table2_csv: incomplete sweep, missing cell sep=" +
                                            std::to_string(s) + " wait=" +
                                            std::to_string(s + offset));
            cells.push_back(format_fixed(it->second));
        }
        body.push_back(std::move(cells));
    }
    return csv_table(header, body);
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t k = 0; k < header.size(); ++k) {
        if (k)
            out += ',';
        out += header[k];
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("csv_table: row width does not match header");
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k)
                out += ',';
            out += row[k];
        }
        out += '\n';
    }
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out)
        throw std::runtime_error("short write: " + path);
}

} // namespace zapsim
