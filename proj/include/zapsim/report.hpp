// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zapsim/engine.hpp"

namespace zapsim {

// Canonical number format shared by every CSV artifact: fixed, 6 decimals.
std::string format_fixed(double value);

// Flat, ordered key/value record; the CSV header order is the schema.
struct SummaryRecord {
    std::vector<std::pair<std::string, std::string>> fields;

    std::string csv() const;  // header line + value line
    std::string json() const; // one object, same keys in the same order
    const std::string* find(const std::string& key) const;
};

// Baseline may be null, meaning the run is its own reference (all relative
// metrics zero). With a baseline, improvement/overhead fields are relative
// to it.
SummaryRecord make_summary(const ScenarioConfig& config, const AggregateStats& stats,
                           const AggregateStats* baseline);

struct CdfTable {
    std::vector<double> edges_ms;   // upper bin edges, last == gop
    std::vector<double> fractions;  // cumulative, last == 1.0
};

// Cumulative latency distribution at multiples of bin_ms, truncated to end
// exactly at the GOP length. bin_ms must be positive.
CdfTable emit_cdf(const AggregateStats& stats, double bin_ms);

std::string cdf_csv(const CdfTable& table);

// Several CDFs over identical edges, one labeled column each.
std::string cdf_csv_multi(const std::vector<std::string>& labels,
                          const std::vector<CdfTable>& tables);

// Wide table: one row per ordering, one column per channel count.
std::string table1_csv(const std::vector<int>& channel_counts,
                       const std::vector<std::pair<std::string, std::vector<double>>>& rows);

// 3x3 latency-degradation table: rows max_wait = separation-1/separation/
// separation+1, one column per separation. Cells keyed by (separation,
// max_wait); a missing cell is an incomplete sweep and throws.
std::string table2_csv(const std::vector<int>& separations,
                       const std::map<std::pair<int, int>, double>& degradation_pct);

// Generic CSV assembly; every row must match the header width.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

// Naive CSV helpers for our own artifacts (fields never contain commas).
std::vector<std::string> split_csv_line(const std::string& line);

// Whole-file write; throws std::runtime_error when the file cannot be
// created or fully written.
void write_text_file(const std::string& path, const std::string& content);

} // namespace zapsim
