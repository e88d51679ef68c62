#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qsat/analysis.h"

namespace qsat {

enum class BenchSeries {
    /// Analysis, encoding and solver construction from |0...0>, no solve.
    scaling,
    /// Unique-state counts from |0...0> in the configured key mode.
    generators,
    /// A circuit against itself ("equivalence-same") and against a copy with
    /// one gate removed ("equivalence-removed").
    equivalence,
};

std::string_view bench_series_name(BenchSeries s);
BenchSeries parse_bench_series(std::string_view text);

/// One CSV row. `rep` is empty for the mean row of a parameter point.
struct BenchRecord {
    std::string series;
    uint32_t n = 0;
    size_t num_gates = 0;
    uint64_t seed = 0;
    std::optional<unsigned> rep;
    double t_prep_ms = 0;
    std::optional<double> t_solve_ms;
    double num_vars = 0;
    double num_clauses = 0;
    double num_states = 0;
    std::optional<std::string> verdict;
    std::optional<double> conflicts;
};

struct BenchConfig {
    BenchSeries series = BenchSeries::scaling;
    std::vector<uint32_t> qubits;
    std::vector<size_t> gates;
    uint64_t seed = 0;
    unsigned reps = 10;
    /// Key mode of the generators series. The other series are canonical.
    KeyMode mode = KeyMode::canonical;
    /// Random basis inputs per equivalence check, capped at 2^n.
    size_t num_inputs = 16;
    std::string solver = "internal";
    /// Parameter points run concurrently on this many threads.
    unsigned workers = 1;
};

/// Runs every (n, |G|) point of the cross product in the order qubits-major,
/// gates-minor. Per point: `reps` rows, then one mean row per series name.
/// Circuit seeds depend only on (seed, point index, rep), so the output apart
/// from timing is independent of `workers`.
std::vector<BenchRecord> run_bench(const BenchConfig &config);

/// Mean of numeric columns; verdict is set when all rows agree, otherwise it
/// holds the fraction per verdict (e.g. "not_equivalent=0.9").
BenchRecord mean_record(std::span<const BenchRecord> rows);

std::string_view csv_header();
std::string csv_row(const BenchRecord &r);
void write_csv(std::ostream &out, std::span<const BenchRecord> records);

}  // namespace qsat
