// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcrank/matrix.hpp"

namespace pcrank {

/// Uniform binning over [lo, hi); with no explicit range the axis default
/// applies (ki: [0, 1); ci: the observed range of the run).
struct BinSpec {
    int count = 50;
    std::optional<double> lo;
    std::optional<double> hi;
};

/// Experiment sweep: base_count consistent matrices, each disturbed once per
/// beta in the arithmetic sweep beta_start, beta_start + beta_step, ...,
/// beta_end. The run is fully deterministic for a fixed master_seed,
/// independent of thread count.
struct McConfig {
    int n = 3;
    int base_count = 250;
    double beta_start = 1.0;
    double beta_step = 0.02;
    double beta_end = 30.0;
    std::uint64_t master_seed = 0;
    std::optional<ScaleBound> clamp;
    BinSpec ki_bins{};
    BinSpec ci_bins{};
};

/// The arithmetic beta sweep of a config (validates the sweep fields).
std::vector<double> beta_values(const McConfig& cfg);

/// One disturbed matrix, fully analyzed. tau and rho are NaN on tied trials.
struct TrialRecord {
    long trial_id;
    int base_index;
    double beta;
    double ki;
    double ci;
    double min_gap;
    double md_upper;
    bool order_certified;
    bool top_certified;
    bool order_identical;
    bool top_identical;
    double md;
    double tau;
    double rho;
    bool tied;
};

struct HistogramBin {
    double lo;
    double hi;
    long met;
    long unmet_identical;
    long not_identical;
};
using Histogram = std::vector<HistogramBin>;

struct McResult {
    McConfig config;
    long total_trials = 0;
    long trials_meeting_condition = 0;
    double fraction_meeting = 0.0;
    long tied_trial_count = 0;
    long no_convergence_count = 0;
    Histogram ki_histogram;
    Histogram ci_histogram;
    std::vector<TrialRecord> records;
};

/// Runs the full sweep. threads = 0 picks the hardware concurrency; any
/// thread count produces byte-identical results. Tied trials are recorded
/// and excluded from the histograms; non-converged trials are counted and
/// dropped.
McResult run_experiment(const McConfig& cfg, int threads = 0);

enum class HistAxis { ki, ci };

/// CSV with header bin_low,bin_high,met,unmet_identical,not_identical.
std::string histogram_csv(const McResult& r, HistAxis axis);

/// One CSV row per trial record.
std::string trials_csv(const McResult& r);

/// Aggregate result as JSON (config echo, totals, histograms; no records).
std::string result_json(const McResult& r);

} // namespace pcrank
