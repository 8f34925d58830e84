#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "odhd/dataset.hpp"
#include "odhd/metrics.hpp"
#include "odhd/pipeline.hpp"

namespace odhd {

struct ExperimentConfig {
    FitConfig fit;
    double train_fraction = 0.8;
    std::size_t repeats = 10;
    std::uint64_t seed = 1;
};

struct RunResult {
    Metrics metrics;
    double threshold = 0.0;
    double train_seconds = 0.0;
    double test_seconds = 0.0;
};

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;  // population
};

struct ExperimentSummary {
    std::string dataset;
    ExperimentConfig config;
    std::vector<RunResult> runs;  // indexed by repeat
    MeanStd accuracy, f1, auc;
    std::size_t auc_defined_runs = 0;
};

// Repeats the split+fit+detect pipeline with independent derived PRNG streams.
// Repeats run in parallel; results are keyed by repeat index so the summary is
// scheduling-independent.
ExperimentSummary run_experiment(const Dataset& ds, const ExperimentConfig& cfg);

// Deterministic artifact: excludes wall-clock timings (those go to the console).
std::string summary_to_json(const ExperimentSummary& summary);

// Human-readable rendering including per-phase runtimes.
std::string summary_to_text(const ExperimentSummary& summary);

}  // namespace odhd
