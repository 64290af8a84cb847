#pragma once

#include <filesystem>

#include "effbayes/model_json.hpp"
#include "effbayes/randomness.hpp"

namespace effbayes {

struct ExperimentConfig {
    std::string experiment;  // doob | freedman | reversal | chebyshev | doob-maximal | schnorr-bounds | cond-exp | suite
    Json payload;            // experiment-specific body (validated per experiment)
    size_t horizon = 1;
    unsigned replicas = 1;
    std::uint64_t seed = 1;
    unsigned precision = 12;
    std::filesystem::path out_dir = "out";
    bool inject_fault = false;

    static ExperimentConfig from_json(const Json& j);
    static ExperimentConfig from_file(const std::filesystem::path& p);
};

struct ReportRow {
    std::string name;
    std::string params;   // "key=val;key=val" (no commas)
    std::string lhs;      // exact "num/den" or "estimate+-half"
    std::string rhs;
    std::string decimal;  // decimal rendering of the lhs
    std::string width;    // enclosure width ("0" when exact)
    bool exact = true;
    bool holds = true;
};

struct TrajectoryRow {
    size_t n;
    std::string event_id;
    Rational value;
    bool degenerate;
};

struct RunReport {
    std::vector<ReportRow> rows;
    std::vector<TrajectoryRow> trajectories;
    Json metadata;  // seed, version, wall time; never part of the CSV

    bool all_hold() const;
    /// Writes <name>_report.csv (and _trajectories.csv when nonempty),
    /// rows sorted by deterministic keys, plus <name>.meta.json.
    void write(const std::filesystem::path& dir, const std::string& name) const;
};

RunReport run_doob(const ExperimentConfig& config);
RunReport run_freedman(const ExperimentConfig& config);
RunReport run_reversal(const ExperimentConfig& config);
RunReport run_suite(const ExperimentConfig& config);

/// Dispatch on config.experiment ("suite" included).
RunReport run_experiment(const ExperimentConfig& config);

}  // namespace effbayes
