#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rhm/hull.hpp"
#include "rhm/selectors.hpp"
#include "rhm/sequence_model.hpp"

namespace rhm::cli {

// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,  // invalid config, flags or input data
    kIoError = 3,      // unreadable/unwritable files, hull cache mismatch
    kHullMissing = 4,  // rhm requested with neither a hull table nor hull parameters
};

/// Invalid configuration; the message names the offending field.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed data file.
class DataError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class HullMissing : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { stem, ratio, efficiency, select };

struct HullConfig {
    McParams mc;
    /// True when the config supplied hull.samples explicitly.
    bool params_given = false;
    std::optional<std::size_t> n_max;
    /// Explicit table file; otherwise tables live in cache_dir.
    std::optional<std::filesystem::path> path;
    std::optional<std::filesystem::path> cache_dir;
    bool rebuild = false;
};

struct SelectorConfig {
    std::vector<Method> methods{Method::ure, Method::rhm};
    double alpha = kDefaultAlpha;
    std::optional<std::size_t> n_max;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::stem;
    std::size_t reps = 10'000;
    std::vector<double> a_grid;  // empty: default grid
    double bandwidth = 6.0;      // W
    double smoothness = 6.0;     // m
    std::optional<std::size_t> n_max;
    std::uint64_t seed = 1;
    double amplitude = 0.0;      // stem signal theta^a; 0 gives theta = 0
    std::vector<double> betas;   // ratio: power-law exponents to compare
};

struct OutputConfig {
    std::filesystem::path directory = "out";
    std::vector<std::string> formats{"csv"};
};

struct RunConfig {
    SigmaSpec sigma = SigmaSpec::power_law(1.0, 0.0);
    HullConfig hull;
    SelectorConfig selector;
    ExperimentConfig experiment;
    OutputConfig output;

    /// Full echo (everything that affects results; not --threads/--rebuild).
    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);

    std::filesystem::path cache_dir() const;
    std::size_t experiment_n_max() const;
};

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> out;
    bool rebuild = false;
    /// "dotted.path=value" assignments; value parsed as JSON, else a string.
    std::vector<std::string> assignments;
};

/// Reads the optional config file, applies overrides, validates.
RunConfig load_config(const std::optional<std::filesystem::path>& config_path,
                      const Overrides& overrides);

/// Parses a (k, y_k) CSV with a header row and contiguous k = 1, 2, ...
std::vector<double> read_data_csv(const std::filesystem::path& path);

int cmd_hull(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_select(const RunConfig& config, const std::filesystem::path& data_file, std::ostream& out,
               std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Maps the current exception to an exit code and reports it on `err`.
int report_exception(std::ostream& err);

}  // namespace rhm::cli
