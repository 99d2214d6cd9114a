#pragma once

// Monte Carlo risk-hull penalty.
//
// For eta_N = sum_{i <= N} sigma_i^2 (xi_i^2 - 1) the hull penalty is
//
//     U0(N) = inf { t > 0 : E[eta_N 1(eta_N >= t)] <= sigma_1^2 },
//
// estimated here from S coupled sample paths: one vector xi_1..xi_{N_max} per
// replication, with eta accumulated along it, so every N reuses the same
// draws. Replacing the expectation by the sample mean makes the functional
// a nonincreasing step function of t > 0 whose jumps sit at the positive
// order statistics; the infimum is therefore 0 or one of those order
// statistics, and only the upper tail of each column has to be ordered.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhm/sequence_model.hpp"

namespace rhm {

struct McParams {
    static constexpr std::size_t kMinSamples = 10'000;
    static constexpr std::size_t kDefaultSamples = 1'000'000;

    std::size_t samples = kDefaultSamples;
    std::uint64_t seed = 0;
    bool monotonize = true;

    /// Throws std::invalid_argument below the sample floor.
    void validate() const;
};

/// Allocation of the sample matrix failed.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A hull table does not belong to the spectrum it is used with, or an
/// on-disk table failed its integrity check.
class HullMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Row-major [samples x n_max] matrix of cumulative sums eta_1..eta_{n_max}.
struct EtaPaths {
    std::size_t samples = 0;
    std::size_t n_max = 0;
    std::vector<double> values;

    double at(std::size_t replication, std::size_t n) const {
        return values[replication * n_max + (n - 1)];
    }
};

/// Fills xi_1..xi_{len} for one replication.
using NoiseFill = std::function<void(std::size_t replication, std::span<double> xi)>;

EtaPaths sample_eta_paths(const SigmaSpec& spec, std::size_t n_max, const McParams& mc);
EtaPaths sample_eta_paths(const SigmaSpec& spec, std::size_t n_max, std::size_t samples,
                          const NoiseFill& noise);

/// (1/n) * sum of the entries >= t. Order of `samples` is irrelevant.
double tail_functional(std::span<const double> samples, double t);

struct U0Solution {
    double value = 0.0;
    /// The functional exceeded the level even at the largest sample; the
    /// value returned is that largest sample.
    bool saturated = false;
};

/// Smallest t > 0 with tail_functional(samples, t) <= level, computed from
/// the upper order statistics. Reorders `samples`.
U0Solution u0_from_samples(std::span<double> samples, double level);

double compute_u0(const SigmaSpec& spec, std::size_t n, const McParams& mc);

struct HullTable {
    SigmaSpec spec = SigmaSpec::power_law(1.0, 0.0);
    std::size_t n_max = 0;
    std::vector<double> u0;            // u0[N - 1] = U0(N)
    std::vector<double> sigma_fourth;  // sigma_fourth[N - 1] = sum_{s <= N} sigma_s^4
    std::string spec_fingerprint;
    std::size_t mc_samples = 0;
    std::uint64_t seed = 0;
    bool monotonized = false;
    std::vector<std::size_t> saturated;  // bandwidths whose solve saturated

    double u0_at(std::size_t n) const;
    double sigma_fourth_at(std::size_t n) const;
    /// u0(N) = U0(N) / sqrt(2 Sigma_N).
    double normalized_u0(std::size_t n) const;
    std::string cache_key() const;
};

HullTable build_hull_table(const SigmaSpec& spec, std::size_t n_max, const McParams& mc);

/// Table with caller-supplied penalties (tests, externally computed hulls).
/// Provenance fields are copied from `mc` without validation.
HullTable hull_from_values(const SigmaSpec& spec, std::vector<double> u0, const McParams& mc,
                           bool monotonized = false);

/// Gaussian approximation sqrt(2 Sigma_N log(Sigma_N / (pi sigma_1^4))),
/// clamped to 0 where the log is negative.
double gaussian_u0(const SigmaSpec& spec, std::size_t n);

/// Lower envelope sqrt(log(Sigma_N / (2 pi sigma_1^4))) for the normalized
/// penalty u0(N), clamped to 0 where the log is negative.
double u1(const SigmaSpec& spec, std::size_t n);

struct PenaltyRatio {
    double rho = 1.0;
    double rho_tilde = 1.0;
};

/// pen_rhm / pen_ure using the tabulated and the Gaussian U0.
PenaltyRatio penalty_ratio(const SigmaSpec& spec, const HullTable& hull, double alpha,
                           std::size_t n);

/// Smallest N0 such that u0(N) >= u1(N) for every N0 <= N <= n_max
/// (n_max + 1 when the last entry already violates it).
std::size_t envelope_crossing(const HullTable& hull);

std::string spec_fingerprint(const SigmaSpec& spec);
std::string hull_cache_key(const SigmaSpec& spec, std::size_t n_max, const McParams& mc);

/// JSON document {spec, N_max, mc_samples, seed, monotonized, U0, SigmaFourth,
/// ...} plus fingerprints and a content digest.
std::string hull_to_json(const HullTable& hull);
/// Throws HullMismatch when the document is unreadable or any fingerprint or
/// digest fails to verify.
HullTable hull_from_json(const std::string& text);

void save_hull(const std::filesystem::path& path, const HullTable& hull);
HullTable load_hull(const std::filesystem::path& path);

}  // namespace rhm
