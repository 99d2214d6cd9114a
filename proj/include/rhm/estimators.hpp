#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rhm/sequence_model.hpp"

namespace rhm {

struct HullTable;

/// Exact projection risk R(theta, N) for N = 1..N_max.
struct RiskCurve {
    std::vector<double> values;  // values[N - 1] = R(theta, N)
    std::size_t argmin_n = 1;    // smallest minimizer
    double min_value = 0.0;

    double at(std::size_t n) const { return values.at(n - 1); }
};

/// Spectral cut-off: keeps y_1..y_N and zeroes the rest. N = 0 yields the
/// zero signal.
Signal project(const Observation& obs, std::size_t n);

/// ||a - b||^2 over the union of the stored supports.
double squared_loss(const Signal& estimate, const Signal& truth);

/// sum_{k > N} theta_k^2 + sum_{k <= N} sigma_k^2.
double projection_risk(const Signal& signal, const SigmaSpec& spec, std::size_t n);

RiskCurve oracle_risk(const Signal& signal, const SigmaSpec& spec, std::size_t n_max);

/// projection_risk + (1 + alpha) U0(N).
double rhm_risk(const Signal& signal, const SigmaSpec& spec, const HullTable& hull, double alpha,
                std::size_t n);

/// Smallest N <= n_max with sum sigma_k^2 >= 2 sqrt(2 sum sigma_k^4), i.e.
/// the first bandwidth at which the unbiased risk estimate stops being
/// dominated by its own standard deviation. Non-strict comparison.
std::optional<std::size_t> ure_threshold(const SigmaSpec& spec, std::size_t n_max);

/// Index of the smallest minimum (1-based). `values` must be nonempty.
std::size_t first_argmin(const std::vector<double>& values);

}  // namespace rhm
