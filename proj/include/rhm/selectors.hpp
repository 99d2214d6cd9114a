#pragma once

// Data-driven bandwidth choice by penalized empirical risk
//
//     N(y) = argmin_{1 <= N <= N_max}  -sum_{k<=N} y_k^2 + sum_{k<=N} sigma_k^2 + pen(N).
//
// pen(N) = sum sigma_k^2 gives unbiased risk estimation (URE); adding
// (1 + alpha) U0(N) from a hull table gives risk hull minimization (RHM).
// Theoretical guarantees for RHM assume alpha > 1; any alpha >= 0 is
// accepted. alpha = 0 is unstable for beta = 2 spectra, and large alpha
// over-smooths.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rhm/hull.hpp"
#include "rhm/sequence_model.hpp"

namespace rhm {

enum class Method { ure, rhm, custom_penalty };

std::string to_string(Method m);
/// "ure" or "rhm"; throws std::invalid_argument otherwise.
Method method_from_string(const std::string& name);

inline constexpr double kDefaultAlpha = 1.1;

using Penalty = std::function<double(std::size_t)>;

struct SelectorResult {
    std::size_t n_selected = 1;
    std::vector<double> objective_values;  // index N - 1
    Method method = Method::ure;
};

double penalized_objective(const Observation& obs, const Penalty& pen, std::size_t n);

SelectorResult select_penalized(const Observation& obs, const Penalty& pen, std::size_t n_max);
SelectorResult select_ure(const Observation& obs, std::size_t n_max);
/// Throws HullMismatch if the table was built for another spectrum and
/// DomainError if n_max exceeds the table or the observation.
SelectorResult select_rhm(const Observation& obs, const HullTable& hull, double alpha,
                          std::size_t n_max);

}  // namespace rhm
