#pragma once

// Monte Carlo experiment harness: stem diagrams of selected bandwidths at a
// fixed signal, oracle-efficiency curves over the amplitude family
// theta^a, and penalty-ratio curves.
//
// Replication r of every experiment draws its noise from the observation
// stream at (seed, r), so two experiments with the same seed see the same
// xi (common random numbers across amplitudes and across noise levels).
// Per-replication results land in index-addressed slots and are reduced in
// index order, which keeps every output independent of the worker count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rhm/estimators.hpp"
#include "rhm/hull.hpp"
#include "rhm/selectors.hpp"
#include "rhm/sequence_model.hpp"

namespace rhm {

/// Maps an observation to a bandwidth.
struct Selector {
    std::string name;
    std::function<std::size_t(const Observation&)> choose;
};

Selector ure_selector(std::size_t n_max);
Selector rhm_selector(std::shared_ptr<const HullTable> hull, double alpha, std::size_t n_max);
Selector fixed_selector(std::size_t n);

struct StemRecord {
    std::size_t selected_n = 0;
    double normalized_loss = 0.0;  // ||theta~(N^) - theta||^2 / sigma_1^2
};

struct StemData {
    std::vector<StemRecord> records;
    double n_emp = 0.0;
    double r_emp = 0.0;
    std::string selector;
    std::size_t reps = 0;
    std::size_t n_max = 0;
    std::uint64_t seed = 0;
};

StemData stem_experiment(const SigmaSpec& spec, const Signal& signal, const Selector& selector,
                         std::size_t reps, std::size_t n_max, std::uint64_t seed);


struct McRisk {
    double mean_loss = 0.0;
    double std_error = 0.0;
};

McRisk mc_selector_risk(const SigmaSpec& spec, const Signal& signal, const Selector& selector,
                        std::size_t reps, std::size_t n_max, std::uint64_t seed);

struct Efficiency {
    double value = 0.0;       // oracle risk / selector risk
    double std_error = 0.0;   // delta-method propagation of the selector's error
    std::size_t oracle_n = 1;
    double oracle_risk = 0.0;
    McRisk selector_risk;
};

Efficiency oracle_efficiency(const SigmaSpec& spec, const Signal& signal, const Selector& selector,
                             std::size_t reps, std::size_t n_max, std::uint64_t seed);

struct EfficiencyCurve {
    std::string method;
    std::size_t reps = 0;
    std::vector<double> a_grid;
    std::vector<double> efficiency;
    std::vector<double> std_error;
    std::vector<std::size_t> oracle_n;
    std::vector<double> oracle_risk;
};

/// Efficiency of `selector` over theta^a = a * sigma_1 / (1 + (i / W)^m).
EfficiencyCurve efficiency_curve(const SigmaSpec& spec, const Selector& selector,
                                 const std::vector<double>& a_grid, double bandwidth,
                                 double smoothness, std::size_t reps, std::size_t n_max,
                                 std::uint64_t seed);

struct RatioPoint {
    std::size_t n = 0;
    double rho = 1.0;
    double rho_tilde = 1.0;
};

std::vector<RatioPoint> ratio_curve(const SigmaSpec& spec, const HullTable& hull, double alpha,
                                    std::size_t n_first, std::size_t n_last);

/// `count` log-spaced amplitudes from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t count);
/// 20 log-spaced points in [0.5, 500].
std::vector<double> default_a_grid();
/// 200 for beta <= 1, 100 above; explicit tables are capped at their length.
std::size_t default_n_max(const SigmaSpec& spec);

std::string stem_csv(const StemData& data);
std::string efficiency_csv(const EfficiencyCurve& curve);
std::string ratio_csv(const std::vector<RatioPoint>& curve);

}  // namespace rhm
