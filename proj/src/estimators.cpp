#include "rhm/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rhm/hull.hpp"
#include "rhm/parallel.hpp"

namespace rhm {

Signal project(const Observation& obs, std::size_t n) {
    if (n > obs.n_max()) {
        throw DomainError("project: bandwidth " + std::to_string(n) + " exceeds n_max " +
                          std::to_string(obs.n_max()));
    }
    std::vector<double> c(obs.n_max(), 0.0);
    std::copy_n(obs.ys().begin(), n, c.begin());
    return Signal(std::move(c));
}

double squared_loss(const Signal& estimate, const Signal& truth) {
    const std::size_t n = std::max(estimate.size(), truth.size());
    CompensatedSum s;
    for (std::size_t k = 1; k <= n; ++k) {
        const double d = estimate.at(k) - truth.at(k);
        s.add(d * d);
    }
    return s.value();
}

double projection_risk(const Signal& signal, const SigmaSpec& spec, std::size_t n) {
    if (n == 0) throw DomainError("projection_risk: bandwidth must be >= 1");
    const std::vector<double> var = spec.variances(n);
    return signal.tail_energy(n) + ordered_sum(var);
}

std::size_t first_argmin(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("argmin of an empty range");
    return static_cast<std::size_t>(std::min_element(values.begin(), values.end()) -
                                    values.begin()) + 1;
}

RiskCurve oracle_risk(const Signal& signal, const SigmaSpec& spec, std::size_t n_max) {
    if (n_max == 0) throw DomainError("oracle_risk: N_max must be >= 1");
    RiskCurve curve;
    curve.values.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        curve.values.push_back(projection_risk(signal, spec, n));
    }
    curve.argmin_n = first_argmin(curve.values);
    curve.min_value = curve.values[curve.argmin_n - 1];
    return curve;
}

double rhm_risk(const Signal& signal, const SigmaSpec& spec, const HullTable& hull, double alpha,
                std::size_t n) {
    return projection_risk(signal, spec, n) + (1.0 + alpha) * hull.u0_at(n);
}

std::optional<std::size_t> ure_threshold(const SigmaSpec& spec, std::size_t n_max) {
    CompensatedSum second;
    CompensatedSum fourth;
    for (std::size_t n = 1; n <= n_max && spec.contains(n); ++n) {
        const double r = spec.relative(n);
        const double v = r * r;
        second.add(v);
        fourth.add(v * v);
        if (second.value() >= 2.0 * std::sqrt(2.0 * fourth.value())) return n;
    }
    return std::nullopt;
}

}  // namespace rhm
