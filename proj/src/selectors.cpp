#include "rhm/selectors.hpp"

#include <cmath>
#include <stdexcept>

#include "rhm/estimators.hpp"
#include "rhm/parallel.hpp"

namespace rhm {

namespace {

void check_range(const Observation& obs, std::size_t n_max, const char* who) {
    if (n_max == 0) throw DomainError(std::string(who) + ": N_max must be >= 1");
    if (n_max > obs.n_max()) {
        throw DomainError(std::string(who) + ": N_max " + std::to_string(n_max) +
                          " exceeds observation length " + std::to_string(obs.n_max()));
    }
}

// Running sum of -y_k^2 + w * sigma_k^2 plus extra(N), one pass.
template <class Extra>
SelectorResult scan(const Observation& obs, std::size_t n_max, double variance_weight,
                    Extra&& extra, Method method) {
    SelectorResult out;
    out.method = method;
    out.objective_values.resize(n_max);
    const auto& ys = obs.ys();
    const auto& var = obs.variances();
    CompensatedSum running;
    for (std::size_t k = 1; k <= n_max; ++k) {
        const double y = ys[k - 1];
        running.add(-y * y);
        running.add(variance_weight * var[k - 1]);
        out.objective_values[k - 1] = running.value() + extra(k);
    }
    out.n_selected = first_argmin(out.objective_values);
    return out;
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::ure: return "ure";
        case Method::rhm: return "rhm";
        case Method::custom_penalty: return "custom-penalty";
    }
    return "unknown";
}

Method method_from_string(const std::string& name) {
    if (name == "ure") return Method::ure;
    if (name == "rhm") return Method::rhm;
    throw std::invalid_argument("unknown selector method \"" + name + "\" (expected ure or rhm)");
}

double penalized_objective(const Observation& obs, const Penalty& pen, std::size_t n) {
    check_range(obs, n, "penalized_objective");
    CompensatedSum s;
    for (std::size_t k = 1; k <= n; ++k) {
        const double y = obs.ys()[k - 1];
        s.add(-y * y);
        s.add(obs.variances()[k - 1]);
    }
    return s.value() + pen(n);
}

SelectorResult select_penalized(const Observation& obs, const Penalty& pen, std::size_t n_max) {
    check_range(obs, n_max, "select_penalized");
    return scan(obs, n_max, 1.0, pen, Method::custom_penalty);
}

SelectorResult select_ure(const Observation& obs, std::size_t n_max) {
    check_range(obs, n_max, "select_ure");
    return scan(obs, n_max, 2.0, [](std::size_t) { return 0.0; }, Method::ure);
}

SelectorResult select_rhm(const Observation& obs, const HullTable& hull, double alpha,
                          std::size_t n_max) {
    check_range(obs, n_max, "select_rhm");
    if (n_max > hull.n_max) {
        throw DomainError("select_rhm: N_max " + std::to_string(n_max) + " exceeds hull table size " +
                          std::to_string(hull.n_max));
    }
    if (hull.spec_fingerprint != spec_fingerprint(obs.spec())) {
        throw HullMismatch("select_rhm: fingerprint mismatch, hull table was built for " +
                           hull.spec.canonical() + " but data use " + obs.spec().canonical());
    }
    if (!std::isfinite(alpha) || alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
    const double weight = 1.0 + alpha;
    return scan(obs, n_max, 2.0, [&](std::size_t k) { return weight * hull.u0[k - 1]; }, Method::rhm);
}

}  // namespace rhm
