#include "rhm/bench.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rhm/io.hpp"
#include "rhm/parallel.hpp"

namespace rhm {

namespace {

struct RepOutcome {
    std::size_t selected_n = 0;
    double loss = 0.0;
};

std::vector<RepOutcome> run_reps(const SigmaSpec& spec, const Signal& signal,
                                 const Selector& selector, std::size_t reps, std::size_t n_max,
                                 std::uint64_t seed) {
    if (reps == 0) throw std::invalid_argument("reps must be >= 1");
    if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
    std::vector<RepOutcome> out(reps);
    parallel_for(reps, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            const Observation obs = simulate(spec, signal, n_max, seed, r);
            const std::size_t n = selector.choose(obs);
            out[r] = {n, squared_loss(project(obs, n), signal)};
        }
    });
    return out;
}

McRisk summarize(const std::vector<RepOutcome>& outcomes) {
    const std::size_t reps = outcomes.size();
    CompensatedSum sum;
    for (const auto& o : outcomes) sum.add(o.loss);
    const double mean = sum.value() / static_cast<double>(reps);
    if (reps < 2) return {mean, 0.0};
    CompensatedSum dev;
    for (const auto& o : outcomes) {
        const double d = o.loss - mean;
        dev.add(d * d);
    }
    const double var = dev.value() / static_cast<double>(reps - 1);
    return {mean, std::sqrt(var / static_cast<double>(reps))};
}

std::string csv_join(std::initializer_list<std::string> fields) {
    std::string line;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) line += ',';
        line += f;
        first = false;
    }
    line += '\n';
    return line;
}

}  // namespace

Selector ure_selector(std::size_t n_max) {
    return {"ure", [n_max](const Observation& obs) { return select_ure(obs, n_max).n_selected; }};
}

Selector rhm_selector(std::shared_ptr<const HullTable> hull, double alpha, std::size_t n_max) {
    if (!hull) throw std::invalid_argument("rhm_selector: hull table required");
    return {"rhm", [hull = std::move(hull), alpha, n_max](const Observation& obs) {
                return select_rhm(obs, *hull, alpha, n_max).n_selected;
            }};
}

Selector fixed_selector(std::size_t n) {
    return {"fixed-" + std::to_string(n), [n](const Observation&) { return n; }};
}

StemData stem_experiment(const SigmaSpec& spec, const Signal& signal, const Selector& selector,
                         std::size_t reps, std::size_t n_max, std::uint64_t seed) {
    const auto outcomes = run_reps(spec, signal, selector, reps, n_max, seed);
    const double scale = spec.variance(1);
    StemData data;
    data.selector = selector.name;
    data.reps = reps;
    data.n_max = n_max;
    data.seed = seed;
    data.records.reserve(reps);
    CompensatedSum n_sum;
    CompensatedSum r_sum;
    for (const auto& o : outcomes) {
        data.records.push_back({o.selected_n, o.loss / scale});
        n_sum.add(static_cast<double>(o.selected_n));
        r_sum.add(o.loss / scale);
    }
    data.n_emp = n_sum.value() / static_cast<double>(reps);
    data.r_emp = r_sum.value() / static_cast<double>(reps);
    return data;
}

McRisk mc_selector_risk(const SigmaSpec& spec, const Signal& signal, const Selector& selector,
                        std::size_t reps, std::size_t n_max, std::uint64_t seed) {
    if (reps < 2) throw std::invalid_argument("mc_selector_risk: reps must be >= 2");
    return summarize(run_reps(spec, signal, selector, reps, n_max, seed));
}

Efficiency oracle_efficiency(const SigmaSpec& spec, const Signal& signal, const Selector& selector,
                             std::size_t reps, std::size_t n_max, std::uint64_t seed) {
    Efficiency e;
    const RiskCurve oracle = oracle_risk(signal, spec, n_max);
    e.oracle_n = oracle.argmin_n;
    e.oracle_risk = oracle.min_value;
    e.selector_risk = mc_selector_risk(spec, signal, selector, reps, n_max, seed);
    e.value = e.oracle_risk / e.selector_risk.mean_loss;
    e.std_error = e.value * e.selector_risk.std_error / e.selector_risk.mean_loss;
    return e;
}

EfficiencyCurve efficiency_curve(const SigmaSpec& spec, const Selector& selector,
                                 const std::vector<double>& a_grid, double bandwidth,
                                 double smoothness, std::size_t reps, std::size_t n_max,
                                 std::uint64_t seed) {
    if (a_grid.empty()) throw std::invalid_argument("efficiency_curve: empty amplitude grid");
    EfficiencyCurve curve;
    curve.method = selector.name;
    curve.reps = reps;
    curve.a_grid = a_grid;
    const double eps = spec.at(1);
    for (double a : a_grid) {
        const Signal theta = signal_family(a, bandwidth, smoothness, eps, n_max);
        const Efficiency e = oracle_efficiency(spec, theta, selector, reps, n_max, seed);
        curve.efficiency.push_back(e.value);
        curve.std_error.push_back(e.std_error);
        curve.oracle_n.push_back(e.oracle_n);
        curve.oracle_risk.push_back(e.oracle_risk);
    }
    return curve;
}

std::vector<RatioPoint> ratio_curve(const SigmaSpec& spec, const HullTable& hull, double alpha,
                                    std::size_t n_first, std::size_t n_last) {
    if (n_first == 0 || n_first > n_last) throw DomainError("ratio_curve: empty bandwidth range");
    std::vector<RatioPoint> out;
    for (std::size_t n = n_first; n <= n_last; ++n) {
        const PenaltyRatio r = penalty_ratio(spec, hull, alpha, n);
        out.push_back({n, r.rho, r.rho_tilde});
    }
    return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
    if (count == 0 || !(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("log_grid: bad range");
    if (count == 1) return {lo};
    std::vector<double> g(count);
    const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        g[i] = std::exp(std::log(lo) + step * static_cast<double>(i));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> default_a_grid() { return log_grid(0.5, 500.0, 20); }

std::size_t default_n_max(const SigmaSpec& spec) {
    const std::size_t n = spec.beta() <= 1.0 ? 200 : 100;
    if (const auto limit = spec.max_index()) return std::min(n, *limit);
    return n;
}

std::string stem_csv(const StemData& data) {
    std::string s = "rep,N_selected,normalized_loss\n";
    for (std::size_t r = 0; r < data.records.size(); ++r) {
        s += csv_join({std::to_string(r), std::to_string(data.records[r].selected_n),
                       format_double(data.records[r].normalized_loss)});
    }
    return s;
}

std::string efficiency_csv(const EfficiencyCurve& curve) {
    std::string s = "a,efficiency,std_error,oracle_N,oracle_risk\n";
    for (std::size_t i = 0; i < curve.a_grid.size(); ++i) {
        s += csv_join({format_double(curve.a_grid[i]), format_double(curve.efficiency[i]),
                       format_double(curve.std_error[i]), std::to_string(curve.oracle_n[i]),
                       format_double(curve.oracle_risk[i])});
    }
    return s;
}

std::string ratio_csv(const std::vector<RatioPoint>& curve) {
    std::string s = "N,rho,rho_tilde\n";
    for (const auto& p : curve) {
        s += csv_join({std::to_string(p.n), format_double(p.rho), format_double(p.rho_tilde)});
    }
    return s;
}

}  // namespace rhm
