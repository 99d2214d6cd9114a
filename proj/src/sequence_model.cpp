#include "rhm/sequence_model.hpp"

#include <cmath>
#include <cstdio>

#include "rhm/parallel.hpp"
#include "rhm/random.hpp"

namespace rhm {

namespace {

std::string hexfloat(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

SigmaSpec SigmaSpec::power_law(double epsilon, double beta) {
    if (!positive_finite(epsilon)) throw std::invalid_argument("sigma: epsilon must be > 0");
    if (!std::isfinite(beta) || beta < 0.0) throw std::invalid_argument("sigma: beta must be >= 0");
    SigmaSpec s;
    s.kind_ = Kind::power_law;
    s.epsilon_ = epsilon;
    s.beta_ = beta;
    return s;
}

SigmaSpec SigmaSpec::table(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("sigma: explicit table is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!positive_finite(values[i])) {
            throw std::invalid_argument("sigma: explicit value " + std::to_string(i + 1) +
                                        " must be > 0");
        }
    }
    SigmaSpec s;
    s.kind_ = Kind::explicit_table;
    s.epsilon_ = values.front();
    s.beta_ = 0.0;
    s.values_ = std::move(values);
    return s;
}

std::optional<std::size_t> SigmaSpec::max_index() const {
    if (kind_ == Kind::power_law) return std::nullopt;
    return values_.size();
}

bool SigmaSpec::contains(std::size_t k) const {
    return k >= 1 && (kind_ == Kind::power_law || k <= values_.size());
}

double SigmaSpec::at(std::size_t k) const {
    if (k == 0) throw DomainError("sigma index must be >= 1");
    if (kind_ == Kind::power_law) {
        return epsilon_ * std::pow(static_cast<double>(k), beta_);
    }
    if (k > values_.size()) {
        throw DomainError("sigma index " + std::to_string(k) + " beyond explicit table of size " +
                          std::to_string(values_.size()));
    }
    return values_[k - 1];
}

double SigmaSpec::variance(std::size_t k) const {
    const double s = at(k);
    return s * s;
}

double SigmaSpec::relative(std::size_t k) const {
    if (kind_ == Kind::power_law) {
        if (k == 0) throw DomainError("sigma index must be >= 1");
        return std::pow(static_cast<double>(k), beta_);
    }
    return at(k) / values_.front();
}

std::vector<double> SigmaSpec::variances(std::size_t n) const {
    if (n > 0 && !contains(n)) {
        throw DomainError("requested " + std::to_string(n) + " noise levels from a table of " +
                          std::to_string(values_.size()));
    }
    std::vector<double> out(n);
    for (std::size_t k = 1; k <= n; ++k) out[k - 1] = variance(k);
    return out;
}

SigmaSpec SigmaSpec::scaled(double c) const {
    if (!positive_finite(c)) throw std::invalid_argument("sigma: scale must be > 0");
    if (kind_ == Kind::power_law) return power_law(epsilon_ * c, beta_);
    std::vector<double> v = values_;
    for (double& x : v) x *= c;
    return table(std::move(v));
}

std::string SigmaSpec::canonical() const {
    if (kind_ == Kind::power_law) {
        return "power-law;epsilon=" + hexfloat(epsilon_) + ";beta=" + hexfloat(beta_);
    }
    std::string s = "explicit;n=" + std::to_string(values_.size()) + ";";
    for (double v : values_) {
        s += hexfloat(v);
        s += ',';
    }
    return s;
}

double sigma_at(const SigmaSpec& spec, std::size_t k) { return spec.at(k); }

Signal::Signal(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw std::invalid_argument("signal: coefficients must be finite");
    }
}

double Signal::squared_norm() const { return tail_energy(0); }

double Signal::tail_energy(std::size_t n) const {
    CompensatedSum s;
    for (std::size_t i = n; i < coeffs_.size(); ++i) s.add(coeffs_[i] * coeffs_[i]);
    return s.value();
}

Observation::Observation(std::vector<double> ys, SigmaSpec spec, std::uint64_t seed)
    : ys_(std::move(ys)), spec_(std::move(spec)), seed_(seed) {
    if (ys_.empty()) throw std::invalid_argument("observation: n_max must be >= 1");
    for (double y : ys_) {
        if (!std::isfinite(y)) throw std::invalid_argument("observation: entries must be finite");
    }
    variances_ = spec_.variances(ys_.size());
}

Observation simulate_with_noise(const SigmaSpec& spec, const Signal& signal,
                                std::span<const double> xi, std::uint64_t seed) {
    std::vector<double> ys(xi.size());
    for (std::size_t k = 1; k <= xi.size(); ++k) {
        ys[k - 1] = signal.at(k) + spec.at(k) * xi[k - 1];
    }
    return Observation(std::move(ys), spec, seed);
}

Observation simulate(const SigmaSpec& spec, const Signal& signal, std::size_t n_max,
                     std::uint64_t seed, std::uint64_t replication) {
    if (n_max == 0) throw std::invalid_argument("simulate: n_max must be >= 1");
    if (!spec.contains(n_max)) {
        throw DomainError("simulate: n_max " + std::to_string(n_max) + " beyond sigma table");
    }
    std::vector<double> xi(n_max);
    fill_normals(seed, Stream::observation, replication, 1, xi);
    return simulate_with_noise(spec, signal, xi, seed);
}

Signal signal_family(double amplitude, double bandwidth, double smoothness, double epsilon,
                     std::size_t n_max) {
    if (n_max == 0) throw std::invalid_argument("signal_family: n_max must be >= 1");
    if (!std::isfinite(amplitude) || amplitude < 0.0) {
        throw std::invalid_argument("signal_family: amplitude must be >= 0");
    }
    if (!positive_finite(bandwidth) || !positive_finite(smoothness) || !positive_finite(epsilon)) {
        throw std::invalid_argument("signal_family: W, m and epsilon must be > 0");
    }
    std::vector<double> c(n_max);
    for (std::size_t i = 1; i <= n_max; ++i) {
        const double ratio = static_cast<double>(i) / bandwidth;
        c[i - 1] = amplitude * (epsilon / (1.0 + std::pow(ratio, smoothness)));
    }
    return Signal(std::move(c));
}

}  // namespace rhm
