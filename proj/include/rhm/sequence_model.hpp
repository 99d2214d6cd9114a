#pragma once

// Gaussian sequence model y_k = theta_k + sigma_k xi_k, k = 1, 2, ...
//
// Indices k are 1-based throughout the public API, matching the usual
// notation for spectral coefficients; storage is 0-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhm {

/// Raised when an index falls outside a finite domain (explicit noise table,
/// observation length, hull table range).
class DomainError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Noise spectrum sigma_k: either a power law epsilon * k^beta (unbounded
/// domain) or an explicit finite table.
class SigmaSpec {
  public:
    enum class Kind { power_law, explicit_table };

    static SigmaSpec power_law(double epsilon, double beta);
    static SigmaSpec table(std::vector<double> values);

    Kind kind() const { return kind_; }
    double epsilon() const { return epsilon_; }
    double beta() const { return beta_; }
    const std::vector<double>& values() const { return values_; }

    /// Largest admissible index, or nullopt for the power law.
    std::optional<std::size_t> max_index() const;
    bool contains(std::size_t k) const;

    double at(std::size_t k) const;
    double variance(std::size_t k) const;
    /// sigma_k / sigma_1, evaluated without forming epsilon (k^beta for the
    /// power law), so quantities that are scale-free stay exactly so.
    double relative(std::size_t k) const;
    /// sigma_1^2, ..., sigma_n^2.
    std::vector<double> variances(std::size_t n) const;

    /// Same spectrum multiplied by c > 0 (epsilon * c, or every table entry).
    SigmaSpec scaled(double c) const;

    /// Stable textual form with hex-float numbers; feeds fingerprints.
    std::string canonical() const;

    bool operator==(const SigmaSpec&) const = default;

  private:
    SigmaSpec() = default;

    Kind kind_ = Kind::power_law;
    double epsilon_ = 1.0;
    double beta_ = 0.0;
    std::vector<double> values_;
};

double sigma_at(const SigmaSpec& spec, std::size_t k);

/// Square-summable coefficient sequence stored as a finite prefix; every
/// index past the prefix is zero.
class Signal {
  public:
    Signal() = default;
    explicit Signal(std::vector<double> coeffs);
    static Signal zero(std::size_t n = 0) { return Signal(std::vector<double>(n, 0.0)); }

    std::size_t size() const { return coeffs_.size(); }
    const std::vector<double>& coeffs() const { return coeffs_; }
    /// theta_k, 0 past the stored prefix.
    double at(std::size_t k) const { return k >= 1 && k <= coeffs_.size() ? coeffs_[k - 1] : 0.0; }

    double squared_norm() const;
    /// sum_{k > n} theta_k^2 over the stored prefix.
    double tail_energy(std::size_t n) const;

  private:
    std::vector<double> coeffs_;
};

/// One realization y_1..y_{n_max}.
class Observation {
  public:
    Observation(std::vector<double> ys, SigmaSpec spec, std::uint64_t seed);

    std::size_t n_max() const { return ys_.size(); }
    const std::vector<double>& ys() const { return ys_; }
    double y(std::size_t k) const { return ys_.at(k - 1); }
    const SigmaSpec& spec() const { return spec_; }
    /// sigma_k^2 for k = 1..n_max, evaluated once.
    const std::vector<double>& variances() const { return variances_; }
    std::uint64_t seed() const { return seed_; }

  private:
    std::vector<double> ys_;
    SigmaSpec spec_;
    std::vector<double> variances_;
    std::uint64_t seed_;
};

/// Draws y_k = theta_k + sigma_k xi_k with xi taken from the counter-based
/// observation stream at (seed, replication, k).
Observation simulate(const SigmaSpec& spec, const Signal& signal, std::size_t n_max,
                     std::uint64_t seed, std::uint64_t replication = 0);

/// Same model with caller-supplied noise xi_1..xi_{n_max}.
Observation simulate_with_noise(const SigmaSpec& spec, const Signal& signal,
                                std::span<const double> xi, std::uint64_t seed = 0);

/// theta_i = a * epsilon / (1 + (i / W)^m), i = 1..n_max.
Signal signal_family(double amplitude, double bandwidth, double smoothness, double epsilon,
                     std::size_t n_max);

}  // namespace rhm
