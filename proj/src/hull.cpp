#include "rhm/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <new>
#include <numbers>

#include "rhm/io.hpp"
#include "rhm/parallel.hpp"
#include "rhm/random.hpp"

namespace rhm {

namespace {

// Bytes of column buffer held at once while streaming the sample paths.
constexpr std::size_t kColumnBudgetBytes = std::size_t{256} << 20;

constexpr const char* kHullFormat = "rhm-hull/1";

void check_domain(const SigmaSpec& spec, std::size_t n_max, const char* who) {
    if (n_max == 0) throw DomainError(std::string(who) + ": N_max must be >= 1");
    if (!spec.contains(n_max)) {
        throw DomainError(std::string(who) + ": N_max " + std::to_string(n_max) +
                          " beyond sigma table");
    }
}

// eta_{first..first+width-1} continuing from `eta`, for one replication.
inline double accumulate_eta(std::span<const double> variances, std::span<const double> xi,
                             double eta, std::span<double> out) {
    for (std::size_t j = 0; j < xi.size(); ++j) {
        eta += variances[j] * (xi[j] * xi[j] - 1.0);
        out[j] = eta;
    }
    return eta;
}

std::vector<double> cumulative_fourth(const std::vector<double>& variances) {
    std::vector<double> out(variances.size());
    CompensatedSum s;
    for (std::size_t i = 0; i < variances.size(); ++i) {
        s.add(variances[i] * variances[i]);
        out[i] = s.value();
    }
    return out;
}

double log_ratio(double sigma_fourth_n, double sigma1_sq, double scale) {
    return std::log(sigma_fourth_n / (scale * sigma1_sq * sigma1_sq));
}

std::string hexfloat(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

std::string content_digest(const HullTable& h) {
    std::string text = h.cache_key();
    text += ';';
    for (double v : h.u0) text += hexfloat(v) + ',';
    text += ';';
    for (double v : h.sigma_fourth) text += hexfloat(v) + ',';
    return fnv1a_hex(text);
}

}  // namespace

void McParams::validate() const {
    if (samples < kMinSamples) {
        throw std::invalid_argument("hull.samples: " + std::to_string(samples) +
                                    " is below the floor of " + std::to_string(kMinSamples));
    }
}

EtaPaths sample_eta_paths(const SigmaSpec& spec, std::size_t n_max, std::size_t samples,
                          const NoiseFill& noise) {
    check_domain(spec, n_max, "sample_eta_paths");
    const std::vector<double> var = spec.variances(n_max);
    EtaPaths paths;
    paths.samples = samples;
    paths.n_max = n_max;
    try {
        paths.values.resize(samples * n_max);
    } catch (const std::bad_alloc&) {
        throw ResourceError("sample_eta_paths: cannot allocate " + std::to_string(samples) + " x " +
                            std::to_string(n_max) + " sample matrix");
    }
    parallel_for(samples, [&](std::size_t begin, std::size_t end) {
        std::vector<double> xi(n_max);
        for (std::size_t r = begin; r < end; ++r) {
            noise(r, xi);
            accumulate_eta(var, xi, 0.0, std::span(paths.values).subspan(r * n_max, n_max));
        }
    });
    return paths;
}

EtaPaths sample_eta_paths(const SigmaSpec& spec, std::size_t n_max, const McParams& mc) {
    mc.validate();
    return sample_eta_paths(spec, n_max, mc.samples, [&](std::size_t r, std::span<double> xi) {
        fill_normals(mc.seed, Stream::hull, r, 1, xi);
    });
}

double tail_functional(std::span<const double> samples, double t) {
    if (samples.empty()) throw std::invalid_argument("tail_functional: empty sample");
    long double s = 0.0L;
    for (double x : samples) {
        if (x >= t) s += x;
    }
    return static_cast<double>(s / static_cast<long double>(samples.size()));
}

U0Solution u0_from_samples(std::span<double> samples, double level) {
    if (samples.empty()) throw std::invalid_argument("u0_from_samples: empty sample");
    const std::size_t n = samples.size();
    const long double threshold = static_cast<long double>(level) * static_cast<long double>(n);

    long double positive = 0.0L;
    for (double x : samples) {
        if (x > 0.0) positive += x;
    }
    if (positive <= threshold) return {};

    // Walk down from the largest sample; the first order statistic whose
    // inclusion lifts the suffix sum above the threshold is the infimum.
    std::size_t k = std::min(n, std::max<std::size_t>(1024, n / 128));
    for (;;) {
        const auto first = samples.end() - static_cast<std::ptrdiff_t>(k);
        std::nth_element(samples.begin(), first, samples.end());
        std::sort(first, samples.end());
        long double acc = 0.0L;
        for (auto it = samples.end(); it != first;) {
            --it;
            const double p = *it;
            if (p <= 0.0) return {};
            if (acc + p > threshold) return {p, it == samples.end() - 1};
            acc += p;
        }
        if (k == n) return {};
        k = std::min(n, k * 4);
    }
}

double compute_u0(const SigmaSpec& spec, std::size_t n, const McParams& mc) {
    check_domain(spec, n, "compute_u0");
    mc.validate();
    const std::vector<double> var = spec.variances(n);
    std::vector<double> column(mc.samples);
    parallel_for(mc.samples, [&](std::size_t begin, std::size_t end) {
        std::vector<double> xi(n);
        std::vector<double> path(n);
        for (std::size_t r = begin; r < end; ++r) {
            fill_normals(mc.seed, Stream::hull, r, 1, xi);
            column[r] = accumulate_eta(var, xi, 0.0, path);
        }
    });
    return u0_from_samples(column, var.front()).value;
}

HullTable build_hull_table(const SigmaSpec& spec, std::size_t n_max, const McParams& mc) {
    check_domain(spec, n_max, "build_hull_table");
    mc.validate();
    const std::size_t samples = mc.samples;
    const std::vector<double> var = spec.variances(n_max);

    std::size_t group = std::clamp<std::size_t>(kColumnBudgetBytes / (samples * sizeof(double)),
                                                1, n_max);
    if (group > 1 && group % 2 == 1 && group < n_max) --group;

    std::vector<double> eta;
    std::vector<double> columns;
    try {
        eta.assign(samples, 0.0);
        columns.resize(group * samples);
    } catch (const std::bad_alloc&) {
        throw ResourceError("build_hull_table: cannot allocate sample buffers");
    }

    HullTable table = hull_from_values(spec, std::vector<double>(n_max, 0.0), mc, false);
    std::vector<char> saturated(n_max, 0);

    for (std::size_t first = 1; first <= n_max; first += group) {
        const std::size_t width = std::min(group, n_max - first + 1);
        const std::span<const double> var_block(var.data() + (first - 1), width);
        parallel_for(samples, [&](std::size_t begin, std::size_t end) {
            std::vector<double> xi(width);
            std::vector<double> path(width);
            for (std::size_t r = begin; r < end; ++r) {
                fill_normals(mc.seed, Stream::hull, r, first, xi);
                eta[r] = accumulate_eta(var_block, xi, eta[r], path);
                for (std::size_t j = 0; j < width; ++j) columns[j * samples + r] = path[j];
            }
        });
        parallel_for(width, [&](std::size_t begin, std::size_t end) {
            for (std::size_t j = begin; j < end; ++j) {
                const U0Solution sol =
                    u0_from_samples(std::span(columns).subspan(j * samples, samples), var.front());
                table.u0[first - 1 + j] = sol.value;
                saturated[first - 1 + j] = sol.saturated ? 1 : 0;
            }
        });
    }

    for (std::size_t i = 0; i < n_max; ++i) {
        if (saturated[i]) table.saturated.push_back(i + 1);
    }
    if (mc.monotonize) {
        for (std::size_t i = 1; i < n_max; ++i) table.u0[i] = std::max(table.u0[i], table.u0[i - 1]);
        table.monotonized = true;
    }
    return table;
}

HullTable hull_from_values(const SigmaSpec& spec, std::vector<double> u0, const McParams& mc,
                           bool monotonized) {
    check_domain(spec, u0.size(), "hull_from_values");
    for (double v : u0) {
        if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("hull: U0 entries must be >= 0");
    }
    HullTable t;
    t.spec = spec;
    t.n_max = u0.size();
    t.u0 = std::move(u0);
    t.sigma_fourth = cumulative_fourth(spec.variances(t.n_max));
    t.spec_fingerprint = spec_fingerprint(spec);
    t.mc_samples = mc.samples;
    t.seed = mc.seed;
    t.monotonized = monotonized;
    return t;
}

double HullTable::u0_at(std::size_t n) const {
    if (n == 0 || n > n_max) {
        throw DomainError("hull: bandwidth " + std::to_string(n) + " outside table 1.." +
                          std::to_string(n_max));
    }
    return u0[n - 1];
}

double HullTable::sigma_fourth_at(std::size_t n) const {
    if (n == 0 || n > n_max) throw DomainError("hull: bandwidth outside table");
    return sigma_fourth[n - 1];
}

double HullTable::normalized_u0(std::size_t n) const {
    return u0_at(n) / std::sqrt(2.0 * sigma_fourth_at(n));
}

std::string HullTable::cache_key() const {
    return hull_cache_key(spec, n_max, McParams{mc_samples, seed, monotonized});
}

double gaussian_u0(const SigmaSpec& spec, std::size_t n) {
    const std::vector<double> var = spec.variances(n);
    if (var.empty()) throw DomainError("gaussian_u0: bandwidth must be >= 1");
    const double big = cumulative_fourth(var).back();
    const double l = log_ratio(big, var.front(), std::numbers::pi);
    return l > 0.0 ? std::sqrt(2.0 * big * l) : 0.0;
}

double u1(const SigmaSpec& spec, std::size_t n) {
    const std::vector<double> var = spec.variances(n);
    if (var.empty()) throw DomainError("u1: bandwidth must be >= 1");
    const double l = log_ratio(cumulative_fourth(var).back(), var.front(), 2.0 * std::numbers::pi);
    return l > 0.0 ? std::sqrt(l) : 0.0;
}

PenaltyRatio penalty_ratio(const SigmaSpec& spec, const HullTable& hull, double alpha,
                           std::size_t n) {
    if (hull.spec_fingerprint != spec_fingerprint(spec)) {
        throw HullMismatch("penalty_ratio: hull table was built for a different sigma spec");
    }
    const double pen_ure = ordered_sum(spec.variances(n));
    return {1.0 + (1.0 + alpha) * hull.u0_at(n) / pen_ure,
            1.0 + (1.0 + alpha) * gaussian_u0(spec, n) / pen_ure};
}

std::size_t envelope_crossing(const HullTable& hull) {
    std::size_t n0 = hull.n_max + 1;
    for (std::size_t n = hull.n_max; n >= 1; --n) {
        if (hull.normalized_u0(n) < u1(hull.spec, n)) break;
        n0 = n;
    }
    return n0;
}

std::string spec_fingerprint(const SigmaSpec& spec) { return fnv1a_hex(spec.canonical()); }

std::string hull_cache_key(const SigmaSpec& spec, std::size_t n_max, const McParams& mc) {
    return fnv1a_hex(spec.canonical() + "|N_max=" + std::to_string(n_max) +
                     "|samples=" + std::to_string(mc.samples) + "|seed=" + std::to_string(mc.seed) +
                     "|monotonize=" + (mc.monotonize ? "1" : "0") + "|" + kHullFormat);
}

std::string hull_to_json(const HullTable& hull) {
    nlohmann::json j;
    j["format"] = kHullFormat;
    j["spec"] = sigma_to_json(hull.spec);
    j["spec_fingerprint"] = hull.spec_fingerprint;
    j["cache_key"] = hull.cache_key();
    j["N_max"] = hull.n_max;
    j["mc_samples"] = hull.mc_samples;
    j["seed"] = hull.seed;
    j["monotonized"] = hull.monotonized;
    j["saturated"] = hull.saturated;
    j["U0"] = hull.u0;
    j["SigmaFourth"] = hull.sigma_fourth;
    j["digest"] = content_digest(hull);
    return j.dump(1) + "\n";
}

HullTable hull_from_json(const std::string& text) {
    HullTable t;
    std::string stored_fp;
    std::string stored_key;
    std::string stored_digest;
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        if (j.at("format").get<std::string>() != kHullFormat) {
            throw HullMismatch("fingerprint mismatch: unknown hull format");
        }
        t.spec = sigma_from_json(j.at("spec"));
        t.n_max = j.at("N_max").get<std::size_t>();
        t.u0 = j.at("U0").get<std::vector<double>>();
        t.sigma_fourth = j.at("SigmaFourth").get<std::vector<double>>();
        t.mc_samples = j.at("mc_samples").get<std::size_t>();
        t.seed = j.at("seed").get<std::uint64_t>();
        t.monotonized = j.at("monotonized").get<bool>();
        t.saturated = j.value("saturated", std::vector<std::size_t>{});
        stored_fp = j.at("spec_fingerprint").get<std::string>();
        stored_key = j.at("cache_key").get<std::string>();
        stored_digest = j.at("digest").get<std::string>();
    } catch (const HullMismatch&) {
        throw;
    } catch (const std::exception& e) {
        throw HullMismatch(std::string("fingerprint mismatch: unreadable hull table (") + e.what() + ")");
    }
    t.spec_fingerprint = spec_fingerprint(t.spec);
    if (t.spec_fingerprint != stored_fp) {
        throw HullMismatch("fingerprint mismatch: spec fingerprint " + stored_fp + " != " +
                           t.spec_fingerprint);
    }
    if (t.u0.size() != t.n_max || t.sigma_fourth.size() != t.n_max) {
        throw HullMismatch("fingerprint mismatch: table length differs from N_max");
    }
    if (t.cache_key() != stored_key) {
        throw HullMismatch("fingerprint mismatch: cache key " + stored_key + " != " + t.cache_key());
    }
    if (content_digest(t) != stored_digest) {
        throw HullMismatch("fingerprint mismatch: table contents do not match their digest");
    }
    return t;
}

void save_hull(const std::filesystem::path& path, const HullTable& hull) {
    write_file_atomic(path, hull_to_json(hull));
}

HullTable load_hull(const std::filesystem::path& path) {
    return hull_from_json(read_file(path));
}

}  // namespace rhm
