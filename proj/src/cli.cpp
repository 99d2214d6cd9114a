#include "rhm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "rhm/bench.hpp"
#include "rhm/estimators.hpp"
#include "rhm/io.hpp"
#include "rhm/version.hpp"

namespace rhm::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// config parsing

void check_keys(const json& section, const std::string& name, std::set<std::string> allowed) {
    if (!section.is_object()) throw ConfigError(name + ": expected an object");
    for (const auto& [key, _] : section.items()) {
        if (!allowed.count(key)) throw ConfigError(name + "." + key + ": unknown field");
    }
}

template <class T>
T field(const json& section, const std::string& name, const std::string& key, T fallback) {
    if (!section.contains(key)) return fallback;
    try {
        return section.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(name + "." + key + ": wrong type (" + section.at(key).dump() + ")");
    }
}

std::uint64_t unsigned_field(const json& section, const std::string& name, const std::string& key,
                             std::uint64_t fallback) {
    if (!section.contains(key)) return fallback;
    const json& v = section.at(key);
    if (!v.is_number_unsigned()) {
        throw ConfigError(name + "." + key + ": expected a nonnegative integer, got " + v.dump());
    }
    return v.get<std::uint64_t>();
}

std::optional<std::size_t> optional_count(const json& section, const std::string& name,
                                          const std::string& key) {
    if (!section.contains(key) || section.at(key).is_null()) return std::nullopt;
    const std::uint64_t v = unsigned_field(section, name, key, 0);
    if (v == 0) throw ConfigError(name + "." + key + ": must be >= 1");
    return static_cast<std::size_t>(v);
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

const json& section_or_empty(const json& j, const char* key) {
    static const json empty = json::object();
    return j.contains(key) ? j.at(key) : empty;
}

std::string kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::stem: return "stem";
        case ExperimentKind::ratio: return "ratio";
        case ExperimentKind::efficiency: return "efficiency";
        case ExperimentKind::select: return "select";
    }
    return "stem";
}

ExperimentKind kind_from_name(const std::string& s) {
    if (s == "stem") return ExperimentKind::stem;
    if (s == "ratio") return ExperimentKind::ratio;
    if (s == "efficiency") return ExperimentKind::efficiency;
    if (s == "select") return ExperimentKind::select;
    throw ConfigError("experiment.kind: expected stem, ratio, efficiency or select, got \"" + s + "\"");
}

void apply_assignment(json& j, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("--set " + assignment + ": expected dotted.path=value");
    }
    std::string pointer = "/" + assignment.substr(0, eq);
    for (char& c : pointer) {
        if (c == '.') c = '/';
    }
    const std::string text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;
    j[json::json_pointer(pointer)] = value;
}

// ---------------------------------------------------------------------------
// hull acquisition

struct AcquiredHull {
    std::shared_ptr<const HullTable> table;
    fs::path path;
    bool cache_hit = false;
};

AcquiredHull acquire_hull(const RunConfig& cfg, const SigmaSpec& spec, std::size_t n_max,
                          bool use_explicit_path, std::ostream& log) {
    const std::string key = hull_cache_key(spec, n_max, cfg.hull.mc);
    const fs::path path = use_explicit_path && cfg.hull.path
                              ? *cfg.hull.path
                              : cfg.cache_dir() / ("hull-" + key + ".json");
    if (!cfg.hull.rebuild && fs::exists(path)) {
        HullTable t = load_hull(path);
        if (t.cache_key() != key) {
            throw HullMismatch("fingerprint mismatch: " + path.string() +
                               " holds a table for different parameters (cache key " +
                               t.cache_key() + ", expected " + key + "); rerun with --rebuild");
        }
        log << "hull: cache hit " << path.string() << "\n";
        return {std::make_shared<const HullTable>(std::move(t)), path, true};
    }
    HullTable t = build_hull_table(spec, n_max, cfg.hull.mc);
    save_hull(path, t);
    log << "hull: built " << path.string() << " (" << cfg.hull.mc.samples << " samples, N_max "
        << n_max << ")\n";
    if (!t.saturated.empty()) {
        log << "hull: warning: " << t.saturated.size()
            << " bandwidth(s) saturated at the largest sample; increase hull.samples\n";
    }
    return {std::make_shared<const HullTable>(std::move(t)), path, false};
}

json hull_provenance(const AcquiredHull& h) {
    return {{"file", h.path.filename().string()},
            {"cache_key", h.table->cache_key()},
            {"spec_fingerprint", h.table->spec_fingerprint},
            {"N_max", h.table->n_max},
            {"mc_samples", h.table->mc_samples},
            {"seed", h.table->seed},
            {"monotonized", h.table->monotonized}};
}

bool wants(const RunConfig& cfg, const std::string& format) {
    for (const auto& f : cfg.output.formats) {
        if (f == format) return true;
    }
    return false;
}

void write_output(const RunConfig& cfg, const std::string& name, const std::string& content,
                  json& outputs) {
    write_file_atomic(cfg.output.directory / name, content);
    outputs.push_back(name);
}

void write_manifest(const RunConfig& cfg, const std::string& command, json hulls, json summary,
                    json outputs) {
    json m;
    m["tool"] = "rhm";
    m["version"] = kVersion;
#ifdef __VERSION__
    m["compiler"] = __VERSION__;
#endif
    m["command"] = command;
    m["config"] = cfg.to_json();
    m["hull"] = std::move(hulls);
    m["summary"] = std::move(summary);
    m["outputs"] = std::move(outputs);
    write_file_atomic(cfg.output.directory / "manifest.json", m.dump(2) + "\n");
}

std::string beta_label(double beta) {
    std::string s = format_double(beta);
    for (char& c : s) {
        if (c == '.') c = 'p';
    }
    return "beta" + s;
}

Selector make_selector(Method m, const RunConfig& cfg, std::size_t n_max,
                       const std::shared_ptr<const HullTable>& hull) {
    if (m == Method::ure) return ure_selector(n_max);
    return rhm_selector(hull, cfg.selector.alpha, n_max);
}

bool needs_rhm(const RunConfig& cfg) {
    for (Method m : cfg.selector.methods) {
        if (m == Method::rhm) return true;
    }
    return false;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig

RunConfig RunConfig::from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    check_keys(j, "config", {"problem", "hull", "selector", "experiment", "output"});
    RunConfig c;

    const json& problem = section_or_empty(j, "problem");
    check_keys(problem, "problem", {"sigma"});
    if (problem.contains("sigma")) {
        const json& s = problem.at("sigma");
        if (s.is_object()) check_keys(s, "problem.sigma", {"kind", "epsilon", "beta", "values"});
        try {
            c.sigma = sigma_from_json(s);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("problem.") + e.what());
        }
    }

    const json& hull = section_or_empty(j, "hull");
    check_keys(hull, "hull", {"samples", "seed", "monotonize", "n_max", "path", "cache_dir"});
    c.hull.params_given = hull.contains("samples");
    c.hull.mc.samples = unsigned_field(hull, "hull", "samples", McParams::kDefaultSamples);
    c.hull.mc.seed = unsigned_field(hull, "hull", "seed", 0);
    c.hull.mc.monotonize = field(hull, "hull", "monotonize", true);
    c.hull.n_max = optional_count(hull, "hull", "n_max");
    if (hull.contains("path")) c.hull.path = field<std::string>(hull, "hull", "path", "");
    if (hull.contains("cache_dir")) c.hull.cache_dir = field<std::string>(hull, "hull", "cache_dir", "");
    require(c.hull.mc.samples >= McParams::kMinSamples,
            "hull.samples: must be >= " + std::to_string(McParams::kMinSamples));
    if (c.hull.n_max) {
        require(c.sigma.contains(*c.hull.n_max), "hull.n_max: beyond the sigma table");
    }

    const json& sel = section_or_empty(j, "selector");
    check_keys(sel, "selector", {"methods", "alpha", "n_max"});
    if (sel.contains("methods")) {
        const auto names = field<std::vector<std::string>>(sel, "selector", "methods", {});
        require(!names.empty(), "selector.methods: must list at least one method");
        c.selector.methods.clear();
        for (const auto& n : names) {
            try {
                c.selector.methods.push_back(method_from_string(n));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("selector.methods: ") + e.what());
            }
        }
    }
    c.selector.alpha = field(sel, "selector", "alpha", kDefaultAlpha);
    require(std::isfinite(c.selector.alpha) && c.selector.alpha >= 0.0, "selector.alpha: must be >= 0");
    c.selector.n_max = optional_count(sel, "selector", "n_max");

    const json& ex = section_or_empty(j, "experiment");
    check_keys(ex, "experiment",
               {"kind", "reps", "a_grid", "W", "m", "n_max", "seed", "amplitude", "betas"});
    c.experiment.kind = kind_from_name(field<std::string>(ex, "experiment", "kind", "stem"));
    c.experiment.reps = unsigned_field(ex, "experiment", "reps", 10'000);
    require(c.experiment.reps >= 1, "experiment.reps: must be >= 1");
    if (c.experiment.kind == ExperimentKind::efficiency) {
        require(c.experiment.reps >= 2, "experiment.reps: efficiency runs need >= 2 replications");
    }
    c.experiment.a_grid = field(ex, "experiment", "a_grid", std::vector<double>{});
    for (double a : c.experiment.a_grid) {
        require(std::isfinite(a) && a >= 0.0, "experiment.a_grid: amplitudes must be >= 0");
    }
    c.experiment.bandwidth = field(ex, "experiment", "W", 6.0);
    c.experiment.smoothness = field(ex, "experiment", "m", 6.0);
    require(std::isfinite(c.experiment.bandwidth) && c.experiment.bandwidth > 0.0, "experiment.W: must be > 0");
    require(std::isfinite(c.experiment.smoothness) && c.experiment.smoothness > 0.0, "experiment.m: must be > 0");
    c.experiment.n_max = optional_count(ex, "experiment", "n_max");
    c.experiment.seed = unsigned_field(ex, "experiment", "seed", 1);
    c.experiment.amplitude = field(ex, "experiment", "amplitude", 0.0);
    require(std::isfinite(c.experiment.amplitude) && c.experiment.amplitude >= 0.0,
            "experiment.amplitude: must be >= 0");
    c.experiment.betas = field(ex, "experiment", "betas", std::vector<double>{});
    for (double b : c.experiment.betas) {
        require(std::isfinite(b) && b >= 0.0, "experiment.betas: exponents must be >= 0");
    }
    if (c.experiment.n_max) {
        require(c.sigma.contains(*c.experiment.n_max), "experiment.n_max: beyond the sigma table");
    }
    if (c.selector.n_max) {
        require(c.sigma.contains(*c.selector.n_max), "selector.n_max: beyond the sigma table");
    }

    const json& out = section_or_empty(j, "output");
    check_keys(out, "output", {"directory", "formats"});
    c.output.directory = field<std::string>(out, "output", "directory", "out");
    require(!c.output.directory.empty(), "output.directory: must not be empty");
    c.output.formats = field(out, "output", "formats", std::vector<std::string>{"csv"});
    for (const auto& f : c.output.formats) {
        require(f == "csv" || f == "json", "output.formats: \"" + f + "\" is not csv or json");
    }
    return c;
}

json RunConfig::to_json() const {
    json j;
    j["problem"]["sigma"] = sigma_to_json(sigma);
    j["hull"] = {{"samples", hull.mc.samples}, {"seed", hull.mc.seed}, {"monotonize", hull.mc.monotonize}};
    if (hull.n_max) j["hull"]["n_max"] = *hull.n_max;
    if (hull.path) j["hull"]["path"] = hull.path->string();
    if (hull.cache_dir) j["hull"]["cache_dir"] = hull.cache_dir->string();
    json methods = json::array();
    for (Method m : selector.methods) methods.push_back(to_string(m));
    j["selector"] = {{"methods", methods}, {"alpha", selector.alpha}};
    if (selector.n_max) j["selector"]["n_max"] = *selector.n_max;
    j["experiment"] = {{"kind", kind_name(experiment.kind)},
                       {"reps", experiment.reps},
                       {"a_grid", experiment.a_grid.empty() ? default_a_grid() : experiment.a_grid},
                       {"W", experiment.bandwidth},
                       {"m", experiment.smoothness},
                       {"n_max", experiment_n_max()},
                       {"seed", experiment.seed},
                       {"amplitude", experiment.amplitude},
                       {"betas", experiment.betas}};
    j["output"] = {{"directory", output.directory.string()}, {"formats", output.formats}};
    return j;
}

fs::path RunConfig::cache_dir() const {
    return hull.cache_dir.value_or(output.directory / "cache");
}

std::size_t RunConfig::experiment_n_max() const {
    return experiment.n_max.value_or(default_n_max(sigma));
}

RunConfig load_config(const std::optional<fs::path>& config_path, const Overrides& overrides) {
    json j = json::object();
    if (config_path) {
        const std::string text = read_file(*config_path);
        j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ConfigError("config: " + config_path->string() + " is not valid JSON");
    }
    try {
        for (const auto& a : overrides.assignments) apply_assignment(j, a);
        if (overrides.seed) {
            j["experiment"]["seed"] = *overrides.seed;
            j["hull"]["seed"] = *overrides.seed;
        }
        if (overrides.out) j["output"]["directory"] = overrides.out->string();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("override: ") + e.what());
    }
    RunConfig c = RunConfig::from_json(j);
    c.hull.rebuild = overrides.rebuild;
    return c;
}

std::vector<double> read_data_csv(const fs::path& path) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    std::vector<double> ys;
    std::size_t line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (header) {
            header = false;
            continue;
        }
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected two columns k,y");
        }
        const std::string_view k_text = trim(row.substr(0, comma));
        const std::string_view y_text = trim(row.substr(comma + 1));
        std::size_t k = 0;
        double y = 0.0;
        const auto rk = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
        const auto ry = std::from_chars(y_text.data(), y_text.data() + y_text.size(), y);
        if (rk.ec != std::errc() || rk.ptr != k_text.data() + k_text.size() || ry.ec != std::errc() ||
            ry.ptr != y_text.data() + y_text.size() || !std::isfinite(y)) {
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": malformed row");
        }
        if (k != ys.size() + 1) {
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected k = " +
                            std::to_string(ys.size() + 1) + ", got " + std::to_string(k));
        }
        ys.push_back(y);
    }
    if (ys.empty()) throw DataError(path.string() + ": no data rows");
    return ys;
}

// ---------------------------------------------------------------------------
// commands

int cmd_hull(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const std::size_t n_max = cfg.hull.n_max.value_or(100);
    const AcquiredHull h = acquire_hull(cfg, cfg.sigma, n_max, true, out);
    const HullTable& t = *h.table;
    const std::size_t n0 = envelope_crossing(t);
    out << "U0[1] = " << format_double(t.u0.front()) << "\n"
        << "U0[" << t.n_max << "] = " << format_double(t.u0.back()) << "\n"
        << "envelope u0 >= u1 from N0 = " << n0 << "\n";
    json summary = {{"cache_hit", h.cache_hit},
                    {"U0_first", t.u0.front()},
                    {"U0_last", t.u0.back()},
                    {"envelope_N0", n0},
                    {"saturated", t.saturated}};
    // cache_hit differs between the first and later runs by design, so keep
    // it out of the manifest and only report it on stdout.
    summary.erase("cache_hit");
    write_manifest(cfg, "hull", json::array({hull_provenance(h)}), summary,
                   json::array({h.path.filename().string()}));
    return kOk;
}

int cmd_select(const RunConfig& cfg, const fs::path& data_file, std::ostream& out, std::ostream&) {
    const std::vector<double> ys = read_data_csv(data_file);
    if (!cfg.sigma.contains(ys.size())) {
        throw DataError(data_file.string() + ": " + std::to_string(ys.size()) +
                        " rows exceed the sigma table");
    }
    const Observation obs(ys, cfg.sigma, 0);
    const std::size_t n_max = cfg.selector.n_max.value_or(obs.n_max());
    if (n_max > obs.n_max()) {
        throw ConfigError("selector.n_max: " + std::to_string(n_max) + " exceeds the " +
                          std::to_string(obs.n_max()) + " data rows");
    }

    std::optional<AcquiredHull> hull;
    if (needs_rhm(cfg)) {
        if (cfg.hull.path && fs::exists(*cfg.hull.path) && !cfg.hull.rebuild) {
            auto t = std::make_shared<const HullTable>(load_hull(*cfg.hull.path));
            if (cfg.hull.params_given && t->cache_key() != hull_cache_key(cfg.sigma, t->n_max, cfg.hull.mc)) {
                throw HullMismatch("fingerprint mismatch: " + cfg.hull.path->string() +
                                   " was built with different hull parameters");
            }
            out << "hull: loaded " << cfg.hull.path->string() << "\n";
            hull = AcquiredHull{std::move(t), *cfg.hull.path, true};
        } else if (cfg.hull.params_given) {
            hull = acquire_hull(cfg, cfg.sigma, n_max, true, out);
        } else {
            throw HullMissing("rhm needs a hull table: set hull.path to an existing table or give "
                              "hull.samples to build one");
        }
    }

    json selections = json::object();
    json outputs = json::array();
    for (Method m : cfg.selector.methods) {
        const SelectorResult r = m == Method::ure
                                     ? select_ure(obs, n_max)
                                     : select_rhm(obs, *hull->table, cfg.selector.alpha, n_max);
        out << to_string(m) << ": N = " << r.n_selected << "\n";
        selections[to_string(m)] = {{"N_selected", r.n_selected}, {"objective", r.objective_values}};
        const Signal est = project(obs, r.n_selected);
        std::string csv = "k,estimate\n";
        for (std::size_t k = 1; k <= est.size(); ++k) {
            csv += std::to_string(k) + "," + format_double(est.at(k)) + "\n";
        }
        write_output(cfg, "estimate_" + to_string(m) + ".csv", csv, outputs);
    }
    json sel_doc = {{"data", data_file.filename().string()}, {"n", obs.n_max()}, {"N_max", n_max},
                    {"alpha", cfg.selector.alpha}, {"selections", selections}};
    write_output(cfg, "selection.json", sel_doc.dump(2) + "\n", outputs);
    json hulls = json::array();
    if (hull) hulls.push_back(hull_provenance(*hull));
    json summary = json::object();
    for (const auto& [name, s] : selections.items()) summary[name] = s.at("N_selected");
    write_manifest(cfg, "select", hulls, summary, outputs);
    return kOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    json hulls = json::array();
    json summary = json::object();
    json outputs = json::array();
    json results = json::object();
    const bool csv = wants(cfg, "csv");

    switch (cfg.experiment.kind) {
        case ExperimentKind::select:
            throw ConfigError("experiment.kind: \"select\" runs through the select subcommand");

        case ExperimentKind::ratio: {
            std::vector<std::pair<std::string, SigmaSpec>> specs;
            if (cfg.experiment.betas.empty()) {
                specs.emplace_back("sigma", cfg.sigma);
            } else {
                for (double b : cfg.experiment.betas) {
                    specs.emplace_back(beta_label(b), SigmaSpec::power_law(cfg.sigma.at(1), b));
                }
            }
            if (specs.size() > 1 && cfg.hull.path) {
                throw ConfigError("hull.path: cannot be shared by several spectra; use hull.cache_dir");
            }
            const std::size_t n_max = cfg.hull.n_max.value_or(100);
            for (const auto& [label, spec] : specs) {
                if (!spec.contains(n_max)) throw ConfigError("hull.n_max: beyond the sigma table");
                const AcquiredHull h = acquire_hull(cfg, spec, n_max, specs.size() == 1, out);
                hulls.push_back(hull_provenance(h));
                const auto curve = ratio_curve(spec, *h.table, cfg.selector.alpha, 1, n_max);
                const std::size_t probe = std::min<std::size_t>(5, n_max);
                summary[label] = {{"rho_1", curve.front().rho},
                                  {"rho_" + std::to_string(probe), curve[probe - 1].rho},
                                  {"rho_" + std::to_string(n_max), curve.back().rho},
                                  {"envelope_N0", envelope_crossing(*h.table)}};
                out << label << ": rho(1) = " << format_double(curve.front().rho) << ", rho("
                    << n_max << ") = " << format_double(curve.back().rho) << "\n";
                if (csv) write_output(cfg, "ratio_" + label + ".csv", ratio_csv(curve), outputs);
                json rows = json::array();
                for (const auto& p : curve) rows.push_back({p.n, p.rho, p.rho_tilde});
                results["ratio_" + label] = rows;
            }
            break;
        }

        case ExperimentKind::stem:
        case ExperimentKind::efficiency: {
            const std::size_t n_max = cfg.experiment_n_max();
            if (cfg.selector.n_max && *cfg.selector.n_max != n_max) {
                throw ConfigError("selector.n_max: bench runs search the full experiment.n_max range");
            }
            std::shared_ptr<const HullTable> table;
            if (needs_rhm(cfg)) {
                const AcquiredHull h = acquire_hull(cfg, cfg.sigma, n_max, true, out);
                hulls.push_back(hull_provenance(h));
                table = h.table;
            }
            const auto& ex = cfg.experiment;
            for (Method m : cfg.selector.methods) {
                const Selector sel = make_selector(m, cfg, n_max, table);
                if (ex.kind == ExperimentKind::stem) {
                    const Signal theta = signal_family(ex.amplitude, ex.bandwidth, ex.smoothness,
                                                       cfg.sigma.at(1), n_max);
                    const StemData d = stem_experiment(cfg.sigma, theta, sel, ex.reps, n_max, ex.seed);
                    summary[sel.name] = {{"N_emp", d.n_emp}, {"R_emp", d.r_emp}};
                    out << sel.name << ": N_emp = " << format_double(d.n_emp)
                        << ", R_emp = " << format_double(d.r_emp) << "\n";
                    if (csv) write_output(cfg, "stem_" + sel.name + ".csv", stem_csv(d), outputs);
                    json rows = json::array();
                    for (const auto& r : d.records) rows.push_back({r.selected_n, r.normalized_loss});
                    results["stem_" + sel.name] = rows;
                } else {
                    const std::vector<double> grid = ex.a_grid.empty() ? default_a_grid() : ex.a_grid;
                    const EfficiencyCurve c = efficiency_curve(cfg.sigma, sel, grid, ex.bandwidth,
                                                               ex.smoothness, ex.reps, n_max, ex.seed);
                    const auto [lo, hi] = std::minmax_element(c.efficiency.begin(), c.efficiency.end());
                    summary[sel.name] = {{"min_efficiency", *lo}, {"max_efficiency", *hi}};
                    out << sel.name << ": efficiency in [" << format_double(*lo) << ", "
                        << format_double(*hi) << "]\n";
                    if (csv) write_output(cfg, "efficiency_" + sel.name + ".csv", efficiency_csv(c), outputs);
                    results["efficiency_" + sel.name] = {{"a", c.a_grid},
                                                         {"efficiency", c.efficiency},
                                                         {"std_error", c.std_error},
                                                         {"oracle_N", c.oracle_n},
                                                         {"oracle_risk", c.oracle_risk}};
                }
            }
            break;
        }
    }
    if (wants(cfg, "json")) write_output(cfg, "results.json", results.dump(1) + "\n", outputs);
    write_manifest(cfg, "bench", hulls, summary, outputs);
    return kOk;
}

int report_exception(std::ostream& err) {
    try {
        throw;
    } catch (const HullMissing& e) {
        err << "error: " << e.what() << "\n";
        return kHullMissing;
    } catch (const HullMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return kConfigError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace rhm::cli
