#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "rhm/estimators.hpp"
#include "rhm/hull.hpp"
#include "rhm/parallel.hpp"
#include "rhm/selectors.hpp"

using namespace rhm;

namespace {

const SigmaSpec kUnit = SigmaSpec::power_law(1.0, 0.0);

Observation obs_of(std::vector<double> ys, const SigmaSpec& spec = kUnit) {
    return Observation(std::move(ys), spec, 0);
}

}  // namespace

TEST(PenalizedObjective, Examples) {
    EXPECT_EQ(penalized_objective(obs_of({0.0, 0.0}), [](std::size_t) { return 0.0; }, 2), 2.0);
    EXPECT_EQ(penalized_objective(obs_of({3.0, 1.0}), [](std::size_t n) { return double(n); }, 1), -7.0);
}

TEST(PenalizedObjective, UrePenaltyReproducesUreObjective) {
    const auto spec = SigmaSpec::power_law(0.5, 1.0);
    const auto obs = simulate(spec, Signal({2.0, 1.0, 0.5}), 12, 4);
    const auto ure = select_ure(obs, 12);
    const auto var = spec.variances(12);
    const Penalty pen = [&](std::size_t n) {
        return ordered_sum(std::span<const double>(var.data(), n));
    };
    const auto viaPen = select_penalized(obs, pen, 12);
    EXPECT_EQ(viaPen.n_selected, ure.n_selected);
    for (std::size_t n = 1; n <= 12; ++n) {
        double direct = 0.0;
        for (std::size_t k = 1; k <= n; ++k) direct += -obs.y(k) * obs.y(k) + 2.0 * spec.variance(k);
        EXPECT_NEAR(ure.objective_values[n - 1], direct, 1e-12 * (1.0 + std::abs(direct)));
        EXPECT_NEAR(viaPen.objective_values[n - 1], direct, 1e-12 * (1.0 + std::abs(direct)));
        EXPECT_NEAR(penalized_objective(obs, pen, n), direct, 1e-12 * (1.0 + std::abs(direct)));
    }
    EXPECT_EQ(viaPen.method, Method::custom_penalty);
    EXPECT_EQ(ure.method, Method::ure);
}

TEST(SelectUre, IncrementExamples) {
    EXPECT_EQ(select_ure(obs_of({0.5, 0.5, 0.5}), 3).n_selected, 1u);
    EXPECT_EQ(select_ure(obs_of({10.0, 3.0, 0.1}), 3).n_selected, 2u);
    EXPECT_EQ(select_ure(obs_of({3.0, 2.0, 0.1, -0.2}), 4).n_selected, 2u);
}

TEST(SelectUre, RangeChecks) {
    EXPECT_THROW(select_ure(obs_of({1.0, 2.0}), 3), DomainError);
    EXPECT_THROW(select_ure(obs_of({1.0, 2.0}), 0), DomainError);
}

TEST(SelectUre, TiesGoToSmallestN) {
    // Objectives -2, 0, -2: N = 1 and N = 3 tie.
    EXPECT_EQ(select_ure(obs_of({2.0, 0.0, 2.0}), 3).n_selected, 1u);
    EXPECT_EQ(select_ure(obs_of({4.0, 2.0}), 2).objective_values,
              (std::vector<double>{-14.0, -16.0}));
}

TEST(SelectRhm, Examples) {
    const auto obs = obs_of({10.0, 3.0, 0.1});
    const auto hull = hull_from_values(kUnit, {0.0, 5.0, 5.0}, McParams{});
    const auto r = select_rhm(obs, hull, 1.0, 3);
    EXPECT_EQ(r.n_selected, 1u);
    EXPECT_EQ(r.method, Method::rhm);
    EXPECT_EQ(r.objective_values[1], -100.0 - 9.0 + 4.0 + 10.0);
}

TEST(SelectRhm, ZeroHullIsUre) {
    const auto spec = SigmaSpec::power_law(0.2, 1.0);
    const auto hull = hull_from_values(spec, std::vector<double>(40, 0.0), McParams{});
    for (std::uint64_t r = 0; r < 200; ++r) {
        const auto obs = simulate(spec, signal_family(30.0, 6.0, 6.0, 0.2, 40), 40, 8, r);
        const auto a = select_rhm(obs, hull, 1.1, 40);
        const auto b = select_ure(obs, 40);
        EXPECT_EQ(a.n_selected, b.n_selected);
        EXPECT_EQ(a.objective_values, b.objective_values);
    }
}

TEST(SelectRhm, Validation) {
    const auto obs = obs_of({1.0, 2.0, 3.0});
    const auto hull = hull_from_values(kUnit, {0.0, 1.0}, McParams{});
    EXPECT_THROW(select_rhm(obs, hull, 1.1, 3), DomainError);
    EXPECT_THROW(select_rhm(obs, hull, -0.5, 2), std::invalid_argument);
    const auto other = hull_from_values(SigmaSpec::power_law(2.0, 0.0), {0.0, 1.0}, McParams{});
    EXPECT_THROW(select_rhm(obs, other, 1.1, 2), HullMismatch);
    EXPECT_NO_THROW(select_rhm(obs, hull, 0.0, 2));
}

TEST(SelectRhm, PenaltyOrdering) {
    const auto spec = SigmaSpec::power_law(1.0, 1.0);
    McParams mc;
    mc.samples = 50'000;
    const auto hull = build_hull_table(spec, 30, mc);
    const auto obs = simulate(spec, Signal::zero(), 30, 1);
    const auto ure = select_ure(obs, 30);
    const auto rhm = select_rhm(obs, hull, 1.1, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
        const double gap = rhm.objective_values[n - 1] - ure.objective_values[n - 1];
        EXPECT_GE(gap, 0.0);
        if (hull.u0_at(n) == 0.0) {
            EXPECT_EQ(gap, 0.0);
        } else {
            EXPECT_GT(gap, 0.0);
        }
    }
}

TEST(Selectors, ScaleInvariantArgmin) {
    const auto spec = SigmaSpec::power_law(0.3, 1.0);
    McParams mc;
    mc.samples = 50'000;
    const auto hull = build_hull_table(spec, 60, mc);
    const auto hull2 = build_hull_table(spec.scaled(2.0), 60, mc);
    const auto theta = signal_family(40.0, 6.0, 6.0, 0.3, 60);
    for (std::uint64_t r = 0; r < 300; ++r) {
        const auto obs = simulate(spec, theta, 60, 3, r);
        std::vector<double> ys2;
        for (double y : obs.ys()) ys2.push_back(2.0 * y);
        const Observation obs2(ys2, spec.scaled(2.0), 3);
        EXPECT_EQ(select_ure(obs, 60).n_selected, select_ure(obs2, 60).n_selected);
        EXPECT_EQ(select_rhm(obs, hull, 1.1, 60).n_selected, select_rhm(obs2, hull2, 1.1, 60).n_selected);
    }
}

TEST(Selectors, Deterministic) {
    const auto spec = SigmaSpec::power_law(1.0, 1.0);
    const auto hull = hull_from_values(spec, std::vector<double>(20, 3.0), McParams{});
    const auto obs = simulate(spec, Signal({5.0, 4.0}), 20, 99);
    const auto a = select_rhm(obs, hull, 1.1, 20);
    const auto b = select_rhm(obs, hull, 1.1, 20);
    EXPECT_EQ(a.n_selected, b.n_selected);
    EXPECT_EQ(a.objective_values, b.objective_values);
}

TEST(SelectUre, UnbiasedRiskEstimate) {
    // E[URE objective(N)] = R(theta, N) - ||theta||^2.
    const std::size_t reps = 100'000;
    const std::vector<std::pair<Signal, SigmaSpec>> cases{
        {Signal::zero(), SigmaSpec::power_law(1.0, 0.0)},
        {Signal({3.0, -1.0, 2.0, 0.5, 0.1}), SigmaSpec::power_law(0.5, 1.0)},
        {signal_family(20.0, 6.0, 6.0, 0.1, 20), SigmaSpec::power_law(0.1, 2.0)},
    };
    for (const auto& [theta, spec] : cases) {
        std::vector<CompensatedSum> s1(20), s2(20);
        for (std::size_t r = 0; r < reps; ++r) {
            const auto obs = simulate(spec, theta, 20, 31, r);
            const auto res = select_ure(obs, 20);
            for (std::size_t n : {1u, 5u, 20u}) {
                const double v = res.objective_values[n - 1];
                s1[n - 1].add(v);
                s2[n - 1].add(v * v);
            }
        }
        for (std::size_t n : {1u, 5u, 20u}) {
            const double mean = s1[n - 1].value() / reps;
            const double se = std::sqrt((s2[n - 1].value() / reps - mean * mean) / reps);
            EXPECT_NEAR(mean, projection_risk(theta, spec, n) - theta.squared_norm(), 4.0 * se)
                << "N = " << n;
        }
    }
}

TEST(Method, Names) {
    EXPECT_EQ(method_from_string("ure"), Method::ure);
    EXPECT_EQ(method_from_string("rhm"), Method::rhm);
    EXPECT_EQ(to_string(Method::rhm), "rhm");
    EXPECT_THROW(method_from_string("lepski"), std::invalid_argument);
}
