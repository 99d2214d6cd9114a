#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "rhm/estimators.hpp"
#include "rhm/hull.hpp"
#include "rhm/parallel.hpp"

using namespace rhm;

namespace {

Observation obs_of(std::vector<double> ys, const SigmaSpec& spec = SigmaSpec::power_law(1.0, 0.0)) {
    return Observation(std::move(ys), spec, 0);
}

}  // namespace

TEST(Project, Truncates) {
    const auto obs = obs_of({3.0, 1.0, 4.0});
    EXPECT_EQ(project(obs, 2).coeffs(), (std::vector<double>{3.0, 1.0, 0.0}));
    EXPECT_EQ(project(obs, 3).coeffs(), (std::vector<double>{3.0, 1.0, 4.0}));
    EXPECT_EQ(project(obs, 0).squared_norm(), 0.0);
    EXPECT_THROW(project(obs, 4), DomainError);
}

TEST(SquaredLoss, Examples) {
    EXPECT_EQ(squared_loss(Signal({1.0, 2.0}), Signal({1.0, 2.0})), 0.0);
    EXPECT_EQ(squared_loss(Signal({0.0}), Signal({3.0, 4.0})), 25.0);
    EXPECT_EQ(squared_loss(Signal({1.0, 0.0, 2.0}), Signal({0.0, 1.0})), 6.0);
}

TEST(ProjectionRisk, Examples) {
    EXPECT_EQ(projection_risk(Signal::zero(), SigmaSpec::power_law(1.0, 1.0), 3), 14.0);
    const auto unit = SigmaSpec::power_law(1.0, 0.0);
    EXPECT_EQ(projection_risk(Signal({2.0}), unit, 1), 1.0);
    EXPECT_EQ(projection_risk(Signal({2.0, 1.0}), unit, 1), 2.0);
    EXPECT_THROW(projection_risk(Signal({2.0}), unit, 0), DomainError);
}

TEST(OracleRisk, ZeroSignalPicksOneForEverySpec) {
    for (const auto& spec : {SigmaSpec::power_law(1.0, 0.0), SigmaSpec::power_law(0.37, 1.0),
                             SigmaSpec::power_law(2.5, 2.0), SigmaSpec::table({0.4, 0.1, 3.0})}) {
        const auto curve = oracle_risk(Signal::zero(), spec, 3);
        EXPECT_EQ(curve.argmin_n, 1u);
        EXPECT_EQ(curve.min_value, spec.variance(1));
    }
}

TEST(OracleRisk, BiasDominatesUntilTwo) {
    const auto curve = oracle_risk(Signal({10.0, 10.0}), SigmaSpec::power_law(1.0, 0.0), 5);
    EXPECT_EQ(curve.argmin_n, 2u);
    EXPECT_EQ(curve.min_value, 2.0);
}

TEST(OracleRisk, FamilyGolden) {
    // Frozen from an independent brute-force scan (tests/oracles/closed_forms.py).
    const auto spec = SigmaSpec::power_law(1.0, 1.0);
    const auto theta = signal_family(10.0, 6.0, 6.0, 1.0, 50);
    const auto curve = oracle_risk(theta, spec, 50);
    EXPECT_EQ(curve.argmin_n, 5u);
    EXPECT_NEAR(curve.min_value, 91.30181356088815, 1e-11);
    const std::vector<double> head{374.6031023269488,  278.8768872772209,  190.93014171509054,
                                   122.4200287945008,  91.30181356088815,  102.30181356088815,
                                   143.23850192294293, 204.95574104345624};
    for (std::size_t n = 1; n <= head.size(); ++n) EXPECT_NEAR(curve.at(n), head[n - 1], 1e-10);
}

TEST(OracleRisk, MatchesPointwiseRisk) {
    const auto spec = SigmaSpec::power_law(0.5, 1.0);
    const Signal theta({3.0, -2.0, 1.0, 0.5, 0.25, 0.1});
    const auto curve = oracle_risk(theta, spec, 9);
    ASSERT_EQ(curve.values.size(), 9u);
    for (std::size_t n = 1; n <= 9; ++n) {
        EXPECT_NEAR(curve.at(n), projection_risk(theta, spec, n), 1e-14 * curve.at(n)) << n;
    }
    EXPECT_EQ(curve.argmin_n, first_argmin(curve.values));
}

TEST(FirstArgmin, SmallestIndexWins) {
    EXPECT_EQ(first_argmin({3.0, 1.0, 1.0, 2.0}), 2u);
    EXPECT_EQ(first_argmin({0.0}), 1u);
}

TEST(RhmRisk, AddsHullTerm) {
    const auto unit = SigmaSpec::power_law(1.0, 0.0);
    McParams mc;
    const auto zero_hull = hull_from_values(unit, {0.0, 0.0, 0.0}, mc);
    const Signal theta({1.0, 2.0});
    for (std::size_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(rhm_risk(theta, unit, zero_hull, 1.1, n), projection_risk(theta, unit, n));
    }
    const auto hull = hull_from_values(unit, {0.0, 1.5, 2.5}, mc);
    EXPECT_EQ(rhm_risk(Signal::zero(), unit, hull, 1.0, 3), 3.0 + 2.0 * 2.5);
}

TEST(RhmRisk, IndependentHullAgreesAtTen) {
    const auto spec = SigmaSpec::power_law(1.0, 1.0);
    McParams a, b;
    a.seed = 1;
    b.seed = 2;
    a.monotonize = b.monotonize = false;
    const auto hull = build_hull_table(spec, 10, a);
    const double u_other = compute_u0(spec, 10, b);
    const double lhs = rhm_risk(Signal::zero(), spec, hull, 1.1, 10);
    const double rhs = projection_risk(Signal::zero(), spec, 10) + 2.1 * u_other;
    EXPECT_NEAR(lhs, rhs, 0.02 * rhs);
}

TEST(UreThreshold, KnownValuesForAnyEpsilon) {
    for (double eps : {1.0, 0.1, 0.001, 3.7, 1e5}) {
        EXPECT_EQ(ure_threshold(SigmaSpec::power_law(eps, 0.0), 100), 8u) << eps;
        EXPECT_EQ(ure_threshold(SigmaSpec::power_law(eps, 1.0), 100), 14u) << eps;
        // Brute-force evaluation of both sides (tests/oracles/closed_forms.py).
        EXPECT_EQ(ure_threshold(SigmaSpec::power_law(eps, 2.0), 100), 22u) << eps;
        EXPECT_EQ(ure_threshold(SigmaSpec::power_law(eps, 3.0), 100), 30u) << eps;
    }
}

TEST(UreThreshold, ReturnsNulloptWhenRangeTooShort) {
    EXPECT_FALSE(ure_threshold(SigmaSpec::power_law(1.0, 0.0), 7));
    EXPECT_EQ(ure_threshold(SigmaSpec::power_law(1.0, 0.0), 8), 8u);
}

TEST(ScaleEquivariance, RiskScalesQuadratically) {
    const auto spec = SigmaSpec::power_law(0.3, 1.0);
    const auto theta = signal_family(20.0, 6.0, 6.0, 0.3, 80);
    const auto base = oracle_risk(theta, spec, 80);
    for (double c : {2.0, 0.25, 8.0}) {
        std::vector<double> scaled_coeffs;
        for (double v : theta.coeffs()) scaled_coeffs.push_back(c * v);
        const auto curve = oracle_risk(Signal(scaled_coeffs), spec.scaled(c), 80);
        EXPECT_EQ(curve.argmin_n, base.argmin_n);
        for (std::size_t n = 1; n <= 80; ++n) EXPECT_EQ(curve.at(n), c * c * base.at(n)) << c << n;
    }
    for (double c : {10.0, 3.0}) {
        std::vector<double> scaled_coeffs;
        for (double v : theta.coeffs()) scaled_coeffs.push_back(c * v);
        const auto curve = oracle_risk(Signal(scaled_coeffs), spec.scaled(c), 80);
        EXPECT_EQ(curve.argmin_n, base.argmin_n);
        for (std::size_t n = 1; n <= 80; ++n) {
            EXPECT_NEAR(curve.at(n), c * c * base.at(n), 1e-13 * c * c * base.at(n));
        }
    }
}

TEST(LossRiskConsistency, MonteCarloMatchesExactRisk) {
    const std::size_t reps = 100'000;
    const std::vector<std::pair<Signal, SigmaSpec>> cases{
        {Signal::zero(), SigmaSpec::power_law(1.0, 0.0)},
        {Signal({2.0, 1.0, 0.5, 0.25}), SigmaSpec::power_law(0.5, 1.0)},
        {signal_family(10.0, 6.0, 6.0, 0.2, 30), SigmaSpec::power_law(0.2, 2.0)},
    };
    for (const auto& [theta, spec] : cases) {
        for (std::size_t n : {1u, 3u, 10u}) {
            CompensatedSum s1, s2;
            for (std::size_t r = 0; r < reps; ++r) {
                const auto obs = simulate(spec, theta, 30, 2024, r);
                const double loss = squared_loss(project(obs, n), theta);
                s1.add(loss);
                s2.add(loss * loss);
            }
            const double mean = s1.value() / reps;
            const double se = std::sqrt((s2.value() / reps - mean * mean) / reps);
            EXPECT_NEAR(mean, projection_risk(theta, spec, n), 4.0 * se) << "N = " << n;
        }
    }
}
