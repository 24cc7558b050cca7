#include "maxmin/bounds.hpp"

#include "maxmin/solver.hpp"
#include "support/random_instance.hpp"

#include <cmath>
#include <doctest.h>

using namespace maxmin;

TEST_CASE("symmetric instance: hand-computable bound") {
    const ScaledProblem sp = scale(testsupport::symmetric_two_user(1.0));
    const UtilityBound bound = compute_bound(sp);
    CHECK(bound.rho_M == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bound.u_norm == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bound.p_T == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bound(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bound(10.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(!bound.rho_zero);
}

TEST_CASE("no interference degenerates to the noise-limited branch") {
    const ScaledProblem sp = scale(testsupport::scalar_instance());
    const UtilityBound bound = compute_bound(sp);
    CHECK(bound.rho_zero);
    CHECK(bound(0.1) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(bound(1e6) == doctest::Approx(1e6).epsilon(1e-12));
    CHECK(regime(bound, 1e9) == Regime::noise_limited);
}

TEST_CASE("regime thresholds sit a decade around the transition") {
    const ScaledProblem sp = scale(testsupport::symmetric_two_user(1.0));
    const UtilityBound bound = compute_bound(sp);
    CHECK(regime(bound, bound.p_T / 1000.0) == Regime::noise_limited);
    CHECK(regime(bound, bound.p_T) == Regime::transition);
    CHECK(regime(bound, 1000.0 * bound.p_T) == Regime::interference_limited);
    CHECK(regime(bound, bound.p_T / 10.0) == Regime::transition);   // boundary inclusive
    CHECK(regime(bound, bound.p_T * 10.0) == Regime::transition);
}

TEST_CASE("bound is valid and monotone over a sweep") {
    for (std::uint64_t seed = 400; seed < 412; ++seed) {
        auto inst = testsupport::random_instance(seed);
        const UtilityBound bound = compute_bound(scale(inst));
        if (bound.rho_zero) continue;
        double prev_t = 0.0;
        for (int e = -3; e <= 3; ++e) {
            inst.p_max = bound.p_T * std::pow(10.0, e);
            const Solution sol = solve_closed_form(inst);
            CHECK(sol.t_star <= bound(inst.p_max) * (1.0 + 1e-9));
            CHECK(sol.t_star >= prev_t * (1.0 - 1e-12));  // nondecreasing in p_max
            prev_t = sol.t_star;
        }
    }
}

TEST_CASE("bound is asymptotically tight for irreducible interference") {
    for (std::uint64_t seed = 500; seed < 510; ++seed) {
        testsupport::InstanceShape shape;
        shape.min_users = 2;
        shape.max_users = 10;
        shape.irreducible = true;
        auto inst = testsupport::random_instance(seed, shape);
        const UtilityBound bound = compute_bound(scale(inst));
        REQUIRE(!bound.rho_zero);
        const auto ratio_at = [&](double decades) {
            inst.p_max = bound.p_T * std::pow(10.0, decades);
            return solve_closed_form(inst).t_star / bound(inst.p_max);
        };
        const double lo3 = ratio_at(-3.0), hi3 = ratio_at(3.0);
        CHECK(lo3 >= 0.95);
        CHECK(hi3 >= 0.95);
        // approach to 1 is monotone one decade further out
        CHECK(ratio_at(-4.0) >= lo3 * (1.0 - 1e-12));
        CHECK(ratio_at(4.0) >= hi3 * (1.0 - 1e-12));
    }
}

TEST_CASE("bound kink sits exactly at the transition point") {
    const auto inst = testsupport::fixed_size_instance(33, 5, 3, true);
    const UtilityBound bound = compute_bound(scale(inst));
    const double eps = 1e-9 * bound.p_T;
    // continuous at p_T, linear below, flat above
    CHECK(bound(bound.p_T) == doctest::Approx(1.0 / bound.rho_M).epsilon(1e-12));
    CHECK(bound(bound.p_T - eps) <= bound(bound.p_T));
    CHECK(bound(0.5 * bound.p_T) == doctest::Approx(0.5 / bound.rho_M).epsilon(1e-9));
    CHECK(bound(2.0 * bound.p_T) == bound(100.0 * bound.p_T));
}
