#include "maxmin/problem.hpp"

#include "support/random_instance.hpp"

#include <doctest.h>

using namespace maxmin;

namespace {

ProblemInstance tiny(double a, double sigma) {
    ProblemInstance inst;
    inst.A = Matrix::Constant(1, 1, a);
    inst.b = Vector::Ones(1);
    inst.C = Matrix::Zero(1, 1);
    inst.sigma = Vector::Constant(1, sigma);
    inst.p_max = 2.0;
    return inst;
}

} // namespace

TEST_CASE("validate accepts a well-formed instance") {
    CHECK(validate(tiny(1.0, 1.0)).empty());
}

TEST_CASE("validate flags an unconstrained user") {
    const auto violations = validate(tiny(0.0, 1.0));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == "user 1 unconstrained: feasible set unbounded");
}

TEST_CASE("validate flags nonpositive noise") {
    const auto violations = validate(tiny(1.0, 0.0));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == "sigma[1] not strictly positive");
}

TEST_CASE("validate flags shape and sign defects") {
    ProblemInstance inst = tiny(1.0, 1.0);
    inst.C = Matrix::Constant(1, 1, -0.5);
    CHECK(!validate(inst).empty());

    inst = tiny(1.0, 1.0);
    inst.sigma = Vector::Ones(3);
    CHECK(!validate(inst).empty());

    inst = tiny(1.0, 1.0);
    inst.p_max = 0.0;
    CHECK(!validate(inst).empty());

    inst = tiny(1.0, 1.0);
    inst.b[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK(!validate(inst).empty());
}

TEST_CASE("scale applies the defining formulas") {
    ProblemInstance inst;
    inst.A = Matrix::Identity(2, 2);
    inst.b = Vector{{1.0, 2.0}};
    inst.C = Matrix{{0.0, 4.0}, {2.0, 0.0}};
    inst.sigma = Vector::Ones(2);
    inst.p_max = 1.0;

    const ScaledProblem sp = scale(inst);
    CHECK(sp.M(0, 0) == 0.0);
    CHECK(sp.M(0, 1) == 2.0);
    CHECK(sp.M(1, 0) == 2.0);
    CHECK(sp.M(1, 1) == 0.0);
    CHECK(sp.u[0] == 1.0);
    CHECK(sp.u[1] == 0.5);
    CHECK(sp.p_max == inst.p_max);
    CHECK(sp.A == inst.A);
}

TEST_CASE("scale of the scalar instance") {
    const ProblemInstance inst = tiny(1.0, 3.0);
    const ScaledProblem sp = scale(inst);
    CHECK(sp.M(0, 0) == 0.0);
    CHECK(sp.u[0] == 3.0);
}

TEST_CASE("scale with unit b is a transpose") {
    ProblemInstance inst;
    inst.A = Matrix::Identity(2, 2);
    inst.b = Vector::Ones(2);
    inst.C = Matrix::Ones(2, 2);
    inst.sigma = Vector::Ones(2);
    inst.p_max = 1.0;
    const ScaledProblem sp = scale(inst);
    CHECK(sp.M == inst.C.transpose());
    CHECK(sp.u == inst.sigma);
}

TEST_CASE("scale rejects invalid instances") {
    CHECK_THROWS_AS((void)scale(tiny(0.0, 1.0)), std::invalid_argument);
}

TEST_CASE("norm_star is the scaled l-infinity norm for A = I") {
    const Matrix A = Matrix::Identity(2, 2);
    const Vector p{{2.0, -3.0}};
    CHECK(norm_star(p, A, 4.0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("norm_star is the scaled l1 norm for A = ones column") {
    const Matrix A = Matrix::Ones(3, 1);
    const Vector p{{1.0, 2.0, 3.0}};
    CHECK(norm_star(p, A, 10.0) == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("norm_star of zero is zero") {
    const Matrix A = Matrix::Random(4, 3).cwiseAbs();
    CHECK(norm_star(Vector::Zero(4), A, 2.0) == 0.0);
}

TEST_CASE("evaluate_utility on the scalar instance") {
    const ProblemInstance inst = testsupport::scalar_instance();
    CHECK(evaluate_utility(inst, Vector::Constant(1, 2.0)) == doctest::Approx(2.0));
    CHECK(evaluate_utility(inst, Vector::Zero(1)) == 0.0);
}

TEST_CASE("is_feasible checks sign and norm") {
    const ProblemInstance inst = testsupport::scalar_instance();
    CHECK(is_feasible(inst, Vector::Constant(1, 2.0)));
    CHECK(!is_feasible(inst, Vector::Constant(1, 2.0 * (1.0 + 1e-6)), 1e-9));
    CHECK(!is_feasible(inst, Vector::Constant(1, -0.1)));
}

TEST_CASE("T(p) = Mp + u satisfies the interference-mapping axioms") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = testsupport::random_instance(seed);
        const ScaledProblem sp = scale(inst);
        rng::Stream s(seed, "axioms");
        const Index K = sp.num_users();
        Vector x(K), y(K);
        for (Index k = 0; k < K; ++k) {
            y[k] = s.uniform(0.0, 5.0);
            x[k] = y[k] + s.uniform(0.0, 3.0);  // x >= y
        }
        // monotonicity
        CHECK(((sp.apply(x) - sp.apply(y)).minCoeff() >= -1e-12));
        // scalability: alpha T(x) > T(alpha x) for alpha > 1
        const double alpha = s.uniform(1.1, 4.0);
        CHECK(((alpha * sp.apply(x) - sp.apply(alpha * x)).minCoeff() > 0.0));
        // positivity
        CHECK(sp.apply(Vector::Zero(K)).minCoeff() > 0.0);
    }
}
