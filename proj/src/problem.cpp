#include "maxmin/problem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace maxmin {

namespace {

bool all_finite(const Matrix& m) { return m.allFinite(); }

} // namespace

std::vector<std::string> validate(const ProblemInstance& inst) {
    std::vector<std::string> violations;
    const Index K = inst.b.size();
    const Index N = inst.A.cols();

    if (K == 0) violations.push_back("instance has no users (K = 0)");
    if (N == 0) violations.push_back("instance has no power constraints (N = 0)");
    if (inst.A.rows() != K)
        violations.push_back("A has " + std::to_string(inst.A.rows()) +
                             " rows, expected K = " + std::to_string(K));
    if (inst.C.rows() != K || inst.C.cols() != K)
        violations.push_back("C must be K x K");
    if (inst.sigma.size() != K)
        violations.push_back("sigma must have K entries");

    if (!violations.empty()) return violations;

    if (!all_finite(inst.A) || inst.A.minCoeff() < 0.0)
        violations.push_back("A must be finite and nonnegative");
    if (!all_finite(inst.C) || inst.C.minCoeff() < 0.0)
        violations.push_back("C must be finite and nonnegative");
    for (Index k = 0; k < K; ++k) {
        if (!std::isfinite(inst.b[k]) || inst.b[k] <= 0.0)
            violations.push_back("b[" + std::to_string(k + 1) + "] not strictly positive");
        if (!std::isfinite(inst.sigma[k]) || inst.sigma[k] <= 0.0)
            violations.push_back("sigma[" + std::to_string(k + 1) + "] not strictly positive");
    }
    if (!std::isfinite(inst.p_max) || inst.p_max <= 0.0)
        violations.push_back("p_max not strictly positive");

    // Boundedness: user k free in every constraint => feasible set unbounded.
    if (all_finite(inst.A) && inst.A.minCoeff() >= 0.0) {
        for (Index k = 0; k < K; ++k) {
            if (inst.A.row(k).maxCoeff() <= 0.0)
                violations.push_back("user " + std::to_string(k + 1) +
                                     " unconstrained: feasible set unbounded");
        }
    }
    return violations;
}

ScaledProblem scale(const ProblemInstance& inst) {
    auto violations = validate(inst);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid problem instance:";
        for (const auto& v : violations) msg << "\n  - " << v;
        throw std::invalid_argument(msg.str());
    }
    ScaledProblem sp;
    sp.M = inst.C.transpose();
    sp.M.array().colwise() /= inst.b.array();
    sp.u = inst.sigma.array() / inst.b.array();
    sp.A = inst.A;
    sp.p_max = inst.p_max;
    return sp;
}

double norm_star(const Vector& p, const Matrix& A, double p_max) {
    if (A.cols() == 0) return 0.0;
    return (A.transpose() * p.cwiseAbs()).maxCoeff() / p_max;
}

double evaluate_utility(const ProblemInstance& inst, const Vector& p) {
    const Index K = inst.b.size();
    double worst = std::numeric_limits<double>::infinity();
    for (Index k = 0; k < K; ++k) {
        const double denom = inst.C.col(k).dot(p) + inst.sigma[k];
        worst = std::min(worst, inst.b[k] * p[k] / denom);
    }
    return worst;
}

bool is_feasible(const ProblemInstance& inst, const Vector& p, double tol) {
    if (p.size() != inst.b.size()) return false;
    if (p.minCoeff() < -tol) return false;
    return norm_star(p, inst) <= 1.0 + tol;
}

} // namespace maxmin
