#include "maxmin/oracles.hpp"

#include "maxmin/spectral.hpp"

#include <Eigen/LU>
#include <limits>
#include <stdexcept>

namespace maxmin {

namespace {

void check_scaled(const ScaledProblem& sp) {
    if (sp.u.size() == 0 || sp.M.rows() != sp.u.size() || sp.M.cols() != sp.u.size())
        throw std::invalid_argument("oracle: malformed scaled problem");
    if (sp.u.minCoeff() <= 0.0)
        throw std::invalid_argument("oracle: u must be strictly positive");
    if (sp.p_max <= 0.0) throw std::invalid_argument("oracle: p_max must be positive");
}

// Solves q = t(Mq + u). Returns false when the system is not solvable with a
// strictly positive q (equivalently rho(tM) >= 1) or the residual is bad.
bool solve_conditional(const ScaledProblem& sp, double t, Vector& q) {
    const Index K = sp.u.size();
    Matrix lhs = Matrix::Identity(K, K) - t * sp.M;
    Eigen::PartialPivLU<Matrix> lu(lhs);
    const Vector rhs = t * sp.u;
    q = lu.solve(rhs);
    q += lu.solve(rhs - lhs * q);  // one refinement step
    if (!q.allFinite() || q.minCoeff() <= 0.0) return false;
    const double res = (rhs - lhs * q).cwiseAbs().maxCoeff();
    return res <= 1e-8 * std::max(1.0, q.cwiseAbs().maxCoeff());
}

} // namespace

OracleReport fixed_point_solve(const ScaledProblem& sp, double tol, long max_iters) {
    check_scaled(sp);
    OracleReport report;
    report.method = "fixed_point";

    const double u_norm = norm_star(sp.u, sp);
    if (!(u_norm > 0.0))
        throw std::invalid_argument("fixed_point_solve: constraint matrix has no "
                                    "active column (||u||* = 0)");
    Vector p = sp.u / u_norm;
    double lambda = 0.0;
    for (long it = 1; it <= max_iters; ++it) {
        const Vector tp = sp.apply(p);
        lambda = norm_star(tp, sp);
        const double utility = p.cwiseQuotient(tp).minCoeff();
        report.history.emplace_back(utility, lambda);
        Vector next = tp / lambda;
        report.iterations = it;
        const double step = (next - p).cwiseAbs().maxCoeff();
        p = std::move(next);
        if (step <= tol) {
            report.converged = true;
            break;
        }
    }
    report.t_star = 1.0 / lambda;
    report.p_star = p;
    return report;
}

OracleReport bisection_solve(const ScaledProblem& sp, double t_lo, double t_hi, double tol) {
    check_scaled(sp);
    OracleReport report;
    report.method = "bisection";

    const SpectralResult sr = spectral_radius(sp.M, 1e-12);
    if (t_hi <= 0.0) {
        const double u_norm = norm_star(sp.u, sp);  // = ||u|| / p_max
        double cap = 2.0 / u_norm;
        if (sr.lo > 0.0) cap = std::min(cap, 2.0 / sr.lo);
        t_hi = cap;
    }
    if (!(t_lo >= 0.0) || !(t_hi > t_lo))
        throw std::invalid_argument("bisection_solve: invalid bracket");

    Vector q;
    const auto feasible = [&](double t) {
        if (t == 0.0) return true;
        if (sr.certified && t * sr.lo >= 1.0) return false;  // rho(tM) >= 1
        if (!solve_conditional(sp, t, q)) return false;
        return norm_star(q, sp) <= 1.0;
    };

    if (feasible(t_hi))
        throw std::invalid_argument("bisection_solve: invalid bracket (upper end feasible)");

    const double width_target = tol * t_hi;
    double lo = t_lo, hi = t_hi;
    Vector best_q;
    while (hi - lo > width_target) {
        const double mid = 0.5 * (lo + hi);
        report.history.emplace_back(mid, hi - lo);
        ++report.iterations;
        if (feasible(mid)) {
            lo = mid;
            best_q = q;
        } else {
            hi = mid;
        }
    }
    const double t = 0.5 * (lo + hi);
    report.t_star = t;
    report.p_star = feasible(t) ? q : best_q;
    report.converged = report.p_star.size() == sp.u.size();
    return report;
}

} // namespace maxmin
