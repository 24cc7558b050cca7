#include "maxmin/solver.hpp"

#include "maxmin/oracles.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace maxmin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct LinearSolve {
    Vector p;
    double residual = kInf;   // relative to ||p||_inf
    bool positive = false;
    Eigen::PartialPivLU<Matrix> lu;
};

// p(t) = t (I - tM)^{-1} u with one step of iterative refinement.
LinearSolve solve_for_t(const ScaledProblem& sp, double t) {
    const Index K = sp.u.size();
    LinearSolve out;
    Matrix lhs = Matrix::Identity(K, K) - t * sp.M;
    out.lu.compute(lhs);
    const Vector rhs = t * sp.u;
    out.p = out.lu.solve(rhs);
    out.p += out.lu.solve(rhs - lhs * out.p);
    if (!out.p.allFinite()) return out;
    out.positive = out.p.minCoeff() > 0.0;
    out.residual = (rhs - lhs * out.p).cwiseAbs().maxCoeff() /
                   std::max(out.p.cwiseAbs().maxCoeff(), 1e-300);
    return out;
}

// Refines an uncertified candidate radius by solving the conditional
// eigenvalue problem restricted to constraint n; rho(M_n) = 1/t_n there.
SpectralResult refine_via_fixed_point(const ScaledProblem& sp, Index n) {
    ScaledProblem single;
    single.M = sp.M;
    single.u = sp.u;
    single.A = sp.A.col(n);
    single.p_max = sp.p_max;
    OracleReport rep = fixed_point_solve(single, 1e-14, 500000);

    SpectralResult res;
    const Vector tp = single.apply(rep.p_star);
    const Vector q = tp.cwiseQuotient(rep.p_star);
    res.lo = q.minCoeff();
    res.hi = q.maxCoeff();
    res.rho = 1.0 / rep.t_star;
    res.eigvec = rep.p_star / rep.p_star.maxCoeff();
    res.iterations = static_cast<int>(rep.iterations);
    res.certified = rep.converged;
    return res;
}

} // namespace

Matrix candidate_matrix(const ScaledProblem& sp, Index n) {
    if (n < 0 || n >= sp.A.cols())
        throw std::invalid_argument("candidate_matrix: constraint index out of range");
    return sp.M + (sp.u * sp.A.col(n).transpose()) / sp.p_max;
}

Solution solve_closed_form(const ScaledProblem& sp, const SolverOptions& opts) {
    const Index K = sp.u.size();
    const Index N = sp.A.cols();
    if (K == 0 || N == 0 || sp.u.minCoeff() <= 0.0 || sp.p_max <= 0.0)
        throw std::invalid_argument("solve_closed_form: malformed scaled problem");

    Solution sol;
    sol.rho_all.resize(N);
    sol.certificates.reserve(N);

    const Vector start = sp.u / sp.u.maxCoeff();
    bool all_certified = true;
    for (Index n = 0; n < N; ++n) {
        SpectralResult sr = spectral_radius(candidate_matrix(sp, n), opts.spectral_tol,
                                            opts.spectral_max_iters, &start);
        if (!sr.certified) {
            // A vacuous constraint column keeps M_n = M; the single-constraint
            // fixed point is undefined there, and rho(M) never attains the max,
            // so only real constraints are refined.
            if (sp.A.col(n).maxCoeff() > 0.0) sr = refine_via_fixed_point(sp, n);
            if (!sr.certified) {
                all_certified = false;
                sol.warnings.push_back("uncertified spectral radius for constraint " +
                                       std::to_string(n + 1));
            }
        }
        sol.rho_all[n] = sr.rho;
        sol.certificates.push_back(std::move(sr));
    }

    Index active = 0;
    for (Index n = 1; n < N; ++n)
        if (sol.rho_all[n] > sol.rho_all[active]) active = n;  // ties keep smallest index
    sol.active_n = active;
    const double rho_max = sol.rho_all[active];
    if (!(rho_max > 0.0))
        throw std::runtime_error("solve_closed_form: nonpositive max spectral radius");

    // Newton polish of t on g(t) = norm_star(p(t)) - 1, bracketed so a step
    // can never cross the 1/rho(M) pole (detected by loss of positivity).
    double t = 1.0 / rho_max;
    double lo_b = 0.0, hi_b = kInf;
    LinearSolve ls;
    bool polished = false;
    for (int it = 0; it < opts.polish_max_iters; ++it) {
        ls = solve_for_t(sp, t);
        if (!ls.positive || !std::isfinite(ls.residual)) {
            hi_b = t;
            t = lo_b > 0.0 ? 0.5 * (lo_b + hi_b) : 0.5 * t;
            continue;
        }
        const double g = norm_star(ls.p, sp) - 1.0;
        if (std::abs(g) <= opts.norm_tol) {
            polished = true;
            break;
        }
        if (g < 0.0) lo_b = std::max(lo_b, t); else hi_b = std::min(hi_b, t);

        Index i = 0;
        (sp.A.transpose() * ls.p).maxCoeff(&i);
        const Vector dp = ls.lu.solve(sp.u + sp.M * ls.p);
        const double slope = sp.A.col(i).dot(dp) / sp.p_max;
        double next = slope > 0.0 ? t - g / slope : 0.0;
        if (!(next > lo_b) || !(next < hi_b))
            next = std::isfinite(hi_b) ? 0.5 * (lo_b + hi_b) : 1.5 * t;
        t = next;
    }
    if (!ls.positive)
        throw std::runtime_error("solve_closed_form: failed to obtain a positive solution "
                                 "(residual " + std::to_string(ls.residual) + ")");
    if (!polished) sol.warnings.push_back("norm polish did not reach tolerance");

    sol.t_star = t;
    sol.p_star = ls.p;
    sol.residual = (ls.p - t * sp.apply(ls.p)).cwiseAbs().maxCoeff() /
                   ls.p.cwiseAbs().maxCoeff();
    sol.norm_error = std::abs(norm_star(ls.p, sp) - 1.0);
    const Vector ratios = ls.p.cwiseQuotient(sp.apply(ls.p));
    sol.sinr_spread = (ratios.maxCoeff() - ratios.minCoeff()) / t;

    // When candidates tie, the optimum must make every tied constraint
    // active; surface a warning if the shared-eigenvector property fails.
    const double active_val = sp.A.col(active).dot(ls.p);
    for (Index n = 0; n < N; ++n) {
        if (n == active) continue;
        if (sol.rho_all[n] >= rho_max * (1.0 - 10.0 * opts.spectral_tol)) {
            if (std::abs(sp.A.col(n).dot(ls.p) - active_val) > 1e-6 * sp.p_max)
                sol.warnings.push_back("tied candidate " + std::to_string(n + 1) +
                                       " does not share the active eigenvector");
        }
    }

    sol.certified = all_certified && polished &&
                    sol.residual <= 10.0 * opts.residual_tol && sol.warnings.empty();
    return sol;
}

Solution solve_closed_form(const ProblemInstance& inst, const SolverOptions& opts) {
    return solve_closed_form(scale(inst), opts);
}

} // namespace maxmin
