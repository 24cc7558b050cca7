#ifndef MAXMIN_ORACLES_HPP
#define MAXMIN_ORACLES_HPP

#include "maxmin/problem.hpp"

#include <string>
#include <utility>
#include <vector>

namespace maxmin {

/// Result of one of the reference solvers. These exist to cross-validate the
/// closed form, not to be fast.
struct OracleReport {
    double t_star = 0.0;
    Vector p_star;
    long iterations = 0;
    bool converged = false;
    /// Per-iteration (utility, norm) pairs. For the fixed-point method the
    /// utility of the iterate is nondecreasing (its reciprocal is the
    /// Collatz-Wielandt upper quotient); for bisection the second entry is
    /// the bracket width, which strictly decreases.
    std::vector<std::pair<double, double>> history;
    std::string method;
};

/// Normalized fixed-point iteration p <- T(p)/||T(p)||* from p0 = u/||u||*.
/// Converges to the unique solution of the conditional eigenvalue problem
/// for the standard interference mapping T(p) = Mp + u; stops when successive
/// normalized iterates differ by at most `tol` in the infinity norm.
OracleReport fixed_point_solve(const ScaledProblem& sp, double tol = 1e-12,
                               long max_iters = 500000);

/// Bisection on t over a sequence of feasibility problems. A candidate t is
/// feasible iff q = t(I - tM)^{-1}u exists with q > 0 (which certifies
/// rho(tM) < 1 and guards against sign-flipped solutions) and
/// norm_star(q) <= 1. Pass t_hi <= 0 to use the certified default bracket
/// 2 * min(1/rho(M), p_max/||u||).
OracleReport bisection_solve(const ScaledProblem& sp, double t_lo = 0.0,
                             double t_hi = -1.0, double tol = 1e-10);

} // namespace maxmin

#endif
