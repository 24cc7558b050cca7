#ifndef MAXMIN_SOLVER_HPP
#define MAXMIN_SOLVER_HPP

#include "maxmin/problem.hpp"
#include "maxmin/spectral.hpp"

#include <string>
#include <vector>

namespace maxmin {

/// Tolerances for the closed-form solver; defaults match the library-wide
/// certificates (1e-10 relative spectral radii, 1e-12 linear-solve residual).
struct SolverOptions {
    double spectral_tol = 1e-10;
    int spectral_max_iters = 20000;
    double residual_tol = 1e-12;     ///< relative fixed-point residual target
    double norm_tol = 1e-12;         ///< |norm_star(p*) - 1| target for the polish
    int polish_max_iters = 60;
};

/// The unique optimum of the scaled max-min problem.
struct Solution {
    double t_star = 0.0;             ///< optimal utility
    Vector p_star;                   ///< optimal powers, strictly positive
    Index active_n = 0;              ///< 0-based candidate index attaining max rho
    Vector rho_all;                  ///< all N candidate spectral radii
    std::vector<SpectralResult> certificates;  ///< per-candidate enclosures

    bool certified = false;          ///< all radii certified and residuals in tolerance
    double residual = 0.0;           ///< ||p - t(Mp+u)||_inf / ||p||_inf
    double norm_error = 0.0;         ///< |norm_star(p*) - 1|
    double sinr_spread = 0.0;        ///< (max_k - min_k) ratio over t*
    std::vector<std::string> warnings;
};

/// Candidate matrix for constraint n (0-based): M_n = M + (1/p_max) u a_n'.
Matrix candidate_matrix(const ScaledProblem& sp, Index n);

/// Closed-form solve: t* = 1 / max_n rho(M_n), p* = t*(I - t*M)^{-1} u.
///
/// Radii come from certified power iterations started at u/||u||_inf; any
/// uncertified candidate is refined through the normalized fixed-point
/// iteration restricted to that single constraint (which solves the same
/// conditional eigenvalue problem and is guaranteed to converge). t is then
/// polished by a safeguarded Newton iteration on norm_star(p(t)) - 1 so the
/// unit-norm and fixed-point certificates hold to solver tolerance, and p*
/// always comes from the linear system, never from the power iterate.
Solution solve_closed_form(const ScaledProblem& sp, const SolverOptions& opts = {});

/// Convenience overload: validate + scale + solve.
Solution solve_closed_form(const ProblemInstance& inst, const SolverOptions& opts = {});

} // namespace maxmin

#endif
