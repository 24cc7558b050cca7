#ifndef MAXMIN_BOUNDS_HPP
#define MAXMIN_BOUNDS_HPP

#include "maxmin/problem.hpp"

#include <string>

namespace maxmin {

enum class Regime { noise_limited, transition, interference_limited };

std::string to_string(Regime r);

/// Piecewise upper bound on the optimal utility as a function of p_max:
///   bound(p) = 1/rho(M)  for p >= p_T,   p/||u||  otherwise,
/// with transition point p_T = ||u||/rho(M) and ||u|| = max_n a_n' u (the
/// constraint norm without the 1/p_max factor). Nondecreasing and concave in
/// p_max, asymptotically tight at both extremes.
struct UtilityBound {
    double rho_M = 0.0;   ///< spectral radius of the interference part alone
    double u_norm = 0.0;  ///< max_n a_n' u
    double p_T = 0.0;     ///< transition point; +inf when rho(M) = 0
    bool rho_zero = false;  ///< no interference: only the noise-limited branch
    bool certified = true;  ///< the rho(M) power iteration converged

    double operator()(double p_max) const {
        if (!rho_zero && p_max >= p_T) return 1.0 / rho_M;
        return p_max / u_norm;
    }
};

/// Builds the bound for a scaled problem. rho(M) = 0 degenerates to the pure
/// noise-limited branch and is flagged through `rho_zero`, not an error.
UtilityBound compute_bound(const ScaledProblem& sp);

/// Classifies the operating point a decade around the transition:
/// noise-limited below p_T/10, interference-limited above 10*p_T.
Regime regime(const UtilityBound& bound, double p_max);

} // namespace maxmin

#endif
