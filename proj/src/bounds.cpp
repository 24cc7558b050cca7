#include "maxmin/bounds.hpp"

#include "maxmin/spectral.hpp"

#include <limits>
#include <stdexcept>

namespace maxmin {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::noise_limited: return "noise_limited";
        case Regime::transition: return "transition";
        case Regime::interference_limited: return "interference_limited";
    }
    return "unknown";
}

UtilityBound compute_bound(const ScaledProblem& sp) {
    if (sp.u.size() == 0 || sp.u.minCoeff() <= 0.0)
        throw std::invalid_argument("compute_bound: malformed scaled problem");

    UtilityBound bound;
    bound.u_norm = (sp.A.transpose() * sp.u).maxCoeff();
    if (bound.u_norm <= 0.0)
        throw std::invalid_argument("compute_bound: ||u|| is zero (unconstrained users)");

    const SpectralResult sr = spectral_radius(sp.M, 1e-12);
    bound.certified = sr.certified;
    // An uncertified enclosure still lower-bounds rho(M), so using lo keeps
    // the reported bound an upper bound on t*.
    bound.rho_M = sr.certified ? sr.rho : sr.lo;
    if (bound.rho_M <= 0.0) {
        bound.rho_M = 0.0;
        bound.rho_zero = true;
        bound.p_T = std::numeric_limits<double>::infinity();
    } else {
        bound.p_T = bound.u_norm / bound.rho_M;
    }
    return bound;
}

Regime regime(const UtilityBound& bound, double p_max) {
    if (bound.rho_zero) return Regime::noise_limited;
    if (p_max < bound.p_T / 10.0) return Regime::noise_limited;
    if (p_max > 10.0 * bound.p_T) return Regime::interference_limited;
    return Regime::transition;
}

} // namespace maxmin
