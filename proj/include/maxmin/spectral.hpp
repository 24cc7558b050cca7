#ifndef MAXMIN_SPECTRAL_HPP
#define MAXMIN_SPECTRAL_HPP

#include "maxmin/problem.hpp"

namespace maxmin {

/// Perron root estimate with a Collatz-Wielandt certificate.
///
/// For a nonnegative matrix and any strictly positive x, the quotients
/// (Mx)_k / x_k bracket the spectral radius:
///   min_k (Mx)_k/x_k  <=  rho(M)  <=  max_k (Mx)_k/x_k.
/// [lo, hi] is that bracket at the final iterate; it is valid whether or not
/// the iteration converged. `certified` means hi - lo <= tol * max(hi, 1).
struct SpectralResult {
    double rho = 0.0;     ///< enclosure midpoint when certified, hi otherwise
    double lo = 0.0;
    double hi = 0.0;
    Vector eigvec;        ///< final iterate, unit max-entry, strictly positive
    int iterations = 0;
    bool certified = false;
};

/// Power iteration for the spectral radius of a nonnegative square matrix.
///
/// Internally iterates on M + eps*I (eps a fraction of the max row sum):
/// the shift keeps iterates strictly positive and damps period-2 behaviour
/// of e.g. [[0,m],[m,0]], and since rho(M + eps I) = rho(M) + eps exactly for
/// nonnegative M, the enclosure is un-shifted without loss. A zero matrix
/// returns rho = 0 certified.
///
/// `start` must be strictly positive when provided; defaults to all-ones.
SpectralResult spectral_radius(const Matrix& m, double tol = 1e-10,
                               int max_iters = 20000,
                               const Vector* start = nullptr);

} // namespace maxmin

#endif
