#include "maxmin/spectral.hpp"

#include <stdexcept>

namespace maxmin {

SpectralResult spectral_radius(const Matrix& m, double tol, int max_iters,
                               const Vector* start) {
    const Index K = m.rows();
    if (m.cols() != K) throw std::invalid_argument("spectral_radius: matrix not square");
    if (K == 0) throw std::invalid_argument("spectral_radius: empty matrix");
    if (!m.allFinite() || m.minCoeff() < 0.0)
        throw std::invalid_argument("spectral_radius: matrix must be finite and nonnegative");

    SpectralResult res;
    res.eigvec = Vector::Ones(K);
    if (start) {
        if (start->size() != K || start->minCoeff() <= 0.0)
            throw std::invalid_argument("spectral_radius: start vector must be strictly positive");
        res.eigvec = *start / start->maxCoeff();
    }

    const double max_row_sum = m.rowwise().sum().maxCoeff();
    if (max_row_sum == 0.0) {
        res.certified = true;
        return res;  // zero matrix
    }
    const double shift = 0.25 * max_row_sum;

    Vector x = res.eigvec;
    double lo = 0.0, hi = max_row_sum;
    for (int it = 1; it <= max_iters; ++it) {
        Vector y = m * x + shift * x;          // strictly positive since x > 0
        const Vector q = y.cwiseQuotient(x);
        lo = std::max(0.0, q.minCoeff() - shift);
        hi = q.maxCoeff() - shift;
        res.iterations = it;
        if (hi - lo <= tol * std::max(hi, 1.0)) {
            res.certified = true;
            break;
        }
        // Floor keeps x strictly positive even when a coordinate decays
        // geometrically (zero rows); any positive x yields a valid bracket.
        x = (y / y.maxCoeff()).cwiseMax(1e-250);
    }
    res.lo = lo;
    res.hi = hi;
    res.eigvec = x;  // the iterate whose quotients produced [lo, hi]
    res.rho = res.certified ? 0.5 * (lo + hi) : hi;
    return res;
}

} // namespace maxmin
