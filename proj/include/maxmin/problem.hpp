#ifndef MAXMIN_PROBLEM_HPP
#define MAXMIN_PROBLEM_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace maxmin {

using Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Max-min weighted-SINR power control problem with polyhedral power
/// constraints:
///
///   maximize   min_k  b_k p_k / (c_k' p + sigma_k)
///   subject to a_n' p <= p_max  for all n,   p >= 0,
///
/// where a_n is column n of A and c_k is column k of C. All quantities
/// are in linear scale (e.g. powers in mW), never dB.
struct ProblemInstance {
    Matrix A;       ///< K x N, nonnegative constraint coefficients (columns a_n)
    Vector b;       ///< K, positive signal gains
    Matrix C;       ///< K x K, nonnegative interference coefficients (columns c_k)
    Vector sigma;   ///< K, positive noise powers
    double p_max = 0.0;

    Index num_users() const { return b.size(); }
    Index num_constraints() const { return A.cols(); }
};

/// The scaled form of the problem: the fixed-point mapping T(p) = M p + u
/// with M = diag(b)^-1 C' and u = diag(b)^-1 sigma, plus the constraint
/// geometry (A, p_max) carried over.
struct ScaledProblem {
    Matrix M;       ///< K x K nonnegative; row k is c_k' / b_k
    Vector u;       ///< K, positive; u_k = sigma_k / b_k
    Matrix A;
    double p_max = 0.0;

    Index num_users() const { return u.size(); }
    Index num_constraints() const { return A.cols(); }

    /// T(p) = M p + u, a positive concave (hence standard interference) mapping.
    Vector apply(const Vector& p) const { return M * p + u; }
};

/// Checks every structural invariant of an instance. Returns one message per
/// violation (1-based indices); an empty list means the instance is valid.
/// Detects the boundedness assumption: every user k must appear with a
/// positive coefficient in at least one constraint column, otherwise the
/// feasible set is unbounded.
std::vector<std::string> validate(const ProblemInstance& inst);

/// Derives the scaled problem (M, u). Throws std::invalid_argument listing the
/// violations if the instance is invalid.
ScaledProblem scale(const ProblemInstance& inst);

/// The monotone norm induced by the power constraints:
///   ||p||* = (1/p_max) max_n a_n' |p|.
/// A norm on the nonnegative orthant whenever every user is constrained.
double norm_star(const Vector& p, const Matrix& A, double p_max);

inline double norm_star(const Vector& p, const ScaledProblem& sp) {
    return norm_star(p, sp.A, sp.p_max);
}
inline double norm_star(const Vector& p, const ProblemInstance& inst) {
    return norm_star(p, inst.A, inst.p_max);
}

/// min_k b_k p_k / (c_k' p + sigma_k); zero whenever some p_k = 0.
double evaluate_utility(const ProblemInstance& inst, const Vector& p);

/// p >= -tol elementwise and ||p||* <= 1 + tol.
bool is_feasible(const ProblemInstance& inst, const Vector& p, double tol = 1e-12);

} // namespace maxmin

#endif
