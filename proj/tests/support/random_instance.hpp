#ifndef TESTS_SUPPORT_RANDOM_INSTANCE_HPP
#define TESTS_SUPPORT_RANDOM_INSTANCE_HPP

#include "maxmin/problem.hpp"
#include "maxmin/rng.hpp"

namespace testsupport {

struct InstanceShape {
    maxmin::Index min_users = 1;
    maxmin::Index max_users = 16;
    maxmin::Index max_constraints = 8;
    double sparsity = 0.6;          ///< probability an A/C entry is nonzero
    bool irreducible = false;       ///< force strictly positive off-diagonal C
};

/// Seeded random instance satisfying every structural invariant: A finite
/// nonnegative with at least one positive entry per user row, b/sigma/p_max
/// strictly positive, C finite nonnegative.
inline maxmin::ProblemInstance random_instance(std::uint64_t seed,
                                               const InstanceShape& shape = {}) {
    using namespace maxmin;
    rng::Stream s(seed, "instance");
    const auto K = static_cast<Index>(
        shape.min_users + s.below(shape.max_users - shape.min_users + 1));
    const auto N = static_cast<Index>(1 + s.below(shape.max_constraints));

    ProblemInstance inst;
    inst.A = Matrix::Zero(K, N);
    for (Index k = 0; k < K; ++k) {
        for (Index n = 0; n < N; ++n)
            if (s.uniform() < shape.sparsity) inst.A(k, n) = s.uniform(0.1, 1.0);
        inst.A(k, static_cast<Index>(s.below(N))) = s.uniform(0.5, 1.0);
    }

    inst.C = Matrix::Zero(K, K);
    for (Index i = 0; i < K; ++i)
        for (Index j = 0; j < K; ++j) {
            if (i == j) continue;  // self-interference folded into the diagonal rarely
            if (shape.irreducible)
                inst.C(i, j) = s.uniform(0.1, 1.0);
            else if (s.uniform() < shape.sparsity)
                inst.C(i, j) = s.uniform(0.0, 0.8);
        }

    inst.b = Vector::Zero(K);
    inst.sigma = Vector::Zero(K);
    for (Index k = 0; k < K; ++k) {
        inst.b[k] = s.uniform(0.5, 2.0);
        inst.sigma[k] = s.uniform(0.5, 2.0);
    }
    inst.p_max = s.uniform(0.5, 20.0);
    return inst;
}

/// As random_instance but with fixed dimensions.
inline maxmin::ProblemInstance fixed_size_instance(std::uint64_t seed, maxmin::Index K,
                                                   maxmin::Index N,
                                                   bool irreducible = false) {
    using namespace maxmin;
    rng::Stream s(seed, "fixed-instance");
    ProblemInstance inst;
    inst.A = Matrix::Zero(K, N);
    for (Index k = 0; k < K; ++k) {
        for (Index n = 0; n < N; ++n)
            if (s.uniform() < 0.6) inst.A(k, n) = s.uniform(0.1, 1.0);
        inst.A(k, static_cast<Index>(s.below(N))) = s.uniform(0.5, 1.0);
    }
    inst.C = Matrix::Zero(K, K);
    for (Index i = 0; i < K; ++i)
        for (Index j = 0; j < K; ++j) {
            if (i == j) continue;
            if (irreducible)
                inst.C(i, j) = s.uniform(0.1, 1.0);
            else if (s.uniform() < 0.7)
                inst.C(i, j) = s.uniform(0.0, 0.8);
        }
    inst.b = Vector::Zero(K);
    inst.sigma = Vector::Zero(K);
    for (Index k = 0; k < K; ++k) {
        inst.b[k] = s.uniform(0.5, 2.0);
        inst.sigma[k] = s.uniform(0.5, 2.0);
    }
    inst.p_max = s.uniform(0.5, 20.0);
    return inst;
}

/// The analytic symmetric 2-user instance: with budget (1+sqrt(5))/2 the
/// optimum is exactly 2/(1+sqrt(5)) and the candidate Perron roots are the
/// golden ratio.
inline maxmin::ProblemInstance symmetric_two_user(double p_max) {
    using namespace maxmin;
    ProblemInstance inst;
    inst.A = Matrix::Identity(2, 2);
    inst.b = Vector::Ones(2);
    inst.C = Matrix::Zero(2, 2);
    inst.C(0, 1) = inst.C(1, 0) = 1.0;
    inst.sigma = Vector::Ones(2);
    inst.p_max = p_max;
    return inst;
}

/// Scalar no-interference instance: one user, A = [1], p_max = 2, t* = 2.
inline maxmin::ProblemInstance scalar_instance() {
    using namespace maxmin;
    ProblemInstance inst;
    inst.A = Matrix::Ones(1, 1);
    inst.b = Vector::Ones(1);
    inst.C = Matrix::Zero(1, 1);
    inst.sigma = Vector::Ones(1);
    inst.p_max = 2.0;
    return inst;
}

} // namespace testsupport

#endif
