#include "maxmin/cellfree/effective.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxmin::cellfree {

EffectiveChannel estimate_effective_channel(const ChannelSampleSet& samples,
                                            const CombinerSet& combiners,
                                            const std::string& regime) {
    const Index K = samples.K;
    const auto n = samples.n_samples();
    if (n < 2) throw std::invalid_argument("estimate_effective_channel: need >= 2 samples");
    if (static_cast<Index>(combiners.V.size()) != n)
        throw std::invalid_argument("estimate_effective_channel: sample/combiner mismatch");

    PairwiseAccumulator<Matrix> abs2_acc;       // |h_j^H v_k|^2
    PairwiseAccumulator<Eigen::VectorXcd> diag_acc;  // h_k^H v_k
    PairwiseAccumulator<Vector> power_acc;      // ||v_k||^2
    for (Index s = 0; s < n; ++s) {
        const ComplexMatrix inner = samples.H[s].adjoint() * combiners.V[s];
        abs2_acc.add(inner.cwiseAbs2());
        diag_acc.add(inner.diagonal());
        power_acc.add(Vector(combiners.V[s].colwise().squaredNorm().transpose()));
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    const Matrix mean_abs2 = abs2_acc.total(Matrix::Zero(K, K)) * inv_n;
    const Eigen::VectorXcd mean_diag = diag_acc.total(Eigen::VectorXcd::Zero(K)) * inv_n;
    const Vector mean_power = power_acc.total(Vector::Zero(K)) * inv_n;

    for (Index k = 0; k < K; ++k)
        if (!(mean_power[k] > 0.0))
            throw std::invalid_argument("estimate_effective_channel: combiner for UE " +
                                        std::to_string(k + 1) + " has zero power");

    EffectiveChannel eff;
    eff.G = mean_abs2.array().rowwise() / mean_power.transpose().array();
    eff.d = mean_diag.cwiseAbs2().cwiseQuotient(mean_power);
    eff.n_samples = n;
    eff.regime = regime;
    return eff;
}

namespace {

void check_builder_args(const EffectiveChannel& eff, const Vector& omega,
                        double sigma_noise, double p_max) {
    const Index K = eff.d.size();
    if (eff.G.rows() != K || eff.G.cols() != K)
        throw std::invalid_argument("build problem: G must be K x K");
    if (omega.size() != K || omega.minCoeff() <= 0.0)
        throw std::invalid_argument("build problem: omega must be K positive weights");
    if (!(sigma_noise > 0.0) || !(p_max > 0.0))
        throw std::invalid_argument("build problem: noise and budget must be positive");
    for (Index k = 0; k < K; ++k)
        if (!(eff.d[k] > 0.0))
            throw std::invalid_argument("build problem: UE " + std::to_string(k + 1) +
                                        " cannot be served (d = 0)");
}

} // namespace

ProblemInstance build_ul_problem(const EffectiveChannel& eff, const Vector& omega,
                                 double sigma_noise, double p_max) {
    check_builder_args(eff, omega, sigma_noise, p_max);
    const Index K = eff.d.size();
    ProblemInstance inst;
    inst.A = Matrix::Identity(K, K);
    inst.b = eff.d.cwiseQuotient(omega);
    inst.C = eff.G;
    // C = G - D; the diagonal is a variance, nonnegative up to rounding.
    inst.C.diagonal() = (eff.G.diagonal() - eff.d).cwiseMax(0.0);
    inst.sigma = Vector::Constant(K, sigma_noise);
    inst.p_max = p_max;
    return inst;
}

ProblemInstance build_dl_problem(const EffectiveChannel& eff, const Vector& omega,
                                 double sigma_noise, double p_max,
                                 const std::optional<std::vector<Index>>& ue_to_ap) {
    check_builder_args(eff, omega, sigma_noise, p_max);
    const Index K = eff.d.size();
    ProblemInstance inst;
    if (ue_to_ap.has_value()) {
        if (static_cast<Index>(ue_to_ap->size()) != K)
            throw std::invalid_argument("build_dl_problem: assignment must cover every UE");
        const Index L = 1 + *std::max_element(ue_to_ap->begin(), ue_to_ap->end());
        inst.A = Matrix::Zero(K, L);
        for (Index k = 0; k < K; ++k) inst.A(k, (*ue_to_ap)[k]) = 1.0;
    } else {
        inst.A = Matrix::Ones(K, 1);
    }
    inst.b = eff.d.cwiseQuotient(omega);
    inst.C = eff.G.transpose();
    inst.C.diagonal() = (eff.G.diagonal() - eff.d).cwiseMax(0.0);  // C = G' - D
    inst.sigma = Vector::Constant(K, sigma_noise);
    inst.p_max = p_max;
    return inst;
}

} // namespace maxmin::cellfree
