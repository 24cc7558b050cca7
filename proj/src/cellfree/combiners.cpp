#include "maxmin/cellfree/combiners.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <stdexcept>

namespace maxmin::cellfree {

namespace {

void check_inputs(const ChannelSampleSet& csi, const ChannelStatistics& stats,
                  double p_max_mw) {
    if (csi.H.empty()) throw std::invalid_argument("combiners: no CSI samples");
    if (!(p_max_mw > 0.0)) throw std::invalid_argument("combiners: p_max must be positive");
    if (!(stats.sigma_noise > 0.0))
        throw std::invalid_argument("combiners: noise power must be positive");
    if (static_cast<Index>(stats.clusters.size()) != csi.K)
        throw std::invalid_argument("combiners: clusters do not match CSI");
}

// (H H^H + diag_load I)^{-1} H for one AP block.
ComplexMatrix mmse_solve(const ComplexMatrix& H, double diag_load) {
    ComplexMatrix gram = H * H.adjoint();
    gram.diagonal().array() += diag_load;
    return gram.llt().solve(H);
}

} // namespace

CombinerSet lmmse_combiners(const ChannelSampleSet& csi, const ChannelStatistics& stats,
                            double p_max_mw) {
    check_inputs(csi, stats, p_max_mw);
    const Index L = csi.L, M = csi.M_ant, K = csi.K;
    const double reg = stats.sigma_noise / p_max_mw;

    std::vector<double> load(L);
    for (Index l = 0; l < L; ++l) load[l] = csi_error_scale(stats, l) + reg;

    CombinerSet out;
    out.L = L;
    out.M_ant = M;
    out.K = K;
    out.V.reserve(csi.H.size());
    for (const auto& H : csi.H) {
        ComplexMatrix V(L * M, K);
        for (Index l = 0; l < L; ++l) {
            const ComplexMatrix Hl = H.block(l * M, 0, M, K);
            V.block(l * M, 0, M, K) = mmse_solve(Hl, load[l]);
        }
        out.V.push_back(std::move(V));
    }
    return out;
}

std::vector<ComplexMatrix> estimate_pi(const ChannelStatistics& stats, Index M_ant,
                                       double p_max_mw, Index n_stat_samples,
                                       std::uint64_t stat_seed) {
    if (n_stat_samples < 1)
        throw std::invalid_argument("estimate_pi: need n_stat_samples >= 1");
    const Index L = stats.gamma.rows(), K = stats.gamma.cols();
    const ChannelSampleSet draws =
        csi_view(sample_channels(stats.gamma, M_ant, n_stat_samples, stat_seed),
                 stats.clusters);
    const CombinerSet local = lmmse_combiners(draws, stats, p_max_mw);

    std::vector<ComplexMatrix> pi(L, ComplexMatrix::Zero(K, K));
    for (Index s = 0; s < n_stat_samples; ++s)
        for (Index l = 0; l < L; ++l) {
            const ComplexMatrix Hl = draws.H[s].block(l * M_ant, 0, M_ant, K);
            const ComplexMatrix Vl = local.V[s].block(l * M_ant, 0, M_ant, K);
            pi[l] += Hl.adjoint() * Vl;
        }
    for (auto& m : pi) m /= static_cast<double>(n_stat_samples);
    return pi;
}

std::vector<ComplexMatrix> team_weights(const std::vector<ComplexMatrix>& pi,
                                        const std::vector<std::vector<Index>>& clusters,
                                        Index K) {
    const auto L = static_cast<Index>(pi.size());
    std::vector<ComplexMatrix> W(L, ComplexMatrix::Zero(K, K));
    for (Index k = 0; k < K; ++k) {
        const auto& cluster = clusters[k];
        const auto Q = static_cast<Index>(cluster.size());
        ComplexMatrix sys = ComplexMatrix::Zero(Q * K, Q * K);
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(Q * K);
        for (Index i = 0; i < Q; ++i) {
            for (Index j = 0; j < Q; ++j) {
                if (i == j)
                    sys.block(i * K, j * K, K, K) = ComplexMatrix::Identity(K, K);
                else
                    sys.block(i * K, j * K, K, K) = pi[cluster[j]];
            }
            rhs[i * K + k] = 1.0;
        }
        Eigen::PartialPivLU<ComplexMatrix> lu(sys);
        const Eigen::VectorXcd w = lu.solve(rhs);
        const double res = (sys * w - rhs).cwiseAbs().maxCoeff();
        if (!w.allFinite() || res > 1e-8 * std::max(1.0, w.cwiseAbs().maxCoeff()))
            throw std::runtime_error("team_weights: stacked system for UE " +
                                     std::to_string(k + 1) +
                                     " is numerically singular (residual " +
                                     std::to_string(res) + ")");
        for (Index i = 0; i < Q; ++i) W[cluster[i]].col(k) = w.segment(i * K, K);
    }
    return W;
}

CombinerSet ltmmse_combiners(const ChannelSampleSet& csi, const ChannelStatistics& stats,
                             double p_max_mw, Index n_stat_samples, std::uint64_t stat_seed) {
    check_inputs(csi, stats, p_max_mw);
    const Index L = csi.L, M = csi.M_ant, K = csi.K;
    const std::vector<ComplexMatrix> pi =
        estimate_pi(stats, M, p_max_mw, n_stat_samples, stat_seed);
    const std::vector<ComplexMatrix> W = team_weights(pi, stats.clusters, K);

    CombinerSet out = lmmse_combiners(csi, stats, p_max_mw);
    for (auto& V : out.V)
        for (Index l = 0; l < L; ++l)
            V.block(l * M, 0, M, K) = (V.block(l * M, 0, M, K) * W[l]).eval();
    return out;
}

CombinerSet centralized_combiners(const ChannelSampleSet& csi, const ChannelStatistics& stats,
                                  double p_max_mw) {
    check_inputs(csi, stats, p_max_mw);
    const Index L = csi.L, M = csi.M_ant, K = csi.K;
    const double reg = stats.sigma_noise / p_max_mw;

    std::vector<double> err_scale(L);
    for (Index l = 0; l < L; ++l) err_scale[l] = csi_error_scale(stats, l);

    CombinerSet out;
    out.L = L;
    out.M_ant = M;
    out.K = K;
    out.V.reserve(csi.H.size());
    for (const auto& H : csi.H) {
        ComplexMatrix V = ComplexMatrix::Zero(L * M, K);
        for (Index k = 0; k < K; ++k) {
            const auto& cluster = stats.clusters[k];
            const auto Q = static_cast<Index>(cluster.size());
            ComplexMatrix Hk(Q * M, K);
            for (Index i = 0; i < Q; ++i)
                Hk.block(i * M, 0, M, K) = H.block(cluster[i] * M, 0, M, K);
            ComplexMatrix gram = Hk * Hk.adjoint();
            for (Index i = 0; i < Q; ++i)
                gram.diagonal().segment(i * M, M).array() += err_scale[cluster[i]] + reg;
            const ComplexMatrix Vk = gram.llt().solve(Hk);
            for (Index i = 0; i < Q; ++i)
                V.block(cluster[i] * M, k, M, 1) = Vk.block(i * M, k, M, 1);
        }
        out.V.push_back(std::move(V));
    }
    return out;
}

} // namespace maxmin::cellfree
