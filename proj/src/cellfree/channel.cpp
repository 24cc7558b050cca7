#include "maxmin/cellfree/channel.hpp"

#include "maxmin/rng.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace maxmin::cellfree {

double pathloss_db(double distance_m) {
    return -21.9 * std::log10(distance_m) - 30.5;
}

NoisePower noise_power(double bandwidth_hz, double noise_figure_db) {
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("noise_power: bandwidth must be positive");
    NoisePower np;
    np.dBm = -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
    np.linear_mw = dbm_to_mw(np.dBm);
    return np;
}

Matrix pathloss_gains(const NetworkGeometry& geo, double shadow_sd_db, std::uint64_t seed) {
    const Index L = geo.L, K = geo.K;

    // Per-AP shadowing factor: cov = sd^2 * 2^(-delta_ki / 9 m).
    Matrix factor;  // kernel square root, K x K
    if (shadow_sd_db > 0.0) {
        Matrix kernel(K, K);
        for (Index k = 0; k < K; ++k) {
            kernel(k, k) = 1.0;
            for (Index i = k + 1; i < K; ++i) {
                const double dx = geo.ue_positions(k, 0) - geo.ue_positions(i, 0);
                const double dy = geo.ue_positions(k, 1) - geo.ue_positions(i, 1);
                const double delta = std::sqrt(dx * dx + dy * dy);
                kernel(k, i) = kernel(i, k) = std::exp2(-delta / 9.0);
            }
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(kernel);
        const Vector clipped = es.eigenvalues().cwiseMax(0.0);  // PSD repair
        factor = es.eigenvectors() * clipped.cwiseSqrt().asDiagonal();
    }

    Matrix gamma(L, K);
    for (Index l = 0; l < L; ++l) {
        Vector z = Vector::Zero(K);
        if (shadow_sd_db > 0.0) {
            rng::Stream stream(seed, "shadow", static_cast<std::uint64_t>(l));
            Vector g(K);
            for (Index k = 0; k < K; ++k) g[k] = stream.gaussian();
            z = shadow_sd_db * (factor * g);
        }
        for (Index k = 0; k < K; ++k) {
            const double db = pathloss_db(ap_ue_distance(geo, l, k)) + z[k];
            gamma(l, k) = db_to_linear(db);
        }
    }
    return gamma;
}

std::vector<std::vector<Index>> select_clusters(const Matrix& gamma, Index Q) {
    const Index L = gamma.rows(), K = gamma.cols();
    if (Q < 1 || Q > L) throw std::invalid_argument("select_clusters: need 1 <= Q <= L");
    std::vector<std::vector<Index>> clusters(K);
    std::vector<Index> order(L);
    for (Index k = 0; k < K; ++k) {
        std::iota(order.begin(), order.end(), Index{0});
        std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
            return gamma(a, k) > gamma(b, k);  // ties keep lower AP index
        });
        clusters[k].assign(order.begin(), order.begin() + Q);
    }
    return clusters;
}

ChannelSampleSet sample_channels(const Matrix& gamma, Index M_ant, Index n_samples,
                                 std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("sample_channels: need n_samples >= 1");
    if (gamma.size() == 0 || gamma.minCoeff() <= 0.0)
        throw std::invalid_argument("sample_channels: gains must be strictly positive");
    const Index L = gamma.rows(), K = gamma.cols();

    ChannelSampleSet set;
    set.L = L;
    set.M_ant = M_ant;
    set.K = K;
    set.H.reserve(n_samples);
    for (Index s = 0; s < n_samples; ++s) {
        rng::Stream stream(seed, "chan", static_cast<std::uint64_t>(s));
        ComplexMatrix H(L * M_ant, K);
        for (Index l = 0; l < L; ++l)
            for (Index k = 0; k < K; ++k)
                for (Index m = 0; m < M_ant; ++m)
                    H(l * M_ant + m, k) = stream.complex_gaussian(gamma(l, k));
        set.H.push_back(std::move(H));
    }
    return set;
}

ChannelSampleSet csi_view(const ChannelSampleSet& samples,
                          const std::vector<std::vector<Index>>& clusters) {
    if (static_cast<Index>(clusters.size()) != samples.K)
        throw std::invalid_argument("csi_view: clusters must cover every UE");
    std::vector<char> serves(samples.L * samples.K, 0);
    for (Index k = 0; k < samples.K; ++k) {
        if (clusters[k].empty()) throw std::invalid_argument("csi_view: empty cluster");
        for (const Index l : clusters[k]) serves[l * samples.K + k] = 1;
    }

    ChannelSampleSet csi;
    csi.L = samples.L;
    csi.M_ant = samples.M_ant;
    csi.K = samples.K;
    csi.H.reserve(samples.H.size());
    for (const auto& H : samples.H) {
        ComplexMatrix masked = H;
        for (Index l = 0; l < samples.L; ++l)
            for (Index k = 0; k < samples.K; ++k)
                if (!serves[l * samples.K + k])
                    masked.block(l * samples.M_ant, k, samples.M_ant, 1).setZero();
        csi.H.push_back(std::move(masked));
    }
    return csi;
}

double csi_error_scale(const ChannelStatistics& stats, Index l) {
    const Index K = stats.gamma.cols();
    double total = 0.0;
    for (Index k = 0; k < K; ++k) {
        const auto& cluster = stats.clusters[k];
        if (std::find(cluster.begin(), cluster.end(), l) == cluster.end())
            total += stats.gamma(l, k);
    }
    return total;
}

} // namespace maxmin::cellfree
