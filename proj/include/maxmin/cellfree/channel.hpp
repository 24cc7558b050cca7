#ifndef MAXMIN_CELLFREE_CHANNEL_HPP
#define MAXMIN_CELLFREE_CHANNEL_HPP

#include "maxmin/cellfree/geometry.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace maxmin::cellfree {

using ComplexMatrix = Eigen::MatrixXcd;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_mw(double dbm) { return db_to_linear(dbm); }

/// 3GPP-like pathloss at 2 GHz: -21.9 log10(D / 1 m) - 30.5 dB.
double pathloss_db(double distance_m);

struct NoisePower {
    double dBm = 0.0;
    double linear_mw = 0.0;
};

/// Thermal noise: -174 + 10 log10(B) + F dBm.
NoisePower noise_power(double bandwidth_hz, double noise_figure_db);

/// Long-term channel state of one network realization.
struct ChannelStatistics {
    Matrix gamma;       ///< L x K channel gains, linear scale
    double sigma_noise = 0.0;  ///< linear mW
    std::vector<std::vector<Index>> clusters;  ///< per UE, Q serving APs, strongest first
    Index Q = 0;
};

/// Channel gains with correlated log-normal shadowing: per AP, the shadowing
/// across UEs is jointly Gaussian with covariance sd^2 * 2^(-delta/9 m)
/// (delta = UE-UE distance), independent across APs. The kernel is factorized
/// once per call with negative eigenvalues clipped at zero.
Matrix pathloss_gains(const NetworkGeometry& geo, double shadow_sd_db, std::uint64_t seed);

/// The Q strongest APs per UE, decreasing gain, gain ties broken by lower AP
/// index. Q = 1 reproduces the cellular association.
std::vector<std::vector<Index>> select_clusters(const Matrix& gamma, Index Q);

/// Per-draw small-scale fading: each AP-UE block is CN(0, gamma_lk I_M).
struct ChannelSampleSet {
    Index L = 0;
    Index M_ant = 0;
    Index K = 0;
    std::vector<ComplexMatrix> H;  ///< n_samples matrices, each (L*M_ant) x K

    Index n_samples() const { return static_cast<Index>(H.size()); }
    /// AP l's M_ant x K block of sample s.
    Eigen::Block<const ComplexMatrix> ap_block(Index s, Index l) const {
        return H[s].block(l * M_ant, 0, M_ant, K);
    }
};

ChannelSampleSet sample_channels(const Matrix& gamma, Index M_ant, Index n_samples,
                                 std::uint64_t seed);

/// The CSI each AP actually has: serving-AP channels pass through unchanged,
/// non-serving entries are replaced by their (zero) mean.
ChannelSampleSet csi_view(const ChannelSampleSet& samples,
                          const std::vector<std::vector<Index>>& clusters);

/// Sum of gains of UEs not served by AP l (the CSI error covariance scale).
double csi_error_scale(const ChannelStatistics& stats, Index l);

} // namespace maxmin::cellfree

#endif
