#ifndef MAXMIN_CELLFREE_COMBINERS_HPP
#define MAXMIN_CELLFREE_COMBINERS_HPP

#include "maxmin/cellfree/channel.hpp"

#include <cstdint>

namespace maxmin::cellfree {

/// Per-sample global combining matrices, one (L*M_ant) x K matrix per channel
/// draw; column k stacks every AP's combining vector for UE k (zero blocks at
/// non-serving APs). Unnormalized; the effective-channel estimator applies the
/// deterministic unit-power scaling.
struct CombinerSet {
    Index L = 0;
    Index M_ant = 0;
    Index K = 0;
    std::vector<ComplexMatrix> V;
};

/// Local MMSE: per AP l and draw,
///   V_l = (H_l H_l^H + Sigma_l + (sigma/p_max) I)^{-1} H_l,
/// with Sigma_l the diagonal CSI-error covariance of the UEs AP l does not
/// serve. `p_max_mw` is the design budget the regularizer is built for.
CombinerSet lmmse_combiners(const ChannelSampleSet& csi, const ChannelStatistics& stats,
                            double p_max_mw);

/// Local team MMSE: V_l = V_l^LMMSE W_l, where the W_l columns solve, per UE,
/// the stacked linear system over its serving cluster
///   w_{l,k} + sum_{j != l} Pi_j w_{j,k} = e_k,   w_{l,k} = 0 off-cluster,
/// with Pi_l = E[H_l^H V_l^LMMSE] estimated over n_stat_samples independent
/// draws seeded by `stat_seed`. Throws when a stacked system is numerically
/// singular (residual reported in the message).
CombinerSet ltmmse_combiners(const ChannelSampleSet& csi, const ChannelStatistics& stats,
                             double p_max_mw, Index n_stat_samples, std::uint64_t stat_seed);

/// Centralized cluster MMSE: per UE k, the serving APs stack their CSI into
/// a (Q*M_ant)-row matrix and share it;
///   V^(k) = (H^(k) H^(k)H + Sigma^(k) + (sigma/p_max) I)^{-1} H^(k),
/// and column k is scattered back to the serving blocks. Q = 1 coincides with
/// the cellular LMMSE columns exactly.
CombinerSet centralized_combiners(const ChannelSampleSet& csi, const ChannelStatistics& stats,
                                  double p_max_mw);

/// Pi_l = E[H_l^H V_l^LMMSE] Monte-Carlo estimate (exposed for tests).
std::vector<ComplexMatrix> estimate_pi(const ChannelStatistics& stats, Index M_ant,
                                       double p_max_mw, Index n_stat_samples,
                                       std::uint64_t stat_seed);

/// Solves the per-UE team systems for given Pi matrices and clusters; returns
/// one K x K weight matrix per AP (columns of non-served UEs are zero).
/// Pi_l = 0 for every l yields identity columns.
std::vector<ComplexMatrix> team_weights(const std::vector<ComplexMatrix>& pi,
                                        const std::vector<std::vector<Index>>& clusters,
                                        Index K);

} // namespace maxmin::cellfree

#endif
