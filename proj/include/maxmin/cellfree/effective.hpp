#ifndef MAXMIN_CELLFREE_EFFECTIVE_HPP
#define MAXMIN_CELLFREE_EFFECTIVE_HPP

#include "maxmin/cellfree/combiners.hpp"
#include "maxmin/problem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maxmin::cellfree {

/// Order-insensitive pairwise (binary-counter) summation; keeps O(log n)
/// partial sums so long Monte-Carlo accumulations do not drift.
template <class T>
class PairwiseAccumulator {
public:
    void add(T value) {
        for (auto& slot : slots_) {
            if (!slot.has_value()) {
                slot = std::move(value);
                return;
            }
            value += *slot;
            slot.reset();
        }
        slots_.push_back(std::move(value));
    }

    /// Sum of everything added so far; `zero` supplies the shape.
    T total(T zero) const {
        for (const auto& slot : slots_)
            if (slot.has_value()) zero += *slot;
        return zero;
    }

private:
    std::vector<std::optional<T>> slots_;
};

/// Second-order statistics of the filtered channels, the only channel
/// information the power-control problem needs:
///   G[j,k] = E|h_j^H v_k|^2,   d_k = |E[h_k^H v_k]|^2,
/// with every v_k scaled by a deterministic factor so E[||v_k||^2] = 1
/// in-sample. G[k,k] >= d_k always (variance nonnegativity).
struct EffectiveChannel {
    Matrix G;
    Vector d;
    Index n_samples = 0;
    std::string regime;
};

/// Monte-Carlo estimate over paired (channel, combiner) samples. Requires at
/// least 2 samples; throws on an all-zero combiner.
EffectiveChannel estimate_effective_channel(const ChannelSampleSet& samples,
                                            const CombinerSet& combiners,
                                            const std::string& regime);

/// Uplink max-min instance: A = I_K, b = d/omega, C = G - D, sigma = sigma*1.
/// Rejects (with the 1-based index) any UE whose useful signal d_k is zero.
ProblemInstance build_ul_problem(const EffectiveChannel& eff, const Vector& omega,
                                 double sigma_noise, double p_max);

/// Downlink sum-power instance: A = 1_{Kx1}, C = G' - D. When `ue_to_ap` is
/// given (cellular case: disjoint serving sets), emits one indicator
/// constraint column per AP instead, each with budget p_max.
ProblemInstance build_dl_problem(const EffectiveChannel& eff, const Vector& omega,
                                 double sigma_noise, double p_max,
                                 const std::optional<std::vector<Index>>& ue_to_ap = {});

} // namespace maxmin::cellfree

#endif
