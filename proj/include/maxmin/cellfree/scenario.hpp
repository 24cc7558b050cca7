#ifndef MAXMIN_CELLFREE_SCENARIO_HPP
#define MAXMIN_CELLFREE_SCENARIO_HPP

#include "maxmin/cellfree/effective.hpp"

#include <cstdint>
#include <string>

namespace maxmin::cellfree {

/// Full description of a simulated deployment. Units: meters, dBm, Hz, dB;
/// everything downstream of the scenario is linear scale.
struct Scenario {
    Index L = 4;
    Index M_ant = 2;
    Index K = 8;
    Index Q = 2;                  ///< cluster size for the cell-free regimes
    double area_side_m = 1000.0;
    double height_diff_m = 10.0;
    double shadow_sd_dB = 4.0;
    double bandwidth_Hz = 20e6;
    double noise_figure_dB = 7.0;
    double p_max_dBm = 20.0;      ///< combiner design budget (and default solve budget)
    Index n_samples = 500;
    Index n_stat_samples = 500;
    std::uint64_t seed = 1;
    Index n_setups = 20;

    double p_max_mw() const;
    double noise_mw() const;
};

/// Desk profile: small enough for CI. Paper profile: the full-size network.
Scenario desk_profile();
Scenario paper_profile();

/// Overlays the JSON fields of `text` onto `base`; unknown fields rejected.
Scenario scenario_from_json(const std::string& text, const Scenario& base = desk_profile());
std::string scenario_to_json(const Scenario& sc);

enum class Cooperation { cellular, distributed, centralized };
Cooperation cooperation_from_string(const std::string& name);
std::string to_string(Cooperation coop);

/// One end-to-end setup: geometry -> gains -> clusters -> channel draws ->
/// combiners -> effective channel. Cellular uses Q = 1 with LMMSE, distributed
/// uses Q with LTMMSE, centralized uses Q with cluster MMSE. Deterministic in
/// (scenario seed, setup_index) and independent of evaluation order.
EffectiveChannel estimate_setup(const Scenario& sc, Cooperation coop,
                                std::uint64_t setup_index);

/// The uplink max-min instance (omega = 1) for one setup at budget p_max_dbm.
ProblemInstance setup_ul_instance(const Scenario& sc, const EffectiveChannel& eff,
                                  double p_max_dbm);

} // namespace maxmin::cellfree

#endif
