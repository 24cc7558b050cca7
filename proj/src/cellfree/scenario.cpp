#include "maxmin/cellfree/scenario.hpp"

#include "maxmin/rng.hpp"

#include <json.hpp>
#include <stdexcept>

namespace maxmin::cellfree {

double Scenario::p_max_mw() const { return dbm_to_mw(p_max_dBm); }
double Scenario::noise_mw() const { return noise_power(bandwidth_Hz, noise_figure_dB).linear_mw; }

Scenario desk_profile() { return Scenario{}; }

Scenario paper_profile() {
    Scenario sc;
    sc.L = 16;
    sc.M_ant = 8;
    sc.K = 64;
    sc.Q = 4;
    sc.n_samples = 1000;
    sc.n_stat_samples = 1000;
    sc.n_setups = 100;
    return sc;
}

Scenario scenario_from_json(const std::string& text, const Scenario& base) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("scenario must be a JSON object");

    Scenario sc = base;
    for (const auto& [key, value] : j.items()) {
        if (key == "L") sc.L = value.get<Index>();
        else if (key == "M_ant") sc.M_ant = value.get<Index>();
        else if (key == "K") sc.K = value.get<Index>();
        else if (key == "Q") sc.Q = value.get<Index>();
        else if (key == "area_side_m") sc.area_side_m = value.get<double>();
        else if (key == "height_diff_m") sc.height_diff_m = value.get<double>();
        else if (key == "shadow_sd_dB") sc.shadow_sd_dB = value.get<double>();
        else if (key == "bandwidth_Hz") sc.bandwidth_Hz = value.get<double>();
        else if (key == "noise_figure_dB") sc.noise_figure_dB = value.get<double>();
        else if (key == "p_max_dBm") sc.p_max_dBm = value.get<double>();
        else if (key == "n_samples") sc.n_samples = value.get<Index>();
        else if (key == "n_stat_samples") sc.n_stat_samples = value.get<Index>();
        else if (key == "seed") sc.seed = value.get<std::uint64_t>();
        else if (key == "n_setups") sc.n_setups = value.get<Index>();
        else throw std::invalid_argument("scenario: unknown field '" + key + "'");
    }
    if (sc.Q < 1 || sc.Q > sc.L)
        throw std::invalid_argument("scenario: need 1 <= Q <= L");
    if (sc.n_samples < 2) throw std::invalid_argument("scenario: need n_samples >= 2");
    if (sc.n_setups < 1) throw std::invalid_argument("scenario: need n_setups >= 1");
    return sc;
}

std::string scenario_to_json(const Scenario& sc) {
    nlohmann::ordered_json j;
    j["L"] = sc.L;
    j["M_ant"] = sc.M_ant;
    j["K"] = sc.K;
    j["Q"] = sc.Q;
    j["area_side_m"] = sc.area_side_m;
    j["height_diff_m"] = sc.height_diff_m;
    j["shadow_sd_dB"] = sc.shadow_sd_dB;
    j["bandwidth_Hz"] = sc.bandwidth_Hz;
    j["noise_figure_dB"] = sc.noise_figure_dB;
    j["p_max_dBm"] = sc.p_max_dBm;
    j["n_samples"] = sc.n_samples;
    j["n_stat_samples"] = sc.n_stat_samples;
    j["seed"] = sc.seed;
    j["n_setups"] = sc.n_setups;
    return j.dump(2) + "\n";
}

Cooperation cooperation_from_string(const std::string& name) {
    if (name == "cellular") return Cooperation::cellular;
    if (name == "distributed") return Cooperation::distributed;
    if (name == "centralized") return Cooperation::centralized;
    throw std::invalid_argument("unknown cooperation regime '" + name + "'");
}

std::string to_string(Cooperation coop) {
    switch (coop) {
        case Cooperation::cellular: return "cellular";
        case Cooperation::distributed: return "distributed";
        case Cooperation::centralized: return "centralized";
    }
    return "unknown";
}

EffectiveChannel estimate_setup(const Scenario& sc, Cooperation coop,
                                std::uint64_t setup_index) {
    const std::uint64_t setup_seed = rng::substream_seed(sc.seed, "setup", setup_index);

    NetworkGeometry geo = make_geometry(sc.L, sc.M_ant, sc.K, sc.area_side_m, setup_seed);
    geo.height_diff = sc.height_diff_m;

    ChannelStatistics stats;
    stats.gamma = pathloss_gains(geo, sc.shadow_sd_dB, setup_seed);
    stats.sigma_noise = sc.noise_mw();
    stats.Q = coop == Cooperation::cellular ? 1 : sc.Q;
    stats.clusters = select_clusters(stats.gamma, stats.Q);

    const ChannelSampleSet samples =
        sample_channels(stats.gamma, sc.M_ant, sc.n_samples, setup_seed);
    const ChannelSampleSet csi = csi_view(samples, stats.clusters);

    CombinerSet combiners;
    switch (coop) {
        case Cooperation::cellular:
            combiners = lmmse_combiners(csi, stats, sc.p_max_mw());
            break;
        case Cooperation::distributed:
            combiners = ltmmse_combiners(csi, stats, sc.p_max_mw(), sc.n_stat_samples,
                                         rng::substream_seed(setup_seed, "stat"));
            break;
        case Cooperation::centralized:
            combiners = centralized_combiners(csi, stats, sc.p_max_mw());
            break;
    }
    return estimate_effective_channel(samples, combiners, to_string(coop));
}

ProblemInstance setup_ul_instance(const Scenario& sc, const EffectiveChannel& eff,
                                  double p_max_dbm) {
    const Vector omega = Vector::Ones(eff.d.size());
    return build_ul_problem(eff, omega, sc.noise_mw(), dbm_to_mw(p_max_dbm));
}

} // namespace maxmin::cellfree
