// powerctl — max-min power control experiments from the command line.
//
// Subcommands:
//   solve     closed-form solve of an instance document (optionally oracle-checked)
//   simulate  cell-free Monte-Carlo runs: optimal power control vs full power
//   sweep     utility/bound sweep over the power budget
//
// Exit codes: 0 ok, 1 usage, 2 validation/parse failure, 3 numerical failure.

#include "maxmin/bounds.hpp"
#include "maxmin/cellfree/scenario.hpp"
#include "maxmin/io.hpp"
#include "maxmin/oracles.hpp"
#include "maxmin/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace maxmin;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Locale-independent, fixed significant digits.
std::string fmt(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        io::save_file(out_path, text);
}

ProblemInstance load_instance_like(const std::string& path) {
    const std::string text = io::load_file(path);
    if (io::looks_like_instance(text)) return io::read_instance(text);
    if (io::looks_like_effective_channel(text)) {
        const io::EffectiveChannelDoc doc = io::read_effective_channel(text);
        cellfree::EffectiveChannel eff;
        eff.G = doc.G;
        eff.d = doc.d;
        eff.n_samples = doc.n_samples;
        eff.regime = doc.regime;
        return cellfree::build_ul_problem(eff, Vector::Ones(doc.d.size()), doc.sigma_noise,
                                          doc.p_max);
    }
    throw ValidationError(path + ": not an instance or effective-channel document");
}

void require_valid(const ProblemInstance& inst, const std::string& path) {
    const auto violations = validate(inst);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << path << ": invalid instance:";
    for (const auto& v : violations) msg << "\n  - " << v;
    throw ValidationError(msg.str());
}

std::vector<double> parse_grid(const std::string& text) {
    double lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !ss.eof())
        throw ValidationError("--pmax-dbm expects LO:HI:STEP");
    if (!(step > 0.0) || !(hi >= lo))
        throw ValidationError("--pmax-dbm grid must be strictly increasing");
    std::vector<double> grid;
    for (double v = lo; v <= hi + 1e-9; v += step) grid.push_back(v);
    return grid;
}

std::vector<cellfree::Cooperation> parse_regimes(const std::string& csv) {
    std::vector<cellfree::Cooperation> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(cellfree::cooperation_from_string(item));
    }
    if (out.empty()) throw ValidationError("--regimes: no regime given");
    return out;
}

cellfree::Scenario base_profile(const std::string& profile) {
    if (profile == "desk") return cellfree::desk_profile();
    if (profile == "paper") return cellfree::paper_profile();
    throw ValidationError("--profile must be desk or paper");
}

double rate_bps_hz(double sinr) { return std::log2(1.0 + sinr); }

// ---- solve ----------------------------------------------------------------

int cmd_solve(const std::string& path, bool with_oracle, double tol,
              const std::string& out_path) {
    const ProblemInstance inst = load_instance_like(path);
    require_valid(inst, path);

    SolverOptions opts;
    if (tol > 0.0) opts.spectral_tol = tol;
    const ScaledProblem sp = scale(inst);
    const Solution sol = solve_closed_form(sp, opts);

    std::string doc = io::write_solution(inst, sol);
    if (with_oracle) {
        const OracleReport fp = fixed_point_solve(sp);
        const OracleReport bi = bisection_solve(sp);
        double dt = 0.0, dp = 0.0;
        for (const auto* rep : {&fp, &bi}) {
            dt = std::max(dt, std::abs(rep->t_star - sol.t_star) / sol.t_star);
            dp = std::max(dp, (rep->p_star - sol.p_star).cwiseAbs().maxCoeff() /
                                  sol.p_star.cwiseAbs().maxCoeff());
        }
        std::cerr << "oracle max relative discrepancy: t_star " << fmt(dt) << ", p_star "
                  << fmt(dp) << "\n";
        auto j = nlohmann::ordered_json::parse(doc);
        j["oracle_discrepancy_t"] = dt;
        j["oracle_discrepancy_p"] = dp;
        doc = j.dump(2) + "\n";
    }
    emit(doc, out_path);

    if (!sol.certified) {
        std::cerr << "solve: uncertified result";
        for (const auto& w : sol.warnings) std::cerr << "\n  - " << w;
        std::cerr << "\n  residual " << fmt(sol.residual) << ", norm error "
                  << fmt(sol.norm_error) << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

// ---- sweep ----------------------------------------------------------------

int cmd_sweep(const std::string& path, const std::string& grid_spec,
              const std::string& regimes_csv, const std::string& profile,
              const std::string& out_path) {
    const std::vector<double> grid = parse_grid(grid_spec);

    ProblemInstance inst;
    const std::string text = io::load_file(path);
    if (io::looks_like_instance(text) || io::looks_like_effective_channel(text)) {
        inst = load_instance_like(path);
    } else {
        const auto sc = cellfree::scenario_from_json(text, base_profile(profile));
        const auto regimes = parse_regimes(regimes_csv);
        if (regimes.size() != 1)
            throw ValidationError("sweep over a scenario needs exactly one --regimes value");
        const auto eff = cellfree::estimate_setup(sc, regimes.front(), 0);
        inst = cellfree::setup_ul_instance(sc, eff, sc.p_max_dBm);
    }
    require_valid(inst, path);

    // M and u do not depend on p_max, so the bound is fixed across the sweep.
    const UtilityBound bound = compute_bound(scale(inst));

    std::string csv = "p_max_dBm,t_star,bound,regime,min_rate_bps_hz\n";
    for (const double dbm : grid) {
        inst.p_max = cellfree::dbm_to_mw(dbm);
        Solution sol;
        try {
            sol = solve_closed_form(inst);
        } catch (const std::exception& e) {
            csv += "# aborted at p_max_dBm=" + fmt(dbm) + ": " + e.what() + "\n";
            emit(csv, out_path);
            throw NumericalError(std::string("sweep aborted: ") + e.what());
        }
        csv += fmt(dbm) + "," + fmt(sol.t_star) + "," + fmt(bound(inst.p_max)) + "," +
               to_string(regime(bound, inst.p_max)) + "," + fmt(rate_bps_hz(sol.t_star)) +
               "\n";
    }
    emit(csv, out_path);
    return kExitOk;
}

// ---- simulate -------------------------------------------------------------

struct SimRow {
    bool ok = false;
    std::string error;
    double t_star = 0.0;
    double rate_opt = 0.0;
    double rate_full = 0.0;
};

SimRow run_setup(const cellfree::Scenario& sc, cellfree::Cooperation coop,
                 std::uint64_t setup) {
    SimRow row;
    try {
        const auto eff = cellfree::estimate_setup(sc, coop, setup);
        const ProblemInstance inst = cellfree::setup_ul_instance(sc, eff, sc.p_max_dBm);
        const Solution sol = solve_closed_form(inst);
        row.t_star = sol.t_star;
        row.rate_opt = rate_bps_hz(sol.t_star);
        const Vector full = Vector::Constant(inst.num_users(), inst.p_max);
        row.rate_full = rate_bps_hz(evaluate_utility(inst, full));
        row.ok = true;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_simulate(const std::string& path, const std::string& regimes_csv,
                 std::optional<Index> setups, std::optional<std::uint64_t> seed,
                 const std::string& profile, unsigned jobs, const std::string& out_path) {
    cellfree::Scenario sc =
        cellfree::scenario_from_json(io::load_file(path), base_profile(profile));
    if (setups) sc.n_setups = *setups;
    if (seed) sc.seed = *seed;
    const auto regimes = parse_regimes(regimes_csv);

    const auto n_rows = static_cast<std::size_t>(sc.n_setups) * regimes.size();
    std::vector<SimRow> rows(n_rows);
    std::atomic<Index> next_setup{0};
    const auto worker = [&] {
        for (Index s = next_setup.fetch_add(1); s < sc.n_setups;
             s = next_setup.fetch_add(1)) {
            for (std::size_t r = 0; r < regimes.size(); ++r)
                rows[static_cast<std::size_t>(s) * regimes.size() + r] =
                    run_setup(sc, regimes[r], static_cast<std::uint64_t>(s));
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::string csv = "setup,regime,t_star,max_min_rate_opt_bps_hz,min_rate_full_power_bps_hz\n";
    std::size_t failures = 0;
    for (Index s = 0; s < sc.n_setups; ++s)
        for (std::size_t r = 0; r < regimes.size(); ++r) {
            const SimRow& row = rows[static_cast<std::size_t>(s) * regimes.size() + r];
            if (!row.ok) {
                ++failures;
                std::cerr << "setup " << s << " (" << to_string(regimes[r])
                          << ") failed: " << row.error << "\n";
                continue;
            }
            csv += std::to_string(s) + "," + to_string(regimes[r]) + "," + fmt(row.t_star) +
                   "," + fmt(row.rate_opt) + "," + fmt(row.rate_full) + "\n";
        }
    emit(csv, out_path);
    if (failures == n_rows) throw NumericalError("simulate: every setup failed");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form max-min power control for cellular and cell-free networks"};
    app.require_subcommand(1);

    std::string instance_path, out_path;
    std::string profile = "desk";
    bool with_oracle = false;
    double tol = 0.0;

    auto* solve = app.add_subcommand("solve", "Solve an instance document");
    solve->add_option("instance", instance_path, "Instance or effective-channel document")
        ->required();
    solve->add_flag("--oracle", with_oracle, "Cross-check with both reference solvers");
    solve->add_option("--tol", tol, "Relative spectral-radius tolerance");
    solve->add_option("-o,--output", out_path, "Write the solution here (default stdout)");

    std::string sweep_path, sweep_grid, sweep_regimes = "distributed";
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "Sweep the power budget, reporting t*, bound, regime");
    sweep->add_option("config", sweep_path, "Instance, effective-channel, or scenario document")
        ->required();
    sweep->add_option("--pmax-dbm", sweep_grid, "Grid LO:HI:STEP in dBm")->required();
    sweep->add_option("--regimes", sweep_regimes, "Cooperation regime for scenario sweeps");
    sweep->add_option("--profile", profile, "Scenario profile: desk or paper");
    sweep->add_option("-o,--output", sweep_out, "Write the CSV here (default stdout)");

    std::string sim_path, sim_out, sim_regimes = "cellular,distributed,centralized";
    std::optional<Index> sim_setups;
    std::optional<std::uint64_t> sim_seed;
    unsigned jobs = 1;
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo comparison vs full power");
    sim->add_option("config", sim_path, "Scenario document")->required();
    sim->add_option("--regimes", sim_regimes, "Comma-separated cooperation regimes");
    sim->add_option("--setups", sim_setups, "Number of i.i.d. setups");
    sim->add_option("--seed", sim_seed, "Master seed");
    sim->add_option("--profile", profile, "Scenario profile: desk or paper");
    sim->add_option("--jobs", jobs, "Worker threads (output is identical for any value)");
    sim->add_option("-o,--output", sim_out, "Write the CSV here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(instance_path, with_oracle, tol, out_path);
        if (sweep->parsed())
            return cmd_sweep(sweep_path, sweep_grid, sweep_regimes, profile, sweep_out);
        if (sim->parsed())
            return cmd_simulate(sim_path, sim_regimes, sim_setups, sim_seed, profile,
                                std::max(1u, jobs), sim_out);
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
