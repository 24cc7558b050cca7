#include "maxmin/cellfree/effective.hpp"

#include "maxmin/cellfree/scenario.hpp"
#include "maxmin/rng.hpp"
#include "maxmin/solver.hpp"

#include <doctest.h>

using namespace maxmin;
using namespace maxmin::cellfree;

namespace {

// Empirical-measure oracle: the estimator definition computed with plain loops.
EffectiveChannel brute_force_effective(const ChannelSampleSet& samples,
                                       const CombinerSet& comb) {
    const Index K = samples.K;
    const auto n = samples.n_samples();
    Vector power = Vector::Zero(K);
    for (Index s = 0; s < n; ++s)
        for (Index k = 0; k < K; ++k) power[k] += comb.V[s].col(k).squaredNorm();
    power /= static_cast<double>(n);

    EffectiveChannel eff;
    eff.G = Matrix::Zero(K, K);
    eff.d = Vector::Zero(K);
    Eigen::VectorXcd mean = Eigen::VectorXcd::Zero(K);
    for (Index s = 0; s < n; ++s)
        for (Index k = 0; k < K; ++k) {
            const Eigen::VectorXcd v = comb.V[s].col(k) / std::sqrt(power[k]);
            for (Index j = 0; j < K; ++j)
                eff.G(j, k) += std::norm(samples.H[s].col(j).dot(v));
            mean[k] += samples.H[s].col(k).dot(v);
        }
    eff.G /= static_cast<double>(n);
    eff.d = (mean / static_cast<double>(n)).cwiseAbs2();
    eff.n_samples = n;
    return eff;
}

} // namespace

TEST_CASE("estimator matches the empirical-measure oracle") {
    Matrix gamma(2, 3);
    gamma << 1.0, 0.4, 0.7,
             0.2, 1.1, 0.6;
    const auto samples = sample_channels(gamma, 2, 8, 61);
    ChannelStatistics stats;
    stats.gamma = gamma;
    stats.sigma_noise = 0.05;
    stats.Q = 2;
    stats.clusters = select_clusters(gamma, 2);
    const auto comb = lmmse_combiners(csi_view(samples, stats.clusters), stats, 1.0);

    const auto eff = estimate_effective_channel(samples, comb, "distributed");
    const auto oracle = brute_force_effective(samples, comb);
    CHECK((eff.G - oracle.G).cwiseAbs().maxCoeff() <= 1e-12 * oracle.G.maxCoeff());
    CHECK((eff.d - oracle.d).cwiseAbs().maxCoeff() <= 1e-12 * oracle.d.maxCoeff());
    CHECK(eff.regime == "distributed");
    CHECK(eff.n_samples == 8);
}

TEST_CASE("deterministic scalar combiner gives hand-computable G and d") {
    // K = 1, M = 1: fixed unit combiner; G = mean |h|^2, d = |mean h|^2.
    const Matrix gamma = Matrix::Constant(1, 1, 0.9);
    const auto samples = sample_channels(gamma, 1, 16, 71);
    CombinerSet comb;
    comb.L = comb.M_ant = comb.K = 1;
    for (Index s = 0; s < 16; ++s) comb.V.push_back(ComplexMatrix::Constant(1, 1, 2.0));

    const auto eff = estimate_effective_channel(samples, comb, "cellular");
    std::complex<double> mean = 0.0;
    double mean2 = 0.0;
    for (const auto& H : samples.H) {
        mean += H(0, 0);
        mean2 += std::norm(H(0, 0));
    }
    mean /= 16.0;
    mean2 /= 16.0;
    CHECK(eff.G(0, 0) == doctest::Approx(mean2).epsilon(1e-12));
    CHECK(eff.d[0] == doctest::Approx(std::norm(mean)).epsilon(1e-12));
    CHECK(eff.G(0, 0) >= eff.d[0]);  // variance nonnegativity
}

TEST_CASE("normalized combiners have unit in-sample power") {
    const auto sc = desk_profile();
    const auto eff = estimate_setup(sc, Cooperation::cellular, 0);
    // G[k,k] >= d_k on every run
    for (Index k = 0; k < eff.d.size(); ++k) CHECK(eff.G(k, k) >= eff.d[k]);
}

TEST_CASE("estimator rejects degenerate inputs") {
    const Matrix gamma = Matrix::Constant(1, 1, 1.0);
    const auto samples = sample_channels(gamma, 1, 2, 3);
    CombinerSet comb;
    comb.L = comb.M_ant = comb.K = 1;
    comb.V.assign(2, ComplexMatrix::Zero(1, 1));
    CHECK_THROWS_AS((void)estimate_effective_channel(samples, comb, "x"),
                    std::invalid_argument);
    const auto one = sample_channels(gamma, 1, 1, 3);
    CombinerSet comb1;
    comb1.V.assign(1, ComplexMatrix::Constant(1, 1, 1.0));
    CHECK_THROWS_AS((void)estimate_effective_channel(one, comb1, "x"),
                    std::invalid_argument);
}

TEST_CASE("doubling the sample count roughly halves the estimator variance") {
    const Matrix gamma = Matrix::Constant(1, 2, 1.0);
    ChannelStatistics stats;
    stats.gamma = gamma;
    stats.sigma_noise = 0.05;
    stats.Q = 1;
    stats.clusters = select_clusters(gamma, 1);
    const auto var_of = [&](Index n_samples) {
        double sum = 0.0, sum2 = 0.0;
        const int reps = 160;
        for (int r = 0; r < reps; ++r) {
            const auto samples =
                sample_channels(gamma, 1, n_samples, 1000 + static_cast<std::uint64_t>(r));
            const auto comb = lmmse_combiners(samples, stats, 1.0);
            const double g01 = estimate_effective_channel(samples, comb, "x").G(0, 1);
            sum += g01;
            sum2 += g01 * g01;
        }
        const double mean = sum / reps;
        return sum2 / reps - mean * mean;
    };
    const double ratio = var_of(50) / var_of(100);
    CHECK(ratio > 1.4);
    CHECK(ratio < 2.9);
}

TEST_CASE("UL instance wiring") {
    EffectiveChannel eff;
    eff.G = Matrix{{2.0, 0.3}, {0.4, 1.5}};
    eff.d = Vector{{1.5, 1.0}};
    eff.n_samples = 10;
    const Vector omega = Vector{{1.0, 2.0}};
    const auto inst = build_ul_problem(eff, omega, 0.1, 4.0);
    CHECK(inst.A == Matrix::Identity(2, 2));
    CHECK(inst.b[0] == doctest::Approx(1.5));
    CHECK(inst.b[1] == doctest::Approx(0.5));       // d_k / omega_k
    CHECK(inst.C(0, 0) == doctest::Approx(0.5));    // G - D
    CHECK(inst.C(0, 1) == doctest::Approx(0.3));
    CHECK(inst.C(1, 0) == doctest::Approx(0.4));
    CHECK(inst.C(1, 1) == doctest::Approx(0.5));
    CHECK(inst.sigma == Vector::Constant(2, 0.1));
    CHECK(validate(inst).empty());

    // solved instance utility equals min_k weighted SINR by construction
    const Solution sol = solve_closed_form(inst);
    double worst = std::numeric_limits<double>::infinity();
    for (Index k = 0; k < 2; ++k) {
        double denom = 0.1;
        for (Index j = 0; j < 2; ++j)
            denom += sol.p_star[j] * (eff.G(j, k) - (j == k ? eff.d[k] : 0.0));
        worst = std::min(worst, eff.d[k] * sol.p_star[k] / (omega[k] * denom));
    }
    CHECK(worst == doctest::Approx(sol.t_star).epsilon(1e-10));

    EffectiveChannel bad = eff;
    bad.d[1] = 0.0;
    CHECK_THROWS_WITH_AS((void)build_ul_problem(bad, omega, 0.1, 4.0),
                         "build problem: UE 2 cannot be served (d = 0)",
                         std::invalid_argument);
}

TEST_CASE("DL instance wiring") {
    EffectiveChannel eff;
    eff.G = Matrix{{2.0, 0.3}, {0.4, 1.5}};
    eff.d = Vector{{1.5, 1.0}};
    const Vector omega = Vector::Ones(2);
    const auto dl = build_dl_problem(eff, omega, 0.1, 4.0);
    CHECK(dl.A == Matrix::Ones(2, 1));              // sum power: a single constraint
    CHECK(dl.C(0, 1) == doctest::Approx(0.4));      // C = G' - D
    CHECK(dl.C(1, 0) == doctest::Approx(0.3));
    const Solution sol = solve_closed_form(dl);
    CHECK(sol.rho_all.size() == 1);                 // no max over n

    // cellular per-AP variant: indicator columns with per-AP budgets
    const auto per_ap = build_dl_problem(eff, omega, 0.1, 4.0,
                                         std::vector<Index>{0, 1});
    CHECK(per_ap.A == Matrix::Identity(2, 2));
    const auto shared = build_dl_problem(eff, omega, 0.1, 4.0,
                                         std::vector<Index>{1, 1});
    CHECK(per_ap.num_constraints() == 2);
    CHECK(shared.A.col(1) == Vector::Ones(2));
}

TEST_CASE("UL and DL coincide for one UE") {
    EffectiveChannel eff;
    eff.G = Matrix::Constant(1, 1, 2.0);
    eff.d = Vector::Constant(1, 1.5);
    const Vector omega = Vector::Ones(1);
    const auto ul = solve_closed_form(build_ul_problem(eff, omega, 0.1, 4.0));
    const auto dl = solve_closed_form(build_dl_problem(eff, omega, 0.1, 4.0));
    CHECK(ul.t_star == doctest::Approx(dl.t_star).epsilon(1e-12));
}

TEST_CASE("full power is never better than the optimum") {
    const auto sc = desk_profile();
    for (std::uint64_t setup = 0; setup < 3; ++setup) {
        const auto eff = estimate_setup(sc, Cooperation::distributed, setup);
        const auto inst = setup_ul_instance(sc, eff, sc.p_max_dBm);
        const Solution sol = solve_closed_form(inst);
        const Vector full = Vector::Constant(inst.num_users(), inst.p_max);
        CHECK(evaluate_utility(inst, full) <= sol.t_star * (1.0 + 1e-9));
    }
}

TEST_CASE("pairwise accumulator sums long sequences exactly enough") {
    PairwiseAccumulator<double> acc;
    for (int i = 0; i < 1000; ++i) acc.add(0.1);
    CHECK(acc.total(0.0) == doctest::Approx(100.0).epsilon(1e-13));
    PairwiseAccumulator<Vector> vacc;
    for (int i = 0; i < 7; ++i) vacc.add(Vector::Constant(2, 1.0));
    CHECK(vacc.total(Vector::Zero(2))[0] == 7.0);
}
