#ifndef MAXMIN_IO_HPP
#define MAXMIN_IO_HPP

#include "maxmin/oracles.hpp"
#include "maxmin/problem.hpp"
#include "maxmin/solver.hpp"

#include <filesystem>
#include <string>

namespace maxmin::io {

/// Documents are JSON. Instance fields: K, N, p_max, A (row-major), b,
/// C (row-major), sigma; all values linear scale. Solutions embed the
/// instance and add t_star, p_star, active_n (1-based), rho_all. Oracle
/// reports additionally carry a `method` field.

std::string write_instance(const ProblemInstance& inst);
ProblemInstance read_instance(const std::string& text);

std::string write_solution(const ProblemInstance& inst, const Solution& sol);
/// Reads back (instance, solution) from a solution document.
std::pair<ProblemInstance, Solution> read_solution(const std::string& text);

std::string write_oracle_report(const ProblemInstance& inst, const OracleReport& rep);

/// Effective-channel document: G (row-major), d, n_samples, regime,
/// sigma_noise, p_max — enough to rebuild a max-min instance standalone.
struct EffectiveChannelDoc {
    Matrix G;
    Vector d;
    Index n_samples = 0;
    std::string regime;
    double sigma_noise = 0.0;
    double p_max = 0.0;
};

std::string write_effective_channel(const EffectiveChannelDoc& doc);
EffectiveChannelDoc read_effective_channel(const std::string& text);

/// True when the document parses as the given kind.
bool looks_like_instance(const std::string& text);
bool looks_like_effective_channel(const std::string& text);

std::string load_file(const std::filesystem::path& path);
void save_file(const std::filesystem::path& path, const std::string& contents);

} // namespace maxmin::io

#endif
