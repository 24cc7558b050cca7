#include "maxmin/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace maxmin::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json arr = ordered_json::array();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) arr.push_back(m(i, j));
    return arr;
}

ordered_json vector_to_json(const Vector& v) {
    ordered_json arr = ordered_json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Matrix matrix_from_json(const ordered_json& j, Index rows, Index cols, const char* name) {
    if (!j.is_array() || static_cast<Index>(j.size()) != rows * cols)
        throw std::invalid_argument(std::string("field '") + name + "' must be a flat array of " +
                                    std::to_string(rows * cols) + " numbers");
    Matrix m(rows, cols);
    Index k = 0;
    for (Index i = 0; i < rows; ++i)
        for (Index j2 = 0; j2 < cols; ++j2) m(i, j2) = j.at(k++).get<double>();
    return m;
}

Vector vector_from_json(const ordered_json& j, Index n, const char* name) {
    if (!j.is_array() || static_cast<Index>(j.size()) != n)
        throw std::invalid_argument(std::string("field '") + name + "' must be an array of " +
                                    std::to_string(n) + " numbers");
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = j.at(i).get<double>();
    return v;
}

const ordered_json& require(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing required field '") + name + "'");
    return *it;
}

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("document is not valid JSON: ") + e.what());
    }
}

ordered_json instance_to_json(const ProblemInstance& inst) {
    ordered_json j;
    j["K"] = inst.num_users();
    j["N"] = inst.num_constraints();
    j["p_max"] = inst.p_max;
    j["A"] = matrix_to_json(inst.A);
    j["b"] = vector_to_json(inst.b);
    j["C"] = matrix_to_json(inst.C);
    j["sigma"] = vector_to_json(inst.sigma);
    return j;
}

ProblemInstance instance_from_json(const ordered_json& j) {
    const Index K = require(j, "K").get<Index>();
    const Index N = require(j, "N").get<Index>();
    if (K <= 0 || N <= 0) throw std::invalid_argument("K and N must be positive");
    ProblemInstance inst;
    inst.p_max = require(j, "p_max").get<double>();
    inst.A = matrix_from_json(require(j, "A"), K, N, "A");
    inst.b = vector_from_json(require(j, "b"), K, "b");
    inst.C = matrix_from_json(require(j, "C"), K, K, "C");
    inst.sigma = vector_from_json(require(j, "sigma"), K, "sigma");
    return inst;
}

} // namespace

std::string write_instance(const ProblemInstance& inst) {
    return instance_to_json(inst).dump(2) + "\n";
}

ProblemInstance read_instance(const std::string& text) {
    return instance_from_json(parse(text));
}

std::string write_solution(const ProblemInstance& inst, const Solution& sol) {
    ordered_json j = instance_to_json(inst);
    j["t_star"] = sol.t_star;
    j["p_star"] = vector_to_json(sol.p_star);
    j["active_n"] = sol.active_n + 1;  // 1-based in documents
    j["rho_all"] = vector_to_json(sol.rho_all);
    j["certified"] = sol.certified;
    if (!sol.warnings.empty()) j["warnings"] = sol.warnings;
    return j.dump(2) + "\n";
}

std::pair<ProblemInstance, Solution> read_solution(const std::string& text) {
    const ordered_json j = parse(text);
    ProblemInstance inst = instance_from_json(j);
    Solution sol;
    sol.t_star = require(j, "t_star").get<double>();
    sol.p_star = vector_from_json(require(j, "p_star"), inst.num_users(), "p_star");
    sol.active_n = require(j, "active_n").get<Index>() - 1;
    sol.rho_all = vector_from_json(require(j, "rho_all"), inst.num_constraints(), "rho_all");
    if (j.contains("certified")) sol.certified = j["certified"].get<bool>();
    return {std::move(inst), std::move(sol)};
}

std::string write_oracle_report(const ProblemInstance& inst, const OracleReport& rep) {
    ordered_json j = instance_to_json(inst);
    j["method"] = rep.method;
    j["t_star"] = rep.t_star;
    j["p_star"] = vector_to_json(rep.p_star);
    j["iterations"] = rep.iterations;
    j["converged"] = rep.converged;
    return j.dump(2) + "\n";
}

std::string write_effective_channel(const EffectiveChannelDoc& doc) {
    ordered_json j;
    j["K"] = doc.d.size();
    j["G"] = matrix_to_json(doc.G);
    j["d"] = vector_to_json(doc.d);
    j["n_samples"] = doc.n_samples;
    j["regime"] = doc.regime;
    j["sigma_noise"] = doc.sigma_noise;
    j["p_max"] = doc.p_max;
    return j.dump(2) + "\n";
}

EffectiveChannelDoc read_effective_channel(const std::string& text) {
    const ordered_json j = parse(text);
    const Index K = require(j, "K").get<Index>();
    if (K <= 0) throw std::invalid_argument("K must be positive");
    EffectiveChannelDoc doc;
    doc.G = matrix_from_json(require(j, "G"), K, K, "G");
    doc.d = vector_from_json(require(j, "d"), K, "d");
    doc.n_samples = require(j, "n_samples").get<Index>();
    doc.regime = require(j, "regime").get<std::string>();
    doc.sigma_noise = require(j, "sigma_noise").get<double>();
    doc.p_max = require(j, "p_max").get<double>();
    return doc;
}

bool looks_like_instance(const std::string& text) {
    try {
        const ordered_json j = parse(text);
        return j.contains("A") && j.contains("b") && j.contains("C");
    } catch (const std::exception&) {
        return false;
    }
}

bool looks_like_effective_channel(const std::string& text) {
    try {
        const ordered_json j = parse(text);
        return j.contains("G") && j.contains("d") && !j.contains("A");
    } catch (const std::exception&) {
        return false;
    }
}

std::string load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

} // namespace maxmin::io
