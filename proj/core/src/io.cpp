#include "viforge/io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace viforge {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

nlohmann::json vector_head(const Vector& v, Eigen::Index limit) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < std::min(v.size(), limit); ++i)
        arr.push_back(v[i]);
    return arr;
}

} // namespace

void write_trace_csv(std::ostream& out, const std::vector<IterRecord>& trace) {
    out << "iter,tol,lambda,elapsed_s,dist_opt,lyapunov\n";
    for (const auto& r : trace) {
        out << r.iter << ',' << num(r.tol) << ',' << num(r.lambda) << ','
            << num(r.elapsed_s) << ',';
        if (r.dist_opt) out << num(*r.dist_opt);
        out << ',';
        if (r.lyapunov) out << num(*r.lyapunov);
        out << '\n';
    }
}

void write_mse_csv(std::ostream& out, const RecoveryResult& result) {
    out << "iter,mse,elapsed_s\n";
    for (std::size_t i = 0; i < result.mse_trace.size(); ++i)
        out << i << ',' << num(result.mse_trace[i]) << ','
            << num(result.elapsed_trace[i]) << '\n';
}

std::string summary_json(const RunSummary& summary) {
    nlohmann::json j;
    j["algorithm"] = summary.algorithm;
    j["problem"] = summary.problem;
    j["case"] = summary.case_id;
    j["iterations"] = summary.iterations;
    j["cpu_s"] = summary.cpu_s;
    j["converged"] = summary.converged;
    j["final_tol"] = summary.final_tol;
    j["final_norm"] = summary.final_point.norm();
    j["final_point"] = vector_head(summary.final_point, 16);
    return j.dump(2);
}

std::string bench_json(const BenchSuiteResult& result) {
    nlohmann::json j;
    j["version"] = result.version;
    j["seed"] = result.seed;
    j["timestamp"] = result.timestamp;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : result.entries) {
        nlohmann::json r;
        r["problem"] = e.problem;
        r["case"] = e.case_id;
        r["algorithm"] = e.algorithm;
        r["iterations"] = e.iterations;
        r["cpu_s"] = e.cpu_s;
        r["converged"] = e.converged;
        r["final_tol"] = e.final_tol;
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j.dump(2);
}

BenchSuiteResult parse_bench_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BenchSuiteResult result;
    result.version = j.at("version").get<std::string>();
    result.seed = j.at("seed").get<std::uint64_t>();
    result.timestamp = j.at("timestamp").get<std::string>();
    for (const auto& r : j.at("entries")) {
        BenchEntry e;
        e.problem = r.at("problem").get<std::string>();
        e.case_id = r.at("case").get<int>();
        e.algorithm = r.at("algorithm").get<std::string>();
        e.iterations = r.at("iterations").get<long>();
        e.cpu_s = r.at("cpu_s").get<double>();
        e.converged = r.at("converged").get<bool>();
        e.final_tol = r.at("final_tol").get<double>();
        result.entries.push_back(std::move(e));
    }
    return result;
}

void write_bench_csv(std::ostream& out, const BenchSuiteResult& result) {
    out << "problem,case,algorithm,iterations,cpu_s,converged,final_tol\n";
    for (const auto& e : result.entries)
        out << e.problem << ',' << e.case_id << ',' << e.algorithm << ','
            << e.iterations << ',' << num(e.cpu_s) << ','
            << (e.converged ? "true" : "false") << ',' << num(e.final_tol)
            << '\n';
}

std::string instance_json(const SignalInstance& instance) {
    nlohmann::json j;
    j["n"] = instance.params.n;
    j["m"] = instance.params.m;
    j["sparsity"] = instance.params.sparsity;
    j["l"] = instance.l;
    j["noise_std"] = instance.params.noise_std;
    j["seed"] = instance.params.seed;
    nlohmann::json support = nlohmann::json::array();
    nlohmann::json amplitudes = nlohmann::json::array();
    for (Eigen::Index i = 0; i < instance.x_true.size(); ++i) {
        if (instance.x_true[i] != 0) {
            support.push_back(i);
            amplitudes.push_back(instance.x_true[i]);
        }
    }
    j["support"] = std::move(support);
    j["amplitudes"] = std::move(amplitudes);
    return j.dump(2);
}

} // namespace viforge
