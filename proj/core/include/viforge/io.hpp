#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "viforge/run.hpp"
#include "viforge/signal.hpp"

namespace viforge {

// Header: iter,tol,lambda,elapsed_s,dist_opt,lyapunov.  Optional columns are
// left empty when absent.  Values print with 17 significant digits.
void write_trace_csv(std::ostream& out, const std::vector<IterRecord>& trace);

// Header: iter,mse,elapsed_s.
void write_mse_csv(std::ostream& out, const RecoveryResult& result);

struct RunSummary {
    std::string algorithm;
    std::string problem;
    int case_id = 1;
    long iterations = 0;
    double cpu_s = 0;
    bool converged = false;
    double final_tol = 0;
    Vector final_point;
};

// JSON object with keys algorithm, problem, case, iterations, cpu_s,
// converged, final_tol, final_norm, final_point.  final_point is truncated to
// its first 16 entries; final_norm always reflects the full vector.
std::string summary_json(const RunSummary& summary);

struct BenchEntry {
    std::string algorithm;
    std::string problem;
    int case_id = 1;
    long iterations = 0;
    double cpu_s = 0;
    bool converged = false;
    double final_tol = 0;
};

struct BenchSuiteResult {
    std::vector<BenchEntry> entries;
    std::string version;
    std::uint64_t seed = 0;
    std::string timestamp; // ISO 8601 UTC
};

// JSON with a metadata header (version, seed, timestamp) and one entry per
// (problem, case, algorithm).  Parses back with parse_bench_json.
std::string bench_json(const BenchSuiteResult& result);
BenchSuiteResult parse_bench_json(const std::string& text);

// Flat CSV: problem,case,algorithm,iterations,cpu_s,converged,final_tol.
void write_bench_csv(std::ostream& out, const BenchSuiteResult& result);

// Reproducibility dump for a signal instance: sizes, seed, support indices,
// and amplitudes.
std::string instance_json(const SignalInstance& instance);

} // namespace viforge
