#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <viforge/version.hpp>
#include <viforge/viforge.hpp>

namespace fs = std::filesystem;
using namespace viforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::uint64_t env_seed_default() {
    if (const char* s = std::getenv("VIFORGE_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 0;
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
    out << text;
}

struct RunArgs {
    std::string problem = "exm1";
    int case_id = 1;
    std::string algo = "momentum";
    double eps = 1e-5;
    long max_iter = 1000;
    std::uint64_t seed = env_seed_default();
    std::string out = "viforge_run";
    int m = 0;
    int trunc_dim = 0;
    double theta = -1, sigma = -1, lambda0 = -1;
};

struct BenchArgs {
    std::string suite = "paper";
    std::string out = "results.json";
    std::string csv = "tables.csv";
    std::string trace_dir = "traces";
    std::uint64_t seed = env_seed_default();
    bool with_baselines = false;
    std::vector<std::string> problems = {"exm1", "exm2", "exm3", "exm4"};
    long max_iter = 20000;
};

struct SignalArgs {
    int n = 1024;
    int m = 512;
    int sparsity = 60;
    double l = 60;
    std::uint64_t seed = env_seed_default();
    std::string algo = "momentum";
    std::string out = "viforge_signal";
    long max_iter = 1000;
};

SolverConfig config_for(const std::string& algo, const RunArgs& a) {
    SolverConfig cfg = SolverConfig::defaults_for(algorithm_from_name(algo));
    cfg.eps = a.eps;
    cfg.max_iter = a.max_iter;
    if (a.theta >= 0) cfg.theta = a.theta;
    if (a.sigma >= 0) cfg.sigma = a.sigma;
    if (a.lambda0 > 0) { cfg.lambda0 = a.lambda0; cfg.lambda1 = a.lambda0; }
    return cfg;
}

struct PreparedRun {
    VIProblem problem;
    Vector v0, v1;
};

PreparedRun prepare(const std::string& problem, int case_id, std::uint64_t seed,
                    int m, int trunc_dim) {
    if (problem == "lasso") {
        SignalParams params;
        params.seed = seed;
        SignalInstance inst = generate_instance(params);
        PreparedRun p;
        p.problem = lasso_vi(inst);
        p.v0 = Vector::Zero(p.problem.dim);
        std::mt19937_64 rng(~seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        p.v1.resize(p.problem.dim);
        for (int i = 0; i < p.problem.dim; ++i) p.v1[i] = 0.01 * gauss(rng);
        return p;
    }
    CaseSpec spec;
    spec.id = problem_from_name(problem);
    spec.case_id = case_id;
    spec.seed = seed;
    if (spec.id == ProblemId::Exm3) spec.dim_override = m;
    if (spec.id == ProblemId::Exm4) spec.dim_override = trunc_dim;
    ProblemCase pc = make_case(spec);
    return {std::move(pc.problem), std::move(pc.v0), std::move(pc.v1)};
}

int cmd_run(const RunArgs& args) {
    PreparedRun p = prepare(args.problem, args.case_id, args.seed, args.m,
                            args.trunc_dim);
    SolverConfig cfg = config_for(args.algo, args);

    RunResult result = run_solver(p.problem, cfg, p.v0, p.v1, args.seed);

    std::ostringstream trace;
    write_trace_csv(trace, result.trace);
    write_file(args.out + ".trace.csv", trace.str());

    RunSummary summary;
    summary.algorithm = args.algo;
    summary.problem = args.problem;
    summary.case_id = args.case_id;
    summary.iterations = result.iterations;
    summary.cpu_s = result.cpu_s;
    summary.converged = result.converged;
    summary.final_tol = result.final_tol;
    summary.final_point = result.final_point;
    write_file(args.out + ".summary.json", summary_json(summary) + "\n");

    std::cout << summary_json(summary) << "\n";
    return result.converged ? kExitOk : kExitNotConverged;
}

int cmd_bench(const BenchArgs& args) {
    if (args.suite != "paper")
        throw ConfigError("unknown suite: " + args.suite);

    std::vector<std::string> algos = {"momentum", "simpleproj"};
    if (args.with_baselines)
        algos.insert(algos.end(), {"eg", "popov", "seg", "agraal"});

    struct Row {
        std::string problem, algo;
        int case_id;
    };
    std::vector<Row> grid;
    for (const auto& prob : args.problems)
        for (int c = 1; c <= 4; ++c)
            for (const auto& algo : algos) grid.push_back({prob, algo, c});
    if (grid.empty()) {
        std::cerr << "bench: empty suite selection\n";
        return kExitError;
    }

    BenchSuiteResult suite;
    suite.version = version;
    suite.seed = args.seed;
    suite.timestamp = utc_timestamp();

    bool numeric_failure = false;
    for (const auto& row : grid) {
        PreparedRun p = prepare(row.problem, row.case_id, args.seed, 0, 0);
        SolverConfig cfg = SolverConfig::defaults_for(algorithm_from_name(row.algo));
        cfg.max_iter = args.max_iter;

        BenchEntry entry;
        entry.problem = row.problem;
        entry.case_id = row.case_id;
        entry.algorithm = row.algo;
        try {
            RunResult r = run_solver(p.problem, cfg, p.v0, p.v1, args.seed);
            entry.iterations = r.iterations;
            entry.cpu_s = r.cpu_s;
            entry.converged = r.converged;
            entry.final_tol = r.final_tol;

            std::ostringstream trace;
            write_trace_csv(trace, r.trace);
            write_file(fs::path(args.trace_dir) /
                           (row.problem + "_case" + std::to_string(row.case_id) +
                            "_" + row.algo + ".trace.csv"),
                       trace.str());
        } catch (const NumericalError& e) {
            entry.converged = false;
            entry.iterations = e.iteration();
            numeric_failure = true;
            std::cerr << "bench: " << row.problem << " case " << row.case_id
                      << " " << row.algo << ": " << e.what() << "\n";
        }
        suite.entries.push_back(std::move(entry));
    }

    write_file(args.out, bench_json(suite) + "\n");
    std::ostringstream csv;
    write_bench_csv(csv, suite);
    write_file(args.csv, csv.str());

    std::cout << "wrote " << suite.entries.size() << " rows to " << args.out
              << " and " << args.csv << "\n";
    return numeric_failure ? kExitNotConverged : kExitOk;
}

int cmd_signal(const SignalArgs& args) {
    SignalParams params;
    params.n = args.n;
    params.m = args.m;
    params.sparsity = args.sparsity;
    params.l = args.l;
    params.seed = args.seed;
    SignalInstance inst = generate_instance(params);

    SolverConfig cfg = SolverConfig::defaults_for(algorithm_from_name(args.algo));
    RecoveryOptions opts;
    opts.max_iter = args.max_iter;
    RecoveryResult result = run_recovery(inst, cfg, opts);

    std::ostringstream csv;
    write_mse_csv(csv, result);
    write_file(args.out + ".mse.csv", csv.str());

    std::ostringstream recovered;
    recovered << "{\n  \"instance\": " << instance_json(inst)
              << ",\n  \"algorithm\": \"" << args.algo << "\""
              << ",\n  \"iterations\": " << result.iterations
              << ",\n  \"reached\": " << (result.reached ? "true" : "false")
              << ",\n  \"final_mse\": " << std::setprecision(17)
              << result.final_mse << ",\n  \"recovered\": [";
    for (Eigen::Index i = 0; i < result.p.size(); ++i)
        recovered << (i ? "," : "") << result.p[i];
    recovered << "]\n}\n";
    write_file(args.out + ".recovered.json", recovered.str());

    std::cout << "iterations=" << result.iterations
              << " final_mse=" << result.final_mse
              << " reached=" << (result.reached ? "true" : "false") << "\n";
    return result.reached ? kExitOk : kExitNotConverged;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"variational inequality solver toolkit"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "run one solver on one problem case");
    run->add_option("--problem", run_args.problem,
                    "problem id: exm1|exm2|exm3|exm4|lasso");
    run->add_option("--case", run_args.case_id, "case id 1..4")
        ->check(CLI::Range(1, 4));
    run->add_option("--algo", run_args.algo,
                    "momentum|simpleproj|eg|popov|seg|agraal");
    run->add_option("--eps", run_args.eps, "stopping tolerance");
    run->add_option("--max-iter", run_args.max_iter, "iteration cap");
    run->add_option("--seed", run_args.seed, "seed (default VIFORGE_SEED or 0)");
    run->add_option("--out", run_args.out, "output base path");
    run->add_option("--m", run_args.m, "exm3 dimension override");
    run->add_option("--trunc-dim", run_args.trunc_dim, "exm4 dimension override");
    run->add_option("--theta", run_args.theta, "momentum weight override");
    run->add_option("--sigma", run_args.sigma, "step ratio bound override");
    run->add_option("--lambda0", run_args.lambda0, "initial step size override");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "run the benchmark grid");
    bench->add_option("--suite", bench_args.suite, "suite name (paper)");
    bench->add_option("--out", bench_args.out, "suite JSON path");
    bench->add_option("--csv", bench_args.csv, "suite CSV path");
    bench->add_option("--trace-dir", bench_args.trace_dir, "per-run trace directory");
    bench->add_option("--seed", bench_args.seed, "seed (default VIFORGE_SEED or 0)");
    bench->add_flag("--with-baselines", bench_args.with_baselines,
                    "include eg/popov/seg/agraal rows");
    bench->add_option("--problems", bench_args.problems,
                      "subset of problems to run")
        ->delimiter(',')
        ->expected(0, -1);
    bench->add_option("--max-iter", bench_args.max_iter, "per-run iteration cap");

    SignalArgs signal_args;
    CLI::App* signal = app.add_subcommand("signal", "run the signal-recovery experiment");
    signal->add_option("--n", signal_args.n, "signal length");
    signal->add_option("--m", signal_args.m, "measurement count");
    signal->add_option("--sparsity", signal_args.sparsity, "nonzeros in the true signal");
    signal->add_option("--l", signal_args.l, "l1 ball radius");
    signal->add_option("--seed", signal_args.seed, "seed (default VIFORGE_SEED or 0)");
    signal->add_option("--algo", signal_args.algo,
                       "momentum|simpleproj|eg|popov|seg|agraal");
    signal->add_option("--out", signal_args.out, "output base path");
    signal->add_option("--max-iter", signal_args.max_iter, "iteration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (run->parsed()) return cmd_run(run_args);
        if (bench->parsed()) return cmd_bench(bench_args);
        if (signal->parsed()) return cmd_signal(signal_args);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitError;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure at iteration " << e.iteration() << ": "
                  << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
