#include "viforge/problems.hpp"

#include <cmath>
#include <random>

#include "viforge/projections.hpp"

namespace viforge {

const char* problem_name(ProblemId id) {
    switch (id) {
    case ProblemId::Exm1: return "exm1";
    case ProblemId::Exm2: return "exm2";
    case ProblemId::Exm3: return "exm3";
    case ProblemId::Exm4: return "exm4";
    }
    throw ConfigError("problem_name: unknown id");
}

ProblemId problem_from_name(const std::string& name) {
    if (name == "exm1") return ProblemId::Exm1;
    if (name == "exm2") return ProblemId::Exm2;
    if (name == "exm3") return ProblemId::Exm3;
    if (name == "exm4") return ProblemId::Exm4;
    throw ConfigError("unknown problem: " + name);
}

Vector exm1_op(const Vector& x) {
    double mu = x[0];
    Vector y(1);
    if (mu > 1.0)
        y[0] = 2.0 * mu - 1.0;
    else if (mu >= -1.0)
        y[0] = mu * mu;
    else
        y[0] = -2.0 * mu - 1.0;
    return y;
}

Vector exm2_op(const Vector& x) {
    Vector y(2);
    y[0] = -x[0] * std::exp(x[1]);
    y[1] = x[1];
    return y;
}

Vector exm3_op(const Vector& x) {
    const Eigen::Index m = x.size();
    Vector h(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        double prev = i > 0 ? x[i - 1] : 0.0;
        double next = i + 1 < m ? x[i + 1] : 0.0;
        double xi = x[i];
        h[i] = prev * prev + xi * xi + prev * xi + xi * next - 2.0 * prev +
               4.0 * xi + next - 1.0;
    }
    return h;
}

Vector exm4_op(const Vector& x) {
    Vector y = Vector::Zero(x.size());
    y[0] = x[0] * std::exp(-x[0] * x[0]);
    return y;
}

namespace {

void require_case(int case_id) {
    if (case_id < 1 || case_id > 4)
        throw ConfigError("case_id must lie in 1..4, got " +
                          std::to_string(case_id));
}

Vector scalar1(double v) {
    Vector x(1);
    x[0] = v;
    return x;
}

Vector pair2(double a, double b) {
    Vector x(2);
    x[0] = a;
    x[1] = b;
    return x;
}

// entries r^1, r^2, ..., r^n
Vector geometric(int n, double r) {
    Vector x(n);
    double t = 1.0;
    for (int i = 0; i < n; ++i) {
        t *= r;
        x[i] = t;
    }
    return x;
}

ProblemCase make_exm1(int case_id) {
    static const double inits[4][2] = {
        {0.1, 0.9}, {0.8, 0.1}, {0.1, 0.5}, {-0.1, 0.2}};
    ProblemCase pc;
    auto set = FeasibleSet::uniform_box(1, -1.0, 1.0);
    pc.problem.dim = 1;
    pc.problem.op = exm1_op;
    pc.problem.project = [set](const Vector& x) { return set.project(x); };
    pc.problem.lipschitz = 2.0;
    pc.problem.known_solutions = {scalar1(-1.0), scalar1(0.0)};
    pc.problem.known_minty_solutions = {scalar1(-1.0)};
    pc.problem.name = "exm1";
    pc.v0 = scalar1(inits[case_id - 1][0]);
    pc.v1 = scalar1(inits[case_id - 1][1]);
    return pc;
}

ProblemCase make_exm2(int case_id) {
    static const double inits[4][4] = {{0.3, 0.1, 0.1, 0.5},
                                       {0.1, 0.1, 0.1, 0.7},
                                       {0.1, -0.5, 0.1, 0.3},
                                       {0.3, -0.7, 0.2, -0.5}};
    ProblemCase pc;
    auto set = FeasibleSet::half_disk();
    pc.problem.dim = 2;
    pc.problem.op = exm2_op;
    pc.problem.project = [set](const Vector& x) { return set.project(x); };
    pc.problem.known_solutions = {pair2(1.0, 0.0), pair2(0.0, 0.0)};
    pc.problem.known_minty_solutions = {pair2(1.0, 0.0)};
    pc.problem.name = "exm2";
    const double* row = inits[case_id - 1];
    pc.v0 = pair2(row[0], row[1]);
    pc.v1 = pair2(row[2], row[3]);
    return pc;
}

ProblemCase make_exm3(int case_id, std::uint64_t seed, int dim_override) {
    static const int dims[4] = {50, 80, 100, 200};
    int m = dim_override > 0 ? dim_override : dims[case_id - 1];
    ProblemCase pc;
    auto set = FeasibleSet::uniform_box(m, 0.0, 1.0);
    pc.problem.dim = m;
    pc.problem.op = exm3_op;
    pc.problem.project = [set](const Vector& x) { return set.project(x); };
    pc.problem.name = "exm3";

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    pc.v0.resize(m);
    pc.v1.resize(m);
    for (int i = 0; i < m; ++i) pc.v0[i] = unif(rng);
    for (int i = 0; i < m; ++i) pc.v1[i] = unif(rng);
    return pc;
}

ProblemCase make_exm4(int case_id, int dim_override) {
    static const double ratios[4][2] = {{1.0 / 3.0, 2.0 / 3.0},
                                        {1.0 / 2.0, 1.0 / 5.0},
                                        {4.0 / 5.0, 1.0 / 2.0},
                                        {1.0 / 8.0, 1.0 / 7.0}};
    int n = dim_override > 0 ? dim_override : 100;
    ProblemCase pc;
    auto set = FeasibleSet::origin_ball(n, 3.0);
    pc.problem.dim = n;
    pc.problem.op = exm4_op;
    pc.problem.project = [set](const Vector& x) { return set.project(x); };
    pc.problem.name = "exm4";
    pc.v0 = geometric(n, ratios[case_id - 1][0]);
    pc.v1 = geometric(n, ratios[case_id - 1][1]);
    return pc;
}

} // namespace

ProblemCase make_case(const CaseSpec& spec) {
    require_case(spec.case_id);
    switch (spec.id) {
    case ProblemId::Exm1: return make_exm1(spec.case_id);
    case ProblemId::Exm2: return make_exm2(spec.case_id);
    case ProblemId::Exm3: return make_exm3(spec.case_id, spec.seed, spec.dim_override);
    case ProblemId::Exm4: return make_exm4(spec.case_id, spec.dim_override);
    }
    throw ConfigError("make_case: unknown problem id");
}

ProblemCase make_case(ProblemId id, int case_id) {
    CaseSpec spec;
    spec.id = id;
    spec.case_id = case_id;
    return make_case(spec);
}

} // namespace viforge
