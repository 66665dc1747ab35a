#pragma once

#include <cstdint>

#include "viforge/types.hpp"

namespace viforge {

enum class ProblemId { Exm1, Exm2, Exm3, Exm4 };

const char* problem_name(ProblemId id);
ProblemId problem_from_name(const std::string& name);

struct CaseSpec {
    ProblemId id = ProblemId::Exm1;
    int case_id = 1;            // 1..4
    std::uint64_t seed = 0;     // exm3 draws its random inits from this
    int dim_override = 0;       // exm3: overrides m; exm4: overrides N
};

struct ProblemCase {
    VIProblem problem;
    Vector v0, v1;              // the case's starting pair
};

// Builds one of the benchmark instances with its starting points:
//   exm1: C = [-1,1], piecewise cubic-type scalar operator, S = {-1, 0}
//   exm2: C = unit half disk (mu1 >= 0), A = (-mu1 e^{mu2}, mu2)
//   exm3: C = [0,1]^m with m in {50, 80, 100, 200} by case, quadratic
//         complementarity operator; v0, v1 uniform on [0,1]^m from the seed
//   exm4: C = 3-ball in R^100, A = (x1 e^{-x1^2}, 0, ..., 0), cases vary the
//         geometric starting sequences (indexed from k = 1)
// case_id outside 1..4 throws ConfigError.
ProblemCase make_case(const CaseSpec& spec);
ProblemCase make_case(ProblemId id, int case_id);

// Operators, exposed for direct testing.
Vector exm1_op(const Vector& x);
Vector exm2_op(const Vector& x);
Vector exm3_op(const Vector& x);
Vector exm4_op(const Vector& x);

} // namespace viforge
