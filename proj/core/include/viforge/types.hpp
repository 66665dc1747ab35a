#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace viforge {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Thrown for invalid configuration, ids, or dimension mismatches.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Thrown when an iteration produces a non-finite value; carries the
// iteration index at which the failure occurred.
class NumericalError : public std::runtime_error {
  public:
    NumericalError(const std::string& what, long iteration)
        : std::runtime_error(what), iteration_(iteration) {}
    long iteration() const noexcept { return iteration_; }

  private:
    long iteration_;
};

// A variational inequality problem: find p* in C with <A p*, p - p*> >= 0
// for all p in C.  The operator and projection are arbitrary callables; the
// optional metadata feeds diagnostics (TOL gamma, dist_opt, Lyapunov value).
struct VIProblem {
    int dim = 0;
    std::function<Vector(const Vector&)> op;
    std::function<Vector(const Vector&)> project;
    std::optional<double> lipschitz;
    std::vector<Vector> known_solutions;       // elements of S
    std::vector<Vector> known_minty_solutions; // elements of S_M
    std::string name;
};

inline void check_dim(const VIProblem& problem, const Vector& v, const char* what) {
    if (v.size() != problem.dim)
        throw ConfigError(std::string(what) + ": expected dimension " +
                          std::to_string(problem.dim) + ", got " +
                          std::to_string(v.size()));
}

} // namespace viforge
