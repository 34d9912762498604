#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cloakforge/expansion.hpp"
#include "cloakforge/layered.hpp"

namespace cloakforge::design {

/// Configuration for the low-frequency coefficient minimization over layer
/// materials (and optionally the interior layer radii).
struct DesignProblem {
    int order = 2;       // expansion order N being cancelled
    int layer_count = 2; // L

    /// Fixed radii (size L+1, strictly decreasing); empty means equispaced
    /// between 2 and 1.
    std::vector<double> radii;
    /// Free interior radii r_2..r_L between the fixed outer and core radius.
    bool optimize_radii = false;

    double lo = 0.05;  // box lower bound for every mu_j, eps_j
    double hi = 20.0;  // box upper bound

    /// Per-mode weights w_n, n = 0..N (empty -> all ones).
    std::vector<double> weights;

    std::uint64_t seed = 0;
    int restarts = 8;
    int max_iters = 400;
    double step = 0.25;      // initial line-search step
    double grad_eps = 1e-6;  // relative central-difference step
    double tol = 1e-22;      // stop when the objective falls below this
};

struct DesignResult {
    layered::LayeredStructure structure;
    double objective = 0.0;
    expansion::ExpansionTable table;
    int iterations = 0;
    bool converged = false;
    /// (iteration, objective) within the winning restart; nonincreasing.
    std::vector<std::pair<int, double>> history;
    int restart_index = 0;
};

/// All restarts produced NaN (or no evaluable point); carries the least-bad
/// iterate seen.
class OptimizationFailedError : public Error {
public:
    OptimizationFailedError(const std::string& msg, DesignResult best)
        : Error(msg), best_(std::move(best)) {}
    const DesignResult& best() const { return best_; }

private:
    DesignResult best_;
};

/// Sum over n of w_n * ( |W_n^0|^2 + sum_{l,j} |W_n^{l,j}|^2 ).
double objective(const layered::LayeredStructure& s, int order,
                 const std::vector<double>& weights = {});
double objective(const expansion::ExpansionTable& table,
                 const std::vector<double>& weights = {});

/// Best-of-restarts projected gradient descent with central finite
/// differences and a halving line search.  Deterministic for a fixed
/// problem (including seed), regardless of thread count.
DesignResult design(const DesignProblem& problem, int threads = 1);

/// |W_n(t)| for n = 0..4 at each t, computing the spectrum at omega = t
/// against the unit background.
struct SweepRow {
    int n;
    double t;
    double w_abs;
};
std::vector<SweepRow> sweep_report(const layered::LayeredStructure& s,
                                   const std::vector<double>& t_values);

}  // namespace cloakforge::design
