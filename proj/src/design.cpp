#include "cloakforge/design.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace cloakforge::design {

using expansion::ExpansionTable;
using layered::LayeredStructure;
using layered::Material;

double objective(const ExpansionTable& table, const std::vector<double>& weights) {
    const int N = table.order();
    if (!weights.empty() && static_cast<int>(weights.size()) != N + 1)
        throw std::invalid_argument("objective: need one weight per mode 0..N");
    double acc = 0.0;
    for (int n = 0; n <= N; ++n) {
        const double w = weights.empty() ? 1.0 : weights[static_cast<size_t>(n)];
        if (w < 0.0) throw std::invalid_argument("objective: weights must be >= 0");
        double mode = std::norm(table.leading(n));
        for (int l = 1; l <= N - n; ++l)
            for (int j = 0; j <= table.max_log_power(n); ++j)
                mode += std::norm(table.coeff(n, l, j));
        acc += w * mode;
    }
    return acc;
}

double objective(const LayeredStructure& s, int order, const std::vector<double>& weights) {
    return objective(expansion::extract_expansion(s, order), weights);
}

namespace {

// splitmix64: tiny deterministic generator, independent of the standard
// library's unspecified distribution implementations.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d49bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct ParamLayout {
    int L = 0;
    bool radii_free = false;
    double outer = 2.0;  // fixed outer radius
    double core = 1.0;   // fixed core radius

    int size() const { return 2 * L + (radii_free ? std::max(0, L - 1) : 0); }
};

std::vector<double> default_radii(int L) {
    std::vector<double> r(static_cast<size_t>(L) + 1);
    for (int i = 0; i <= L; ++i)
        r[static_cast<size_t>(i)] = 2.0 - (L == 0 ? 1.0 : static_cast<double>(i) / L);
    return r;
}

LayeredStructure to_structure(const ParamLayout& lay, const std::vector<double>& x,
                              const std::vector<double>& fixed_radii) {
    std::vector<Material> mats(static_cast<size_t>(lay.L));
    for (int i = 0; i < lay.L; ++i)
        mats[static_cast<size_t>(i)] = {x[static_cast<size_t>(i)],
                                        x[static_cast<size_t>(lay.L + i)]};
    std::vector<double> radii = fixed_radii;
    if (lay.radii_free && lay.L >= 2) {
        for (int i = 0; i < lay.L - 1; ++i)
            radii[static_cast<size_t>(i + 1)] = x[static_cast<size_t>(2 * lay.L + i)];
        // keep strictly decreasing between the fixed endpoints
        std::sort(radii.begin() + 1, radii.end() - 1, std::greater<double>());
        const double gap = 1e-6 * (radii.front() - radii.back());
        for (size_t i = 1; i < radii.size(); ++i)
            if (radii[i] >= radii[i - 1] - gap) radii[i] = radii[i - 1] - gap;
    }
    return LayeredStructure(std::move(radii), std::move(mats), layered::NeumannCore{});
}

struct RestartOutcome {
    std::vector<double> x;
    double f = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;
    bool converged = false;
    std::vector<std::pair<int, double>> history;
};

}  // namespace

DesignResult design(const DesignProblem& p, int threads) {
    if (p.order < 0) throw std::invalid_argument("design: order must be >= 0");
    if (p.layer_count < 0) throw std::invalid_argument("design: layer count must be >= 0");
    if (p.restarts < 1) throw std::invalid_argument("design: restarts must be >= 1");
    if (!(p.lo > 0.0) || !(p.hi > p.lo))
        throw std::invalid_argument("design: need 0 < lo < hi");
    if (p.max_iters < 0) throw std::invalid_argument("design: max_iters must be >= 0");

    ParamLayout lay;
    lay.L = p.layer_count;
    lay.radii_free = p.optimize_radii && p.layer_count >= 2;
    std::vector<double> fixed_radii = p.radii.empty() ? default_radii(p.layer_count) : p.radii;
    if (static_cast<int>(fixed_radii.size()) != p.layer_count + 1)
        throw std::invalid_argument("design: radii must have L+1 entries");
    lay.outer = fixed_radii.front();
    lay.core = fixed_radii.back();
    const double radius_pad = 1e-3 * (lay.outer - lay.core);

    const int dim = lay.size();
    const auto project = [&](std::vector<double>& x) {
        for (int i = 0; i < 2 * lay.L; ++i)
            x[static_cast<size_t>(i)] = std::clamp(x[static_cast<size_t>(i)], p.lo, p.hi);
        for (int i = 2 * lay.L; i < dim; ++i)
            x[static_cast<size_t>(i)] = std::clamp(x[static_cast<size_t>(i)],
                                                   lay.core + radius_pad, lay.outer - radius_pad);
    };

    const auto evaluate = [&](const std::vector<double>& x) -> double {
        try {
            const double f = objective(to_structure(lay, x, fixed_radii), p.order, p.weights);
            return std::isfinite(f) ? f : std::numeric_limits<double>::quiet_NaN();
        } catch (const std::exception&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    // Initial points drawn up front so the result cannot depend on the
    // execution order of restarts.
    SplitMix64 rng{p.seed ^ 0x5bf0f3a5ad1c0f7bULL};
    std::vector<std::vector<double>> inits;
    for (int r = 0; r < p.restarts; ++r) {
        std::vector<double> x(static_cast<size_t>(dim));
        if (r == 0) {
            for (int i = 0; i < 2 * lay.L; ++i) x[static_cast<size_t>(i)] = 1.0;  // matched start
        } else {
            const double lg_lo = std::log(p.lo), lg_hi = std::log(p.hi);
            for (int i = 0; i < 2 * lay.L; ++i)
                x[static_cast<size_t>(i)] = std::exp(lg_lo + (lg_hi - lg_lo) * rng.uniform01());
        }
        for (int i = 2 * lay.L; i < dim; ++i) {
            const int which = i - 2 * lay.L;
            x[static_cast<size_t>(i)] = (r == 0)
                ? fixed_radii[static_cast<size_t>(which + 1)]
                : lay.core + (lay.outer - lay.core) * rng.uniform01();
        }
        project(x);
        inits.push_back(std::move(x));
    }

    const auto run_restart = [&](std::vector<double> x) -> RestartOutcome {
        RestartOutcome out;
        double f = evaluate(x);
        out.history.emplace_back(0, f);
        if (std::isnan(f)) {
            out.x = std::move(x);
            out.f = f;
            return out;
        }
        double step = p.step;
        int iter = 0;
        for (; iter < p.max_iters; ++iter) {
            if (f < p.tol) {
                out.converged = true;
                break;
            }
            // central finite-difference gradient
            std::vector<double> g(static_cast<size_t>(dim), 0.0);
            bool bad = false;
            for (int i = 0; i < dim && !bad; ++i) {
                const double xi = x[static_cast<size_t>(i)];
                const double h = p.grad_eps * std::max(std::abs(xi), 1.0);
                std::vector<double> xp = x, xm = x;
                xp[static_cast<size_t>(i)] = xi + h;
                xm[static_cast<size_t>(i)] = std::max(xi - h, 1e-12);
                const double fp = evaluate(xp), fm = evaluate(xm);
                if (std::isnan(fp) || std::isnan(fm)) {
                    bad = true;
                    break;
                }
                g[static_cast<size_t>(i)] = (fp - fm) / (xp[static_cast<size_t>(i)] -
                                                         xm[static_cast<size_t>(i)]);
            }
            if (bad) break;
            double gnorm = 0.0;
            for (double v : g) gnorm += v * v;
            gnorm = std::sqrt(gnorm);
            if (gnorm < 1e-12) {
                out.converged = true;
                break;
            }

            // backtracking: halve until the objective decreases
            bool moved = false;
            double s = step;
            for (int bt = 0; bt < 60; ++bt) {
                std::vector<double> xn = x;
                for (int i = 0; i < dim; ++i)
                    xn[static_cast<size_t>(i)] -= s * g[static_cast<size_t>(i)] / gnorm;
                project(xn);
                const double fn = evaluate(xn);
                if (!std::isnan(fn) && fn < f) {
                    x = std::move(xn);
                    f = fn;
                    step = s * 2.0;  // allow growth after success
                    moved = true;
                    break;
                }
                s *= 0.5;
            }
            out.history.emplace_back(iter + 1, f);
            if (!moved) break;  // line search exhausted: stationary to machine scale
        }
        out.x = std::move(x);
        out.f = f;
        out.iterations = iter;
        if (f < p.tol) out.converged = true;
        return out;
    };

    std::vector<RestartOutcome> outcomes(static_cast<size_t>(p.restarts));
    const int workers = std::clamp(threads, 1, p.restarts);
    if (workers <= 1) {
        for (int r = 0; r < p.restarts; ++r) outcomes[static_cast<size_t>(r)] = run_restart(inits[static_cast<size_t>(r)]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int r; (r = next.fetch_add(1)) < p.restarts;)
                    outcomes[static_cast<size_t>(r)] = run_restart(inits[static_cast<size_t>(r)]);
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: strictly lower objective wins, ties keep the
    // earliest restart.
    int best = -1;
    for (int r = 0; r < p.restarts; ++r) {
        const double f = outcomes[static_cast<size_t>(r)].f;
        if (std::isnan(f)) continue;
        if (best < 0 || f < outcomes[static_cast<size_t>(best)].f) best = r;
    }

    const auto to_result = [&](const RestartOutcome& o, int index) {
        LayeredStructure s = to_structure(lay, o.x, fixed_radii);
        ExpansionTable table = expansion::extract_expansion(s, p.order);
        DesignResult res{std::move(s), o.f, std::move(table), o.iterations,
                         o.converged, o.history, index};
        return res;
    };

    if (best < 0) {
        try {
            DesignResult carried = to_result(outcomes[0], 0);
            throw OptimizationFailedError("design: every restart produced NaN",
                                          std::move(carried));
        } catch (const OptimizationFailedError&) {
            throw;
        } catch (const std::exception&) {
            throw Error("design: every restart failed and the first iterate is not evaluable");
        }
    }
    return to_result(outcomes[static_cast<size_t>(best)], best);
}

std::vector<SweepRow> sweep_report(const LayeredStructure& s,
                                   const std::vector<double>& t_values) {
    std::vector<SweepRow> rows;
    for (double t : t_values) {
        if (!(t > 0.0)) throw std::invalid_argument("sweep_report: t values must be positive");
        const auto spec = layered::compute_spectrum(s, t, 4);
        for (int n = 0; n <= 4; ++n)
            rows.push_back({n, t, std::abs(spec.w[static_cast<size_t>(n)])});
    }
    return rows;
}

}  // namespace cloakforge::design
