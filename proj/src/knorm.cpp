#include "sphdyn/knorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "sphdyn/errors.hpp"
#include "sphdyn/optimize.hpp"
#include "sphdyn/parallel.hpp"
#include "sphdyn/rng.hpp"

namespace sphdyn {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPolishTol = 1e-12;
constexpr int kPolishIters = 500;

// Shared grid + multistart simplex maximization of a log-scale objective.
struct MaxLogResult {
    double log_value = kNegInf;
    std::vector<SpherePoint> argmax;
};

MaxLogResult maximize_log(const std::function<double(const SpherePoint&)>& logf,
                          int grid_size, int n_seeds,
                          std::span<const SpherePoint> extra_seeds) {
    const SphereGrid grid = make_grid(grid_size, GridScheme::fibonacci);
    const std::size_t npts = grid.points.size();
    const std::vector<double> vals = parallel_map<double>(
        npts, [&](std::size_t i) { return logf(grid.points[i]); });

    // Top candidates separated by a few grid spacings.
    std::vector<std::size_t> order(npts);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    const double sep = 8.0 / std::sqrt(static_cast<double>(npts));
    std::vector<SpherePoint> seeds;
    for (std::size_t idx : order) {
        if (static_cast<int>(seeds.size()) >= n_seeds) break;
        if (!std::isfinite(vals[idx])) break;
        bool close = false;
        for (const auto& s : seeds) {
            if (chordal_distance(grid.points[idx], s) < sep) {
                close = true;
                break;
            }
        }
        if (!close) seeds.push_back(grid.points[idx]);
    }
    for (const auto& s : extra_seeds) seeds.push_back(s.canonical());

    const double h = 2.0 / std::sqrt(static_cast<double>(npts));
    MaxLogResult result;
    std::vector<std::pair<double, SpherePoint>> polished;
    for (const auto& seed : seeds) {
        const Chart chart = seed.chart;
        const auto objective = [&](const std::vector<double>& x) {
            const double v = logf(SpherePoint{chart, cplx{x[0], x[1]}});
            return std::isfinite(v) ? -v : 1e300;
        };
        const SimplexResult r =
            nelder_mead(objective, {seed.coord.real(), seed.coord.imag()},
                        std::max(h, 1e-6), kPolishTol, kPolishIters);
        double lv = -r.value;
        SpherePoint p = SpherePoint{chart, cplx{r.x[0], r.x[1]}}.canonical();
        // Fall back to the raw seed when polish went nowhere useful.
        const double seed_val = logf(seed);
        if (seed_val > lv) {
            lv = seed_val;
            p = seed;
        }
        if (std::isfinite(lv)) polished.emplace_back(lv, p);
        result.log_value = std::max(result.log_value, lv);
    }
    if (!std::isfinite(result.log_value)) {
        // Fully superattracting objective on every seed; fall back to grid max.
        for (std::size_t i = 0; i < npts; ++i) {
            if (vals[i] > result.log_value) {
                result.log_value = vals[i];
                result.argmax = {grid.points[i]};
            }
        }
        return result;
    }
    // Collect argmax set: within relative 1e-6 of the max, dedup at 1e-6.
    for (const auto& [lv, p] : polished) {
        if (lv < result.log_value - 1e-6) continue;  // log-scale ~ relative
        bool dup = false;
        for (const auto& q : result.argmax) {
            if (chordal_distance(p, q) < 1e-6) {
                dup = true;
                break;
            }
        }
        if (!dup) result.argmax.push_back(p);
    }
    return result;
}

int default_grid(const RationalMap& f) {
    return std::max(100, 50 * f.degree * f.degree);
}

}  // namespace

KReport k_norm(const RationalMap& f, int grid_size, int n_seeds) {
    if (grid_size == 0) grid_size = default_grid(f);
    if (grid_size < 100) throw DomainError("k_norm: grid_size must be >= 100");
    const auto logf = [&](const SpherePoint& p) {
        const double v = spherical_norm_deriv(f, p);
        return v > 0.0 ? std::log(v) : kNegInf;
    };
    const MaxLogResult r = maximize_log(logf, grid_size, n_seeds, {});
    KReport rep;
    rep.value = std::exp(r.log_value);
    rep.argmax_points = r.argmax;
    rep.grid_size = grid_size;
    rep.n_seeds = n_seeds;
    rep.polish_tol = kPolishTol;
    return rep;
}

double chain_norm_log(const RationalMap& f, int n, const SpherePoint& p) {
    SpherePoint cur = p.canonical();
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double v = spherical_norm_deriv(f, cur);
        if (!(v > 0.0)) return kNegInf;
        acc += std::log(v);
        if (j + 1 < n) cur = apply(f, cur);
    }
    return acc;
}

KReport k_norm_iterate(const RationalMap& f, int n, int grid_size, int n_seeds,
                       std::span<const SpherePoint> extra_seeds) {
    if (n < 1) throw DomainError("k_norm_iterate: n must be >= 1");
    if (grid_size == 0) {
        grid_size = std::max(2000, 50 * f.degree * f.degree * n * n);
        grid_size = std::min(grid_size, 200000);
    }
    const auto logf = [&](const SpherePoint& p) { return chain_norm_log(f, n, p); };
    const MaxLogResult r = maximize_log(logf, grid_size, n_seeds, extra_seeds);
    KReport rep;
    rep.value = std::exp(r.log_value);
    rep.argmax_points = r.argmax;
    rep.grid_size = grid_size;
    rep.n_seeds = n_seeds;
    rep.polish_tol = kPolishTol;
    return rep;
}

AreaIdentityResult area_identity(const RationalMap& f, int grid_size) {
    if (grid_size < 1000) throw DomainError("area_identity: grid_size must be >= 1000");
    const SphereGrid grid = make_grid(grid_size, GridScheme::fibonacci);
    const std::vector<double> vals = parallel_map<double>(
        grid.points.size(), [&](std::size_t i) {
            const double v = spherical_norm_deriv(f, grid.points[i]);
            return v * v;
        });
    double integral = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) integral += grid.weights[i] * vals[i];
    AreaIdentityResult r;
    r.integral = integral;
    r.expected = std::numbers::pi * f.degree;
    r.rel_err = std::abs(integral - r.expected) / r.expected;
    return r;
}

double phi_functional(const RationalMap& f, int grid_size) {
    if (grid_size < 1000) throw DomainError("phi_functional: grid_size must be >= 1000");
    int nr = static_cast<int>(std::ceil(std::sqrt(grid_size / 2.0)));
    if (nr < 4) nr = 4;
    const int ntheta = 2 * nr;
    std::vector<double> rn, rw;
    gauss_legendre_01(nr, rn, rw);
    double acc = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double r = rn[i];
        double ring = 0.0;
        for (int j = 0; j < ntheta; ++j) {
            const double th = 2.0 * std::numbers::pi * (j + 0.5) / ntheta;
            const SpherePoint p{Chart::Z, cplx{r * std::cos(th), r * std::sin(th)}};
            ring += spherical_norm_deriv(f, p);
        }
        acc += rw[i] * (2.0 * std::numbers::pi / ntheta) * r / (1.0 + r * r) * ring;
    }
    return acc;
}

MinKResult min_k_search(int d, int n_starts, std::uint64_t seed) {
    if (d < 2 || d > 6) throw DomainError("min_k_search: d must be in [2, 6]");
    if (n_starts < 1) throw DomainError("min_k_search: n_starts must be >= 1");

    const std::size_t ncoef = static_cast<std::size_t>(d) + 1;
    const auto to_map = [&](const std::vector<double>& x) {
        Poly num, den;
        num.c.resize(ncoef);
        den.c.resize(ncoef);
        for (std::size_t k = 0; k < ncoef; ++k) {
            num.c[k] = cplx{x[2 * k], x[2 * k + 1]};
            den.c[k] = cplx{x[2 * ncoef + 2 * k], x[2 * ncoef + 2 * k + 1]};
        }
        return make_map(std::move(num), std::move(den));
    };
    const auto objective = [&](const std::vector<double>& x) {
        try {
            const RationalMap m = to_map(x);
            if (m.degree != d) return 1e9;
            return k_norm(m, 2000, 8).value;
        } catch (const DomainError&) {
            return 1e9;  // degenerate iterate rejected
        }
    };

    double best_val = 1e9;
    std::vector<double> best_x;
    for (int s = 0; s < n_starts; ++s) {
        std::vector<double> x0(4 * ncoef, 0.0);
        if (s == 0) {
            x0[2 * d] = 1.0;      // num: z^d
            x0[2 * ncoef] = 1.0;  // den: 1
        } else {
            Rng rng(seed, static_cast<std::uint64_t>(s));
            for (auto& v : x0) v = rng.gaussian();
        }
        const SimplexResult r = nelder_mead(objective, x0, 0.15, 1e-9, 400);
        if (r.value < best_val) {
            best_val = r.value;
            best_x = r.x;
        }
    }
    if (best_val >= 1e9) throw DomainError("min_k_search: all starts degenerate");

    MinKResult result{to_map(best_x), best_val};
    const double floor = std::max(2.0, std::sqrt(static_cast<double>(d)));
    if (result.k < floor - 1e-6) {
        throw InternalError("min_k_search: value below the theoretical floor");
    }
    return result;
}

}  // namespace sphdyn
