#include "sphdyn/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sphdyn/errors.hpp"
#include "sphdyn/parallel.hpp"
#include "sphdyn/rng.hpp"
#include "sphdyn/roots.hpp"

namespace sphdyn {

namespace {
constexpr double kWinsorLog = -27.631021115928547;  // log(1e-12)
}

std::vector<SpherePoint> preimages(const RationalMap& f, const SpherePoint& w) {
    const auto [a, b] = w.canonical().homogeneous();
    // Solve b num(z) - a den(z) = 0.
    Poly h = poly_sub(poly_scale(f.num, b), poly_scale(f.den, a));
    const double hmax = poly_max_coeff(h);
    if (hmax == 0.0) throw InternalError("preimages: fiber polynomial vanished");
    for (auto& v : h.c) v /= hmax;
    while (!h.c.empty() && std::abs(h.c.back()) < 1e-13) h.c.pop_back();

    std::vector<SpherePoint> fiber;
    if (h.degree() >= 1) {
        for (const cplx& r : poly_roots(h)) fiber.push_back(SpherePoint::from_complex(r));
    }
    // Degree drop means preimages at infinity, with multiplicity.
    for (int k = h.degree(); k < f.degree; ++k) fiber.push_back(SpherePoint::infinity());

    std::sort(fiber.begin(), fiber.end(), [](const SpherePoint& p, const SpherePoint& q) {
        if (p.chart != q.chart) return p.chart == Chart::Z;
        if (p.coord.real() != q.coord.real()) return p.coord.real() < q.coord.real();
        return p.coord.imag() < q.coord.imag();
    });
    return fiber;
}

MuSample mu_sample(const RationalMap& f, int n_paths, int burn_in, std::uint64_t seed) {
    if (burn_in < 20) throw DomainError("mu_sample: burn_in must be >= 20");
    if (n_paths < 1) throw DomainError("mu_sample: n_paths must be >= 1");

    const auto run_path = [&](std::size_t i) -> SpherePoint {
        Rng rng(seed, i);
        for (int restart = 0; restart < 10; ++restart) {
            // Generic start, perturbed on each restart.
            const cplx z0 = cplx{0.5, 0.5} + 0.37 * static_cast<double>(restart) *
                                                 cplx{0.81, 0.59};
            SpherePoint cur = SpherePoint::from_complex(z0);
            bool collapsed = false;
            for (int t = 0; t < burn_in; ++t) {
                const std::vector<SpherePoint> fiber = preimages(f, cur);
                double spread = 0.0;
                for (const auto& p : fiber) {
                    spread = std::max(spread, chordal_distance(p, cur));
                }
                if (spread < 1e-9) {
                    collapsed = true;  // totally invariant (exceptional) point
                    break;
                }
                cur = fiber[rng.uniform_int(static_cast<int>(fiber.size()))];
            }
            if (!collapsed) return cur;
        }
        throw DomainError("mu_sample: start point exceptional after 10 restarts");
    };

    MuSample s;
    s.points = parallel_map<SpherePoint>(static_cast<std::size_t>(n_paths), run_path);
    s.seed = seed;
    s.burn_in = burn_in;
    s.n_paths = n_paths;
    s.depth = burn_in;
    return s;
}

ChiEstimate chi_average(const RationalMap& f, int n_paths, int burn_in,
                        std::uint64_t seed) {
    const MuSample s = mu_sample(f, n_paths, burn_in, seed);
    std::vector<double> logs(s.points.size());
    int flagged = 0;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        const double v = spherical_norm_deriv(f, s.points[i]);
        double lv = v > 0.0 ? std::log(v) : kWinsorLog;
        if (lv < kWinsorLog) lv = kWinsorLog;
        if (lv == kWinsorLog) ++flagged;
        logs[i] = lv;
    }
    if (flagged > n_paths / 100) {
        throw DomainError("chi_average: more than 1% of samples near a critical point");
    }
    double mean = 0.0;
    for (double v : logs) mean += v;
    mean /= logs.size();
    double var = 0.0;
    for (double v : logs) var += (v - mean) * (v - mean);
    var /= (logs.size() > 1 ? logs.size() - 1 : 1);

    ChiEstimate e;
    e.value = mean;
    e.stderr_ = std::sqrt(var / logs.size());
    e.n_samples = n_paths;
    e.method = ChiMethod::ensemble_backward;
    e.flagged = flagged > 0;
    return e;
}

ChiEstimate birkhoff_forward(const RationalMap& f, const SpherePoint& start, int n_steps) {
    if (n_steps < 100) throw DomainError("birkhoff_forward: n_steps must be >= 100");
    std::vector<double> logs;
    logs.reserve(n_steps);
    SpherePoint cur = start.canonical();
    bool hit_critical = false;
    for (int j = 0; j < n_steps; ++j) {
        const double v = spherical_norm_deriv(f, cur);
        if (!(v > 0.0)) {
            hit_critical = true;
            break;
        }
        logs.push_back(std::log(v));
        cur = apply(f, cur);
    }

    ChiEstimate e;
    e.method = ChiMethod::birkhoff_forward;
    e.n_samples = n_steps;
    if (hit_critical) {
        e.value = -std::numeric_limits<double>::infinity();
        e.flagged = true;
        return e;
    }
    double mean = 0.0;
    for (double v : logs) mean += v;
    mean /= logs.size();
    e.value = mean;

    const int nblocks = 10;
    const std::size_t bs = logs.size() / nblocks;
    std::vector<double> bmeans;
    for (int b = 0; b < nblocks; ++b) {
        double acc = 0.0;
        for (std::size_t k = b * bs; k < (b + 1) * bs; ++k) acc += logs[k];
        bmeans.push_back(acc / bs);
    }
    double bmean = 0.0;
    for (double v : bmeans) bmean += v;
    bmean /= bmeans.size();
    double bvar = 0.0;
    for (double v : bmeans) bvar += (v - bmean) * (v - bmean);
    bvar /= (bmeans.size() - 1);
    e.stderr_ = std::sqrt(bvar / bmeans.size());
    return e;
}

}  // namespace sphdyn
