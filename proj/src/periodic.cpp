#include "sphdyn/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sphdyn/errors.hpp"
#include "sphdyn/roots.hpp"

namespace sphdyn {

namespace {

constexpr double kDedupTol = 1e-8;
constexpr double kSnapTol = 1e-6;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Highest index with |coefficient| >= tol (coefficients pre-normalized).
int effective_degree(const Poly& p, double tol) {
    for (int k = p.degree(); k >= 0; --k) {
        if (std::abs(p.c[k]) >= tol) return k;
    }
    return -1;
}

}  // namespace

std::vector<CycleRecord> periodic_cycles(const RationalMap& f, int m) {
    if (m < 1) throw DomainError("periodic_cycles: m must be >= 1");
    const RationalMap fm = (m == 1) ? f : iterate_map(f, m);

    // Fixed points of f^m: roots of num_m(z) - z den_m(z).
    Poly shifted;
    shifted.c.assign(fm.den.c.size() + 1, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < fm.den.c.size(); ++k) shifted.c[k + 1] = fm.den.c[k];
    Poly h = poly_sub(fm.num, shifted);
    const double hmax = poly_max_coeff(h);
    if (hmax == 0.0) {
        throw DomainError("periodic_cycles: f^m is the identity (no isolated cycles)");
    }
    for (auto& v : h.c) v /= hmax;
    while (!h.c.empty() && std::abs(h.c.back()) < 1e-12) h.c.pop_back();

    std::vector<SpherePoint> pts;
    if (h.degree() >= 1) {
        for (const cplx& r : poly_roots(h)) pts.push_back(SpherePoint::from_complex(r));
    }
    if (effective_degree(fm.num, 1e-12) > effective_degree(fm.den, 1e-12)) {
        pts.push_back(SpherePoint::infinity());
    }

    // Dedup at chordal 1e-8 (order-preserving; root order is deterministic).
    std::vector<SpherePoint> uniq;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : uniq) {
            if (chordal_distance(p, q) < kDedupTol) {
                dup = true;
                break;
            }
        }
        if (!dup) uniq.push_back(p);
    }

    const auto snap = [&](const SpherePoint& p, double tol) -> int {
        int best = -1;
        double best_d = tol;
        for (std::size_t j = 0; j < uniq.size(); ++j) {
            const double d = chordal_distance(p, uniq[j]);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        return best;
    };

    std::vector<bool> visited(uniq.size(), false);
    std::vector<CycleRecord> cycles;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        if (visited[i]) continue;
        std::vector<int> orbit{static_cast<int>(i)};
        SpherePoint cur = uniq[i];
        bool closed = false;
        bool dropped = false;
        for (int step = 0; step < m; ++step) {
            cur = apply(f, cur);
            // Second, looser tier for ill-conditioned root clusters of
            // high-degree iterates; an orbit that still cannot be resolved
            // is dropped rather than failing the whole census.
            int j = snap(cur, kSnapTol);
            if (j < 0) j = snap(cur, 1e-3);
            if (j < 0) {
                dropped = true;
                break;
            }
            if (j == static_cast<int>(i)) {
                closed = true;
                break;
            }
            if (visited[j] ||
                std::find(orbit.begin(), orbit.end(), j) != orbit.end()) {
                // Near-duplicate root that merged into an already-claimed
                // orbit; drop it.
                dropped = true;
                break;
            }
            orbit.push_back(j);
        }
        for (int j : orbit) visited[j] = true;
        if (!closed) {
            if (dropped) continue;
            // Not closing within m steps means the point is not actually
            // periodic at this accuracy; drop it as well.
            continue;
        }

        CycleRecord rec;
        rec.period = static_cast<int>(orbit.size());
        cplx mult{1.0, 0.0};
        double log_sum = 0.0;
        bool superattracting = false;
        for (std::size_t t = 0; t < orbit.size(); ++t) {
            const SpherePoint& p = uniq[orbit[t]];
            const SpherePoint& next = uniq[orbit[(t + 1) % orbit.size()]];
            rec.points.push_back(p);
            mult *= chart_derivative(f, p, next);
            const double v = spherical_norm_deriv(f, p);
            if (v < 1e-100) {
                superattracting = true;
            } else {
                log_sum += std::log(v);
            }
        }
        rec.multiplier = mult;
        rec.exponent = superattracting ? kNegInf : log_sum / rec.period;
        cycles.push_back(std::move(rec));
    }
    return cycles;
}

double chi_max_lower(const RationalMap& f, int m_max) {
    if (m_max < 1) throw DomainError("chi_max_lower: m_max must be >= 1");
    double best = kNegInf;
    for (int m = 1; m <= m_max; ++m) {
        for (const CycleRecord& c : periodic_cycles(f, m)) {
            if (c.period == m) best = std::max(best, c.exponent);
        }
    }
    return best;
}

CycleCheckResult k_attaining_cycle_check(const RationalMap& f, const KReport& kreport,
                                         int m_max, double tol) {
    if (m_max < 1) throw DomainError("k_attaining_cycle_check: m_max must be >= 1");
    const double threshold = (1.0 - tol) * kreport.value;
    for (int m = 1; m <= m_max; ++m) {
        for (const CycleRecord& c : periodic_cycles(f, m)) {
            if (c.period != m) continue;
            bool all_on_max = true;
            for (const SpherePoint& p : c.points) {
                if (spherical_norm_deriv(f, p) < threshold) {
                    all_on_max = false;
                    break;
                }
            }
            if (all_on_max) return CycleCheckResult{true, c};
        }
    }
    return CycleCheckResult{false, std::nullopt};
}

}  // namespace sphdyn
