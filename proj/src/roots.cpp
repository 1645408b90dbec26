#include "sphdyn/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sphdyn/errors.hpp"

namespace sphdyn {

namespace {

constexpr int kMaxSweeps = 500;
constexpr double kResidualTol = 1e-10;

// Newton ratio p(z)/p'(z), overflow-safe for |z| > 1 via the reversed
// coefficients: p(z) = z^n q(w), w = 1/z, gives
// p/p' = z * q(w) / (n q(w) - w q'(w)).
cplx newton_ratio(const std::vector<cplx>& c, const std::vector<cplx>& crev, cplx z) {
    const std::size_t n = c.size() - 1;
    if (std::abs(z) <= 1.0) {
        cplx p{0.0, 0.0}, dp{0.0, 0.0};
        for (std::size_t i = c.size(); i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
        }
        if (dp == cplx{0.0, 0.0}) return p;  // caller perturbs
        return p / dp;
    }
    const cplx w = 1.0 / z;
    cplx q{0.0, 0.0}, dq{0.0, 0.0};
    for (std::size_t i = crev.size(); i-- > 0;) {
        dq = dq * w + q;
        q = q * w + crev[i];
    }
    const cplx denom = static_cast<double>(n) * q - w * dq;
    if (denom == cplx{0.0, 0.0}) return q;
    return z * q / denom;
}

}  // namespace

std::vector<cplx> poly_roots(const Poly& p) {
    Poly work = p;
    work.trim();
    if (work.degree() < 1) {
        throw DomainError("poly_roots: degree must be >= 1");
    }
    // Normalize so magnitudes are tame.
    const double mc = poly_max_coeff(work);
    for (auto& v : work.c) v /= mc;

    std::vector<cplx> roots;

    // Exact zero roots: strip leading zero coefficients.
    std::size_t low = 0;
    while (low < work.c.size() && std::abs(work.c[low]) < 1e-300) ++low;
    for (std::size_t k = 0; k < low; ++k) roots.emplace_back(0.0, 0.0);
    std::vector<cplx> c(work.c.begin() + low, work.c.end());

    const std::size_t n = c.size() - 1;
    if (n == 0) return roots;

    std::vector<cplx> crev(c.rbegin(), c.rend());

    // Fujiwara-style radius bound for the initial circle.
    double radius = 0.0;
    const double lead = std::abs(c[n]);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = std::pow(std::abs(c[k]) / lead, 1.0 / (n - k));
        radius = std::max(radius, t);
    }
    radius = std::clamp(2.0 * radius, 0.5, 1e8);

    std::vector<cplx> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double th =
            2.0 * std::numbers::pi * (static_cast<double>(j) / n) + 0.7;
        z[j] = radius * cplx{std::cos(th), std::sin(th)};
    }

    std::vector<bool> locked(n, false);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool all_locked = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (locked[j]) continue;
            cplx w = newton_ratio(c, crev, z[j]);
            cplx s{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                const cplx d = z[j] - z[k];
                if (d == cplx{0.0, 0.0}) continue;
                s += 1.0 / d;
            }
            const cplx denom = 1.0 - w * s;
            cplx step = (denom == cplx{0.0, 0.0}) ? w : w / denom;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                // Perturb out of a degenerate configuration.
                step = cplx{1e-8 * (1.0 + std::abs(z[j])), 1e-8};
            }
            z[j] -= step;
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(z[j]))) {
                locked[j] = true;
            } else {
                all_locked = false;
            }
        }
        if (all_locked) break;
    }

    // Newton polish.
    Poly reduced;
    reduced.c = c;
    for (std::size_t j = 0; j < n; ++j) {
        for (int it = 0; it < 3; ++it) {
            const cplx w = newton_ratio(c, crev, z[j]);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) break;
            if (std::abs(w) > 0.5 * (1.0 + std::abs(z[j]))) break;  // cluster
            z[j] -= w;
        }
    }

    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        worst = std::max(worst, poly_relative_residual(reduced, z[j]));
    }
    if (worst > kResidualTol) {
        std::ostringstream os;
        os << "poly_roots: no convergence, worst relative residual " << worst;
        throw DomainError(os.str());
    }

    roots.insert(roots.end(), z.begin(), z.end());
    // Deterministic order.
    std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace sphdyn
