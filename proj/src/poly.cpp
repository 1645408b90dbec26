#include "sphdyn/poly.hpp"

#include <algorithm>
#include <cmath>

namespace sphdyn {

cplx poly_eval(const Poly& p, cplx z) {
    cplx acc{0.0, 0.0};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    if (p.c.size() <= 1) return d;
    d.c.resize(p.c.size() - 1);
    for (std::size_t k = 1; k < p.c.size(); ++k) {
        d.c[k - 1] = static_cast<double>(k) * p.c[k];
    }
    d.trim();
    return d;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), cplx{0.0, 0.0});
    for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
    r.trim();
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    return poly_add(a, poly_scale(b, cplx{-1.0, 0.0}));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

Poly poly_scale(const Poly& p, cplx s) {
    Poly r;
    if (s == cplx{0.0, 0.0}) return r;
    r.c = p.c;
    for (auto& v : r.c) v *= s;
    return r;
}

Poly poly_reverse(const Poly& p, int deg) {
    Poly r;
    r.c.assign(static_cast<std::size_t>(deg) + 1, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < p.c.size() && static_cast<int>(k) <= deg; ++k) {
        r.c[deg - k] = p.c[k];
    }
    r.trim();
    return r;
}

double poly_max_coeff(const Poly& p) {
    double m = 0.0;
    for (const auto& v : p.c) m = std::max(m, std::abs(v));
    return m;
}

double poly_relative_residual(const Poly& p, cplx z) {
    if (p.is_zero()) return 0.0;
    const double az = std::abs(z);
    const Poly* q = &p;
    Poly rev;
    cplx w = z;
    if (az > 1.0) {
        rev = poly_reverse(p, p.degree());
        rev.c.resize(p.c.size(), cplx{0.0, 0.0});  // keep full length
        q = &rev;
        w = 1.0 / z;
    }
    cplx val{0.0, 0.0};
    double scale = 0.0;
    const double aw = std::abs(w);
    // Horner for value and for the magnitude sum in lockstep.
    for (std::size_t i = q->c.size(); i-- > 0;) {
        val = val * w + q->c[i];
        scale = scale * aw + std::abs(q->c[i]);
    }
    if (scale == 0.0) return 0.0;
    return std::abs(val) / scale;
}

}  // namespace sphdyn
