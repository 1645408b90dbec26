#include "sphdyn/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sphdyn/errors.hpp"
#include "sphdyn/roots.hpp"

namespace sphdyn {

namespace {

RationalMap finalize_map(Poly num, Poly den, bool coprime_gate) {
    num.trim();
    den.trim();
    if (num.is_zero() && den.is_zero()) {
        throw DomainError("make_map: num and den are both zero");
    }
    const int degree = std::max(num.degree(), den.degree());
    if (degree < 1) {
        throw DomainError("make_map: constant map (degree must be >= 1)");
    }
    if (num.is_zero() || den.is_zero()) {
        // f == 0 or f == infinity as a map
        throw DomainError("make_map: constant map (degree must be >= 1)");
    }

    // Joint normalization: max coefficient modulus over both polynomials = 1.
    const double scale = std::max(poly_max_coeff(num), poly_max_coeff(den));
    for (auto& v : num.c) v /= scale;
    for (auto& v : den.c) v /= scale;

    // Coprimality gate: any common root of num and den is a root of den.
    // Skipped for compositions of already-validated maps, where coprimality
    // holds exactly but roundoff at high degree can fake a common root.
    if (coprime_gate && den.degree() >= 1) {
        const std::vector<cplx> dr = poly_roots(den);
        for (const cplx& r : dr) {
            if (poly_relative_residual(num, r) <= kCoprimeTol) {
                std::ostringstream os;
                os << "degenerate map: common root near (" << r.real() << ", "
                   << r.imag() << ")";
                throw DomainError(os.str());
            }
        }
    }

    RationalMap f;
    f.num = std::move(num);
    f.den = std::move(den);
    f.degree = degree;
    f.wron = poly_sub(poly_mul(poly_derivative(f.num), f.den),
                      poly_mul(f.num, poly_derivative(f.den)));
    f.num_rev = poly_reverse(f.num, degree);
    f.den_rev = poly_reverse(f.den, degree);
    f.wron_rev = poly_reverse(f.wron, 2 * degree - 2);
    return f;
}

}  // namespace

RationalMap make_map(Poly num, Poly den) {
    return finalize_map(std::move(num), std::move(den), true);
}

SpherePoint apply(const RationalMap& f, const SpherePoint& p) {
    const SpherePoint& q = p;  // evaluated in the chart given
    cplx a, b;
    if (q.chart == Chart::Z) {
        a = poly_eval(f.num, q.coord);
        b = poly_eval(f.den, q.coord);
    } else {
        a = poly_eval(f.num_rev, q.coord);
        b = poly_eval(f.den_rev, q.coord);
    }
    if (a == cplx{0.0, 0.0} && b == cplx{0.0, 0.0}) {
        throw InternalError("apply: 0/0 after homogenization (degenerate map)");
    }
    if (std::abs(a) <= std::abs(b)) {
        return SpherePoint{Chart::Z, a / b};
    }
    return SpherePoint{Chart::U, b / a};
}

double spherical_norm_deriv(const RationalMap& f, const SpherePoint& p) {
    const SpherePoint& q = p;  // chart-stable: either chart gives the same value
    cplx w, a, b;
    if (q.chart == Chart::Z) {
        w = poly_eval(f.wron, q.coord);
        a = poly_eval(f.num, q.coord);
        b = poly_eval(f.den, q.coord);
    } else {
        w = poly_eval(f.wron_rev, q.coord);
        a = poly_eval(f.num_rev, q.coord);
        b = poly_eval(f.den_rev, q.coord);
    }
    const double s = std::norm(a) + std::norm(b);
    return std::abs(w) * (1.0 + std::norm(q.coord)) / s;
}

cplx chart_derivative(const RationalMap& f, const SpherePoint& p, const SpherePoint& fp) {
    const SpherePoint& q = p;
    const SpherePoint& r = fp;
    if (q.chart == Chart::Z) {
        const cplx w = poly_eval(f.wron, q.coord);
        if (r.chart == Chart::Z) {
            const cplx b = poly_eval(f.den, q.coord);
            return w / (b * b);
        }
        const cplx a = poly_eval(f.num, q.coord);
        return -w / (a * a);
    }
    const cplx w = poly_eval(f.wron_rev, q.coord);
    if (r.chart == Chart::Z) {
        const cplx b = poly_eval(f.den_rev, q.coord);
        return -w / (b * b);
    }
    const cplx a = poly_eval(f.num_rev, q.coord);
    return w / (a * a);
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
    const int df = f.degree;
    const int dg = g.degree;
    if (static_cast<long long>(df) * dg > kDegreeCap) {
        throw DomainError("compose: degree cap exceeded");
    }

    // Horner in polynomial arithmetic: sum_k c_k p_g^k q_g^(df-k).
    const auto substitute = [&](const Poly& coeffs) {
        Poly acc;
        if (df < static_cast<int>(coeffs.c.size())) acc.c.push_back(coeffs.c[df]);
        Poly qpow{{cplx{1.0, 0.0}}};
        for (int k = df - 1; k >= 0; --k) {
            qpow = poly_mul(qpow, g.den);
            acc = poly_mul(acc, g.num);
            if (k < static_cast<int>(coeffs.c.size())) {
                acc = poly_add(acc, poly_scale(qpow, coeffs.c[k]));
            }
        }
        return acc;
    };

    Poly num_out = substitute(f.num);
    Poly den_out = substitute(f.den);

    // The top coefficient of the composite is sum_k c_k gn^k gd^(df-k) with
    // gn, gd the leading coefficients of g. It is well conditioned when the
    // sum does not cancel against its absolute-value scale; one of the two
    // (num or den side) is always nonzero for reduced maps.
    const cplx gn = g.num.degree() == dg ? g.num.c.back() : cplx{0.0, 0.0};
    const cplx gd = g.den.degree() == dg ? g.den.c.back() : cplx{0.0, 0.0};
    const auto top_residual = [&](const Poly& coeffs) {
        cplx val{0.0, 0.0};
        double scale = 0.0;
        cplx npow{1.0, 0.0};
        std::vector<cplx> dpow(df + 1);
        dpow[0] = cplx{1.0, 0.0};
        for (int k = 1; k <= df; ++k) dpow[k] = dpow[k - 1] * gd;
        for (int k = 0; k <= df; ++k) {
            if (k < static_cast<int>(coeffs.c.size())) {
                const cplx term = coeffs.c[k] * npow * dpow[df - k];
                val += term;
                scale += std::abs(term);
            }
            npow *= gn;
        }
        return scale == 0.0 ? 0.0 : std::abs(val) / scale;
    };
    if (std::max(top_residual(f.num), top_residual(f.den)) < 1e-9) {
        throw DomainError("composition ill-conditioned: leading term ambiguous");
    }

    RationalMap h = finalize_map(std::move(num_out), std::move(den_out), false);
    if (h.degree != df * dg) {
        throw InternalError("compose: degree is not multiplicative");
    }
    return h;
}

RationalMap iterate_map(const RationalMap& f, int m) {
    if (m < 1) throw DomainError("iterate_map: m must be >= 1");
    double deg = 1.0;
    for (int i = 0; i < m; ++i) {
        deg *= f.degree;
        if (deg > kDegreeCap) throw DomainError("iterate_map: degree cap exceeded");
    }
    RationalMap acc = f;
    for (int i = 1; i < m; ++i) acc = compose(f, acc);
    return acc;
}

}  // namespace sphdyn
