#pragma once

#include <vector>

#include "sphdyn/sphere.hpp"

namespace sphdyn {

// Univariate polynomial with complex coefficients, ascending powers.
// The empty list is the zero polynomial; otherwise the last entry is nonzero.
struct Poly {
    std::vector<cplx> c;

    Poly() = default;
    explicit Poly(std::vector<cplx> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    // Drop trailing coefficients that are exactly zero.
    void trim() {
        while (!c.empty() && c.back() == cplx{0.0, 0.0}) c.pop_back();
    }
};

cplx poly_eval(const Poly& p, cplx z);
Poly poly_derivative(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& p, cplx s);

// Coefficients reversed into a length-(deg+1) list: q_j = p_{deg-j}, with
// p_k = 0 for k > degree(p). This is the homogenization used for chart-U
// evaluation: z^deg * p(1/z) = q(z).
Poly poly_reverse(const Poly& p, int deg);

// Largest coefficient modulus (0 for the zero polynomial).
double poly_max_coeff(const Poly& p);

// |p(z)| relative to the no-cancellation scale sum |c_k||z|^k, computed via
// the reversed coefficients when |z| > 1 so it never overflows.
double poly_relative_residual(const Poly& p, cplx z);

}  // namespace sphdyn
