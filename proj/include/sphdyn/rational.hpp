#pragma once

#include "sphdyn/poly.hpp"
#include "sphdyn/sphere.hpp"

namespace sphdyn {

// Reduced rational self-map of the sphere, f = num/den. Coefficients are
// normalized so max |coefficient| over both polynomials is 1; near-common
// roots are rejected (no silent reduction). The Wronskian
// W = num' den - num den' and the reversed (homogenized) coefficient lists
// are cached for overflow-free chart-U evaluation.
struct RationalMap {
    Poly num;
    Poly den;
    int degree = 0;
    Poly wron;      // num' den - num den', degree <= 2 degree - 2
    Poly num_rev;   // u^degree * num(1/u)
    Poly den_rev;   // u^degree * den(1/u)
    Poly wron_rev;  // u^(2 degree - 2) * wron(1/u)
};

// Degree cap for symbolic composition/iteration.
inline constexpr int kDegreeCap = 4096;

// Coprimality gate: normalized |num(r)| at every den root r must exceed this.
inline constexpr double kCoprimeTol = 1e-9;

RationalMap make_map(Poly num, Poly den);

SpherePoint apply(const RationalMap& f, const SpherePoint& p);

// Norm of the derivative with respect to the spherical metric,
// |f'(z)| (1+|z|^2) / (1+|f(z)|^2), evaluated through the pole-free form
// |W(z)| (1+|z|^2) / (|num(z)|^2 + |den(z)|^2) and its chart-U analogue.
double spherical_norm_deriv(const RationalMap& f, const SpherePoint& p);

// Derivative of f read in the local charts at p and at fp = apply(f, p).
// Products of these along a cycle give the cycle multiplier.
cplx chart_derivative(const RationalMap& f, const SpherePoint& p, const SpherePoint& fp);

RationalMap compose(const RationalMap& f, const RationalMap& g);
RationalMap iterate_map(const RationalMap& f, int m);

}  // namespace sphdyn
