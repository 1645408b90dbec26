#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sphdyn/rational.hpp"

namespace sphdyn {

// Result of a global maximization of the spherical derivative norm. The
// value is a certified lower bound for the true maximum and, with the
// default grid sizes, a heuristic global maximum.
struct KReport {
    double value = 0.0;
    std::vector<SpherePoint> argmax_points;
    int grid_size = 0;
    double polish_tol = 1e-12;
    int n_seeds = 0;
};

// K(f) = max over the sphere of ||f'||. grid_size 0 selects the default
// max(100, 50 d^2).
KReport k_norm(const RationalMap& f, int grid_size = 0, int n_seeds = 8);

// sum_{j<n} log ||f'(f^j(p))||, in log space throughout. Returns -inf when
// the orbit passes through a critical point.
double chain_norm_log(const RationalMap& f, int n, const SpherePoint& p);

// K(f^n) via chain-rule maximization; no symbolic iterate, so the degree cap
// does not apply. extra_seeds are additional polish starts (periodic points
// are good candidates).
KReport k_norm_iterate(const RationalMap& f, int n, int grid_size = 0, int n_seeds = 8,
                       std::span<const SpherePoint> extra_seeds = {});

struct AreaIdentityResult {
    double integral = 0.0;
    double expected = 0.0;
    double rel_err = 0.0;
};

// Quadrature check of the covering identity: integral of ||f'||^2 over the
// sphere equals pi * degree.
AreaIdentityResult area_identity(const RationalMap& f, int grid_size);

// Integral of ||f'|| / (1+|z|^2) over the unit disc (polar product rule).
double phi_functional(const RationalMap& f, int grid_size);

struct MinKResult {
    RationalMap best_map;
    double k = 0.0;
};

// Exploratory multistart descent over coefficient space minimizing K.
// Start 0 is z^d; the remaining starts are seeded Gaussian coefficient
// vectors. 2 <= d <= 6.
MinKResult min_k_search(int d, int n_starts, std::uint64_t seed);

}  // namespace sphdyn
