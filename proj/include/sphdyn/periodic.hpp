#pragma once

#include <optional>
#include <vector>

#include "sphdyn/knorm.hpp"
#include "sphdyn/rational.hpp"

namespace sphdyn {

// A periodic orbit with its exact (minimal) period. The exponent is
// (1/m) sum log ||f'(points[i])||; superattracting cycles carry the -inf
// sentinel so they never win a maximum.
struct CycleRecord {
    std::vector<SpherePoint> points;
    int period = 0;
    cplx multiplier{0.0, 0.0};
    double exponent = 0.0;
};

// All cycles among the fixed points of f^m, found by solving
// num_m(z) - z den_m(z) = 0 for the symbolic iterate and tracing orbits.
// Infinity is handled by explicit degree comparison. Points are
// deduplicated at chordal 1e-8; returned cycles have exact periods
// (divisors of m included).
std::vector<CycleRecord> periodic_cycles(const RationalMap& f, int m);

// Max cycle exponent over all periods <= m_max; -inf if every cycle found
// is superattracting.
double chi_max_lower(const RationalMap& f, int m_max);

struct CycleCheckResult {
    bool found = false;
    std::optional<CycleRecord> cycle;
};

// One-directional diagnostic: looks for a cycle of period <= m_max lying in
// the argmax set of ||f'|| up to tol. A found cycle certifies
// k_inf = log K(f) up to tol; absence proves nothing.
CycleCheckResult k_attaining_cycle_check(const RationalMap& f, const KReport& kreport,
                                         int m_max, double tol);

}  // namespace sphdyn
