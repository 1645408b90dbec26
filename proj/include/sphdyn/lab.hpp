#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphdyn/ergodic.hpp"
#include "sphdyn/knorm.hpp"
#include "sphdyn/periodic.hpp"

namespace sphdyn {

struct BracketOpts {
    int grid_size = 0;  // 0 = per-n default
    int n_seeds = 8;
};

struct KInfinityBracket {
    double upper = 0.0;  // min over n <= n_max of (1/n) log K(f^n)
    double lower = 0.0;  // best periodic-point exponent up to m_max
    std::vector<double> per_n;  // a_n / n diagnostics, n = 1..n_max
};

// Two-sided bracket for the growth rate of log K(f^n). The upper side uses
// subadditivity, the lower side periodic points; lower <= upper + 1e-6 is
// asserted. Cycle points seed the chain maximization so the upper side
// never falls below the exponents the lower side certifies.
KInfinityBracket k_infinity_bracket(const RationalMap& f, int n_max, int m_max,
                                    const BracketOpts& opts = {});

struct ChainOpts {
    int n_max = 5;
    int m_max = 0;  // 0 = floor(log(4096)/log d)
    int paths = 4000;
    int burn_in = 40;
    std::uint64_t seed = 1;
    int grid_size = 0;
    int n_seeds = 8;
};

// All four invariants of the inequality chain for one map.
struct ExponentReport {
    std::string map_label;
    int degree = 0;
    double log_k = 0.0;
    double k_inf_upper = 0.0;
    double k_inf_lower = 0.0;
    ChiEstimate chi_a;
    double floor_half_log_d = 0.0;
    double floor_log2 = 0.0;
    double tol = 0.0;  // max(3 stderr, 0.02)
    bool chain_ok = false;
};

ExponentReport inequality_chain_report(const RationalMap& f, const ChainOpts& opts = {},
                                       const std::string& label = "custom");

struct GrowthRow {
    int n = 0;
    int degree = 0;
    double k = 0.0;
    double ratio = 0.0;  // k / sqrt(degree), computed degree
    double phi = 0.0;
};

// One row per n in [1, n_max] for the tanh-product family; degrees are the
// constructed ones, n(2n+1). n_max <= 4.
std::vector<GrowthRow> theorem1_growth_table(int n_max, int phi_grid_size = 20000);

}  // namespace sphdyn
