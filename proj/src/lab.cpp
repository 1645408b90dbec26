#include "sphdyn/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sphdyn/errors.hpp"
#include "sphdyn/zoo.hpp"

namespace sphdyn {

namespace {

// Periodic points make good polish seeds for the chain maximization.
std::vector<SpherePoint> cycle_seed_points(const RationalMap& f, int m_max) {
    std::vector<SpherePoint> seeds;
    for (int m = 1; m <= m_max; ++m) {
        for (const CycleRecord& c : periodic_cycles(f, m)) {
            if (c.period != m) continue;
            for (const auto& p : c.points) seeds.push_back(p);
        }
    }
    return seeds;
}

}  // namespace

KInfinityBracket k_infinity_bracket(const RationalMap& f, int n_max, int m_max,
                                    const BracketOpts& opts) {
    if (n_max < 2) throw DomainError("k_infinity_bracket: n_max must be >= 2");

    KInfinityBracket b;
    b.lower = chi_max_lower(f, m_max);
    std::vector<SpherePoint> seeds = cycle_seed_points(f, m_max);

    b.upper = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= n_max; ++n) {
        const KReport rep = k_norm_iterate(f, n, opts.grid_size, opts.n_seeds, seeds);
        const double an_over_n = std::log(rep.value) / n;
        b.per_n.push_back(an_over_n);
        b.upper = std::min(b.upper, an_over_n);
        // Argmax points of f^n are strong seeds for n+1 as well.
        for (const auto& p : rep.argmax_points) seeds.push_back(p);
    }
    if (b.lower > b.upper + 1e-6) {
        throw InternalError("k_infinity_bracket: lower exceeds upper beyond tolerance");
    }
    return b;
}

ExponentReport inequality_chain_report(const RationalMap& f, const ChainOpts& opts,
                                       const std::string& label) {
    ExponentReport r;
    r.map_label = label;
    r.degree = f.degree;

    int m_max = opts.m_max;
    if (m_max == 0) {
        m_max = static_cast<int>(std::floor(std::log(4096.0) / std::log(double(f.degree))));
        m_max = std::max(1, m_max);
    }

    const KReport kr = k_norm(f, opts.grid_size, opts.n_seeds);
    r.log_k = std::log(kr.value);

    const KInfinityBracket b = k_infinity_bracket(
        f, opts.n_max, m_max, BracketOpts{opts.grid_size, opts.n_seeds});
    r.k_inf_upper = b.upper;
    r.k_inf_lower = b.lower;

    r.chi_a = chi_average(f, opts.paths, opts.burn_in, opts.seed);
    r.floor_half_log_d = 0.5 * std::log(static_cast<double>(f.degree));
    r.floor_log2 = std::log(2.0);

    r.tol = std::max(3.0 * r.chi_a.stderr_, 0.02);
    r.chain_ok = (r.floor_half_log_d <= r.chi_a.value + r.tol) &&
                 (r.chi_a.value <= r.k_inf_lower + r.tol) &&
                 (r.k_inf_lower <= r.k_inf_upper + r.tol) &&
                 (r.k_inf_upper <= r.log_k + r.tol);
    return r;
}

std::vector<GrowthRow> theorem1_growth_table(int n_max, int phi_grid_size) {
    if (n_max < 1 || n_max > 4) {
        throw DomainError("theorem1_growth_table: n_max must be in [1, 4]");
    }
    std::vector<GrowthRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        const RationalMap f = theorem1_map(n);
        GrowthRow row;
        row.n = n;
        row.degree = f.degree;
        row.k = k_norm(f).value;
        row.ratio = row.k / std::sqrt(static_cast<double>(f.degree));
        row.phi = phi_functional(f, phi_grid_size);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sphdyn
