#include "sphdyn/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sphdyn {

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                          const std::vector<double>& x0, double step, double tol,
                          int max_iter) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = fn(pts[i]);

    std::vector<std::size_t> order(n + 1);
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order[0];
        const std::size_t worst = order[n];
        const std::size_t second_worst = order[n - 1];
        if (vals[worst] - vals[best] < tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        const auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k) {
                p[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
            }
            return p;
        };

        const std::vector<double> refl = blend(-1.0);
        const double frefl = fn(refl);
        if (frefl < vals[best]) {
            const std::vector<double> exp_pt = blend(-2.0);
            const double fexp = fn(exp_pt);
            if (fexp < frefl) {
                pts[worst] = exp_pt;
                vals[worst] = fexp;
            } else {
                pts[worst] = refl;
                vals[worst] = frefl;
            }
            continue;
        }
        if (frefl < vals[second_worst]) {
            pts[worst] = refl;
            vals[worst] = frefl;
            continue;
        }
        const bool outside = frefl < vals[worst];
        const std::vector<double> contr = blend(outside ? -0.5 : 0.5);
        const double fcontr = fn(contr);
        if (fcontr < std::min(frefl, vals[worst])) {
            pts[worst] = contr;
            vals[worst] = fcontr;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < n; ++k) {
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            }
            vals[i] = fn(pts[i]);
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return SimplexResult{pts[best], vals[best], iter};
}

}  // namespace sphdyn
