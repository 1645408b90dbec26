#pragma once

#include <functional>
#include <vector>

namespace sphdyn {

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

// Derivative-free Nelder-Mead minimization. Stops when the simplex value
// spread drops below tol or after max_iter iterations.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                          const std::vector<double>& x0, double step, double tol,
                          int max_iter);

}  // namespace sphdyn
