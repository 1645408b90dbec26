#pragma once

#include <vector>

#include "sphdyn/poly.hpp"

namespace sphdyn {

// All complex roots of p, with multiplicity, by Aberth-Ehrlich simultaneous
// iteration plus Newton polish. Deterministic: fixed initial circle from the
// coefficient magnitudes, at most 500 sweeps. Throws DomainError (carrying
// the worst relative residual) on non-convergence.
std::vector<cplx> poly_roots(const Poly& p);

}  // namespace sphdyn
