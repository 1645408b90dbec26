#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphdyn/rational.hpp"

namespace sphdyn {

// A batch of points approximately distributed by the measure of maximal
// entropy, produced by balanced backward iteration.
struct MuSample {
    std::vector<SpherePoint> points;
    std::uint64_t seed = 0;
    int burn_in = 0;
    int n_paths = 0;
    int depth = 0;
};

enum class ChiMethod { ensemble_backward, birkhoff_forward };

struct ChiEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    int n_samples = 0;
    ChiMethod method = ChiMethod::ensemble_backward;
    bool flagged = false;  // winsorized samples present / critical orbit hit
};

inline const char* chi_method_name(ChiMethod m) {
    return m == ChiMethod::ensemble_backward ? "ensemble_backward" : "birkhoff_forward";
}

// The full d-point fiber f^{-1}(w), with multiplicity; includes infinity
// when the fiber polynomial drops degree. Deterministically ordered.
std::vector<SpherePoint> preimages(const RationalMap& f, const SpherePoint& w);

// Backward-iteration sampler: each path jumps to a uniformly random
// preimage; the point after burn_in steps is emitted. Paths use independent
// substreams of the seed, so results do not depend on scheduling.
MuSample mu_sample(const RationalMap& f, int n_paths, int burn_in, std::uint64_t seed);

// Ensemble mean of log ||f'|| over a mu-sample. Near-critical samples are
// winsorized at log(1e-12) and flagged; more than 1% flagged is an error.
ChiEstimate chi_average(const RationalMap& f, int n_paths, int burn_in,
                        std::uint64_t seed);

// Forward Birkhoff average (1/n) log ||(f^n)'(start)||; stderr from 10 block
// averages. Cross-check only; needs a mu-generic start.
ChiEstimate birkhoff_forward(const RationalMap& f, const SpherePoint& start, int n_steps);

}  // namespace sphdyn
