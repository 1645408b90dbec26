#pragma once

#include <cstdint>
#include <string>

#include "sphdyn/rational.hpp"

namespace sphdyn {

enum class Family { power, theorem1, lattes4, chebyshev, random_family };

struct FamilyLabel {
    Family name = Family::power;
    int d = 2;               // degree parameter (power, chebyshev, random)
    int n = 1;               // product-family index (theorem1)
    std::uint64_t seed = 0;  // random family only

    std::string to_string() const;
};

// z -> z^d.
RationalMap power_map(int d);

// The tanh-product family transported to the w = e^{2z} variable:
// R(w) = prod_{k=-n}^{n} (e^{4k} w^n - 1) / (e^{4k} w^n + 1), built by
// expanding the factored form. Constructed degree is n(2n+1). Requires
// 1 <= n <= 6 so the coefficient range e^{+-4k} stays inside doubles.
RationalMap theorem1_map(int n);

// Degree-4 map obtained from doubling on the square lattice (g2=4, g3=0):
// L(z) = (z^2+1)^2 / (4 z (z^2-1)). Infinity is a fixed point with
// multiplier 4.
RationalMap lattes4();

// Degree-d polynomial commuting with z -> z^d under the semiconjugacy
// w + 1/w (so p(w + 1/w) = w^d + 1/w^d). Requires 2 <= d <= 16.
RationalMap chebyshev_map(int d);

// Seeded random map: i.i.d. complex standard normal coefficients, degree
// exactly d, coprimality gate enforced by resampling (at most 100 attempts).
// Requires 2 <= d <= 16.
RationalMap random_map(int d, std::uint64_t seed);

// Family spec strings: "power:d=4", "theorem1:n=3", "lattes4",
// "chebyshev:d=2", "random:d=5:seed=42".
FamilyLabel parse_family(const std::string& spec);
RationalMap build_family(const FamilyLabel& label);

}  // namespace sphdyn
