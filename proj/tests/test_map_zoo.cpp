#include <doctest.h>

#include <cmath>
#include <vector>

#include "sphdyn/errors.hpp"
#include "sphdyn/rational.hpp"
#include "sphdyn/rng.hpp"
#include "sphdyn/zoo.hpp"

using namespace sphdyn;

namespace {

// Truncated Laurent expansion of the Weierstrass function for g2=4, g3=0:
// wp(u) = u^-2 + sum_{k>=2} b_k u^(2k-2), with the classical recursion
// b_2 = g2/20, b_3 = g3/28, b_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} b_m b_{k-m}.
cplx wp_series(cplx u) {
    static const std::vector<double> b = [] {
        std::vector<double> v(16, 0.0);
        v[2] = 4.0 / 20.0;
        v[3] = 0.0;
        for (int k = 4; k < 16; ++k) {
            double s = 0.0;
            for (int m = 2; m <= k - 2; ++m) s += v[m] * v[k - m];
            v[k] = 3.0 * s / ((2.0 * k + 1.0) * (k - 3.0));
        }
        return v;
    }();
    const cplx u2 = u * u;
    cplx acc{0.0, 0.0};
    cplx pw{1.0, 0.0};  // u^(2k-2), starting at k=2 -> u^2
    for (int k = 2; k < 16; ++k) {
        pw *= u2;
        acc += b[k] * pw;
    }
    return 1.0 / u2 + acc;
}

cplx tanh_product(cplx z, int n) {
    cplx acc{1.0, 0.0};
    for (int k = -n; k <= n; ++k) {
        acc *= std::tanh(z + 2.0 * static_cast<double>(k));
    }
    return acc;
}

}  // namespace

TEST_CASE("power maps") {
    const RationalMap id = power_map(1);
    CHECK(id.degree == 1);
    CHECK(std::abs(apply(id, SpherePoint::from_complex(cplx{0.3, -0.4})).to_complex() -
                   cplx{0.3, -0.4}) < 1e-16);
    const RationalMap cube = power_map(3);
    CHECK(cube.degree == 3);
    CHECK(std::abs(apply(cube, SpherePoint::from_complex(cplx{0.0, 0.5})).to_complex() -
                   cplx{0.0, -0.125}) < 1e-15);
    CHECK_THROWS_AS(power_map(0), DomainError);
}

TEST_CASE("theorem1 maps match the tanh product") {
    // With w = e^{2z/n} each factor (e^{4k} w^n - 1)/(e^{4k} w^n + 1)
    // equals tanh(z + 2k), so R_n(e^{2z/n}) = prod_k tanh(z + 2k).
    for (int n = 1; n <= 4; ++n) {
        const RationalMap R = theorem1_map(n);
        CHECK(R.degree == n * (2 * n + 1));
        Rng rng(100 + n);
        int checked = 0;
        while (checked < 50) {
            const double x = 2.0 * rng.uniform() - 1.0;
            const double y = 0.4 * rng.uniform() - 0.2;
            const cplx z{x, y};
            // Stay away from the poles of the product on Im z = pi/4 etc.
            const cplx w = std::exp(2.0 * z / static_cast<double>(n));
            const cplx want = tanh_product(z, n);
            const SpherePoint got = apply(R, SpherePoint::from_complex(w));
            if (got.is_infinity()) continue;
            CHECK(std::abs(got.to_complex() - want) < 1e-8 * (1.0 + std::abs(want)));
            ++checked;
        }
    }
    CHECK_THROWS_AS(theorem1_map(0), DomainError);
    CHECK_THROWS_AS(theorem1_map(7), DomainError);
}

TEST_CASE("lattes4 coefficients and fixed point at infinity") {
    const RationalMap L = lattes4();
    CHECK(L.degree == 4);
    // (z^2+1)^2 / (4z(z^2-1)) up to joint normalization by 4.
    CHECK(std::abs(L.num.c[0] / L.num.c[4] - cplx{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(L.num.c[2] / L.num.c[4] - cplx{2.0, 0.0}) < 1e-15);
    CHECK(std::abs(L.den.c[1] / L.num.c[4] - cplx{-4.0, 0.0}) < 1e-15);
    CHECK(std::abs(L.den.c[3] / L.num.c[4] - cplx{4.0, 0.0}) < 1e-15);

    const SpherePoint inf = SpherePoint::infinity();
    CHECK(apply(L, inf).is_infinity());
    CHECK(std::abs(chart_derivative(L, inf, inf) - cplx{4.0, 0.0}) < 1e-14);

    // Half-period symmetry: L((z+1)/(z-1)) = L(z). Oddness: L(-z) = -L(z).
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const cplx z = rng.cgaussian();
        if (std::abs(z - cplx{1.0, 0.0}) < 0.05 || std::abs(z) < 0.05) continue;
        const SpherePoint a = apply(L, SpherePoint::from_complex(z));
        const SpherePoint b = apply(L, SpherePoint::from_complex((z + 1.0) / (z - 1.0)));
        CHECK(chordal_distance(a, b) < 1e-11);
        const SpherePoint c = apply(L, SpherePoint::from_complex(-z));
        if (!a.is_infinity() && !c.is_infinity()) {
            CHECK(std::abs(c.to_complex() + a.to_complex()) <
                  1e-11 * (1.0 + std::abs(a.to_complex())));
        }
    }
}

TEST_CASE("lattes4 semiconjugates duplication on the lattice") {
    // L(wp(u)) = wp(2u) near u = 0, from the Laurent series with g2=4, g3=0.
    const RationalMap L = lattes4();
    Rng rng(9);
    for (int i = 0; i < 40; ++i) {
        const cplx u = 0.25 * (rng.cgaussian() * 0.3 + cplx{0.3, 0.2});
        if (std::abs(u) < 0.02 || std::abs(u) > 0.35) continue;
        const cplx lhs_in = wp_series(u);
        const SpherePoint lhs = apply(L, SpherePoint::from_complex(lhs_in));
        const cplx rhs = wp_series(2.0 * u);
        if (lhs.is_infinity()) continue;
        CHECK(std::abs(lhs.to_complex() - rhs) < 1e-8 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("chebyshev maps") {
    const RationalMap c2 = chebyshev_map(2);
    CHECK(c2.degree == 2);
    // z^2 - 2 up to normalization.
    CHECK(std::abs(c2.num.c[0] / c2.num.c[2] - cplx{-2.0, 0.0}) < 1e-14);
    CHECK(std::abs(c2.num.c[1]) < 1e-15);

    const RationalMap c3 = chebyshev_map(3);
    CHECK(c3.degree == 3);
    // z^3 - 3z.
    CHECK(std::abs(c3.num.c[1] / c3.num.c[3] - cplx{-3.0, 0.0}) < 1e-14);

    // Semiconjugacy p(w + 1/w) = w^d + 1/w^d.
    Rng rng(21);
    for (int d : {2, 3, 5, 8, 16}) {
        const RationalMap c = chebyshev_map(d);
        for (int i = 0; i < 20; ++i) {
            const cplx w = std::polar(0.7 + 0.6 * rng.uniform(),
                                      6.2831853 * rng.uniform());
            const cplx x = w + 1.0 / w;
            const cplx want = std::pow(w, d) + std::pow(w, -d);
            const SpherePoint got = apply(c, SpherePoint::from_complex(x));
            CHECK(std::abs(got.to_complex() - want) < 1e-9 * (1.0 + std::abs(want)));
        }
    }

    // Fixed point at 2 (w = 1) for every d.
    const SpherePoint two = SpherePoint::from_complex(cplx{2.0, 0.0});
    CHECK(std::abs(apply(c2, two).to_complex() - cplx{2.0, 0.0}) < 1e-13);
    CHECK(std::abs(apply(c3, two).to_complex() - cplx{2.0, 0.0}) < 1e-13);

    CHECK_THROWS_AS(chebyshev_map(1), DomainError);
    CHECK_THROWS_AS(chebyshev_map(17), DomainError);
}

TEST_CASE("random maps are deterministic and well formed") {
    const RationalMap a = random_map(4, 12345);
    const RationalMap b = random_map(4, 12345);
    REQUIRE(a.num.c.size() == b.num.c.size());
    for (std::size_t i = 0; i < a.num.c.size(); ++i) CHECK(a.num.c[i] == b.num.c[i]);
    for (std::size_t i = 0; i < a.den.c.size(); ++i) CHECK(a.den.c[i] == b.den.c[i]);
    CHECK(a.degree == 4);

    const RationalMap c = random_map(4, 12346);
    bool differs = a.num.c.size() != c.num.c.size();
    for (std::size_t i = 0; !differs && i < a.num.c.size(); ++i) {
        differs = a.num.c[i] != c.num.c[i];
    }
    CHECK(differs);

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        CHECK(random_map(2 + seed % 5, seed).degree == static_cast<int>(2 + seed % 5));
    }
    CHECK_THROWS_AS(random_map(1, 1), DomainError);
    CHECK_THROWS_AS(random_map(17, 1), DomainError);
}

TEST_CASE("family spec parsing") {
    const FamilyLabel p = parse_family("power:d=4");
    CHECK(p.name == Family::power);
    CHECK(p.d == 4);
    CHECK(build_family(p).degree == 4);

    const FamilyLabel t = parse_family("theorem1:n=2");
    CHECK(t.name == Family::theorem1);
    CHECK(build_family(t).degree == 10);

    CHECK(parse_family("lattes4").name == Family::lattes4);
    CHECK(parse_family("chebyshev:d=3").d == 3);

    const FamilyLabel r = parse_family("random:d=5:seed=42");
    CHECK(r.name == Family::random_family);
    CHECK(r.d == 5);
    CHECK(r.seed == 42);
    CHECK(r.to_string() == "random:d=5:seed=42");

    CHECK_THROWS_AS(parse_family("nope"), DomainError);
    CHECK_THROWS_AS(parse_family("power:q=4"), DomainError);
    CHECK_THROWS_AS(parse_family("power:d=x"), DomainError);
}
