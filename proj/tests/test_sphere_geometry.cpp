#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "sphdyn/errors.hpp"
#include "sphdyn/rng.hpp"
#include "sphdyn/sphere.hpp"

using namespace sphdyn;

namespace {

const double kPi = 3.14159265358979323846;

SpherePoint random_point(Rng& rng) {
    // Uniform on the sphere via a uniform chart coordinate in the unit disc
    // is not needed here; any scattered sample does for metric properties.
    const cplx z = rng.cgaussian();
    return SpherePoint::from_complex(z);
}

// Chordal distance straight from the definition in the plane, for finite
// representatives: |p - q| / sqrt((1+|p|^2)(1+|q|^2)).
double chordal_plane(cplx p, cplx q) {
    return std::abs(p - q) / std::sqrt((1.0 + std::norm(p)) * (1.0 + std::norm(q)));
}

}  // namespace

TEST_CASE("canonical form and round trip") {
    const SpherePoint a = SpherePoint::from_complex(cplx{0.5, 0.25});
    CHECK(a.chart == Chart::Z);
    CHECK(a.coord == cplx{0.5, 0.25});

    const SpherePoint b = SpherePoint::from_complex(cplx{4.0, 0.0});
    CHECK(b.chart == Chart::U);
    CHECK(b.coord == cplx{0.25, 0.0});
    CHECK(b.to_complex() == cplx{4.0, 0.0});

    // Equator belongs to chart Z.
    const SpherePoint e = SpherePoint::from_complex(cplx{0.0, 1.0});
    CHECK(e.chart == Chart::Z);

    const SpherePoint inf = SpherePoint::infinity();
    CHECK(inf.is_infinity());
    CHECK(inf.canonical().is_infinity());

    // A non-canonical chart-Z point with |z| > 1 canonicalizes to chart U.
    const SpherePoint big{Chart::Z, cplx{3.0, 4.0}};
    const SpherePoint can = big.canonical();
    CHECK(can.chart == Chart::U);
    CHECK(std::abs(can.to_complex() - cplx{3.0, 4.0}) < 1e-15 * 5.0);

    // canonical() is idempotent.
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const SpherePoint p = random_point(rng);
        const SpherePoint q = p.canonical();
        CHECK(q.chart == q.canonical().chart);
        CHECK(q.coord == q.canonical().coord);
        CHECK(std::abs(q.coord) <= 1.0);
    }
}

TEST_CASE("homogeneous representative") {
    const auto [a0, b0] = SpherePoint::from_complex(cplx{0.5, 0.0}).homogeneous();
    CHECK(a0 == cplx{0.5, 0.0});
    CHECK(b0 == cplx{1.0, 0.0});
    const auto [a1, b1] = SpherePoint::infinity().homogeneous();
    CHECK(a1 == cplx{1.0, 0.0});
    CHECK(b1 == cplx{0.0, 0.0});
}

TEST_CASE("chordal distance examples") {
    const SpherePoint zero = SpherePoint::from_complex(cplx{0.0, 0.0});
    const SpherePoint one = SpherePoint::from_complex(cplx{1.0, 0.0});
    const SpherePoint minus_one = SpherePoint::from_complex(cplx{-1.0, 0.0});
    const SpherePoint inf = SpherePoint::infinity();

    CHECK(chordal_distance(zero, zero) == 0.0);
    CHECK(chordal_distance(zero, inf) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(chordal_distance(one, minus_one) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(chordal_distance(one, inf) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    // Agreement with the planar formula for finite points.
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        const cplx p = 2.0 * rng.cgaussian();
        const cplx q = 2.0 * rng.cgaussian();
        const double want = chordal_plane(p, q);
        const double got = chordal_distance(SpherePoint::from_complex(p),
                                            SpherePoint::from_complex(q));
        CHECK(got == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("chordal distance is a metric") {
    Rng rng(42);
    for (int i = 0; i < 10000; ++i) {
        const SpherePoint a = random_point(rng);
        const SpherePoint b = random_point(rng);
        const SpherePoint c = random_point(rng);
        const double ab = chordal_distance(a, b);
        const double bc = chordal_distance(b, c);
        const double ac = chordal_distance(a, c);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0 + 1e-15);
        CHECK(ab == chordal_distance(b, a));
        CHECK(ac <= ab + bc + 1e-12);
    }
    // Near-infinity stability: no NaN for huge coordinates.
    const SpherePoint huge = SpherePoint::from_complex(cplx{1e300, 0.0});
    CHECK(std::isfinite(chordal_distance(huge, SpherePoint::infinity())));
    CHECK(chordal_distance(huge, SpherePoint::infinity()) < 1e-299);
}

TEST_CASE("antipode") {
    CHECK(antipode(SpherePoint::from_complex(cplx{0.0, 0.0})).is_infinity());
    CHECK(antipode(SpherePoint::infinity()).coord == cplx{0.0, 0.0});
    CHECK(antipode(SpherePoint::infinity()).chart == Chart::Z);

    const SpherePoint one = SpherePoint::from_complex(cplx{1.0, 0.0});
    const SpherePoint a = antipode(one);
    CHECK(std::abs(a.to_complex() - cplx{-1.0, 0.0}) < 1e-15);

    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        const SpherePoint p = random_point(rng);
        const SpherePoint q = antipode(p);
        // Involution and maximal distance.
        CHECK(chordal_distance(antipode(q), p) < 1e-14);
        CHECK(chordal_distance(p, q) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("grid construction") {
    for (const GridScheme scheme : {GridScheme::fibonacci, GridScheme::two_chart_product}) {
        for (const int n : {8, 100, 1000}) {
            const SphereGrid g = make_grid(n, scheme);
            CHECK(g.size() >= static_cast<std::size_t>(n));
            CHECK(g.size() <= static_cast<std::size_t>(2 * n));
            double total = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                CHECK(g.weights[i] > 0.0);
                CHECK(std::abs(g.points[i].coord) <= 1.0);
                total += g.weights[i];
            }
            CHECK(total == doctest::Approx(kPi).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(make_grid(7, GridScheme::fibonacci), DomainError);
}

TEST_CASE("grid determinism is bitwise") {
    const SphereGrid a = make_grid(1000, GridScheme::fibonacci);
    const SphereGrid b = make_grid(1000, GridScheme::fibonacci);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.points[i].coord == b.points[i].coord);
        CHECK(a.points[i].chart == b.points[i].chart);
        CHECK(a.weights[i] == b.weights[i]);
    }
}

TEST_CASE("fibonacci grid covers the sphere") {
    // Every random point has a grid node within a few mean spacings.
    const SphereGrid g = make_grid(2000, GridScheme::fibonacci);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const SpherePoint p = random_point(rng);
        double best = 1.0;
        for (const SpherePoint& q : g.points) {
            best = std::min(best, chordal_distance(p, q));
        }
        CHECK(best < 0.05);
    }
}

TEST_CASE("quadrature constants and caps") {
    for (const GridScheme scheme : {GridScheme::fibonacci, GridScheme::two_chart_product}) {
        const SphereGrid g = make_grid(5000, scheme);
        CHECK(quadrature([](const SpherePoint&) { return 1.0; }, g) ==
              doctest::Approx(kPi).epsilon(1e-12));
        // Indicator of the chart-Z hemisphere: area pi/2 up to grid error.
        const double cap = quadrature(
            [](const SpherePoint& p) { return p.chart == Chart::Z ? 1.0 : 0.0; }, g);
        CHECK(cap == doctest::Approx(kPi / 2.0).epsilon(0.02));
    }
}

TEST_CASE("quadrature converges on a smooth integrand") {
    // With dA = dm(z)/(1+|z|^2)^2 of total mass pi, the integrand
    // g = 1/(1+|z|^2)^2 gives integral dm/(1+|z|^2)^4 = pi/3.
    const auto g = [](const SpherePoint& p) {
        const cplx z = p.to_complex();
        if (p.chart == Chart::U) {
            // 1/(1+|z|^2)^2 = |u|^4/(1+|u|^2)^2 for u = 1/z.
            const double u2 = std::norm(p.coord);
            return u2 * u2 / ((1.0 + u2) * (1.0 + u2));
        }
        const double z2 = std::norm(z);
        return 1.0 / ((1.0 + z2) * (1.0 + z2));
    };
    const double coarse =
        quadrature(g, make_grid(2000, GridScheme::two_chart_product));
    const double fine =
        quadrature(g, make_grid(50000, GridScheme::two_chart_product));
    CHECK(fine == doctest::Approx(kPi / 3.0).epsilon(1e-6));
    CHECK(std::abs(coarse - kPi / 3.0) < 0.01);
}

TEST_CASE("quadrature rejects non-finite integrands") {
    const SphereGrid g = make_grid(64, GridScheme::fibonacci);
    CHECK_THROWS_WITH_AS(
        quadrature([](const SpherePoint&) {
            return std::numeric_limits<double>::quiet_NaN();
        }, g),
        doctest::Contains("node"), DomainError);
}

TEST_CASE("gauss-legendre nodes on [0,1]") {
    std::vector<double> x, w;
    gauss_legendre_01(16, x, w);
    REQUIRE(x.size() == 16);
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < 16; ++i) {
        CHECK(x[i] > 0.0);
        CHECK(x[i] < 1.0);
        s0 += w[i];
        s1 += w[i] * x[i];
        s2 += w[i] * std::pow(x[i], 20);
    }
    CHECK(s0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s1 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(1.0 / 21.0).epsilon(1e-13));
}
