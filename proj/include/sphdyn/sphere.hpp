#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace sphdyn {

using cplx = std::complex<double>;

// Two stereographic charts: Z is the usual coordinate z, U is u = 1/z.
enum class Chart { Z, U };

// A point of the Riemann sphere. Canonical form keeps |coord| <= 1 in the
// active chart; points on the equator |z| = 1 live in chart Z. Infinity is
// (U, 0). Keeping coordinates in the closed unit disc bounds every
// polynomial evaluation downstream.
struct SpherePoint {
    Chart chart = Chart::Z;
    cplx coord{0.0, 0.0};

    static SpherePoint from_complex(cplx z);
    static SpherePoint infinity() { return SpherePoint{Chart::U, cplx{0.0, 0.0}}; }

    SpherePoint canonical() const;

    bool is_infinity() const { return chart == Chart::U && coord == cplx{0.0, 0.0}; }

    // Homogeneous representative [a : b] with z = a/b; in canonical form one
    // component is 1 and the other has modulus <= 1.
    std::pair<cplx, cplx> homogeneous() const {
        return chart == Chart::Z ? std::pair<cplx, cplx>{coord, cplx{1.0, 0.0}}
                                 : std::pair<cplx, cplx>{cplx{1.0, 0.0}, coord};
    }

    // Value as an ordinary complex number; +inf magnitude for infinity.
    cplx to_complex() const;
};

// Chordal metric normalized so that d(0, infinity) = 1.
double chordal_distance(const SpherePoint& p, const SpherePoint& q);

// Diametrically opposite point: z -> -1/conj(z).
SpherePoint antipode(const SpherePoint& p);

enum class GridScheme { fibonacci, two_chart_product };

// Deterministic quadrature grid on the sphere. Weights are positive and sum
// to the total spherical area pi (exactly, by final rescaling).
struct SphereGrid {
    std::vector<SpherePoint> points;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }
};

// n >= 8 requested nodes; the actual count is in [n, 2n].
SphereGrid make_grid(int n, GridScheme scheme);

// Sum of w_i * g(p_i). Throws if g is non-finite at a node.
double quadrature(const std::function<double(const SpherePoint&)>& g,
                  const SphereGrid& grid);

// Gauss-Legendre nodes/weights on [0, 1]. Shared with the disc quadratures.
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace sphdyn
