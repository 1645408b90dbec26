#include "sphdyn/sphere.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sphdyn/errors.hpp"

namespace sphdyn {

namespace {
constexpr double kPi = std::numbers::pi;
}

SpherePoint SpherePoint::from_complex(cplx z) {
    return SpherePoint{Chart::Z, z}.canonical();
}

SpherePoint SpherePoint::canonical() const {
    const double m = std::abs(coord);
    if (chart == Chart::Z) {
        if (m <= 1.0) return *this;
        return SpherePoint{Chart::U, 1.0 / coord};
    }
    // Ties on the equator go to chart Z.
    if (m < 1.0) return *this;
    return SpherePoint{Chart::Z, 1.0 / coord};
}

cplx SpherePoint::to_complex() const {
    if (chart == Chart::Z) return coord;
    if (coord == cplx{0.0, 0.0}) {
        return cplx{std::numeric_limits<double>::infinity(), 0.0};
    }
    return 1.0 / coord;
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
    const auto [a1, b1] = p.canonical().homogeneous();
    const auto [a2, b2] = q.canonical().homogeneous();
    const double num = std::abs(a1 * b2 - a2 * b1);
    const double n1 = std::sqrt(std::norm(a1) + std::norm(b1));
    const double n2 = std::sqrt(std::norm(a2) + std::norm(b2));
    return num / (n1 * n2);
}

SpherePoint antipode(const SpherePoint& p) {
    const SpherePoint c = p.canonical();
    // [a : b] -> [-conj(b) : conj(a)]; in chart terms z -> -1/conj(z).
    if (c.chart == Chart::Z) {
        return SpherePoint{Chart::U, -std::conj(c.coord)}.canonical();
    }
    return SpherePoint{Chart::Z, -std::conj(c.coord)}.canonical();
}

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    // Nodes of P_n on (-1, 1) by Newton from Chebyshev initial guesses.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) { p0 = x; }
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double pn = (n == 1) ? x : p1;
            const double pm = (n == 1) ? 1.0 : p0;
            pp = n * (x * pn - pm) / (x * x - 1.0);
            const double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // Map from (-1,1) to (0,1).
        nodes[i] = 0.5 * (1.0 - x);
        weights[i] = 1.0 / ((1.0 - x * x) * pp * pp);
    }
}

namespace {

SphereGrid fibonacci_grid(int n) {
    SphereGrid g;
    g.points.reserve(n);
    g.weights.assign(n, kPi / n);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int i = 0; i < n; ++i) {
        const double h = 1.0 - (2.0 * i + 1.0) / n;  // height in (-1, 1)
        const double r = std::sqrt(1.0 - h * h);
        const double th = 2.0 * kPi * std::fmod(i / golden, 1.0);
        const double x = r * std::cos(th);
        const double y = r * std::sin(th);
        // Stereographic projection, chart chosen by hemisphere so the
        // coordinate never leaves the unit disc.
        if (h <= 0.0) {
            g.points.push_back(SpherePoint{Chart::Z, cplx{x, y} / (1.0 - h)});
        } else {
            g.points.push_back(SpherePoint{Chart::U, cplx{x, -y} / (1.0 + h)});
        }
    }
    return g;
}

SphereGrid two_chart_grid(int n) {
    // nr radial Gauss-Legendre nodes x ntheta angles per chart.
    int nr = static_cast<int>(std::ceil(std::sqrt(n / 4.0)));
    if (nr < 2) nr = 2;
    const int ntheta = 2 * nr;
    std::vector<double> rn, rw;
    gauss_legendre_01(nr, rn, rw);
    SphereGrid g;
    g.points.reserve(2 * static_cast<std::size_t>(nr) * ntheta);
    g.weights.reserve(g.points.capacity());
    for (int chart = 0; chart < 2; ++chart) {
        for (int i = 0; i < nr; ++i) {
            const double r = rn[i];
            const double s = 1.0 + r * r;
            const double w = rw[i] * r / (s * s) * (2.0 * kPi / ntheta);
            for (int j = 0; j < ntheta; ++j) {
                const double th = 2.0 * kPi * (j + 0.5) / ntheta;
                const cplx c{r * std::cos(th), r * std::sin(th)};
                g.points.push_back(SpherePoint{chart == 0 ? Chart::Z : Chart::U, c});
                g.weights.push_back(w);
            }
        }
    }
    return g;
}

}  // namespace

SphereGrid make_grid(int n, GridScheme scheme) {
    if (n < 8) throw DomainError("make_grid: n must be >= 8");
    SphereGrid g = scheme == GridScheme::fibonacci ? fibonacci_grid(n) : two_chart_grid(n);
    double total = 0.0;
    for (double w : g.weights) total += w;
    const double scale = kPi / total;
    for (double& w : g.weights) w *= scale;
    return g;
}

double quadrature(const std::function<double(const SpherePoint&)>& g,
                  const SphereGrid& grid) {
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const double v = g(grid.points[i]);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "quadrature: non-finite integrand at node " << i << " (chart "
               << (grid.points[i].chart == Chart::Z ? 'Z' : 'U') << ", coord "
               << grid.points[i].coord.real() << "+" << grid.points[i].coord.imag()
               << "i)";
            throw DomainError(os.str());
        }
        acc += grid.weights[i] * v;
    }
    return acc;
}

}  // namespace sphdyn
