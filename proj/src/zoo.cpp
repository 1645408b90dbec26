#include "sphdyn/zoo.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "sphdyn/errors.hpp"
#include "sphdyn/rng.hpp"

namespace sphdyn {

std::string FamilyLabel::to_string() const {
    std::ostringstream os;
    switch (name) {
        case Family::power: os << "power:d=" << d; break;
        case Family::theorem1: os << "theorem1:n=" << n; break;
        case Family::lattes4: os << "lattes4"; break;
        case Family::chebyshev: os << "chebyshev:d=" << d; break;
        case Family::random_family: os << "random:d=" << d << ":seed=" << seed; break;
    }
    return os.str();
}

RationalMap power_map(int d) {
    if (d < 1) throw DomainError("power_map: d must be >= 1");
    Poly num;
    num.c.assign(static_cast<std::size_t>(d) + 1, cplx{0.0, 0.0});
    num.c[d] = cplx{1.0, 0.0};
    Poly den{{cplx{1.0, 0.0}}};
    return make_map(std::move(num), std::move(den));
}

RationalMap theorem1_map(int n) {
    if (n < 1 || n > 6) throw DomainError("theorem1_map: n must be in [1, 6]");
    // Products over k of (e^{4k} W -+ 1) as polynomials in W = w^n.
    Poly num_w{{cplx{1.0, 0.0}}};
    Poly den_w{{cplx{1.0, 0.0}}};
    for (int k = -n; k <= n; ++k) {
        const double e4k = std::exp(4.0 * k);
        num_w = poly_mul(num_w, Poly{{cplx{-1.0, 0.0}, cplx{e4k, 0.0}}});
        den_w = poly_mul(den_w, Poly{{cplx{1.0, 0.0}, cplx{e4k, 0.0}}});
    }
    // Expand W = w^n by spreading coefficients.
    const auto spread = [n](const Poly& p) {
        Poly q;
        q.c.assign(static_cast<std::size_t>(p.degree()) * n + 1, cplx{0.0, 0.0});
        for (int j = 0; j <= p.degree(); ++j) q.c[static_cast<std::size_t>(j) * n] = p.c[j];
        return q;
    };
    return make_map(spread(num_w), spread(den_w));
}

RationalMap lattes4() {
    Poly num{{cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{2.0, 0.0}, cplx{0.0, 0.0},
              cplx{1.0, 0.0}}};
    Poly den{{cplx{0.0, 0.0}, cplx{-4.0, 0.0}, cplx{0.0, 0.0}, cplx{4.0, 0.0}}};
    return make_map(std::move(num), std::move(den));
}

RationalMap chebyshev_map(int d) {
    if (d < 2 || d > 16) throw DomainError("chebyshev_map: d must be in [2, 16]");
    Poly prev{{cplx{2.0, 0.0}}};            // p_0 = 2
    Poly cur{{cplx{0.0, 0.0}, cplx{1.0, 0.0}}};  // p_1 = z
    for (int k = 2; k <= d; ++k) {
        Poly next = poly_sub(poly_mul(Poly{{cplx{0.0, 0.0}, cplx{1.0, 0.0}}}, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return make_map(std::move(cur), Poly{{cplx{1.0, 0.0}}});
}

RationalMap random_map(int d, std::uint64_t seed) {
    if (d < 2 || d > 16) throw DomainError("random_map: d must be in [2, 16]");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Poly num, den;
        num.c.resize(static_cast<std::size_t>(d) + 1);
        den.c.resize(static_cast<std::size_t>(d) + 1);
        for (auto& v : num.c) v = rng.cgaussian();
        for (auto& v : den.c) v = rng.cgaussian();
        while (std::abs(num.c[d]) < 0.1) num.c[d] = rng.cgaussian();
        while (std::abs(den.c[d]) < 0.1) den.c[d] = rng.cgaussian();
        try {
            return make_map(std::move(num), std::move(den));
        } catch (const DomainError&) {
            // gate failed; resample
        }
    }
    throw DomainError("random_map: 100 resample attempts failed");
}

FamilyLabel parse_family(const std::string& spec) {
    std::vector<std::string> parts;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw DomainError("parse_family: empty spec");

    const auto get_param = [&](const std::string& key) -> long long {
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i].rfind(key + "=", 0) == 0) {
                try {
                    std::size_t used = 0;
                    const std::string digits = parts[i].substr(key.size() + 1);
                    const long long v = std::stoll(digits, &used);
                    if (used != digits.size()) throw std::invalid_argument(digits);
                    return v;
                } catch (const std::exception&) {
                    throw DomainError("parse_family: bad value for '" + key + "' in " + spec);
                }
            }
        }
        throw DomainError("parse_family: missing parameter '" + key + "' in " + spec);
    };

    FamilyLabel label;
    if (parts[0] == "power") {
        label.name = Family::power;
        label.d = static_cast<int>(get_param("d"));
    } else if (parts[0] == "theorem1") {
        label.name = Family::theorem1;
        label.n = static_cast<int>(get_param("n"));
    } else if (parts[0] == "lattes4") {
        label.name = Family::lattes4;
    } else if (parts[0] == "chebyshev") {
        label.name = Family::chebyshev;
        label.d = static_cast<int>(get_param("d"));
    } else if (parts[0] == "random") {
        label.name = Family::random_family;
        label.d = static_cast<int>(get_param("d"));
        label.seed = static_cast<std::uint64_t>(get_param("seed"));
    } else {
        throw DomainError("parse_family: unknown family '" + parts[0] + "'");
    }
    return label;
}

RationalMap build_family(const FamilyLabel& label) {
    switch (label.name) {
        case Family::power: return power_map(label.d);
        case Family::theorem1: return theorem1_map(label.n);
        case Family::lattes4: return lattes4();
        case Family::chebyshev: return chebyshev_map(label.d);
        case Family::random_family: return random_map(label.d, label.seed);
    }
    throw InternalError("build_family: unreachable");
}

}  // namespace sphdyn
