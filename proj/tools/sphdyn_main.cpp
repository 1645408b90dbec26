#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sphdyn/errors.hpp"
#include "sphdyn/io.hpp"
#include "sphdyn/zoo.hpp"

namespace {

using sphdyn::json;

struct CommonOpts {
    std::string family;
    std::string map_file;
    std::string out;  // empty = stdout
    std::string format = "json";
    int workers = 0;  // 0 = library default
};

void add_map_options(CLI::App* cmd, CommonOpts& o) {
    auto* fam = cmd->add_option("--family", o.family,
                                "family spec, e.g. power:d=2, theorem1:n=3, lattes4, "
                                "chebyshev:d=2, random:d=5:seed=42");
    auto* mf = cmd->add_option("--map", o.map_file, "path to a map JSON file");
    fam->excludes(mf);
    mf->excludes(fam);
}

void add_output_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--workers", o.workers, "worker threads (default: all cores)")
        ->check(CLI::NonNegativeNumber);
}

struct ResolvedMap {
    sphdyn::RationalMap map;
    std::string label;
};

ResolvedMap resolve_map(const CommonOpts& o) {
    if (!o.family.empty()) {
        const sphdyn::FamilyLabel label = sphdyn::parse_family(o.family);
        return ResolvedMap{sphdyn::build_family(label), label.to_string()};
    }
    if (!o.map_file.empty()) {
        return ResolvedMap{sphdyn::map_from_file(o.map_file), "custom"};
    }
    throw sphdyn::DomainError("one of --family or --map is required");
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw sphdyn::DomainError("cannot write output file: " + out);
    f << text;
    if (text.empty() || text.back() != '\n') f << "\n";
}

void emit_json(json j, json config, const CommonOpts& o) {
    j["config"] = std::move(config);
    emit(j.dump(2), o.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sphdyn: spherical-derivative invariants of rational self-maps"};
    app.require_subcommand(1);

    CommonOpts opts;
    int grid = 0;
    int n_seeds = 8;
    int iter_n = 2;
    int n_max = 5;
    int m_max = 0;
    int paths = 4000;
    int burn_in = 40;
    int cycles_m = 1;
    int mk_d = 2;
    int mk_starts = 8;
    std::uint64_t seed = 1;
    double tol = 1e-3;

    auto* knorm = app.add_subcommand("knorm", "global max of the spherical derivative norm");
    add_map_options(knorm, opts);
    add_output_options(knorm, opts);
    knorm->add_option("--grid", grid, "grid size (0 = auto)")
        ->check(CLI::Range(0, 100000000));
    knorm->add_option("--seeds", n_seeds, "polish seeds")->check(CLI::PositiveNumber);

    auto* kiter = app.add_subcommand("kiter", "K(f^n) via chain-rule maximization");
    add_map_options(kiter, opts);
    add_output_options(kiter, opts);
    kiter->add_option("--n", iter_n, "iterate order")->required()->check(CLI::PositiveNumber);
    kiter->add_option("--grid", grid, "grid size (0 = auto)")->check(CLI::Range(0, 100000000));
    kiter->add_option("--seeds", n_seeds, "polish seeds")->check(CLI::PositiveNumber);

    auto* bracket = app.add_subcommand("bracket", "two-sided bracket for k_infinity");
    add_map_options(bracket, opts);
    add_output_options(bracket, opts);
    bracket->add_option("--n-max", n_max, "max iterate order for the upper side")
        ->check(CLI::Range(2, 64));
    bracket->add_option("--m-max", m_max, "max cycle period for the lower side (0 = auto)")
        ->check(CLI::Range(0, 64));
    bracket->add_option("--grid", grid, "grid size (0 = auto)")->check(CLI::Range(0, 100000000));

    auto* chimax = app.add_subcommand("chimax", "max characteristic exponent from cycles");
    add_map_options(chimax, opts);
    add_output_options(chimax, opts);
    chimax->add_option("--m-max", m_max, "max cycle period (0 = auto)")->check(CLI::Range(0, 64));

    auto* chiavg = app.add_subcommand("chiavg", "average characteristic exponent over mu");
    add_map_options(chiavg, opts);
    add_output_options(chiavg, opts);
    chiavg->add_option("--paths", paths, "number of backward paths")->check(CLI::PositiveNumber);
    chiavg->add_option("--burn-in", burn_in, "backward steps per path")->check(CLI::Range(20, 100000));
    chiavg->add_option("--seed", seed, "RNG seed");

    auto* chain = app.add_subcommand("chain-report", "full inequality-chain report");
    add_map_options(chain, opts);
    add_output_options(chain, opts);
    chain->add_option("--n-max", n_max, "max iterate order")->check(CLI::Range(2, 64));
    chain->add_option("--m-max", m_max, "max cycle period (0 = auto)")->check(CLI::Range(0, 64));
    chain->add_option("--paths", paths, "number of backward paths")->check(CLI::PositiveNumber);
    chain->add_option("--burn-in", burn_in, "backward steps per path")->check(CLI::Range(20, 100000));
    chain->add_option("--seed", seed, "RNG seed");
    chain->add_option("--grid", grid, "grid size (0 = auto)")->check(CLI::Range(0, 100000000));

    auto* th1 = app.add_subcommand("theorem1", "growth table for the tanh-product family");
    add_output_options(th1, opts);
    int th1_nmax = 3;
    th1->add_option("--n-max", th1_nmax, "last family index")->check(CLI::Range(1, 4));
    th1->add_option("--grid", grid, "phi quadrature size (0 = default)")
        ->check(CLI::Range(0, 100000000));

    auto* lattes = app.add_subcommand("lattes-demo", "multiplier and exponent gap of the Lattes map");
    add_output_options(lattes, opts);
    lattes->add_option("--paths", paths, "number of backward paths")->check(CLI::PositiveNumber);
    lattes->add_option("--seed", seed, "RNG seed");

    auto* mink = app.add_subcommand("minimize-k", "exploratory search for small K at fixed degree");
    add_output_options(mink, opts);
    mink->add_option("--d", mk_d, "degree")->required()->check(CLI::Range(2, 6));
    mink->add_option("--starts", mk_starts, "multistart count")->check(CLI::PositiveNumber);
    mink->add_option("--seed", seed, "RNG seed");

    auto* phi = app.add_subcommand("phi", "unit-disc integral of the derivative norm");
    add_map_options(phi, opts);
    add_output_options(phi, opts);
    phi->add_option("--grid", grid, "quadrature size")->check(CLI::Range(0, 100000000));

    auto* cycles = app.add_subcommand("cycles", "cycle census for period m");
    add_map_options(cycles, opts);
    add_output_options(cycles, opts);
    cycles->add_option("--m", cycles_m, "period")->required()->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (opts.workers > 0) {
        setenv("SPHDYN_WORKERS", std::to_string(opts.workers).c_str(), 1);
    }

    const auto base_config = [&](const std::string& command) {
        json c;
        c["command"] = command;
        if (!opts.family.empty()) c["family"] = opts.family;
        if (!opts.map_file.empty()) c["map"] = opts.map_file;
        c["format"] = opts.format;
        c["workers"] = opts.workers;
        return c;
    };

    try {
        if (knorm->parsed()) {
            const ResolvedMap rm = resolve_map(opts);
            const sphdyn::KReport rep = sphdyn::k_norm(rm.map, grid, n_seeds);
            json c = base_config("knorm");
            c["grid"] = rep.grid_size;
            c["seeds"] = n_seeds;
            emit_json(sphdyn::kreport_to_json(rep), c, opts);
        } else if (kiter->parsed()) {
            const ResolvedMap rm = resolve_map(opts);
            const sphdyn::KReport rep = sphdyn::k_norm_iterate(rm.map, iter_n, grid, n_seeds);
            json c = base_config("kiter");
            c["n"] = iter_n;
            c["grid"] = rep.grid_size;
            c["seeds"] = n_seeds;
            emit_json(sphdyn::kreport_to_json(rep), c, opts);
        } else if (bracket->parsed()) {
            const ResolvedMap rm = resolve_map(opts);
            int mm = m_max;
            if (mm == 0) {
                mm = std::max(1, static_cast<int>(std::log(4096.0) /
                                                  std::log(double(rm.map.degree))));
            }
            const sphdyn::KInfinityBracket b = sphdyn::k_infinity_bracket(
                rm.map, n_max, mm, sphdyn::BracketOpts{grid, n_seeds});
            json c = base_config("bracket");
            c["n_max"] = n_max;
            c["m_max"] = mm;
            c["grid"] = grid;
            emit_json(sphdyn::bracket_to_json(b), c, opts);
        } else if (chimax->parsed()) {
            const ResolvedMap rm = resolve_map(opts);
            int mm = m_max;
            if (mm == 0) {
                mm = std::max(1, static_cast<int>(std::log(4096.0) /
                                                  std::log(double(rm.map.degree))));
            }
            const double v = sphdyn::chi_max_lower(rm.map, mm);
            json j;
            j["chi_max_lower"] = std::isfinite(v) ? json(v) : json(nullptr);
            json c = base_config("chimax");
            c["m_max"] = mm;
            emit_json(j, c, opts);
        } else if (chiavg->parsed()) {
            const ResolvedMap rm = resolve_map(opts);
            const sphdyn::ChiEstimate e =
                sphdyn::chi_average(rm.map, paths, burn_in, seed);
            json c = base_config("chiavg");
            c["paths"] = paths;
            c["burn_in"] = burn_in;
            c["seed"] = seed;
            emit_json(sphdyn::chi_to_json(e), c, opts);
        } else if (chain->parsed()) {
            const ResolvedMap rm = resolve_map(opts);
            sphdyn::ChainOpts co;
            co.n_max = n_max;
            co.m_max = m_max;
            co.paths = paths;
            co.burn_in = burn_in;
            co.seed = seed;
            co.grid_size = grid;
            const sphdyn::ExponentReport rep =
                sphdyn::inequality_chain_report(rm.map, co, rm.label);
            json c = base_config("chain-report");
            c["n_max"] = n_max;
            c["m_max"] = m_max;
            c["paths"] = paths;
            c["burn_in"] = burn_in;
            c["seed"] = seed;
            c["grid"] = grid;
            emit_json(sphdyn::exponent_report_to_json(rep), c, opts);
        } else if (th1->parsed()) {
            const auto rows =
                sphdyn::theorem1_growth_table(th1_nmax, grid > 0 ? grid : 20000);
            if (opts.format == "csv") {
                emit(sphdyn::growth_table_to_csv(rows), opts.out);
            } else {
                json arr = json::array();
                for (const auto& r : rows) {
                    arr.push_back(json{{"n", r.n},
                                       {"degree", r.degree},
                                       {"k", r.k},
                                       {"ratio", r.ratio},
                                       {"phi", r.phi}});
                }
                json j;
                j["rows"] = arr;
                json c = base_config("theorem1");
                c["n_max"] = th1_nmax;
                emit_json(j, c, opts);
            }
        } else if (lattes->parsed()) {
            const sphdyn::RationalMap L = sphdyn::lattes4();
            double mult_inf = 0.0;
            for (const auto& cyc : sphdyn::periodic_cycles(L, 1)) {
                if (cyc.points.size() == 1 && cyc.points[0].is_infinity()) {
                    mult_inf = std::abs(cyc.multiplier);
                }
            }
            const double lower = sphdyn::chi_max_lower(L, 1);
            const sphdyn::ChiEstimate chi = sphdyn::chi_average(L, paths, 40, seed);
            json j;
            j["multiplier_at_infinity"] = mult_inf;
            j["chi_max_lower_m1"] = lower;
            j["chi_a"] = sphdyn::chi_to_json(chi);
            j["strict_gap"] = chi.value + 3 * chi.stderr_ < lower;
            json c = base_config("lattes-demo");
            c["paths"] = paths;
            c["seed"] = seed;
            emit_json(j, c, opts);
        } else if (mink->parsed()) {
            const sphdyn::MinKResult r = sphdyn::min_k_search(mk_d, mk_starts, seed);
            json j;
            j["k"] = r.k;
            j["best_map"] = sphdyn::map_to_json(r.best_map);
            json c = base_config("minimize-k");
            c["d"] = mk_d;
            c["starts"] = mk_starts;
            c["seed"] = seed;
            emit_json(j, c, opts);
        } else if (phi->parsed()) {
            const ResolvedMap rm = resolve_map(opts);
            const int g = grid > 0 ? grid : 20000;
            const double v = sphdyn::phi_functional(rm.map, g);
            json j;
            j["phi"] = v;
            json c = base_config("phi");
            c["grid"] = g;
            emit_json(j, c, opts);
        } else if (cycles->parsed()) {
            const ResolvedMap rm = resolve_map(opts);
            const auto cs = sphdyn::periodic_cycles(rm.map, cycles_m);
            json j;
            j["cycles"] = sphdyn::cycles_to_json(cs);
            json c = base_config("cycles");
            c["m"] = cycles_m;
            emit_json(j, c, opts);
        }
    } catch (const sphdyn::DomainError& e) {
        json err;
        err["error"] = e.what();
        emit(err.dump(2), opts.out);
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = std::string("internal error: ") + e.what();
        emit(err.dump(2), opts.out);
        return 1;
    }
    return 0;
}
