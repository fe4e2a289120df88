#include "qteich/classical.hpp"
#include "qteich/io.hpp"
#include "qteich/kashaev_maps.hpp"
#include "qteich/suites.hpp"
#include "qteich/triangulation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace qteich;
using io::json;

namespace {

enum Exit { Ok = 0, Refuted = 1, BadInput = 2, Inapplicable = 3, Undecided = 4 };

struct Options {
    int genus = 0;
    int punctures = 4;
    std::string input, target, moves, coords, out;
    std::vector<int> sizes{3, 5, 7};
    int samples = 5;
    int inputs = 100;
    int depth = 3;
    uint64_t seed = TrialConfig{}.seed;
    std::string a, b;
    bool exact = false;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

void write_json(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

DecoratedTriangulation surface_of(const Options& o) {
    if (!o.input.empty()) return io::triangulation_from_json(read_json(o.input));
    return build_standard(o.genus, o.punctures);
}

TrialConfig trial_config(const Options& o, const std::string& suite) {
    TrialConfig cfg;
    cfg.sizes = o.sizes;
    cfg.samples = o.samples;
    cfg.min_successes = std::min<int>(cfg.min_successes, static_cast<int>(o.sizes.size()) * o.samples);
    cfg.seed = o.seed;
    cfg.backend = o.exact ? Backend::Exact : Backend::ModP;
    // The iff suite defaults to the parameters at which the squares commute.
    const bool iff = suite == "ab-iff";
    cfg.a = o.a.empty() ? (iff ? ParamSpec::q_power(-2) : ParamSpec::any()) : ParamSpec::parse(o.a);
    cfg.b = o.b.empty() ? (iff ? ParamSpec::q_power(3) : ParamSpec::any()) : ParamSpec::parse(o.b);
    return cfg;
}

int cmd_fixture(const Options& o) {
    write_json(io::to_json(surface_of(o)), o.out);
    return Ok;
}

int cmd_transform(const Options& o) {
    auto tau = surface_of(o);
    if (o.moves.empty()) throw InvalidInput("transform needs --moves");
    auto moves = io::moves_from_json(read_json(o.moves));
    io::Coordinates c;
    if (!o.coords.empty()) c = io::coordinates_from_json(read_json(o.coords));
    if (c.kashaev) validate(*c.kashaev, tau);
    if (c.shear) validate_edge_coords(*c.shear, tau, "shear");
    if (c.lambda) validate_edge_coords(*c.lambda, tau, "lambda");
    for (size_t t = 0; t < moves.size(); ++t) {
        try {
            check_applicable(tau, moves[t]);
        } catch (const NotApplicable& e) {
            throw NotApplicable("move " + std::to_string(t + 1) + " (" + describe(moves[t]) + "): " + e.what());
        }
        if (c.kashaev) c.kashaev = kashaev_change(*c.kashaev, moves[t], tau);
        if (c.shear) c.shear = shear_transport(*c.shear, moves[t], tau);
        if (c.lambda) c.lambda = penner_transport(*c.lambda, moves[t], tau);
        tau = apply_move(tau, moves[t]);
    }
    write_json({{"triangulation", io::to_json(tau)}, {"coordinates", io::to_json(c)}}, o.out);
    return Ok;
}

int cmd_path(const Options& o) {
    if (o.target.empty()) throw InvalidInput("path needs --target");
    auto from = surface_of(o);
    auto to = io::triangulation_from_json(read_json(o.target));
    auto path = find_move_path(from, to, o.depth);
    json out{{"found", path.has_value()}, {"depth_limit", o.depth}};
    out["moves"] = path ? io::to_json(*path) : json(nullptr);
    write_json(out, o.out);
    return path ? Ok : Refuted;
}

const std::vector<std::string> kSuites{"moves",    "exact-sequence", "bivector", "compat",
                                       "penner",   "quantum-torus",  "relations", "pentagon",
                                       "ab-iff",   "path-independence", "specialization"};

SuiteReport run_suite(const std::string& name, const DecoratedTriangulation& tau, const Options& o) {
    const auto cfg = trial_config(o, name);
    if (name == "moves") return move_relations_suite(tau);
    if (name == "exact-sequence") return exact_sequence_suite(tau);
    if (name == "bivector") return bivector_suite(tau);
    if (name == "compat") return compat_suite(tau, o.inputs, o.seed, o.depth);
    if (name == "penner") return penner_suite(tau, o.seed);
    if (name == "quantum-torus") return quantum_torus_suite(tau);
    if (name == "relations") return kashaev_relations_suite(tau, cfg);
    if (name == "pentagon") return kashaev_relations_suite(tau, cfg, true);
    if (name == "ab-iff") return ab_iff_suite(tau, cfg, o.depth > 0);
    if (name == "path-independence") return path_independence_suite(tau, cfg);
    if (name == "specialization") return specialization_suite({tau}, 50, o.seed);
    throw InvalidInput("unknown suite '" + name + "'");
}

int cmd_verify(const std::string& suite, const Options& o) {
    auto tau = surface_of(o);
    json configs = json::object();
    SuiteReport report;
    report.suite = suite;
    if (suite == "all") {
        for (const auto& s : kSuites) {
            report.append(run_suite(s, tau, o));
            configs[s] = io::to_json(trial_config(o, s));
        }
    } else {
        report = run_suite(suite, tau, o);
        configs = io::to_json(trial_config(o, suite));
    }
    json out = io::to_json(report);
    out["surface"] = {{"genus", tau.surface().genus}, {"punctures", tau.surface().punctures}};
    out["seed"] = o.seed;
    out["inputs"] = o.inputs;
    out["depth"] = o.depth;
    out["schedule"] = configs;
    write_json(out, o.out);
    switch (report.status()) {
        case Status::Pass:
            return Ok;
        case Status::Fail:
            return Refuted;
        case Status::Inconclusive:
            return Undecided;
    }
    return Refuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decorated triangulations, coordinate changes and quantum Teichmuller identities"};
    app.require_subcommand(1);
    Options o;
    std::string suite;

    auto surface_flags = [&](CLI::App* c) {
        c->add_option("--genus", o.genus, "surface genus");
        c->add_option("--punctures", o.punctures, "number of punctures");
        c->add_option("--input", o.input, "triangulation JSON (overrides --genus/--punctures)")->check(CLI::ExistingFile);
        c->add_option("--out", o.out, "output file (default stdout)");
    };

    auto* fixture = app.add_subcommand("fixture", "write the standard triangulation of a surface");
    surface_flags(fixture);

    auto* transform = app.add_subcommand("transform", "apply moves to a triangulation and its coordinates");
    surface_flags(transform);
    transform->add_option("--moves", o.moves, "moves JSON")->check(CLI::ExistingFile);
    transform->add_option("--coords", o.coords, "coordinates JSON")->check(CLI::ExistingFile);

    auto* path = app.add_subcommand("path", "search a move path from --input to --target");
    surface_flags(path);
    path->add_option("--target", o.target, "target triangulation JSON")->check(CLI::ExistingFile);
    path->add_option("--depth", o.depth, "search depth limit");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    surface_flags(verify);
    std::vector<std::string> names = kSuites;
    names.push_back("all");
    verify->add_option("suite,--suite", suite, "suite name")->required()->check(CLI::IsMember(names));
    verify->add_option("--sizes", o.sizes, "representation sizes N")->delimiter(',');
    verify->add_option("--samples", o.samples, "oracle samples per size");
    verify->add_option("--inputs", o.inputs, "random inputs per classical square");
    verify->add_option("--depth", o.depth, "flip search depth for exchange cases");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--a", o.a, "parameter a: random, 1, q^k");
    verify->add_option("--b", o.b, "parameter b: random, 1, q^k");
    verify->add_flag("--exact", o.exact, "use exact cyclotomic arithmetic in the oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }

    try {
        if (*fixture) return cmd_fixture(o);
        if (*transform) return cmd_transform(o);
        if (*path) return cmd_path(o);
        return cmd_verify(suite, o);
    } catch (const NotApplicable& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return Inapplicable;
    } catch (const InvalidPath& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return Inapplicable;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    }
}
