#include "qteich/io.hpp"

#include <algorithm>

namespace qteich::io {

namespace {

int index_from(const json& j, const char* key, int count) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw InvalidInput(std::string("missing integer '") + key + "'");
    int v = j[key].get<int>();
    if (v < 1 || v > count) throw InvalidInput(std::string("'") + key + "' out of range: " + std::to_string(v));
    return v - 1;
}

int checked_index(const json& j, int count, const char* what) {
    if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
    int v = j.get<int>();
    if (v < 1 || v > count) throw InvalidInput(std::string(what) + " out of range: " + std::to_string(v));
    return v - 1;
}

mpz_class integer_from(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    mpz_class z;
    if (!j.is_string() || z.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("coordinates must be integer pairs");
    return z;
}

Rational positive_from_pair(const json& num, const json& den) {
    mpz_class n = integer_from(num), d = integer_from(den);
    if (d == 0) throw InvalidInput("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    if (r <= 0) throw InvalidInput("coordinates must be positive");
    return r;
}

json edge_vector(const RationalVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_pair(x));
    return a;
}

RationalVec edge_vector_from(const json& j) {
    if (!j.is_array()) throw InvalidInput("expected an array of [num, den] pairs");
    RationalVec v;
    for (const auto& p : j) v.push_back(rational_from_pair(p));
    return v;
}

json info_object(const std::vector<std::pair<std::string, std::string>>& info) {
    json o = json::object();
    for (const auto& [k, v] : info) o[k] = v;
    return o;
}

}  // namespace

json to_json(const DecoratedTriangulation& tau) {
    json tris = json::array();
    for (const auto& t : tau.triangles()) tris.push_back({{"sides", {t.sides[0] + 1, t.sides[1] + 1, t.sides[2] + 1}}});
    return {{"genus", tau.surface().genus}, {"punctures", tau.surface().punctures}, {"triangles", tris}};
}

DecoratedTriangulation triangulation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("punctures") || !j.contains("triangles"))
        throw InvalidInput("triangulation needs genus, punctures and triangles");
    auto sig = SurfaceSig::make(j["genus"].get<int>(), j["punctures"].get<int>());
    std::vector<Triangle> tris;
    for (const auto& t : j["triangles"]) {
        const auto& s = t.at("sides");
        if (!s.is_array() || s.size() != 3) throw InvalidInput("each triangle has three sides");
        Triangle tr;
        for (int k = 0; k < 3; ++k) tr.sides[k] = checked_index(s[k], sig.edge_count(), "edge id");
        tris.push_back(tr);
    }
    return DecoratedTriangulation(sig, std::move(tris));
}

json to_json(const Move& mv) {
    if (const auto* r = std::get_if<Reindex>(&mv)) {
        json p = json::array();
        for (int x : r->perm) p.push_back(x + 1);
        return {{"op", "alpha"}, {"perm", p}};
    }
    if (const auto* r = std::get_if<MarkRotation>(&mv)) return {{"op", "rho"}, {"i", r->tri + 1}};
    const auto& d = std::get<DiagonalExchange>(mv);
    return {{"op", "phi"}, {"i", d.i + 1}, {"j", d.j + 1}};
}

json to_json(const MoveSequence& moves) {
    json a = json::array();
    for (const auto& m : moves) a.push_back(to_json(m));
    return a;
}

Move move_from_json(const json& j) {
    const std::string op = j.value("op", "");
    const int big = 1 << 20;
    if (op == "rho") return MarkRotation{index_from(j, "i", big)};
    if (op == "phi") return DiagonalExchange{index_from(j, "i", big), index_from(j, "j", big)};
    if (op == "alpha") {
        if (!j.contains("perm") || !j["perm"].is_array()) throw InvalidInput("alpha needs 'perm'");
        const int n = static_cast<int>(j["perm"].size());
        std::vector<int> p;
        for (const auto& x : j["perm"]) p.push_back(checked_index(x, n, "permutation entry"));
        auto sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[i] != i) throw InvalidInput("'perm' is not a permutation");
        return Reindex{p};
    }
    throw InvalidInput("unknown move op '" + op + "'");
}

MoveSequence moves_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("moves must be an array");
    MoveSequence out;
    for (const auto& m : j) out.push_back(move_from_json(m));
    return out;
}

// Integers too large for a JSON number are written as decimal strings.
json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json rational_pair(const Rational& r) { return {integer_json(r.get_num()), integer_json(r.get_den())}; }

Rational rational_from_pair(const json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("expected [num, den]");
    return positive_from_pair(j[0], j[1]);
}

json to_json(const Coordinates& c) {
    json o = json::object();
    if (c.kashaev) {
        json a = json::array();
        for (size_t t = 0; t < c.kashaev->y.size(); ++t) {
            auto y = rational_pair(c.kashaev->y[t]), z = rational_pair(c.kashaev->z[t]);
            a.push_back({y[0], y[1], z[0], z[1]});
        }
        o["kashaev"] = a;
    }
    if (c.shear) o["shear"] = edge_vector(*c.shear);
    if (c.lambda) o["lambda"] = edge_vector(*c.lambda);
    return o;
}

Coordinates coordinates_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("coordinates must be an object");
    Coordinates c;
    if (j.contains("kashaev")) {
        KashaevCoords k;
        for (const auto& row : j["kashaev"]) {
            if (!row.is_array() || row.size() != 4) throw InvalidInput("kashaev rows are [y_num, y_den, z_num, z_den]");
            k.y.push_back(positive_from_pair(row[0], row[1]));
            k.z.push_back(positive_from_pair(row[2], row[3]));
        }
        c.kashaev = k;
    }
    if (j.contains("shear")) c.shear = edge_vector_from(j["shear"]);
    if (j.contains("lambda")) c.lambda = edge_vector_from(j["lambda"]);
    if (!c.kashaev && !c.shear && !c.lambda) throw InvalidInput("no kashaev, shear or lambda coordinates given");
    return c;
}

json to_json(const Expr& e) {
    const auto& n = e.node();
    auto kids = [&] {
        json a = json::array();
        for (const auto& c : n.children) a.push_back(to_json(Expr(c)));
        return a;
    };
    switch (n.kind) {
        case NodeKind::Generator:
            return {{"gen", n.value + 1}};
        case NodeKind::QPower:
            return {{"q", n.value}};
        case NodeKind::ParamA:
            return {{"param", "a"}};
        case NodeKind::ParamB:
            return {{"param", "b"}};
        case NodeKind::Scalar:
            return {{"scalar", n.scalar.get_str()}};
        case NodeKind::Sum:
            return {{"sum", kids()}};
        case NodeKind::Product:
            return {{"product", kids()}};
        case NodeKind::Inverse:
            return {{"inverse", to_json(Expr(n.children[0]))}};
    }
    return nullptr;
}

Expr expr_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw InvalidInput("expression nodes are single-key objects");
    auto list = [](const json& a) {
        if (!a.is_array() || a.empty()) throw InvalidInput("sum/product need a nonempty array");
        std::vector<Expr> out;
        for (const auto& x : a) out.push_back(expr_from_json(x));
        return out;
    };
    if (j.contains("gen")) return Expr::generator(checked_index(j["gen"], 1 << 20, "generator"));
    if (j.contains("q")) return Expr::q_power(j["q"].get<int>());
    if (j.contains("param")) {
        auto p = j["param"].get<std::string>();
        if (p == "a") return Expr::param_a();
        if (p == "b") return Expr::param_b();
        throw InvalidInput("unknown parameter '" + p + "'");
    }
    if (j.contains("scalar")) return Expr::scalar(parse_rational(j["scalar"].get<std::string>()));
    if (j.contains("sum")) return Expr::sum(list(j["sum"]));
    if (j.contains("product")) return Expr::product(list(j["product"]));
    if (j.contains("inverse")) return expr_from_json(j["inverse"]).inverse();
    throw InvalidInput("unknown expression node");
}

json to_json(const SkewLaurentElement& e) {
    json terms = json::array();
    for (const auto& [u, c] : e.terms())
        for (const auto& [k, coeff] : c.terms()) terms.push_back({{"qexp", k}, {"coeff", coeff.get_str()}, {"exps", u}});
    return terms;
}

json to_json(const TrialConfig& cfg) {
    return {{"sizes", cfg.sizes},
            {"samples", cfg.samples},
            {"min_successes", cfg.min_successes},
            {"max_retries", cfg.max_retries},
            {"seed", cfg.seed},
            {"a", cfg.a.str()},
            {"b", cfg.b.str()},
            {"backend", cfg.backend == Backend::Exact ? "cyclotomic" : "mod-p"}};
}

json to_json(const Verdict& v, const std::string& claim) {
    json trials = json::array();
    for (const auto& t : v.trials) trials.push_back({{"N", t.N}, {"a", t.a}, {"b", t.b}, {"result", t.result}});
    json out{{"claim", claim}, {"verdict", to_string(v.kind)}, {"successes", v.successes}, {"trials", trials}};
    if (v.witness) {
        const auto& w = *v.witness;
        out["witness"] = {{"N", w.N},    {"field", w.field},         {"a", w.a},
                          {"b", w.b},    {"generator", w.pair + 1},  {"certified_exact", w.certified}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const SuiteReport& r) {
    auto checks = r.checks;
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    json list = json::array();
    for (const auto& c : checks) {
        json o{{"id", c.id}, {"statement", c.statement}, {"status", to_string(c.status)}};
        if (!c.info.empty()) o["info"] = info_object(c.info);
        if (c.verdict) o["oracle"] = to_json(*c.verdict, c.statement);
        list.push_back(o);
    }
    return {{"suite", r.suite}, {"status", to_string(r.status())}, {"checks", list}};
}

}  // namespace qteich::io
