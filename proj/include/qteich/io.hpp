#pragma once

// JSON formats. Triangle, edge and generator indices are 1-based on the wire.
//   triangulation: {"genus": g, "punctures": p, "triangles": [{"sides": [e0, e1, e2]}, ...]}
//   moves:         [{"op": "rho", "i": 1}, {"op": "phi", "i": 1, "j": 2}, {"op": "alpha", "perm": [...]}]
//   coordinates:   {"kashaev": [[y_num, y_den, z_num, z_den], ...], "shear": [[num, den], ...], "lambda": [...]}
//   expressions:   {"gen": i} | {"q": k} | {"param": "a"|"b"} | {"scalar": "p/q"}
//                  | {"sum": [...]} | {"product": [...]} | {"inverse": e}

#include "qteich/classical.hpp"
#include "qteich/expr.hpp"
#include "qteich/oracle.hpp"
#include "qteich/qtorus.hpp"
#include "qteich/suites.hpp"
#include "qteich/triangulation.hpp"

#include <json.hpp>

#include <optional>

namespace qteich::io {

using json = nlohmann::json;

json to_json(const DecoratedTriangulation& tau);
DecoratedTriangulation triangulation_from_json(const json& j);

json to_json(const Move& mv);
json to_json(const MoveSequence& moves);
Move move_from_json(const json& j);
MoveSequence moves_from_json(const json& j);

json rational_pair(const Rational& r);
Rational rational_from_pair(const json& j);

struct Coordinates {
    std::optional<KashaevCoords> kashaev;
    std::optional<ShearCoords> shear;
    std::optional<LambdaLengths> lambda;
};

json to_json(const Coordinates& c);
Coordinates coordinates_from_json(const json& j);

json to_json(const Expr& e);
Expr expr_from_json(const json& j);

json to_json(const SkewLaurentElement& e);

json to_json(const TrialConfig& cfg);
json to_json(const Verdict& v, const std::string& claim);
/// Checks sorted by id.
json to_json(const SuiteReport& r);

}  // namespace qteich::io
