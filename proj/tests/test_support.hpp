#pragma once

// Shared fixtures and brute-force oracles for the unit and acceptance suites.

#include "qteich/triangulation.hpp"

#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace qteich::testing {

inline std::vector<std::pair<int, int>> fixture_list() {
    return {{1, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 1}, {0, 5}};
}

/// Every decoration of the underlying triangulation (3^{2m} mark placements).
inline std::vector<DecoratedTriangulation> all_markings(const DecoratedTriangulation& tau) {
    std::vector<DecoratedTriangulation> out{tau};
    for (int t = 0; t < tau.triangle_count(); ++t) {
        std::vector<DecoratedTriangulation> next;
        for (const auto& base : out) {
            next.push_back(base);
            next.push_back(apply_move(base, MarkRotation{t}));
            next.push_back(apply_moves(base, {MarkRotation{t}, MarkRotation{t}}));
        }
        out = std::move(next);
    }
    return out;
}

/// Four-punctured sphere: triangles 1,2,3 form a pentagon fan around one
/// vertex with marks as required by the pentagon relation; two pentagon sides
/// are glued and the fourth triangle closes up the rest.
inline DecoratedTriangulation pentagon_fixture() {
    return DecoratedTriangulation(SurfaceSig::make(0, 4), {Triangle{{0, 2, 3}}, Triangle{{1, 0, 4}},
                                                           Triangle{{2, 1, 5}}, Triangle{{3, 5, 4}}});
}

/// Walks all 6m corners; corner k of a triangle has (counterclockwise about its
/// vertex) side k+2 first and side k+1 second.
inline IntMatrix sigma_by_corner_tally(const DecoratedTriangulation& tau) {
    const int n = tau.edge_count();
    IntMatrix a(n, n);
    for (const auto& t : tau.triangles())
        for (int corner = 0; corner < 3; ++corner) {
            int left = t.sides[(corner + 2) % 3];
            int right = t.sides[(corner + 1) % 3];
            a(left, right) += 1;
        }
    IntMatrix sigma(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sigma(i, j) = a(i, j) - a(j, i);
    return sigma;
}

/// One flip per flippable edge, preceded by the mark rotations exposing it.
inline std::vector<std::pair<MoveSequence, int>> flips_of(const DecoratedTriangulation& tau) {
    std::vector<std::pair<MoveSequence, int>> out;
    for (int e = 0; e < tau.edge_count(); ++e) {
        auto [a, b] = tau.slots_of_edge(e);
        if (a.tri == b.tri) continue;
        MoveSequence moves = rotations_to_expose(tau, e);
        moves.push_back(DiagonalExchange{a.tri, b.tri});
        out.emplace_back(std::move(moves), e);
    }
    return out;
}

/// Case labels of all flips met in a breadth-first flip search of the given depth.
inline std::map<int, std::pair<DecoratedTriangulation, MoveSequence>> reachable_case_witnesses(
    const DecoratedTriangulation& start, int depth) {
    std::map<int, std::pair<DecoratedTriangulation, MoveSequence>> witnesses;
    std::set<std::vector<int>> seen;
    auto key = [](const DecoratedTriangulation& t) {
        std::vector<int> k;
        for (const auto& tr : t.triangles()) k.insert(k.end(), tr.sides.begin(), tr.sides.end());
        return k;
    };
    std::deque<std::pair<DecoratedTriangulation, int>> queue{{start, 0}};
    seen.insert(key(start));
    while (!queue.empty()) {
        auto [tau, d] = queue.front();
        queue.pop_front();
        for (auto& [moves, e] : flips_of(tau)) {
            MoveSequence expose(moves.begin(), moves.end() - 1);
            auto exposed = apply_moves(tau, expose);
            auto [a, b] = exposed.slots_of_edge(e);
            auto labels = classify_exchange(exposed, a.tri, b.tri);
            if (!witnesses.count(labels.case_label))
                witnesses.emplace(labels.case_label, std::pair{exposed, MoveSequence{moves.back()}});
            if (d + 1 > depth) continue;
            auto next = apply_moves(tau, moves);
            if (seen.insert(key(next)).second) queue.emplace_back(next, d + 1);
        }
    }
    return witnesses;
}

inline std::set<int> reachable_cases(const DecoratedTriangulation& start, int depth) {
    std::set<int> out;
    for (auto& [c, w] : reachable_case_witnesses(start, depth)) out.insert(c);
    return out;
}

}  // namespace qteich::testing
