#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qteich/triangulation.hpp"
#include "test_support.hpp"

#include <set>

using namespace qteich;
using qteich::testing::all_markings;
using qteich::testing::fixture_list;

TEST_CASE("standard fixtures have the expected counts") {
    for (auto [g, p] : fixture_list()) {
        auto tau = build_standard(g, p);
        const int m = 2 * g - 2 + p;
        CHECK(tau.triangle_count() == 2 * m);
        CHECK(tau.edge_count() == 3 * m);
        CHECK(tau.vertex_count() == p);
        CHECK(build_standard(g, p) == tau);  // deterministic
    }
    auto torus = build_standard(1, 1);
    for (int e = 0; e < 3; ++e) {
        auto [a, b] = torus.slots_of_edge(e);
        CHECK(a.tri != b.tri);
    }
    CHECK(build_standard(0, 3).triangle_count() == 2);
    CHECK_THROWS_AS(build_standard(0, 2), InvalidSurface);
    CHECK_THROWS_AS(build_standard(0, 0), InvalidSurface);
    CHECK_THROWS_AS(build_standard(-1, 4), InvalidSurface);
}

TEST_CASE("gluing validation") {
    auto sig = SurfaceSig::make(1, 1);
    CHECK_THROWS_AS(DecoratedTriangulation(sig, {Triangle{{0, 1, 2}}, Triangle{{0, 1, 1}}}), InvalidInput);
    // sphere gluing claimed as a torus: wrong vertex count
    CHECK_THROWS_AS(DecoratedTriangulation(sig, {Triangle{{0, 1, 2}}, Triangle{{0, 2, 1}}}), InvalidInput);
    CHECK_NOTHROW(DecoratedTriangulation(SurfaceSig::make(0, 3), {Triangle{{0, 1, 2}}, Triangle{{0, 2, 1}}}));
}

TEST_CASE("mark rotation has order three and shifts side labels") {
    for (auto [g, p] : fixture_list()) {
        auto tau = build_standard(g, p);
        for (int i = 0; i < tau.triangle_count(); ++i) {
            auto once = apply_move(tau, MarkRotation{i});
            for (int s = 0; s < 3; ++s) CHECK(once.edge_at(i, (s + 2) % 3) == tau.edge_at(i, s));
            CHECK(apply_moves(tau, {MarkRotation{i}, MarkRotation{i}, MarkRotation{i}}) == tau);
        }
    }
}

TEST_CASE("identity reindexing") {
    auto tau = build_standard(0, 4);
    CHECK(apply_move(tau, Reindex{{0, 1, 2, 3}}) == tau);
    CHECK_THROWS_AS(apply_move(tau, Reindex{{0, 1, 1, 3}}), NotApplicable);
}

TEST_CASE("diagonal exchange preconditions") {
    auto tau = build_standard(0, 4);
    CHECK_THROWS_AS(apply_move(tau, DiagonalExchange{0, 0}), NotApplicable);
    // triangles 2 and 3 share a spoke, but it is not side 0 of both
    CHECK_THROWS_AS(apply_move(tau, DiagonalExchange{2, 3}), NotApplicable);
    try {
        apply_move(tau, DiagonalExchange{2, 3});
    } catch (const NotApplicable& e) {
        CHECK(std::string(e.what()).find("not opposite") != std::string::npos);
    }
}

TEST_CASE("move relations hold on every marking of the small fixtures") {
    for (auto [g, p] : fixture_list()) {
        if (2 * g - 2 + p > 2) continue;
        for (const auto& tau : all_markings(build_standard(g, p))) {
            const int nt = tau.triangle_count();
            for (int i = 0; i < nt; ++i)
                for (int j = 0; j < nt; ++j) {
                    if (i != j) {
                        // rho_i rho_j = rho_j rho_i
                        CHECK(apply_moves(tau, {MarkRotation{i}, MarkRotation{j}}) ==
                              apply_moves(tau, {MarkRotation{j}, MarkRotation{i}}));
                    }
                    if (!is_applicable(tau, DiagonalExchange{i, j})) continue;
                    // phi o phi = swap
                    auto twice = apply_moves(tau, {DiagonalExchange{i, j}, DiagonalExchange{i, j}});
                    CHECK(twice == apply_move(tau, transposition(nt, i, j)));
                }
        }
    }
}

TEST_CASE("pentagon detection") {
    // four-punctured sphere laid out as the pentagon fan 1,2,3 plus a fourth triangle
    auto tau = qteich::testing::pentagon_fixture();
    CHECK(detect_pentagon(tau, 0, 1, 2));
    CHECK_FALSE(detect_pentagon(tau, 0, 0, 2));
    CHECK_FALSE(detect_pentagon(tau, 2, 1, 0));
    auto torus = build_standard(1, 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) CHECK_FALSE(detect_pentagon(torus, i, j, k));
}

TEST_CASE("pentagon relation at the triangulation level") {
    int found = 0;
    for (auto [g, p] : {std::pair{0, 4}, std::pair{1, 2}, std::pair{0, 5}}) {
        for (const auto& tau : all_markings(build_standard(g, p))) {
            const int nt = tau.triangle_count();
            for (int i = 0; i < nt; ++i)
                for (int j = 0; j < nt; ++j)
                    for (int k = 0; k < nt; ++k) {
                        if (!detect_pentagon(tau, i, j, k)) continue;
                        ++found;
                        MoveSequence lhs, rhs;
                        for (auto [a, b] : {std::pair{i, j}, std::pair{i, k}, std::pair{j, k}})
                            for (auto& mv : omega_moves(a, b)) lhs.push_back(mv);
                        for (auto [a, b] : {std::pair{j, k}, std::pair{i, j}})
                            for (auto& mv : omega_moves(a, b)) rhs.push_back(mv);
                        CHECK(apply_moves(tau, lhs) == apply_moves(tau, rhs));
                    }
        }
    }
    CHECK(found > 0);
}

TEST_CASE("sigma matrix matches a corner tally") {
    for (auto [g, p] : fixture_list()) {
        auto tau = build_standard(g, p);
        auto sigma = sigma_matrix(tau);
        CHECK(sigma == qteich::testing::sigma_by_corner_tally(tau));
        for (int a = 0; a < sigma.rows; ++a) {
            CHECK(sigma(a, a) == 0);
            for (int b = 0; b < sigma.cols; ++b) {
                CHECK(sigma(a, b) == -sigma(b, a));
                CHECK(std::abs(sigma(a, b)) <= 2);
            }
        }
    }
}

TEST_CASE("sigma for the torus and the thrice-punctured sphere") {
    // frozen from the corner tally: both triangles of the torus carry edges
    // (1,2,3) counterclockwise, the sphere's second triangle is reversed
    auto torus = sigma_matrix(build_standard(1, 1));
    CHECK(torus(1, 0) == 2);
    CHECK(torus(2, 1) == 2);
    CHECK(torus(0, 2) == 2);
    auto sphere = sigma_matrix(build_standard(0, 3));
    for (long v : sphere.data) CHECK(v == 0);
}

TEST_CASE("sigma is equivariant under reindexing") {
    auto tau = build_standard(1, 2);
    auto moved = apply_move(tau, Reindex{{3, 0, 2, 1}});
    CHECK(sigma_matrix(moved) == sigma_matrix(tau));  // edges keep their ids
}

TEST_CASE("exchange classification") {
    auto torus = build_standard(1, 1);
    CHECK(classify_exchange(torus, 0, 1).case_label == 8);
    auto sphere = build_standard(0, 3);
    int c = classify_exchange(sphere, 0, 1).case_label;
    CHECK((c == 6 || c == 7));
    CHECK_THROWS_AS(classify_exchange(build_standard(0, 4), 2, 3), NotApplicable);

    auto cases = qteich::testing::reachable_cases(build_standard(0, 5), 2);
    CHECK(cases.count(1));
    auto sphere_cases = qteich::testing::reachable_cases(sphere, 2);
    CHECK(sphere_cases.count(6));
    CHECK(sphere_cases.count(7));
}

TEST_CASE("case 1 flips have four distinct outer edges") {
    auto tau = build_standard(0, 5);
    bool seen = false;
    for (const auto& t : all_markings(tau)) {
        for (int i = 0; i < t.triangle_count() && !seen; ++i)
            for (int j = i + 1; j < t.triangle_count() && !seen; ++j) {
                if (!is_applicable(t, DiagonalExchange{i, j})) continue;
                auto L = classify_exchange(t, i, j);
                if (L.case_label != 1) continue;
                std::set<int> outer{L.j, L.k, L.l, L.m};
                CHECK(outer.size() == 4);
                seen = true;
            }
        if (seen) break;
    }
    CHECK(seen);
}

TEST_CASE("move path search") {
    auto tau = build_standard(0, 4);
    auto same = find_move_path(tau, tau, 3);
    REQUIRE(same);
    CHECK(same->empty());

    auto rotated = apply_move(tau, MarkRotation{0});
    auto one = find_move_path(tau, rotated, 3);
    REQUIRE(one);
    CHECK(one->size() == 1);
    CHECK(apply_moves(tau, *one) == rotated);

    auto [moves, e] = qteich::testing::flips_of(tau).front();
    auto flipped = apply_moves(tau, moves);
    auto flip_path = find_move_path(tau, flipped, static_cast<int>(moves.size()));
    REQUIRE(flip_path);
    CHECK(apply_moves(tau, *flip_path) == flipped);

    auto far = apply_moves(tau, {MarkRotation{0}, MarkRotation{1}, MarkRotation{2}});
    CHECK_FALSE(find_move_path(tau, far, 2));
    auto found = find_move_path(tau, far, 3);
    REQUIRE(found);
    CHECK(apply_moves(tau, *found) == far);
}

TEST_CASE("equality ignores edge names") {
    auto torus = build_standard(1, 1);
    auto flipped = apply_move(torus, DiagonalExchange{0, 1});
    CHECK(flipped == torus);
    CHECK_FALSE(flipped.same_labels(torus));
}

TEST_CASE("exposing an edge for a flip") {
    auto tau = build_standard(0, 4);
    for (int e = 0; e < tau.edge_count(); ++e) {
        auto [a, b] = tau.slots_of_edge(e);
        if (a.tri == b.tri) continue;
        auto exposed = apply_moves(tau, rotations_to_expose(tau, e));
        CHECK(exposed.edge_at(a.tri, 0) == e);
        CHECK(exposed.edge_at(b.tri, 0) == e);
    }
}
