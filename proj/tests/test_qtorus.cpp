#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qteich/classical.hpp"
#include "qteich/qtorus.hpp"
#include "test_support.hpp"

#include <random>

using namespace qteich;
using qteich::testing::fixture_list;

namespace {

SkewLaurentElement random_element(std::mt19937_64& rng, const TorusPtr& alg, int terms) {
    std::uniform_int_distribution<int> ex(-2, 2), qe(-3, 3), cf(-4, 4);
    SkewLaurentElement e(alg);
    for (int t = 0; t < terms; ++t) {
        ExpVec u(alg->rank());
        for (auto& x : u) x = ex(rng);
        e = e + SkewLaurentElement::monomial(alg, u, LaurentPoly::q_power(qe(rng), cf(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
    auto a = LaurentPoly::q_power(2, 3) + LaurentPoly(Rational(1));
    auto b = LaurentPoly::q_power(-1, 2);
    auto p = a * b;
    CHECK(p == LaurentPoly::q_power(1, 6) + LaurentPoly::q_power(-1, 2));
    CHECK((a - a).is_zero());
    CHECK(a.evaluate(2) == 13);
    CHECK(b.evaluate(2) == 1);
}

TEST_CASE("Kashaev relations in normal form") {
    auto K = kashaev_torus(2);
    auto Y = SkewLaurentElement::generator(K, 0);
    auto Z = SkewLaurentElement::generator(K, 1);
    auto YZ = SkewLaurentElement::monomial(K, {1, 1, 0, 0});
    CHECK(Z * Y == YZ.scaled(LaurentPoly::q_power(2)));
    CHECK(Y * Z == YZ);
    CHECK(YZ * YZ == SkewLaurentElement::monomial(K, {2, 2, 0, 0}, LaurentPoly::q_power(2)));
    auto one = SkewLaurentElement::one(K);
    CHECK(one * YZ == YZ);
    // distinct triangles commute
    auto Y2 = SkewLaurentElement::generator(K, 2);
    CHECK(Z * Y2 == Y2 * Z);
}

TEST_CASE("associativity, distributivity and monomial inverses") {
    std::mt19937_64 rng(41);
    auto K = kashaev_torus(2);
    for (int n = 0; n < 20; ++n) {
        auto a = random_element(rng, K, 3), b = random_element(rng, K, 3), c = random_element(rng, K, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        auto m = random_element(rng, K, 1);
        if (m.is_zero()) continue;
        CHECK(m * m.monomial_inverse() == SkewLaurentElement::one(K));
        CHECK(m.monomial_inverse() * m == SkewLaurentElement::one(K));
    }
    auto sum = SkewLaurentElement::generator(K, 0) + SkewLaurentElement::generator(K, 1);
    CHECK_THROWS_AS(sum.monomial_inverse(), Error);
    CHECK_THROWS_AS(SkewLaurentElement::one(K) * SkewLaurentElement::one(kashaev_torus(3)), AlgebraMismatch);
}

TEST_CASE("H generators commute as prescribed") {
    auto K = kashaev_torus(3);
    for (int mu = 0; mu < 3; ++mu) CHECK(h_commutation_check(K, mu));
    auto H0 = h_generator(K, 0, 0), H1 = h_generator(K, 0, 1), H2 = h_generator(K, 0, 2);
    CHECK(H1 * H0 == (H0 * H1).scaled(LaurentPoly::q_power(2)));
    CHECK(H2 * H1 == (H1 * H2).scaled(LaurentPoly::q_power(2)));
    CHECK(H0 * H0 == H0 * H0);
    int k = 0;
    CHECK(h_triple_product(K, 1).is_q_power(&k));
    MESSAGE("H0 H1 H2 = q^" << k);
}

TEST_CASE("F_tau images") {
    auto torus = build_standard(1, 1);
    auto img = f_tau(torus);
    REQUIRE(img.size() == 3);
    auto K = img.front().algebra();
    for (int e = 0; e < 3; ++e) {
        auto [a, b] = torus.slots_of_edge(e);
        CHECK(a.tri != b.tri);
        CHECK(img[e] == h_generator(K, a.tri, a.side) * h_generator(K, b.tri, b.side));
    }
    // a self-glued edge: both orderings agree
    auto sphere = build_standard(0, 4);
    auto K4 = kashaev_torus(sphere.triangle_count());
    for (int mu = 0; mu < 4; ++mu)
        for (int s = 0; s < 3; ++s)
            for (int t = 0; t < 3; ++t) {
                auto hs = h_generator(K4, mu, s), ht = h_generator(K4, mu, t);
                CHECK((hs * ht).scaled(LaurentPoly::q_power(triangle_sigma(t, s))) ==
                      (ht * hs).scaled(LaurentPoly::q_power(triangle_sigma(s, t))));
            }
}

TEST_CASE("F_tau is a homomorphism on every fixture") {
    for (auto [g, p] : fixture_list()) CHECK(check_f_tau_homomorphism(build_standard(g, p)));
    for (const auto& tau : qteich::testing::all_markings(build_standard(0, 4))) CHECK(check_f_tau_homomorphism(tau));
}

TEST_CASE("image of the central element") {
    for (auto [g, p] : fixture_list()) {
        auto rep = check_H_image(build_standard(g, p));
        CHECK(rep.is_q_power);
        CHECK(rep.qexp == rep.expected);
    }
    for (const auto& tau : qteich::testing::all_markings(build_standard(1, 1))) CHECK(check_H_image(tau).ok());
}

TEST_CASE("F_tau at q = 1 is the classical map") {
    std::mt19937_64 rng(43);
    for (auto [g, p] : fixture_list()) {
        auto tau = build_standard(g, p);
        auto k = random_kashaev(rng, tau.triangle_count());
        auto x = shear_from_kashaev(k, tau);
        auto img = f_tau(tau);
        for (int e = 0; e < tau.edge_count(); ++e) CHECK(evaluate_at_q1(img[e], k.y, k.z) == x[e]);
    }
}
