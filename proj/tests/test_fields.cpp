#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qteich/fields.hpp"
#include "qteich/kernels.hpp"
#include "qteich/matrix.hpp"

#include <random>

using namespace qteich;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    // Phi_10 = x^4 - x^3 + x^2 - x + 1
    CHECK(cyclotomic_polynomial(10) == std::vector<long>{1, -1, 1, -1, 1});
    // Phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(14).size() == 7);
}

TEST_CASE("prime field root of unity") {
    for (int N : {2, 3, 5, 7}) {
        PrimeField f(N);
        CHECK(is_prime(f.modulus()));
        CHECK((f.modulus() - 1) % (2 * N) == 0);
        CHECK(f.modulus() < (1u << 30));
        CHECK(f.q_power(2 * N) == 1);
        CHECK(f.q_power(N) == f.neg(1));  // primitive: q^N = -1
        for (int k = 1; k < 2 * N; ++k) CHECK(f.q_power(k) != 1);
        CHECK(f.mul(f.q_power(3), f.q_power(-3)) == 1);
    }
    PrimeField f(3);
    CHECK(f.from_rational(make_rational(1, 2)) == f.inv(2));
    CHECK(f.from_rational(make_rational(-3, 4)) == f.neg(f.mul(3, f.inv(4))));
    CHECK_THROWS_AS(f.inv(0), SingularMatrix);
}

TEST_CASE("cyclotomic field arithmetic") {
    std::mt19937_64 rng(7);
    for (int N : {3, 5}) {
        CyclotomicField K(N);
        CHECK(K.degree() == (N == 3 ? 2 : 4));
        CHECK(K.eq(K.q_power(2 * N), K.one()));
        CHECK(K.eq(K.q_power(N), K.neg(K.one())));
        CHECK(K.eq(K.mul(K.q_power(2), K.q_power(-2)), K.one()));
        PrimeField F(N);
        for (int t = 0; t < 20; ++t) {
            auto a = K.add(K.random_nonzero(rng), K.mul(K.random_nonzero(rng), K.q_power(t)));
            if (K.is_zero(a)) continue;
            auto ai = K.inv(a);
            CHECK(K.eq(K.mul(a, ai), K.one()));
            // reduction to F_p is a ring homomorphism
            auto b = K.random_nonzero(rng);
            CHECK(K.reduce(K.mul(a, b), F) == F.mul(K.reduce(a, F), K.reduce(b, F)));
            CHECK(K.reduce(K.add(a, b), F) == F.add(K.reduce(a, F), K.reduce(b, F)));
        }
        CHECK(K.reduce(K.q_power(1), F) == F.q_power(1));
    }
}

TEST_CASE("mod-p kernels: parallel agrees with serial") {
    std::mt19937_64 rng(11);
    PrimeField f(5);
    const auto p = f.modulus();
    for (int n : {1, 7, 33, 130}) {
        std::vector<uint32_t> A(n * n), B(n * n), C1(n * n), C2(n * n);
        std::uniform_int_distribution<uint32_t> d(0, p - 1);
        for (auto& x : A) x = d(rng);
        for (auto& x : B) x = d(rng);
        kernels::matmul_serial(A.data(), B.data(), C1.data(), n, p);
        kernels::matmul_parallel(A.data(), B.data(), C2.data(), n, p);
        CHECK(C1 == C2);
        // spot check one entry against a direct sum
        uint64_t s = 0;
        for (int k = 0; k < n; ++k) s = (s + static_cast<uint64_t>(A[k]) * B[k * n + n - 1]) % p;
        CHECK(C1[n - 1] == s);

        auto I1 = A, I2 = A;
        bool ok1 = kernels::inverse_serial(I1.data(), n, p);
        bool ok2 = kernels::inverse_parallel(I2.data(), n, p);
        REQUIRE(ok1 == ok2);
        if (!ok1) continue;
        CHECK(I1 == I2);
        kernels::matmul_serial(A.data(), I1.data(), C1.data(), n, p);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) CHECK(C1[r * n + c] == (r == c ? 1u : 0u));
    }
    std::vector<uint32_t> S{1, 2, 2, 4};
    CHECK_FALSE(kernels::inverse_serial(S.data(), 2, p));
}

TEST_CASE("hybrid matrices") {
    PrimeField f(3);
    using M = Matrix<PrimeField>;
    auto A = M::monomial({2, 3, 5}, {1, 2, 0});
    auto B = M::monomial({7, 11, 13}, {2, 0, 1});
    auto AB = multiply(f, A, B);
    CHECK(AB.is_monomial());
    CHECK(equal(f, AB, multiply(f, A.to_dense(f), B.to_dense(f))));
    CHECK(equal(f, multiply(f, A, inverse(f, A)), M::identity(f, 3)));
    auto S = add(f, A, B);
    CHECK_FALSE(S.is_monomial());
    auto Si = inverse(f, S);
    CHECK(equal(f, multiply(f, Si, S), M::identity(f, 3)));
    CHECK(add(f, A, A).is_monomial());
    CHECK_THROWS_AS(inverse(f, add(f, A, scale(f, f.neg(1), A))), SingularMatrix);

    CyclotomicField K(3);
    using MK = Matrix<CyclotomicField>;
    auto C = add(K, MK::monomial({K.q_power(1), K.one()}, {1, 0}), MK::identity(K, 2));
    auto Ci = inverse(K, C);
    CHECK(equal(K, multiply(K, C, Ci), MK::identity(K, 2)));
}
