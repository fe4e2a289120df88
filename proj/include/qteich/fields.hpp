#pragma once

// Scalar fields for the representation oracle. Both contain a primitive
// 2N-th root of unity q:
//  - PrimeField: F_p with p = 1 (mod 2N), p < 2^30; the fast default.
//  - CyclotomicField: Q(zeta_2N) as Q[x] / Phi_2N(x); exact, used as the
//    serial reference and for certifying refutations.

#include "qteich/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qteich {

class SingularMatrix : public Error {
  public:
    using Error::Error;
};

class PrimeField {
  public:
    using Elem = uint32_t;

    /// Smallest prime p > 2^29 with p = 1 (mod 2N).
    explicit PrimeField(int N);
    PrimeField(int N, uint32_t p);

    int N() const { return N_; }
    uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<uint64_t>(a) * b % p_); }
    Elem inv(Elem a) const;
    Elem pow(Elem a, uint64_t e) const;
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem from_int(long v) const;
    /// Throws SingularMatrix if the denominator vanishes mod p.
    Elem from_rational(const Rational& r) const;
    /// q^k with q the fixed primitive 2N-th root.
    Elem q_power(int k) const;

    template <class Rng>
    Elem random_nonzero(Rng& rng) const {
        std::uniform_int_distribution<uint32_t> d(1, p_ - 1);
        return d(rng);
    }

    std::string str(Elem a) const { return std::to_string(a); }
    std::string describe() const;

  private:
    void init_root();
    int N_;
    uint32_t p_;
    Elem q_ = 0;
};

class CyclotomicField {
  public:
    using Elem = std::vector<Rational>;  // coefficients of 1, x, ..., x^{d-1}

    explicit CyclotomicField(int N);

    int N() const { return N_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }
    /// Coefficients of Phi_2N, constant term first, monic.
    const std::vector<Rational>& cyclotomic_polynomial() const { return phi_; }

    Elem zero() const { return Elem(degree()); }
    Elem one() const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem from_int(long v) const;
    Elem from_rational(const Rational& r) const;
    Elem q_power(int k) const;

    /// Random nonzero rational p/q, |p|,q <= 9.
    template <class Rng>
    Elem random_nonzero(Rng& rng) const {
        std::uniform_int_distribution<int> sign(0, 1);
        Rational r = random_positive_rational(rng, 9);
        if (sign(rng)) r = -r;
        return from_rational(r);
    }

    /// Reduction of an element to F_p through a root of Phi_2N mod p.
    PrimeField::Elem reduce(const Elem& a, const PrimeField& f) const;

    std::string str(const Elem& a) const;
    std::string describe() const;

  private:
    Elem reduce_poly(std::vector<Rational> poly) const;
    int N_;
    std::vector<Rational> phi_;
};

/// Coefficients of the n-th cyclotomic polynomial (constant term first).
std::vector<long> cyclotomic_polynomial(int n);

bool is_prime(uint64_t n);

}  // namespace qteich
