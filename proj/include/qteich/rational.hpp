#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qteich {

using Rational = mpq_class;
using RationalVec = std::vector<Rational>;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidSurface : public Error {
  public:
    using Error::Error;
};

class NotApplicable : public Error {
  public:
    using Error::Error;
};

class InvalidInput : public Error {
  public:
    using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw InvalidInput("not a rational number: " + s);
    r.canonicalize();
    return r;
}

/// Random positive rational p/q with 1 <= p,q <= bound.
template <class Rng>
Rational random_positive_rational(Rng& rng, long bound = 9) {
    std::uniform_int_distribution<long> d(1, bound);
    return make_rational(d(rng), d(rng));
}

}  // namespace qteich
