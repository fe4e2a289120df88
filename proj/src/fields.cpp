#include "qteich/fields.hpp"

#include <sstream>

namespace qteich {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(int N) : N_(N), p_(0) {
    if (N < 1) throw InvalidInput("representation size must be positive");
    const uint64_t step = 2 * static_cast<uint64_t>(N);
    uint64_t p = ((1ull << 29) / step + 1) * step + 1;
    while (!is_prime(p)) p += step;
    p_ = static_cast<uint32_t>(p);
    init_root();
}

PrimeField::PrimeField(int N, uint32_t p) : N_(N), p_(p) {
    if (!is_prime(p) || (p - 1) % (2 * static_cast<uint64_t>(N)) != 0 || p >= (1u << 30))
        throw InvalidInput("modulus must be a prime below 2^30 with p = 1 mod 2N");
    init_root();
}

void PrimeField::init_root() {
    // factor p - 1, find a generator, take q = g^{(p-1)/2N}
    std::vector<uint64_t> factors;
    uint64_t m = p_ - 1;
    for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (uint32_t g = 2;; ++g) {
        bool generator = true;
        for (auto f : factors)
            if (pow(g, (p_ - 1) / f) == 1) {
                generator = false;
                break;
            }
        if (generator) {
            q_ = pow(g, (p_ - 1) / (2 * static_cast<uint64_t>(N_)));
            return;
        }
    }
}

PrimeField::Elem PrimeField::pow(Elem a, uint64_t e) const {
    uint64_t result = 1, base = a % p_;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Elem>(result);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw SingularMatrix("division by zero in F_p");
    return pow(a, p_ - 2);
}

PrimeField::Elem PrimeField::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rational(const Rational& r) const {
    mpz_class num = r.get_num() % p_, den = r.get_den() % p_;
    if (num < 0) num += p_;
    if (den == 0) throw SingularMatrix("denominator vanishes mod p");
    return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

PrimeField::Elem PrimeField::q_power(int k) const {
    long m = 2L * N_;
    long e = ((k % m) + m) % m;
    return pow(q_, static_cast<uint64_t>(e));
}

std::string PrimeField::describe() const {
    return "F_" + std::to_string(p_) + " with q = " + std::to_string(q_) + " of order " + std::to_string(2 * N_);
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a = quot * b + rem
void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
    trim(a);
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const Rational lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        Rational f = a.back() / lead;
        quot[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    rem = a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        auto den = cyclotomic_polynomial(d);
        std::vector<long> q(num.size() - den.size() + 1, 0);
        for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
            long f = num[i];  // den is monic
            int shift = i - static_cast<int>(den.size()) + 1;
            q[shift] = f;
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= f * den[j];
        }
        num = q;
    }
    return num;
}

CyclotomicField::CyclotomicField(int N) : N_(N) {
    if (N < 1) throw InvalidInput("representation size must be positive");
    for (long c : qteich::cyclotomic_polynomial(2 * N)) phi_.emplace_back(c);
}

CyclotomicField::Elem CyclotomicField::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

CyclotomicField::Elem CyclotomicField::reduce_poly(std::vector<Rational> poly) const {
    Poly q, r;
    poly_divmod(std::move(poly), phi_, q, r);
    r.resize(degree());
    return r;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (int i = 0; i < degree(); ++i) out[i] += b[i];
    return out;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (int i = 0; i < degree(); ++i) out[i] -= b[i];
    return out;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
    Elem out = a;
    for (auto& c : out) c = -c;
    return out;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
    return reduce_poly(poly_mul(a, b));
}

bool CyclotomicField::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
    if (is_zero(a)) throw SingularMatrix("division by zero in Q(zeta)");
    // extended Euclid: s * a + t * phi = g, g a nonzero constant
    Poly r0 = phi_, r1 = a, s0{}, s1{Rational(1)};
    trim(r1);
    while (r1.size() > 1) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Rational g = r1.at(0);
    for (auto& c : s1) c /= g;
    return reduce_poly(s1);
}

CyclotomicField::Elem CyclotomicField::from_int(long v) const { return from_rational(Rational(v)); }

CyclotomicField::Elem CyclotomicField::from_rational(const Rational& r) const {
    Elem e = zero();
    e[0] = r;
    return e;
}

CyclotomicField::Elem CyclotomicField::q_power(int k) const {
    int m = 2 * N_;
    int e = ((k % m) + m) % m;
    Poly x(e + 1, 0);
    x[e] = 1;
    return reduce_poly(x);
}

PrimeField::Elem CyclotomicField::reduce(const Elem& a, const PrimeField& f) const {
    PrimeField::Elem acc = 0, xk = 1;
    const auto q = f.q_power(1);
    for (const auto& c : a) {
        acc = f.add(acc, f.mul(f.from_rational(c), xk));
        xk = f.mul(xk, q);
    }
    return acc;
}

std::string CyclotomicField::str(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < degree(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << a[i].get_str();
        if (i) os << "*z^" << i;
    }
    return first ? "0" : os.str();
}

std::string CyclotomicField::describe() const { return "Q(zeta_" + std::to_string(2 * N_) + ")"; }

}  // namespace qteich
