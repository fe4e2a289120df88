#include "qteich/qtorus.hpp"

#include <sstream>

namespace qteich {

LaurentPoly::LaurentPoly(Rational c) { add_term(0, c); }

LaurentPoly LaurentPoly::q_power(int k, Rational c) {
    LaurentPoly p;
    p.add_term(k, c);
    return p;
}

void LaurentPoly::add_term(int k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::is_monomial(int* k, Rational* c) const {
    if (terms_.size() != 1) return false;
    if (k) *k = terms_.begin()->first;
    if (c) *c = terms_.begin()->second;
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) out.add_term(k1 + k2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

Rational LaurentPoly::evaluate(const Rational& q) const {
    Rational total = 0;
    for (const auto& [k, c] : terms_) {
        Rational p = 1;
        Rational base = k >= 0 ? q : Rational(1 / q);
        for (int n = 0; n < std::abs(k); ++n) p *= base;
        total += c * p;
    }
    return total;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (k != 0) os << "*q^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

int QuantumTorus::reorder_exponent(const ExpVec& u, const ExpVec& v) const {
    int c = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < i; ++j)
            if (v[j] != 0) c += 2 * static_cast<int>(eps(i, j)) * u[i] * v[j];
    }
    return c;
}

TorusPtr kashaev_torus(int triangles) {
    auto t = std::make_shared<QuantumTorus>();
    t->eps = IntMatrix(2 * triangles, 2 * triangles);
    for (int mu = 0; mu < triangles; ++mu) {
        t->eps(2 * mu + 1, 2 * mu) = 1;
        t->eps(2 * mu, 2 * mu + 1) = -1;
        t->names.push_back("Y" + std::to_string(mu + 1));
        t->names.push_back("Z" + std::to_string(mu + 1));
    }
    return t;
}

TorusPtr chekhov_fock_torus(const DecoratedTriangulation& tau) {
    auto t = std::make_shared<QuantumTorus>();
    t->eps = sigma_matrix(tau);
    for (int e = 0; e < tau.edge_count(); ++e) t->names.push_back("X" + std::to_string(e + 1));
    return t;
}

// ---------------------------------------------------------------------------

SkewLaurentElement SkewLaurentElement::one(TorusPtr algebra) {
    const int n = algebra->rank();
    return monomial(std::move(algebra), ExpVec(n, 0));
}

SkewLaurentElement SkewLaurentElement::generator(TorusPtr algebra, int index, int power) {
    ExpVec u(algebra->rank(), 0);
    u.at(index) = power;
    return monomial(std::move(algebra), std::move(u));
}

SkewLaurentElement SkewLaurentElement::monomial(TorusPtr algebra, ExpVec exps, LaurentPoly coeff) {
    if (static_cast<int>(exps.size()) != algebra->rank()) throw AlgebraMismatch("exponent vector has wrong length");
    SkewLaurentElement e(std::move(algebra));
    e.add_term(exps, coeff);
    return e;
}

void SkewLaurentElement::add_term(const ExpVec& u, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(u, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SkewLaurentElement::check_same(const SkewLaurentElement& o) const {
    if (algebra_ != o.algebra_ && !(*algebra_ == *o.algebra_))
        throw AlgebraMismatch("elements live in different quantum tori");
}

bool SkewLaurentElement::is_monomial(ExpVec* exps, int* qexp, Rational* coeff) const {
    if (terms_.size() != 1) return false;
    const auto& [u, c] = *terms_.begin();
    if (!c.is_monomial(qexp, coeff)) return false;
    if (exps) *exps = u;
    return true;
}

bool SkewLaurentElement::is_q_power(int* k) const {
    ExpVec u;
    Rational c;
    if (!is_monomial(&u, k, &c) || c != 1) return false;
    for (int x : u)
        if (x != 0) return false;
    return true;
}

SkewLaurentElement SkewLaurentElement::operator+(const SkewLaurentElement& o) const {
    check_same(o);
    SkewLaurentElement out = *this;
    for (const auto& [u, c] : o.terms_) out.add_term(u, c);
    return out;
}

SkewLaurentElement SkewLaurentElement::operator-(const SkewLaurentElement& o) const {
    check_same(o);
    SkewLaurentElement out = *this;
    for (const auto& [u, c] : o.terms_) out.add_term(u, -c);
    return out;
}

SkewLaurentElement SkewLaurentElement::operator*(const SkewLaurentElement& o) const {
    check_same(o);
    SkewLaurentElement out(algebra_);
    const int n = algebra_->rank();
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : o.terms_) {
            ExpVec w(n);
            for (int i = 0; i < n; ++i) w[i] = u[i] + v[i];
            out.add_term(w, (cu * cv).shifted(algebra_->reorder_exponent(u, v)));
        }
    return out;
}

SkewLaurentElement SkewLaurentElement::scaled(const LaurentPoly& c) const {
    SkewLaurentElement out(algebra_);
    for (const auto& [u, cu] : terms_) out.add_term(u, cu * c);
    return out;
}

SkewLaurentElement SkewLaurentElement::monomial_inverse() const {
    ExpVec u;
    int k = 0;
    Rational c;
    if (!is_monomial(&u, &k, &c)) throw Error("only monomials are invertible in the Laurent ring");
    ExpVec neg(u.size());
    for (size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
    // x^u x^{-u} = q^{c(u,-u)}, so (x^u)^{-1} = q^{-c(u,-u)} x^{-u}
    int shift = -algebra_->reorder_exponent(u, neg);
    return monomial(algebra_, neg, LaurentPoly::q_power(shift - k, 1 / c));
}

bool SkewLaurentElement::operator==(const SkewLaurentElement& o) const {
    check_same(o);
    return terms_ == o.terms_;
}

std::string SkewLaurentElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [u, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ')';
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i] != 0) {
                os << '*' << (i < algebra_->names.size() ? algebra_->names[i] : "G" + std::to_string(i));
                if (u[i] != 1) os << '^' << u[i];
            }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

int triangle_sigma(int s, int t) {
    if (s == t) return 0;
    // sigma_10 = sigma_02 = sigma_21 = 1
    return ((s - t + 3) % 3 == 1) ? 1 : -1;
}

SkewLaurentElement h_generator(const TorusPtr& kashaev, int mu, int s) {
    ExpVec u(kashaev->rank(), 0);
    switch (s) {
        case 0:
            u[2 * mu] = 1;
            u[2 * mu + 1] = -1;
            break;
        case 1:
            u[2 * mu + 1] = 1;
            break;
        case 2:
            u[2 * mu] = -1;
            break;
        default:
            throw InvalidInput("side index must be 0, 1 or 2");
    }
    return SkewLaurentElement::monomial(kashaev, u);
}

bool h_commutation_check(const TorusPtr& kashaev, int mu) {
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            auto hs = h_generator(kashaev, mu, s);
            auto ht = h_generator(kashaev, mu, t);
            if (!(hs * ht == (ht * hs).scaled(LaurentPoly::q_power(2 * triangle_sigma(s, t)))))
                return false;
        }
    return true;
}

SkewLaurentElement h_triple_product(const TorusPtr& kashaev, int mu) {
    return h_generator(kashaev, mu, 0) * h_generator(kashaev, mu, 1) * h_generator(kashaev, mu, 2);
}

std::vector<SkewLaurentElement> f_tau(const DecoratedTriangulation& tau, const TorusPtr& kashaev) {
    std::vector<SkewLaurentElement> out;
    for (int e = 0; e < tau.edge_count(); ++e) {
        auto [a, b] = tau.slots_of_edge(e);
        auto img = h_generator(kashaev, a.tri, a.side) * h_generator(kashaev, b.tri, b.side);
        if (a.tri == b.tri) img = img.scaled(LaurentPoly::q_power(triangle_sigma(b.side, a.side)));
        out.push_back(img);
    }
    return out;
}

std::vector<SkewLaurentElement> f_tau(const DecoratedTriangulation& tau) {
    return f_tau(tau, kashaev_torus(tau.triangle_count()));
}

SkewLaurentElement apply_f_tau(const std::vector<SkewLaurentElement>& images, const SkewLaurentElement& x) {
    if (images.empty()) throw InvalidInput("empty F_tau image list");
    SkewLaurentElement out(images.front().algebra());
    for (const auto& [u, c] : x.terms()) {
        auto term = SkewLaurentElement::one(images.front().algebra());
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            auto g = u[i] > 0 ? images[i] : images[i].monomial_inverse();
            for (int n = 0; n < std::abs(u[i]); ++n) term = term * g;
        }
        out = out + term.scaled(c);
    }
    return out;
}

bool check_f_tau_homomorphism(const DecoratedTriangulation& tau) {
    auto img = f_tau(tau);
    auto sigma = sigma_matrix(tau);
    for (int i = 0; i < tau.edge_count(); ++i)
        for (int j = 0; j < tau.edge_count(); ++j)
            if (!(img[i] * img[j] == (img[j] * img[i]).scaled(LaurentPoly::q_power(2 * static_cast<int>(sigma(i, j))))))
                return false;
    return true;
}

HImageReport check_H_image(const DecoratedTriangulation& tau) {
    auto img = f_tau(tau);
    auto prod = SkewLaurentElement::one(img.front().algebra());
    for (const auto& x : img) prod = prod * x;
    HImageReport r;
    r.is_q_power = prod.is_q_power(&r.qexp);
    auto sigma = sigma_matrix(tau);
    r.expected = 2 * tau.m();
    for (int i = 0; i < tau.edge_count(); ++i)
        for (int j = i + 1; j < tau.edge_count(); ++j) r.expected += static_cast<int>(sigma(i, j));
    return r;
}

Rational evaluate_at_q1(const SkewLaurentElement& e, const RationalVec& y, const RationalVec& z) {
    Rational total = 0;
    for (const auto& [u, c] : e.terms()) {
        Rational term = c.evaluate(1);
        for (size_t i = 0; i < u.size(); ++i) {
            const Rational& base = (i % 2 == 0) ? y[i / 2] : z[i / 2];
            for (int n = 0; n < std::abs(u[i]); ++n) term = u[i] > 0 ? Rational(term * base) : Rational(term / base);
        }
        total += term;
    }
    return total;
}

}  // namespace qteich
