#pragma once

// Skew Laurent polynomials ("quantum tori") over Q[q, q^-1].
//
// Generators G_0..G_{n-1} satisfy G_i G_j = q^{2 eps_ij} G_j G_i. A monomial
// x^u stands for G_0^{u_0} ... G_{n-1}^{u_{n-1}} in increasing index order and
// x^u x^v = q^{c(u,v)} x^{u+v} with c(u,v) = sum_{i>j} 2 eps_ij u_i v_j.

#include "qteich/rational.hpp"
#include "qteich/triangulation.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qteich {

class AlgebraMismatch : public Error {
  public:
    using Error::Error;
};

/// Finite sum of c_k q^k with rational c_k.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(Rational c);  // NOLINT: scalar promotion
    static LaurentPoly q_power(int k, Rational c = 1);

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True iff this is a single term c q^k; fills k and c.
    bool is_monomial(int* k = nullptr, Rational* c = nullptr) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly shifted(int k) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Value at q = value.
    Rational evaluate(const Rational& q) const;
    std::string to_string() const;

  private:
    void add_term(int k, const Rational& c);
    std::map<int, Rational> terms_;
};

using ExpVec = std::vector<int>;

/// Commutation data of a quantum torus.
struct QuantumTorus {
    IntMatrix eps;
    std::vector<std::string> names;

    int rank() const { return eps.rows; }
    int reorder_exponent(const ExpVec& u, const ExpVec& v) const;
    bool operator==(const QuantumTorus& o) const { return eps == o.eps; }
};

using TorusPtr = std::shared_ptr<const QuantumTorus>;

/// Kashaev algebra of a decorated triangulation with nt triangles:
/// Y_mu has index 2 mu, Z_mu index 2 mu + 1, Z_mu Y_mu = q^2 Y_mu Z_mu.
TorusPtr kashaev_torus(int triangles);
/// Chekhov-Fock algebra of tau's underlying triangulation: eps = sigma.
TorusPtr chekhov_fock_torus(const DecoratedTriangulation& tau);

class SkewLaurentElement {
  public:
    explicit SkewLaurentElement(TorusPtr algebra) : algebra_(std::move(algebra)) {}

    static SkewLaurentElement one(TorusPtr algebra);
    static SkewLaurentElement generator(TorusPtr algebra, int index, int power = 1);
    static SkewLaurentElement monomial(TorusPtr algebra, ExpVec exps, LaurentPoly coeff = Rational(1));

    const TorusPtr& algebra() const { return algebra_; }
    const std::map<ExpVec, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Single normal monomial c q^k x^u; fills the pieces.
    bool is_monomial(ExpVec* exps = nullptr, int* qexp = nullptr, Rational* coeff = nullptr) const;
    /// Pure q-power times the identity monomial; fills k.
    bool is_q_power(int* k) const;

    SkewLaurentElement operator+(const SkewLaurentElement& o) const;
    SkewLaurentElement operator-(const SkewLaurentElement& o) const;
    SkewLaurentElement operator*(const SkewLaurentElement& o) const;
    SkewLaurentElement scaled(const LaurentPoly& c) const;
    /// Inverse of a monomial; throws Error for anything else.
    SkewLaurentElement monomial_inverse() const;
    bool operator==(const SkewLaurentElement& o) const;

    std::string to_string() const;

  private:
    void check_same(const SkewLaurentElement& o) const;
    void add_term(const ExpVec& u, const LaurentPoly& c);
    TorusPtr algebra_;
    std::map<ExpVec, LaurentPoly> terms_;
};

// ---------------------------------------------------------------------------
// The H generators and F_tau

/// sigma_st of a single triangle: sigma_10 = sigma_02 = sigma_21 = 1.
int triangle_sigma(int s, int t);

/// H^0 = Y Z^-1, H^1 = Z, H^2 = Y^-1 for triangle mu.
SkewLaurentElement h_generator(const TorusPtr& kashaev, int mu, int s);

/// All nine pairs (s, t) satisfy H^s H^t = q^{2 sigma_st} H^t H^s.
bool h_commutation_check(const TorusPtr& kashaev, int mu);

/// H^0 H^1 H^2 of one triangle (a pure q-power).
SkewLaurentElement h_triple_product(const TorusPtr& kashaev, int mu);

/// Images F_tau(X_i), one per edge.
std::vector<SkewLaurentElement> f_tau(const DecoratedTriangulation& tau, const TorusPtr& kashaev);
std::vector<SkewLaurentElement> f_tau(const DecoratedTriangulation& tau);

/// F_tau on a Chekhov-Fock monomial sum.
SkewLaurentElement apply_f_tau(const std::vector<SkewLaurentElement>& images, const SkewLaurentElement& x);

bool check_f_tau_homomorphism(const DecoratedTriangulation& tau);

struct HImageReport {
    int qexp = 0;       // F_tau(X_1 ... X_3m) = q^qexp
    int expected = 0;   // 2m + sum_{i<j} sigma_ij
    bool is_q_power = false;
    bool ok() const { return is_q_power && qexp == expected; }
};

HImageReport check_H_image(const DecoratedTriangulation& tau);

/// Value at q = 1 of a monomial image, with Y, Z given by Kashaev coordinates.
Rational evaluate_at_q1(const SkewLaurentElement& e, const RationalVec& y, const RationalVec& z);

}  // namespace qteich
