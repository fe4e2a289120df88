#pragma once

// Equality oracle for the fraction algebra of the Kashaev torus.
//
// Expressions are evaluated in clock-and-shift representations at a root of
// unity q of order 2N: per triangle mu on its own tensor factor C^N,
//   Y_mu e_k = y_mu q^{2k} e_k,   Z_mu e_k = z_mu e_{k-1},
// so Z Y = q^2 Y Z, with random nonzero y_mu, z_mu. Only the triangles an
// expression pair mentions get a factor. A mismatch in any representation is
// a refutation; agreement across many trials is strong (not certain)
// evidence of equality.
//
// Two scalar backends: F_p containing a primitive 2N-th root (fast default),
// and Q(zeta_2N) (exact, slow). Mod-p refutations are re-checked over
// Q(zeta_2N) at small dimension when possible.

#include "qteich/expr.hpp"
#include "qteich/fields.hpp"
#include "qteich/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qteich {

/// A parameter value: random nonzero per trial, or a fixed power of q.
struct ParamSpec {
    bool random = true;
    int qexp = 0;

    static ParamSpec any() { return {}; }
    static ParamSpec q_power(int k) { return {false, k}; }
    /// "random", "1", "q", "q3", "q^-2", "q-2".
    static ParamSpec parse(const std::string& s);
    std::string str() const;
    bool operator==(const ParamSpec&) const = default;
};

enum class Backend { ModP, Exact };

struct TrialConfig {
    std::vector<int> sizes{3, 5, 7};
    int samples = 5;
    int min_successes = 10;
    int max_retries = 20;
    uint64_t seed = 20240611;
    ParamSpec a;
    ParamSpec b;
    Backend backend = Backend::ModP;
    /// Sizes whose representation would exceed this dimension are skipped.
    int max_dim = 4096;
    /// Largest dimension used to re-check a mod-p refutation exactly.
    int certify_max_dim = 27;
};

struct TrialRecord {
    int N = 0;
    std::string a;
    std::string b;
    std::string result;  // equal | notequal | singular | skipped
};

struct Witness {
    int N = 0;
    std::string field;
    std::string a;
    std::string b;
    int pair = 0;            // index of the first differing expression pair
    bool certified = false;  // refutation reproduced over Q(zeta_2N)
};

enum class VerdictKind { Equal, NotEqual, Inconclusive };

std::string to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    int successes = 0;
    int singular = 0;
    std::vector<TrialRecord> trials;
    std::optional<Witness> witness;

    bool equal() const { return kind == VerdictKind::Equal; }
    bool not_equal() const { return kind == VerdictKind::NotEqual; }
};

using ExprPair = std::pair<Expr, Expr>;

/// All pairs are compared in the same trials (same parameters and
/// representation values).
Verdict compare_pairs(const std::vector<ExprPair>& pairs, const TrialConfig& cfg);
Verdict expr_equal(const Expr& lhs, const Expr& rhs, const TrialConfig& cfg);
/// Generator by generator.
Verdict maps_equal(const SubstitutionMap& lhs, const SubstitutionMap& rhs, const TrialConfig& cfg);

// ---------------------------------------------------------------------------
// Representations

/// Triangles whose generators occur in e.
std::vector<int> triangle_support(const Expr& e);

template <class F>
class KashaevRep {
  public:
    using E = typename F::Elem;

    /// y0, z0 are indexed by triangle; only `support` is used.
    KashaevRep(const F& f, int N, std::vector<int> support, const std::vector<E>& y0, const std::vector<E>& z0,
               E a, E b)
        : f_(f), N_(N), support_(std::move(support)), a_(std::move(a)), b_(std::move(b)) {
        dim_ = 1;
        for (size_t t = 0; t < support_.size(); ++t) dim_ *= N_;
        int stride = dim_;
        for (int mu : support_) {
            stride /= N_;
            strides_[mu] = stride;
            gens_[2 * mu] = build_y(stride, y0.at(mu));
            gens_[2 * mu + 1] = build_z(stride, z0.at(mu));
        }
    }

    int dim() const { return dim_; }
    const Matrix<F>& generator(int g) const {
        auto it = gens_.find(g);
        if (it == gens_.end()) throw InvalidInput("generator " + std::to_string(g) + " outside the representation");
        return it->second;
    }

    /// Throws SingularMatrix when an inverse is taken of a singular matrix.
    Matrix<F> eval(const Expr& e) {
        pinned_.push_back(e.ptr());  // memo keys must outlive the call
        return eval_node(e.ptr().get());
    }

  private:
    Matrix<F> build_y(int stride, const E& y0) const {
        std::vector<E> s(dim_);
        std::vector<int> c(dim_);
        const E omega = f_.q_power(2);
        std::vector<E> powers(N_);
        powers[0] = y0;
        for (int k = 1; k < N_; ++k) powers[k] = f_.mul(powers[k - 1], omega);
        for (int r = 0; r < dim_; ++r) {
            s[r] = powers[(r / stride) % N_];
            c[r] = r;
        }
        return Matrix<F>::monomial(std::move(s), std::move(c));
    }

    Matrix<F> build_z(int stride, const E& z0) const {
        std::vector<E> s(dim_, z0);
        std::vector<int> c(dim_);
        for (int r = 0; r < dim_; ++r) {
            int digit = (r / stride) % N_;
            c[r] = digit == N_ - 1 ? r - digit * stride : r + stride;
        }
        return Matrix<F>::monomial(std::move(s), std::move(c));
    }

    Matrix<F> scalar(const E& s) const { return Matrix<F>::scalar(f_, dim_, s); }

    Matrix<F> eval_node(const ExprNode* n) {
        if (auto it = memo_.find(n); it != memo_.end()) return it->second;
        Matrix<F> m;
        switch (n->kind) {
            case NodeKind::Generator:
                m = generator(n->value);
                break;
            case NodeKind::QPower:
                m = scalar(f_.q_power(n->value));
                break;
            case NodeKind::ParamA:
                m = scalar(a_);
                break;
            case NodeKind::ParamB:
                m = scalar(b_);
                break;
            case NodeKind::Scalar:
                m = scalar(f_.from_rational(n->scalar));
                break;
            case NodeKind::Sum:
                m = eval_node(n->children[0].get());
                for (size_t k = 1; k < n->children.size(); ++k) m = add(f_, m, eval_node(n->children[k].get()));
                break;
            case NodeKind::Product:
                m = eval_node(n->children[0].get());
                for (size_t k = 1; k < n->children.size(); ++k) m = multiply(f_, m, eval_node(n->children[k].get()));
                break;
            case NodeKind::Inverse:
                m = eval_inverse(n->children[0].get());
                break;
        }
        memo_.emplace(n, m);
        return m;
    }

    // (AB)^-1 = B^-1 A^-1 keeps monomial factors cheap.
    Matrix<F> eval_inverse(const ExprNode* n) {
        if (n->kind == NodeKind::Inverse) return eval_node(n->children[0].get());
        if (n->kind == NodeKind::Product) {
            Matrix<F> m = eval_inverse(n->children.back().get());
            for (int k = static_cast<int>(n->children.size()) - 2; k >= 0; --k)
                m = multiply(f_, m, eval_inverse(n->children[k].get()));
            return m;
        }
        if (auto it = inv_memo_.find(n); it != inv_memo_.end()) return it->second;
        Matrix<F> m = inverse(f_, eval_node(n));
        inv_memo_.emplace(n, m);
        return m;
    }

    const F& f_;
    int N_;
    int dim_ = 1;
    std::vector<int> support_;
    E a_, b_;
    std::unordered_map<int, int> strides_;
    std::unordered_map<int, Matrix<F>> gens_;
    std::unordered_map<const ExprNode*, Matrix<F>> memo_;
    std::unordered_map<const ExprNode*, Matrix<F>> inv_memo_;
    std::vector<NodePtr> pinned_;
};

}  // namespace qteich
