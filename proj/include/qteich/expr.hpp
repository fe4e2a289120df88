#pragma once

// Rational expressions over a quantum torus: immutable DAGs whose leaves are
// generators, powers of q, the parameters a and b, and rational scalars, with
// noncommutative sums, ordered products and inverses. They stand for elements
// of the fraction division algebra; equality is decided by the oracle.

#include "qteich/rational.hpp"

#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace qteich {

enum class NodeKind { Generator, QPower, ParamA, ParamB, Scalar, Sum, Product, Inverse };

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    NodeKind kind;
    int value = 0;  // generator index or q exponent
    Rational scalar;
    std::vector<NodePtr> children;
};

class Expr {
  public:
    Expr();  // the scalar 1
    explicit Expr(NodePtr node) : node_(std::move(node)) {}

    static Expr generator(int index);
    static Expr q_power(int k);
    static Expr param_a();
    static Expr param_b();
    static Expr scalar(const Rational& r);
    static Expr one() { return scalar(1); }
    static Expr zero() { return scalar(0); }
    static Expr sum(const std::vector<Expr>& terms);
    static Expr product(const std::vector<Expr>& factors);

    Expr inverse() const;
    /// x^k for any integer k (k < 0 uses the inverse).
    Expr pow(int k) const;

    Expr operator+(const Expr& o) const { return sum({*this, o}); }
    Expr operator-(const Expr& o) const;
    Expr operator-() const;
    Expr operator*(const Expr& o) const { return product({*this, o}); }

    const ExprNode& node() const { return *node_; }
    const NodePtr& ptr() const { return node_; }
    NodeKind kind() const { return node_->kind; }

    /// True for scalar leaves equal to r.
    bool is_scalar(const Rational& r) const;

    /// Generator indices reachable from this node.
    std::set<int> generators() const;
    /// Number of distinct nodes in the DAG.
    size_t dag_size() const;

    /// Infix rendering; `names` maps generator indices to names (defaults to g<i>).
    std::string to_string(const std::vector<std::string>& names = {}) const;

  private:
    NodePtr node_;
};

/// Images of the generators of a source algebra as expressions over a target
/// algebra. Applying the map to an expression substitutes every generator.
class SubstitutionMap {
  public:
    SubstitutionMap() = default;
    explicit SubstitutionMap(std::vector<Expr> images) : images_(std::move(images)) {}

    static SubstitutionMap identity(int generators);

    int size() const { return static_cast<int>(images_.size()); }
    const Expr& operator[](int g) const { return images_.at(g); }
    Expr& operator[](int g) { return images_.at(g); }
    const std::vector<Expr>& images() const { return images_; }

  private:
    std::vector<Expr> images_;
};

/// Substitutes generators through a map, sharing work across calls: each
/// source node is rewritten once.
class Substituter {
  public:
    explicit Substituter(const SubstitutionMap& map) : map_(map) {}
    Expr operator()(const Expr& e);

  private:
    const SubstitutionMap& map_;
    std::unordered_map<const ExprNode*, Expr> memo_;
    std::vector<NodePtr> pinned_;  // keeps memo keys alive
};

Expr substitute(const Expr& e, const SubstitutionMap& map);

/// (outer o inner)(g) = outer(inner(g)).
SubstitutionMap compose(const SubstitutionMap& outer, const SubstitutionMap& inner);

/// Value of a commutative specialization: generators get `values`, q, a, b
/// the given scalars. Throws InvalidInput on division by zero.
Rational evaluate_commutative(const Expr& e, const RationalVec& values, const Rational& q, const Rational& a,
                              const Rational& b);

}  // namespace qteich
