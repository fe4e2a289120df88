#include "qteich/expr.hpp"

#include <functional>

namespace qteich {

namespace {

NodePtr make_leaf(NodeKind kind, int value = 0, Rational scalar = 0) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->value = value;
    n->scalar = std::move(scalar);
    return n;
}

NodePtr make_inner(NodeKind kind, std::vector<NodePtr> children) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->children = std::move(children);
    return n;
}

constexpr size_t kMaxRender = 4000;

}  // namespace

Expr::Expr() : node_(make_leaf(NodeKind::Scalar, 0, 1)) {}

Expr Expr::generator(int index) {
    if (index < 0) throw InvalidInput("negative generator index");
    return Expr(make_leaf(NodeKind::Generator, index));
}

Expr Expr::q_power(int k) { return Expr(make_leaf(NodeKind::QPower, k)); }
Expr Expr::param_a() { return Expr(make_leaf(NodeKind::ParamA)); }
Expr Expr::param_b() { return Expr(make_leaf(NodeKind::ParamB)); }
Expr Expr::scalar(const Rational& r) { return Expr(make_leaf(NodeKind::Scalar, 0, r)); }

bool Expr::is_scalar(const Rational& r) const { return kind() == NodeKind::Scalar && node_->scalar == r; }

Expr Expr::sum(const std::vector<Expr>& terms) {
    std::vector<NodePtr> kids;
    for (const auto& t : terms) {
        if (t.is_scalar(0)) continue;
        if (t.kind() == NodeKind::Sum)
            kids.insert(kids.end(), t.node().children.begin(), t.node().children.end());
        else
            kids.push_back(t.ptr());
    }
    if (kids.empty()) return zero();
    if (kids.size() == 1) return Expr(kids[0]);
    return Expr(make_inner(NodeKind::Sum, std::move(kids)));
}

Expr Expr::product(const std::vector<Expr>& factors) {
    std::vector<NodePtr> kids;
    for (const auto& f : factors) {
        if (f.is_scalar(0)) return zero();
        if (f.is_scalar(1) || (f.kind() == NodeKind::QPower && f.node().value == 0)) continue;
        if (f.kind() == NodeKind::Product)
            kids.insert(kids.end(), f.node().children.begin(), f.node().children.end());
        else
            kids.push_back(f.ptr());
    }
    if (kids.empty()) return one();
    if (kids.size() == 1) return Expr(kids[0]);
    return Expr(make_inner(NodeKind::Product, std::move(kids)));
}

Expr Expr::inverse() const {
    switch (kind()) {
        case NodeKind::Inverse:
            return Expr(node_->children[0]);
        case NodeKind::QPower:
            return q_power(-node_->value);
        case NodeKind::Scalar:
            if (node_->scalar == 0) throw InvalidInput("inverse of the zero expression");
            return scalar(1 / node_->scalar);
        default:
            return Expr(make_inner(NodeKind::Inverse, {node_}));
    }
}

Expr Expr::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    std::vector<Expr> f(k, *this);
    return product(f);
}

Expr Expr::operator-(const Expr& o) const { return sum({*this, -o}); }

Expr Expr::operator-() const { return product({scalar(-1), *this}); }

std::set<int> Expr::generators() const {
    std::set<int> out;
    std::set<const ExprNode*> seen;
    std::function<void(const ExprNode*)> walk = [&](const ExprNode* n) {
        if (!seen.insert(n).second) return;
        if (n->kind == NodeKind::Generator) out.insert(n->value);
        for (const auto& c : n->children) walk(c.get());
    };
    walk(node_.get());
    return out;
}

size_t Expr::dag_size() const {
    std::set<const ExprNode*> seen;
    std::function<void(const ExprNode*)> walk = [&](const ExprNode* n) {
        if (!seen.insert(n).second) return;
        for (const auto& c : n->children) walk(c.get());
    };
    walk(node_.get());
    return seen.size();
}

std::string Expr::to_string(const std::vector<std::string>& names) const {
    std::function<std::string(const ExprNode*)> render = [&](const ExprNode* n) -> std::string {
        switch (n->kind) {
            case NodeKind::Generator:
                return n->value < static_cast<int>(names.size()) ? names[n->value] : "g" + std::to_string(n->value);
            case NodeKind::QPower:
                return "q^" + std::to_string(n->value);
            case NodeKind::ParamA:
                return "a";
            case NodeKind::ParamB:
                return "b";
            case NodeKind::Scalar:
                return n->scalar.get_str();
            case NodeKind::Inverse:
                return "(" + render(n->children[0].get()) + ")^-1";
            case NodeKind::Sum:
            case NodeKind::Product: {
                std::string s = "(";
                const char* sep = n->kind == NodeKind::Sum ? " + " : "*";
                for (size_t i = 0; i < n->children.size(); ++i) {
                    if (i) s += sep;
                    s += render(n->children[i].get());
                    if (s.size() > kMaxRender) return s + "...)";
                }
                return s + ")";
            }
        }
        return "?";
    };
    auto s = render(node_.get());
    if (s.size() > kMaxRender) s = s.substr(0, kMaxRender) + "...";
    return s;
}

SubstitutionMap SubstitutionMap::identity(int generators) {
    std::vector<Expr> images;
    images.reserve(generators);
    for (int g = 0; g < generators; ++g) images.push_back(Expr::generator(g));
    return SubstitutionMap(std::move(images));
}

Expr Substituter::operator()(const Expr& e) {
    const ExprNode* n = e.ptr().get();
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    pinned_.push_back(e.ptr());
    Expr out;
    switch (n->kind) {
        case NodeKind::Generator:
            if (n->value >= map_.size())
                throw InvalidInput("generator " + std::to_string(n->value) + " has no image");
            out = map_[n->value];
            break;
        case NodeKind::Sum:
        case NodeKind::Product: {
            std::vector<Expr> kids;
            kids.reserve(n->children.size());
            for (const auto& c : n->children) kids.push_back((*this)(Expr(c)));
            out = n->kind == NodeKind::Sum ? Expr::sum(kids) : Expr::product(kids);
            break;
        }
        case NodeKind::Inverse:
            out = (*this)(Expr(n->children[0])).inverse();
            break;
        default:
            out = e;
    }
    memo_.emplace(n, out);
    return out;
}

Expr substitute(const Expr& e, const SubstitutionMap& map) { return Substituter(map)(e); }

SubstitutionMap compose(const SubstitutionMap& outer, const SubstitutionMap& inner) {
    Substituter sub(outer);
    std::vector<Expr> images;
    images.reserve(inner.size());
    for (const auto& img : inner.images()) images.push_back(sub(img));
    return SubstitutionMap(std::move(images));
}

Rational evaluate_commutative(const Expr& e, const RationalVec& values, const Rational& q, const Rational& a,
                              const Rational& b) {
    std::unordered_map<const ExprNode*, Rational> memo;
    std::function<Rational(const ExprNode*)> ev = [&](const ExprNode* n) -> Rational {
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        Rational r;
        switch (n->kind) {
            case NodeKind::Generator:
                r = values.at(n->value);
                break;
            case NodeKind::QPower: {
                Rational base = n->value >= 0 ? q : Rational(1 / q);
                r = 1;
                for (int k = 0; k < std::abs(n->value); ++k) r *= base;
                break;
            }
            case NodeKind::ParamA:
                r = a;
                break;
            case NodeKind::ParamB:
                r = b;
                break;
            case NodeKind::Scalar:
                r = n->scalar;
                break;
            case NodeKind::Sum:
                r = 0;
                for (const auto& c : n->children) r += ev(c.get());
                break;
            case NodeKind::Product:
                r = 1;
                for (const auto& c : n->children) r *= ev(c.get());
                break;
            case NodeKind::Inverse:
                r = ev(n->children[0].get());
                if (r == 0) throw InvalidInput("division by zero in a commutative specialization");
                r = 1 / r;
                break;
        }
        memo.emplace(n, r);
        return r;
    };
    return ev(e.ptr().get());
}

}  // namespace qteich
