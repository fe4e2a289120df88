#include "qteich/classical.hpp"

#include <type_traits>
#include <variant>

namespace qteich {

namespace {

const Rational& positive_or_throw(const Rational& v, const char* what) {
    if (v <= 0) throw InvalidInput(std::string(what) + " coordinates must be positive");
    return v;
}

}  // namespace

void validate(const KashaevCoords& k, const DecoratedTriangulation& tau) {
    if (k.y.size() != k.z.size() || k.triangle_count() != tau.triangle_count())
        throw InvalidInput("Kashaev coordinates need one (y, z) pair per triangle");
    for (size_t t = 0; t < k.y.size(); ++t) {
        positive_or_throw(k.y[t], "Kashaev");
        positive_or_throw(k.z[t], "Kashaev");
    }
}

void validate_edge_coords(const RationalVec& x, const DecoratedTriangulation& tau, const char* what) {
    if (static_cast<int>(x.size()) != tau.edge_count())
        throw InvalidInput(std::string(what) + " coordinates need one entry per edge");
    for (const auto& v : x) positive_or_throw(v, what);
}

KashaevCoords kashaev_change(const KashaevCoords& k, const Move& mv, const DecoratedTriangulation& tau) {
    check_applicable(tau, mv);
    KashaevCoords out = k;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Reindex>) {
                for (size_t t = 0; t < m.perm.size(); ++t) {
                    out.y[t] = k.y[m.perm[t]];
                    out.z[t] = k.z[m.perm[t]];
                }
            } else if constexpr (std::is_same_v<T, MarkRotation>) {
                out.y[m.tri] = k.z[m.tri] / k.y[m.tri];
                out.z[m.tri] = 1 / k.y[m.tri];
            } else {
                const int i = m.i, j = m.j;
                Rational d = k.y[i] * k.y[j] + k.z[i] * k.z[j];
                out.y[i] = k.z[j] / d;
                out.z[i] = k.y[i] / d;
                out.y[j] = k.z[i] / d;
                out.z[j] = k.y[j] / d;
            }
        },
        mv);
    return out;
}

KashaevCoords kashaev_change(KashaevCoords k, const MoveSequence& moves, DecoratedTriangulation tau) {
    for (const auto& mv : moves) {
        k = kashaev_change(k, mv, tau);
        tau = apply_move(tau, mv);
    }
    return k;
}

HCoords to_h(const KashaevCoords& k) {
    HCoords h;
    for (int t = 0; t < k.triangle_count(); ++t) h.h.push_back({k.y[t] / k.z[t], k.z[t], 1 / k.y[t]});
    return h;
}

ShearCoords shear_from_kashaev(const KashaevCoords& k, const DecoratedTriangulation& tau) {
    auto h = to_h(k);
    ShearCoords x(tau.edge_count());
    for (int e = 0; e < tau.edge_count(); ++e) {
        auto [a, b] = tau.slots_of_edge(e);
        x[e] = h.h[a.tri][a.side] * h.h[b.tri][b.side];
    }
    return x;
}

ShearCoords shear_change(const ShearCoords& x, const ExchangeLabels& L) {
    ShearCoords out = x;
    const Rational& xi = x[L.i];
    const Rational up = 1 + xi;          // 1 + x_i
    const Rational down = xi / (1 + xi);  // (1 + x_i^{-1})^{-1}
    out[L.i] = 1 / xi;
    switch (L.case_label) {
        case 1:
            out[L.j] = up * x[L.j];
            out[L.k] = down * x[L.k];
            out[L.l] = up * x[L.l];
            out[L.m] = down * x[L.m];
            break;
        case 2:
            out[L.j] = xi * x[L.j];
            out[L.l] = up * x[L.l];
            out[L.m] = down * x[L.m];
            break;
        case 3:
            out[L.j] = xi * x[L.j];
            out[L.k] = down * x[L.k];
            out[L.l] = up * x[L.l];
            break;
        case 4:
            out[L.j] = up * up * x[L.j];
            out[L.k] = down * x[L.k];
            out[L.m] = down * x[L.m];
            break;
        case 5:
            out[L.j] = up * x[L.j];
            out[L.k] = down * down * x[L.k];
            out[L.l] = up * x[L.l];
            break;
        case 6:
            out[L.j] = xi * x[L.j];
            out[L.l] = xi * x[L.l];
            break;
        case 7:
            out[L.j] = xi * x[L.j];
            out[L.k] = xi * x[L.k];
            break;
        case 8:
            out[L.j] = up * up * x[L.j];
            out[L.k] = down * down * x[L.k];
            break;
        default:
            throw NotApplicable("unknown exchange case " + std::to_string(L.case_label));
    }
    return out;
}

ShearCoords shear_change(const ShearCoords& x, const DecoratedTriangulation& tau, int i, int j) {
    return shear_change(x, classify_exchange(tau, i, j));
}

ShearCoords shear_transport(const ShearCoords& x, const Move& mv, const DecoratedTriangulation& tau) {
    check_applicable(tau, mv);
    if (const auto* d = std::get_if<DiagonalExchange>(&mv)) return shear_change(x, tau, d->i, d->j);
    return x;
}

bool check_compat_diagram(const DecoratedTriangulation& tau, const Move& mv, const KashaevCoords& k) {
    auto moved = apply_move(tau, mv);
    auto lhs = shear_from_kashaev(kashaev_change(k, mv, tau), moved);
    auto rhs = shear_transport(shear_from_kashaev(k, tau), mv, tau);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------

QMatrix matrix_M(int triangles) {
    QMatrix M(3 * triangles, 2 * triangles);
    for (int t = 0; t < triangles; ++t) {
        M(3 * t + 0, 2 * t) = 1;
        M(3 * t + 0, 2 * t + 1) = -1;
        M(3 * t + 1, 2 * t + 1) = 1;
        M(3 * t + 2, 2 * t) = -1;
    }
    return M;
}

QMatrix matrix_f2(const DecoratedTriangulation& tau) {
    QMatrix f(tau.edge_count(), 3 * tau.triangle_count());
    for (int e = 0; e < tau.edge_count(); ++e)
        for (const auto& s : tau.slots_of_edge(e)) f(e, 3 * s.tri + s.side) += 1;
    return f;
}

QMatrix matrix_f1(int edges) {
    QMatrix f(1, edges);
    for (int e = 0; e < edges; ++e) f(0, e) = 1;
    return f;
}

QMatrix dual_boundary(const DecoratedTriangulation& tau) {
    QMatrix d(tau.triangle_count(), tau.edge_count());
    for (int e = 0; e < tau.edge_count(); ++e) {
        auto [from, to] = tau.slots_of_edge(e);
        d(from.tri, e) -= 1;
        d(to.tri, e) += 1;
    }
    return d;
}

namespace {

// 6m x 3m: dual chain -> h vector.
QMatrix chains_to_h(const DecoratedTriangulation& tau) {
    QMatrix f(3 * tau.triangle_count(), tau.edge_count());
    for (int e = 0; e < tau.edge_count(); ++e) {
        auto [from, to] = tau.slots_of_edge(e);
        f(3 * from.tri + from.side, e) -= 1;
        f(3 * to.tri + to.side, e) += 1;
    }
    return f;
}

// 4m x 6m left inverse of M on its image: ln y = -ln h2, ln z = ln h1.
QMatrix h_to_yz(int triangles) {
    QMatrix p(2 * triangles, 3 * triangles);
    for (int t = 0; t < triangles; ++t) {
        p(2 * t, 3 * t + 2) = -1;
        p(2 * t + 1, 3 * t + 1) = 1;
    }
    return p;
}

}  // namespace

QMatrix matrix_f3_chains(const DecoratedTriangulation& tau) {
    return h_to_yz(tau.triangle_count()) * chains_to_h(tau);
}

QMatrix cycle_basis(const DecoratedTriangulation& tau) { return dual_boundary(tau).kernel(); }

RationalVec homology_embed(const RationalVec& chain, const DecoratedTriangulation& tau) {
    if (static_cast<int>(chain.size()) != tau.edge_count())
        throw InvalidInput("dual chain needs one coefficient per edge");
    for (const auto& v : dual_boundary(tau).apply(chain))
        if (v != 0) throw InvalidInput("not a cycle: boundary is nonzero");
    return matrix_f3_chains(tau).apply(chain);
}

ExactnessReport exactness_report(const DecoratedTriangulation& tau) {
    ExactnessReport r;
    r.m = tau.m();
    const int n4 = 2 * tau.triangle_count();
    QMatrix f3 = matrix_f3_chains(tau) * cycle_basis(tau);
    QMatrix f2 = matrix_f2(tau) * matrix_M(tau.triangle_count());
    QMatrix f1 = matrix_f1(tau.edge_count());

    r.dim_cycles = f3.cols();
    r.rank_f3 = f3.rank();
    r.rank_f2 = f2.rank();
    r.rank_f1 = f1.rank();
    r.dim_ker_f2 = n4 - r.rank_f2;

    r.f3_injective = r.rank_f3 == r.dim_cycles;
    r.im_f3_eq_ker_f2 = (f2 * f3).is_zero() && r.rank_f3 == r.dim_ker_f2;
    r.im_f2_eq_ker_f1 = (f1 * f2).is_zero() && r.rank_f2 == tau.edge_count() - r.rank_f1;
    r.f1_surjective = r.rank_f1 == 1;
    r.dims_match = r.dim_ker_f2 == r.m + 1 && r.rank_f2 == 3 * r.m - 1;
    return r;
}

QMatrix kashaev_poisson(int triangles) {
    QMatrix B(2 * triangles, 2 * triangles);
    for (int t = 0; t < triangles; ++t) {
        B(2 * t, 2 * t + 1) = -1;
        B(2 * t + 1, 2 * t) = 1;
    }
    return B;
}

QMatrix bivector_pushforward(const DecoratedTriangulation& tau, const QMatrix& B) {
    QMatrix J = matrix_f2(tau) * matrix_M(tau.triangle_count());
    return J * B * J.transpose();
}

bool bivector_check(const DecoratedTriangulation& tau) {
    return bivector_pushforward(tau, kashaev_poisson(tau.triangle_count())) ==
           QMatrix::from_int(sigma_matrix(tau));
}

// ---------------------------------------------------------------------------

KashaevCoords kashaev_from_penner(const LambdaLengths& l, const DecoratedTriangulation& tau) {
    KashaevCoords k;
    for (const auto& t : tau.triangles()) {
        const Rational& l0 = l.at(t.sides[0]);
        k.y.push_back(l.at(t.sides[1]) / l0);
        k.z.push_back(l.at(t.sides[2]) / l0);
    }
    return k;
}

LambdaLengths ptolemy_exchange(const LambdaLengths& l, const DecoratedTriangulation& tau, int i, int j) {
    check_applicable(tau, DiagonalExchange{i, j});
    const auto& ti = tau.triangles()[i].sides;
    const auto& tj = tau.triangles()[j].sides;
    LambdaLengths out = l;
    out[ti[0]] = (l[ti[1]] * l[tj[1]] + l[ti[2]] * l[tj[2]]) / l[ti[0]];
    return out;
}

LambdaLengths penner_transport(const LambdaLengths& l, const Move& mv, const DecoratedTriangulation& tau) {
    check_applicable(tau, mv);
    if (const auto* d = std::get_if<DiagonalExchange>(&mv)) return ptolemy_exchange(l, tau, d->i, d->j);
    return l;
}

bool penner_compat_check(const DecoratedTriangulation& tau, const Move& mv, const LambdaLengths& l) {
    auto moved = apply_move(tau, mv);
    auto lhs = kashaev_from_penner(penner_transport(l, mv, tau), moved);
    auto rhs = kashaev_change(kashaev_from_penner(l, tau), mv, tau);
    return lhs == rhs;
}

QMatrix matrix_penner(const DecoratedTriangulation& tau) {
    QMatrix f(2 * tau.triangle_count(), tau.edge_count());
    for (int t = 0; t < tau.triangle_count(); ++t) {
        const auto& s = tau.triangles()[t].sides;
        f(2 * t, s[1]) += 1;
        f(2 * t, s[0]) -= 1;
        f(2 * t + 1, s[2]) += 1;
        f(2 * t + 1, s[0]) -= 1;
    }
    return f;
}

QMatrix penner_two_form(const DecoratedTriangulation& tau) {
    QMatrix w(tau.edge_count(), tau.edge_count());
    for (const auto& t : tau.triangles())
        for (int s = 0; s < 3; ++s) {
            int a = t.sides[s], b = t.sides[(s + 1) % 3];
            w(a, b) += 1;
            w(b, a) -= 1;
        }
    return w;
}

QMatrix kashaev_two_form(int triangles) { return -kashaev_poisson(triangles); }

PennerReport penner_exact_report(const DecoratedTriangulation& tau) {
    PennerReport r;
    r.m = tau.m();
    QMatrix f = matrix_penner(tau);
    r.rank = f.rank();
    QMatrix ker = f.kernel();
    r.kernel_dim = ker.cols();
    r.coker_dim = f.rows() - r.rank;
    r.rank_ok = r.rank == 3 * r.m - 1;
    r.coker_ok = r.coker_dim == r.m + 1;
    if (r.kernel_dim == 1) {
        r.kernel_is_scaling = true;
        for (int e = 0; e < ker.rows(); ++e)
            if (ker(e, 0) != ker(0, 0)) r.kernel_is_scaling = false;
    }
    r.two_form_ok = f.transpose() * kashaev_two_form(tau.triangle_count()) * f == penner_two_form(tau);
    return r;
}

}  // namespace qteich
