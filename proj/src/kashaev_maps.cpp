#include "qteich/kashaev_maps.hpp"

namespace qteich {

std::vector<std::string> kashaev_names(int triangles) {
    std::vector<std::string> names;
    for (int mu = 0; mu < triangles; ++mu) {
        names.push_back("Y" + std::to_string(mu + 1));
        names.push_back("Z" + std::to_string(mu + 1));
    }
    return names;
}

namespace {

Expr Y(int mu) { return Expr::generator(y_index(mu)); }
Expr Z(int mu) { return Expr::generator(z_index(mu)); }

void check_triangle(int triangles, int i) {
    if (i < 0 || i >= triangles) throw InvalidInput("triangle index " + std::to_string(i) + " out of range");
}

}  // namespace

SubstitutionMap rho_hat(int triangles, int i, const Expr& a) {
    check_triangle(triangles, i);
    auto m = SubstitutionMap::identity(2 * triangles);
    Expr yinv = Y(i).inverse();
    m[y_index(i)] = a * yinv * Z(i);
    m[z_index(i)] = yinv;
    return m;
}

SubstitutionMap phi_hat(int triangles, int i, int j, const Expr& b) {
    check_triangle(triangles, i);
    check_triangle(triangles, j);
    if (i == j) throw InvalidInput("diagonal exchange needs two distinct triangles");
    auto m = SubstitutionMap::identity(2 * triangles);
    Expr dinv = (b * Y(i) * Y(j) + Z(i) * Z(j)).inverse();
    m[y_index(i)] = dinv * Z(j);
    m[z_index(i)] = b * dinv * Y(i);
    m[y_index(j)] = dinv * Z(i);
    m[z_index(j)] = b * dinv * Y(j);
    return m;
}

SubstitutionMap alpha_hat(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<Expr> images(2 * n);
    for (int i = 0; i < n; ++i) {
        check_triangle(n, perm[i]);
        images[y_index(i)] = Y(perm[i]);
        images[z_index(i)] = Z(perm[i]);
    }
    return SubstitutionMap(std::move(images));
}

SubstitutionMap move_map(const Move& mv, int triangles) {
    if (const auto* r = std::get_if<Reindex>(&mv)) {
        if (static_cast<int>(r->perm.size()) != triangles) throw InvalidInput("permutation has the wrong length");
        return alpha_hat(r->perm);
    }
    if (const auto* r = std::get_if<MarkRotation>(&mv)) return rho_hat(triangles, r->tri);
    const auto& d = std::get<DiagonalExchange>(mv);
    return phi_hat(triangles, d.i, d.j);
}

SubstitutionMap compose_maps(const std::vector<SubstitutionMap>& maps) {
    if (maps.empty()) throw InvalidInput("empty composite");
    SubstitutionMap psi = maps.front();
    for (size_t k = 1; k < maps.size(); ++k) psi = compose(psi, maps[k]);
    return psi;
}

SubstitutionMap compose_along_path(const DecoratedTriangulation& tau, const MoveSequence& path) {
    const int nt = tau.triangle_count();
    SubstitutionMap psi = SubstitutionMap::identity(2 * nt);
    DecoratedTriangulation cur = tau;
    for (size_t k = 0; k < path.size(); ++k) {
        try {
            check_applicable(cur, path[k]);
        } catch (const NotApplicable& e) {
            throw InvalidPath("move " + std::to_string(k + 1) + " (" + describe(path[k]) + "): " + e.what());
        }
        psi = compose(psi, move_map(path[k], nt));
        cur = apply_move(cur, path[k]);
    }
    return psi;
}

SubstitutionMap delta_hat(const ExchangeLabels& L, int edges) {
    auto m = SubstitutionMap::identity(edges);
    auto X = [](int e) { return Expr::generator(e); };
    const Expr xi = X(L.i), xi_inv = xi.inverse();
    const Expr up = Expr::one() + Expr::q_power(1) * xi;
    const Expr up3 = Expr::one() + Expr::q_power(3) * xi;
    const Expr down = (Expr::one() + Expr::q_power(1) * xi_inv).inverse();
    const Expr down3 = (Expr::one() + Expr::q_power(3) * xi_inv).inverse();

    m[L.i] = xi_inv;
    switch (L.case_label) {
        case 1:
            m[L.j] = up * X(L.j);
            m[L.k] = down * X(L.k);
            m[L.l] = up * X(L.l);
            m[L.m] = down * X(L.m);
            break;
        case 2:
            m[L.j] = xi * X(L.j);
            m[L.l] = up * X(L.l);
            m[L.m] = down * X(L.m);
            break;
        case 3:
            m[L.j] = xi * X(L.j);
            m[L.k] = down * X(L.k);
            m[L.l] = up * X(L.l);
            break;
        case 4:
            m[L.j] = up * up3 * X(L.j);
            m[L.k] = down * X(L.k);
            m[L.m] = down * X(L.m);
            break;
        case 5:
            m[L.j] = up * X(L.j);
            m[L.l] = up * X(L.l);
            m[L.k] = down * down3 * X(L.k);
            break;
        case 6:
            m[L.j] = xi * X(L.j);
            m[L.l] = xi * X(L.l);
            break;
        case 7:
            m[L.j] = xi * X(L.j);
            m[L.k] = xi * X(L.k);
            break;
        case 8:
            m[L.j] = up * up3 * X(L.j);
            m[L.k] = down * down3 * X(L.k);
            break;
        default:
            throw NotApplicable("unknown exchange case " + std::to_string(L.case_label));
    }
    return m;
}

SubstitutionMap delta_hat(const DecoratedTriangulation& tau, int i, int j) {
    return delta_hat(classify_exchange(tau, i, j), tau.edge_count());
}

SubstitutionMap chekhov_fock_transport(const DecoratedTriangulation& tau, const Move& mv) {
    check_applicable(tau, mv);
    if (const auto* d = std::get_if<DiagonalExchange>(&mv)) return delta_hat(tau, d->i, d->j);
    return SubstitutionMap::identity(tau.edge_count());
}

Expr expr_from_monomial(const SkewLaurentElement& monomial) {
    ExpVec u;
    int k = 0;
    Rational c;
    if (!monomial.is_monomial(&u, &k, &c)) throw InvalidInput("expected a monomial");
    std::vector<Expr> factors{Expr::scalar(c), Expr::q_power(k)};
    for (size_t g = 0; g < u.size(); ++g)
        if (u[g] != 0) factors.push_back(Expr::generator(static_cast<int>(g)).pow(u[g]));
    return Expr::product(factors);
}

SubstitutionMap f_tau_map(const DecoratedTriangulation& tau) {
    std::vector<Expr> images;
    for (const auto& img : f_tau(tau)) images.push_back(expr_from_monomial(img));
    return SubstitutionMap(std::move(images));
}

}  // namespace qteich
