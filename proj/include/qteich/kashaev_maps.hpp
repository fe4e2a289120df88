#pragma once

// The generalized Kashaev coordinate-change maps between fraction algebras of
// decorated triangulations, the quantum shear maps between Chekhov-Fock
// algebras, and F_tau written as expressions.
//
// Generator indices in the Kashaev algebra: Y_mu = 2 mu, Z_mu = 2 mu + 1.
// A move tau -> tau' gives a map from the algebra of tau' to that of tau; a
// path tau_0 -> ... -> tau_k gives m_1 o m_2 o ... o m_k.

#include "qteich/expr.hpp"
#include "qteich/qtorus.hpp"
#include "qteich/triangulation.hpp"

#include <string>
#include <vector>

namespace qteich {

class InvalidPath : public Error {
  public:
    using Error::Error;
};

inline int y_index(int mu) { return 2 * mu; }
inline int z_index(int mu) { return 2 * mu + 1; }

/// Y_0, Z_0, Y_1, ... names for rendering (1-based, as in the literature).
std::vector<std::string> kashaev_names(int triangles);

/// Y'_i -> a Y_i^-1 Z_i, Z'_i -> Y_i^-1.
SubstitutionMap rho_hat(int triangles, int i, const Expr& a = Expr::param_a());

/// With D = b Y_i Y_j + Z_i Z_j: Y'_i -> D^-1 Z_j, Z'_i -> b D^-1 Y_i,
/// Y'_j -> D^-1 Z_i, Z'_j -> b D^-1 Y_j.
SubstitutionMap phi_hat(int triangles, int i, int j, const Expr& b = Expr::param_b());

/// Y'_i -> Y_perm[i], Z'_i -> Z_perm[i].
SubstitutionMap alpha_hat(const std::vector<int>& perm);

SubstitutionMap move_map(const Move& mv, int triangles);

/// Composite map along a path starting at tau; throws InvalidPath naming the
/// first inapplicable move.
SubstitutionMap compose_along_path(const DecoratedTriangulation& tau, const MoveSequence& path);

/// Composite of move maps taken literally in the given order, without
/// tracking triangulations: maps[0] o maps[1] o ...
SubstitutionMap compose_maps(const std::vector<SubstitutionMap>& maps);

/// Quantum shear map for the flip of the common edge of triangles i and j
/// of tau: from the Chekhov-Fock algebra of the flipped triangulation to that
/// of tau. Generators are edge indices.
SubstitutionMap delta_hat(const DecoratedTriangulation& tau, int i, int j);
SubstitutionMap delta_hat(const ExchangeLabels& labels, int edges);

/// Identity for reindexing and mark rotation, delta_hat for a flip.
SubstitutionMap chekhov_fock_transport(const DecoratedTriangulation& tau, const Move& mv);

/// c q^k x^u as an expression (generators in index order).
Expr expr_from_monomial(const SkewLaurentElement& monomial);

/// X_e -> F_tau(X_e) as expressions over the Kashaev generators.
SubstitutionMap f_tau_map(const DecoratedTriangulation& tau);

}  // namespace qteich
