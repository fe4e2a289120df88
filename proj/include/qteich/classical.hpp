#pragma once

// Classical coordinates in multiplicative form: Kashaev (y, z) per triangle,
// exponential shear coordinates per edge, and lambda lengths per edge. The
// log-linear maps M, f1, f2, f3 and the linearized Penner map are exact
// rational matrices built from the same side-slot enumeration.

#include "qteich/linalg.hpp"
#include "qteich/triangulation.hpp"

#include <array>
#include <vector>

namespace qteich {

struct KashaevCoords {
    RationalVec y;
    RationalVec z;

    int triangle_count() const { return static_cast<int>(y.size()); }
    bool operator==(const KashaevCoords&) const = default;
};

struct HCoords {
    std::vector<std::array<Rational, 3>> h;
};

using ShearCoords = RationalVec;
using LambdaLengths = RationalVec;

/// Throws InvalidInput unless every entry is positive and sizes match tau.
void validate(const KashaevCoords& k, const DecoratedTriangulation& tau);
void validate_edge_coords(const RationalVec& x, const DecoratedTriangulation& tau, const char* what);

KashaevCoords kashaev_change(const KashaevCoords& k, const Move& mv, const DecoratedTriangulation& tau);
KashaevCoords kashaev_change(KashaevCoords k, const MoveSequence& moves, DecoratedTriangulation tau);

HCoords to_h(const KashaevCoords& k);

/// x_i = h^s_mu h^t_nu over the two slots of edge i.
ShearCoords shear_from_kashaev(const KashaevCoords& k, const DecoratedTriangulation& tau);

/// Shear change for the diagonal exchange phi_{i j} of tau (i, j triangles).
/// Edge ids are kept: the flipped diagonal keeps its id.
ShearCoords shear_change(const ShearCoords& x, const DecoratedTriangulation& tau, int i, int j);
ShearCoords shear_change(const ShearCoords& x, const ExchangeLabels& labels);

/// Shear coordinates transported along a move (identity for reindexing and
/// mark rotation, which do not change the underlying triangulation).
ShearCoords shear_transport(const ShearCoords& x, const Move& mv, const DecoratedTriangulation& tau);

bool check_compat_diagram(const DecoratedTriangulation& tau, const Move& mv, const KashaevCoords& k);

// ---------------------------------------------------------------------------
// Log-linear maps

/// 6m x 4m: (ln y, ln z) per triangle -> (ln h0, ln h1, ln h2) per triangle.
QMatrix matrix_M(int triangles);
/// 3m x 6m.
QMatrix matrix_f2(const DecoratedTriangulation& tau);
/// 1 x 3m.
QMatrix matrix_f1(int edges);
/// 2m x 3m boundary map of the dual graph. Dual edge i runs from the lower
/// slot of edge i to the higher one.
QMatrix dual_boundary(const DecoratedTriangulation& tau);
/// 4m x 3m: f3 on dual chains, landing in (ln y, ln z) coordinates.
QMatrix matrix_f3_chains(const DecoratedTriangulation& tau);
/// Basis of the dual cycle space (3m x (m+1)).
QMatrix cycle_basis(const DecoratedTriangulation& tau);

/// f3 of a dual cycle; throws InvalidInput("not a cycle") if its boundary is nonzero.
RationalVec homology_embed(const RationalVec& chain, const DecoratedTriangulation& tau);

struct ExactnessReport {
    int m = 0;
    int rank_f3 = 0;
    int rank_f2 = 0;
    int rank_f1 = 0;
    int dim_ker_f2 = 0;
    int dim_cycles = 0;
    bool f3_injective = false;
    bool im_f3_eq_ker_f2 = false;
    bool im_f2_eq_ker_f1 = false;
    bool f1_surjective = false;
    bool dims_match = false;  // dim Ker f2 = m+1 and dim Im f2 = 3m-1

    bool ok() const { return f3_injective && im_f3_eq_ker_f2 && im_f2_eq_ker_f1 && f1_surjective && dims_match; }
};

ExactnessReport exactness_report(const DecoratedTriangulation& tau);

/// 4m x 4m Poisson matrix of the Kashaev algebra in (ln y, ln z) order,
/// oriented like Z Y = q^2 Y Z: entry (z, y) = +1, (y, z) = -1.
QMatrix kashaev_poisson(int triangles);

/// J B J^T with J the matrix of f2 o M.
QMatrix bivector_pushforward(const DecoratedTriangulation& tau, const QMatrix& B);

/// J B J^T == sigma for B = kashaev_poisson.
bool bivector_check(const DecoratedTriangulation& tau);

// ---------------------------------------------------------------------------
// Lambda lengths

KashaevCoords kashaev_from_penner(const LambdaLengths& l, const DecoratedTriangulation& tau);

/// New diagonal length (l_a l_c + l_b l_d) / l_l for the flip phi_{i j}.
LambdaLengths ptolemy_exchange(const LambdaLengths& l, const DecoratedTriangulation& tau, int i, int j);

LambdaLengths penner_transport(const LambdaLengths& l, const Move& mv, const DecoratedTriangulation& tau);

bool penner_compat_check(const DecoratedTriangulation& tau, const Move& mv, const LambdaLengths& l);

/// 4m x 3m matrix of f in (ln l) coordinates.
QMatrix matrix_penner(const DecoratedTriangulation& tau);
/// 3m x 3m matrix of sum over triangles of dl_0^dl_1 + dl_1^dl_2 + dl_2^dl_0.
QMatrix penner_two_form(const DecoratedTriangulation& tau);
/// 4m x 4m matrix of sum over triangles of d ln y ^ d ln z.
QMatrix kashaev_two_form(int triangles);

struct PennerReport {
    int m = 0;
    int rank = 0;
    int kernel_dim = 0;
    int coker_dim = 0;
    bool kernel_is_scaling = false;
    bool rank_ok = false;
    bool coker_ok = false;
    bool two_form_ok = false;

    bool ok() const { return kernel_is_scaling && rank_ok && coker_ok && two_form_ok; }
};

PennerReport penner_exact_report(const DecoratedTriangulation& tau);

// ---------------------------------------------------------------------------
// Sampling

template <class Rng>
KashaevCoords random_kashaev(Rng& rng, int triangles, long bound = 9) {
    KashaevCoords k;
    for (int t = 0; t < triangles; ++t) {
        k.y.push_back(random_positive_rational(rng, bound));
        k.z.push_back(random_positive_rational(rng, bound));
    }
    return k;
}

template <class Rng>
RationalVec random_edge_coords(Rng& rng, int edges, long bound = 9) {
    RationalVec v;
    for (int e = 0; e < edges; ++e) v.push_back(random_positive_rational(rng, bound));
    return v;
}

}  // namespace qteich
