#pragma once

// Decorated ideal triangulations of punctured surfaces and the three
// elementary moves (reindexing, mark rotation, diagonal exchange).
//
// Conventions used throughout the library:
//  - Triangles and edges are 0-based internally (1-based in JSON).
//  - The sides of a triangle are numbered 0,1,2 counterclockwise with side 0
//    opposite the marked corner. Corner k is the corner opposite side k, and
//    side s runs (counterclockwise) from corner s+1 to corner s+2.
//  - Two sides carrying the same edge id are glued orientation-reversingly,
//    so the side table alone determines the oriented surface.

#include "qteich/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qteich {

struct SurfaceSig {
    int genus = 0;
    int punctures = 1;

    /// m = 2g - 2 + p; throws InvalidSurface unless p >= 1 and m >= 1.
    static SurfaceSig make(int genus, int punctures);

    int m() const { return 2 * genus - 2 + punctures; }
    int triangle_count() const { return 2 * m(); }
    int edge_count() const { return 3 * m(); }

    bool operator==(const SurfaceSig&) const = default;
};

struct Slot {
    int tri = 0;
    int side = 0;
    bool operator==(const Slot&) const = default;
    auto operator<=>(const Slot&) const = default;
};

struct Triangle {
    std::array<int, 3> sides{};
    bool operator==(const Triangle&) const = default;
};

class DecoratedTriangulation {
  public:
    /// Validates the gluing: every edge bounds exactly two sides, the dual
    /// graph is connected and the vertex count matches the puncture count.
    DecoratedTriangulation(SurfaceSig surface, std::vector<Triangle> triangles);

    const SurfaceSig& surface() const { return surface_; }
    int m() const { return surface_.m(); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }
    int edge_count() const { return surface_.edge_count(); }

    const std::vector<Triangle>& triangles() const { return triangles_; }
    int edge_at(int tri, int side) const { return triangles_.at(tri).sides.at(side); }
    int edge_at(Slot s) const { return edge_at(s.tri, s.side); }

    /// The two sides bounded by edge e, lower slot first.
    const std::array<Slot, 2>& slots_of_edge(int e) const { return edge_slots_.at(e); }

    /// Number of vertex classes of the glued surface.
    int vertex_count() const;

    /// Side table with edges renamed in order of first appearance. Decorated
    /// triangulations carry numbered triangles and marks but no edge names, so
    /// this is the identity of the decorated triangulation.
    std::vector<int> canonical_sides() const;

    /// Equality as decorated triangulations (edge names ignored).
    bool operator==(const DecoratedTriangulation& o) const {
        return surface_ == o.surface_ && canonical_sides() == o.canonical_sides();
    }

    /// Equality including edge names.
    bool same_labels(const DecoratedTriangulation& o) const {
        return surface_ == o.surface_ && triangles_ == o.triangles_;
    }

  private:
    SurfaceSig surface_;
    std::vector<Triangle> triangles_;
    std::vector<std::array<Slot, 2>> edge_slots_;
};

// ---------------------------------------------------------------------------
// Moves

/// tau'_i = tau_{perm[i]}.
struct Reindex {
    std::vector<int> perm;
    bool operator==(const Reindex&) const = default;
};

/// Moves the mark of triangle `tri` to the next corner counterclockwise.
struct MarkRotation {
    int tri = 0;
    bool operator==(const MarkRotation&) const = default;
};

/// Flips the common side-0 edge of triangles i and j.
struct DiagonalExchange {
    int i = 0;
    int j = 0;
    bool operator==(const DiagonalExchange&) const = default;
};

using Move = std::variant<Reindex, MarkRotation, DiagonalExchange>;
using MoveSequence = std::vector<Move>;

Move transposition(int n, int i, int j);
std::string describe(const Move& mv);

/// Throws NotApplicable naming the violated precondition.
void check_applicable(const DecoratedTriangulation& tau, const Move& mv);
bool is_applicable(const DecoratedTriangulation& tau, const Move& mv);

DecoratedTriangulation apply_move(const DecoratedTriangulation& tau, const Move& mv);
DecoratedTriangulation apply_moves(DecoratedTriangulation tau, const MoveSequence& moves);

/// omega_{mu nu} = rho_mu o phi_{mu nu} o rho_nu, listed in application order.
MoveSequence omega_moves(int mu, int nu);

// ---------------------------------------------------------------------------
// Derived combinatorics

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}
    long& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    long operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const IntMatrix&) const = default;
};

/// sigma_ij = a_ij - a_ji, where a_ij counts corners whose two sides, listed
/// counterclockwise about the corner's vertex, are (lambda_i, lambda_j).
/// Per triangle with side edges e0,e1,e2 this gives sigma(e_{s+1}, e_s) += 1.
IntMatrix sigma_matrix(const DecoratedTriangulation& tau);

/// Edge labels of a diagonal exchange in the layout of the shear-coordinate
/// exchange formulas: the flipped diagonal `i`, and the outer edges j (side 1
/// of mu), m (side 2 of mu), l (side 1 of nu), k (side 2 of nu).
struct ExchangeLabels {
    int case_label = 0;  // 1..8
    int mu = 0;
    int nu = 0;
    int i = 0, j = 0, k = 0, l = 0, m = 0;
};

/// Classifies the identification pattern among the outer edges. The roles of
/// the two triangles are swapped when needed so that the pattern is one of
/// the eight listed cases.
ExchangeLabels classify_exchange(const DecoratedTriangulation& tau, int i, int j);

/// Breadth-first search over reindexing transpositions, mark rotations and
/// applicable diagonal exchanges. Returns std::nullopt if nothing is found
/// within depth_limit moves.
std::optional<MoveSequence> find_move_path(const DecoratedTriangulation& from,
                                           const DecoratedTriangulation& to, int depth_limit);

/// True iff triangles i, j, k form the fan of a pentagon with the marks placed
/// so that the pentagon relation applies: side 0 of i is side 1 of j, and
/// side 0 of j is side 1 of k.
bool detect_pentagon(const DecoratedTriangulation& tau, int i, int j, int k);

/// Rotates marks so that edge e becomes side 0 of both triangles it bounds.
/// Returns the rotation moves (empty if already so); throws NotApplicable if
/// e bounds a single triangle twice.
MoveSequence rotations_to_expose(const DecoratedTriangulation& tau, int e);

/// A flip of edge `edge` made applicable by first rotating marks.
struct ExposedFlip {
    int edge = 0;
    MoveSequence rotations;
    DiagonalExchange flip;
};

/// One exposed flip per edge bounding two distinct triangles.
std::vector<ExposedFlip> exposed_flips(const DecoratedTriangulation& tau);

struct CaseWitness {
    DecoratedTriangulation tau;  // marks already opposite the flipped edge
    DiagonalExchange flip;
};

/// First flip met for each exchange case in a breadth-first flip search of
/// the given depth (states compared as decorated triangulations).
std::map<int, CaseWitness> exchange_case_witnesses(const DecoratedTriangulation& start, int depth);

/// Deterministic fixture for the (g, p) surface. Genus 0 starts from two
/// triangles glued along their boundary, genus 1 from the square torus and
/// higher genus from the fan-triangulated 4g-gon; the remaining punctures are
/// inserted by subdividing the last triangle.
DecoratedTriangulation build_standard(int genus, int punctures);

/// Cone a new puncture inside triangle t: t is replaced by three triangles
/// marked at the new vertex.
DecoratedTriangulation insert_puncture(const DecoratedTriangulation& tau, int t);

}  // namespace qteich
