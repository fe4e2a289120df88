#include "qteich/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qteich {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SurfaceSig SurfaceSig::make(int genus, int punctures) {
    if (genus < 0 || punctures < 1)
        throw InvalidSurface("surface needs genus >= 0 and at least one puncture");
    SurfaceSig s{genus, punctures};
    if (s.m() < 1)
        throw InvalidSurface("surface (g=" + std::to_string(genus) + ", p=" +
                             std::to_string(punctures) + ") has m = 2g-2+p <= 0");
    return s;
}

DecoratedTriangulation::DecoratedTriangulation(SurfaceSig surface, std::vector<Triangle> triangles)
    : surface_(surface), triangles_(std::move(triangles)) {
    surface_ = SurfaceSig::make(surface.genus, surface.punctures);
    const int nt = surface_.triangle_count();
    const int ne = surface_.edge_count();
    if (static_cast<int>(triangles_.size()) != nt)
        throw InvalidInput("expected " + std::to_string(nt) + " triangles, got " +
                           std::to_string(triangles_.size()));

    std::vector<std::vector<Slot>> slots(ne);
    for (int t = 0; t < nt; ++t)
        for (int s = 0; s < 3; ++s) {
            int e = triangles_[t].sides[s];
            if (e < 0 || e >= ne) throw InvalidInput("edge id out of range: " + std::to_string(e));
            slots[e].push_back({t, s});
        }
    edge_slots_.resize(ne);
    for (int e = 0; e < ne; ++e) {
        if (slots[e].size() != 2)
            throw InvalidInput("edge " + std::to_string(e + 1) + " bounds " +
                               std::to_string(slots[e].size()) + " sides, expected 2");
        edge_slots_[e] = {slots[e][0], slots[e][1]};
    }

    UnionFind dual(nt);
    for (const auto& sl : edge_slots_) dual.unite(sl[0].tri, sl[1].tri);
    for (int t = 1; t < nt; ++t)
        if (dual.find(t) != dual.find(0)) throw InvalidInput("dual graph is not connected");

    if (vertex_count() != surface_.punctures)
        throw InvalidInput("gluing has " + std::to_string(vertex_count()) +
                           " vertices but the surface has " + std::to_string(surface_.punctures) +
                           " punctures");
}

int DecoratedTriangulation::vertex_count() const {
    const int nt = triangle_count();
    UnionFind corners(3 * nt);
    auto id = [](int tri, int corner) { return 3 * tri + (corner % 3); };
    for (const auto& sl : edge_slots_) {
        auto [a, b] = sl;
        // side s runs corner s+1 -> s+2; the partner side is traversed backwards
        corners.unite(id(a.tri, a.side + 1), id(b.tri, b.side + 2));
        corners.unite(id(a.tri, a.side + 2), id(b.tri, b.side + 1));
    }
    std::set<int> roots;
    for (int c = 0; c < 3 * nt; ++c) roots.insert(corners.find(c));
    return static_cast<int>(roots.size());
}

std::vector<int> DecoratedTriangulation::canonical_sides() const {
    std::vector<int> rename(edge_count(), -1);
    std::vector<int> out;
    out.reserve(3 * triangles_.size());
    int next = 0;
    for (const auto& t : triangles_)
        for (int e : t.sides) {
            if (rename[e] < 0) rename[e] = next++;
            out.push_back(rename[e]);
        }
    return out;
}

// ---------------------------------------------------------------------------

Move transposition(int n, int i, int j) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm.at(i), perm.at(j));
    return Reindex{perm};
}

std::string describe(const Move& mv) {
    std::ostringstream os;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Reindex>) {
                os << "alpha(";
                for (size_t i = 0; i < m.perm.size(); ++i) os << (i ? "," : "") << m.perm[i] + 1;
                os << ")";
            } else if constexpr (std::is_same_v<T, MarkRotation>) {
                os << "rho_" << m.tri + 1;
            } else {
                os << "phi_" << m.i + 1 << "," << m.j + 1;
            }
        },
        mv);
    return os.str();
}

void check_applicable(const DecoratedTriangulation& tau, const Move& mv) {
    const int nt = tau.triangle_count();
    auto in_range = [&](int t) { return t >= 0 && t < nt; };
    if (auto* r = std::get_if<Reindex>(&mv)) {
        if (static_cast<int>(r->perm.size()) != nt)
            throw NotApplicable("reindexing permutation has wrong length");
        std::vector<int> sorted = r->perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < nt; ++i)
            if (sorted[i] != i) throw NotApplicable("reindexing is not a permutation");
    } else if (auto* rho = std::get_if<MarkRotation>(&mv)) {
        if (!in_range(rho->tri)) throw NotApplicable("mark rotation: triangle index out of range");
    } else {
        const auto& d = std::get<DiagonalExchange>(mv);
        if (!in_range(d.i) || !in_range(d.j))
            throw NotApplicable("diagonal exchange: triangle index out of range");
        if (d.i == d.j) throw NotApplicable("diagonal exchange needs two distinct triangles");
        if (tau.edge_at(d.i, 0) != tau.edge_at(d.j, 0))
            throw NotApplicable("diagonal exchange " + describe(mv) +
                                ": marked corners are not opposite a common edge");
    }
}

bool is_applicable(const DecoratedTriangulation& tau, const Move& mv) {
    try {
        check_applicable(tau, mv);
        return true;
    } catch (const NotApplicable&) {
        return false;
    }
}

DecoratedTriangulation apply_move(const DecoratedTriangulation& tau, const Move& mv) {
    check_applicable(tau, mv);
    std::vector<Triangle> tris = tau.triangles();
    if (auto* r = std::get_if<Reindex>(&mv)) {
        for (size_t i = 0; i < tris.size(); ++i) tris[i] = tau.triangles()[r->perm[i]];
    } else if (auto* rho = std::get_if<MarkRotation>(&mv)) {
        // old side s becomes new side s+2 (mod 3)
        const auto& old = tau.triangles()[rho->tri].sides;
        tris[rho->tri].sides = {old[1], old[2], old[0]};
    } else {
        const auto& d = std::get<DiagonalExchange>(mv);
        const auto& ti = tau.triangles()[d.i].sides;
        const auto& tj = tau.triangles()[d.j].sides;
        // quadrilateral rotated a quarter turn clockwise; the diagonal keeps its id
        tris[d.i].sides = {ti[0], tj[2], ti[1]};
        tris[d.j].sides = {ti[0], ti[2], tj[1]};
    }
    return DecoratedTriangulation(tau.surface(), std::move(tris));
}

DecoratedTriangulation apply_moves(DecoratedTriangulation tau, const MoveSequence& moves) {
    for (const auto& mv : moves) tau = apply_move(tau, mv);
    return tau;
}

MoveSequence omega_moves(int mu, int nu) {
    return {MarkRotation{nu}, DiagonalExchange{mu, nu}, MarkRotation{mu}};
}

// ---------------------------------------------------------------------------

IntMatrix sigma_matrix(const DecoratedTriangulation& tau) {
    const int n = tau.edge_count();
    IntMatrix sigma(n, n);
    for (const auto& t : tau.triangles())
        for (int s = 0; s < 3; ++s) {
            int lower = t.sides[s];
            int upper = t.sides[(s + 1) % 3];
            sigma(upper, lower) += 1;
            sigma(lower, upper) -= 1;
        }
    return sigma;
}

ExchangeLabels classify_exchange(const DecoratedTriangulation& tau, int i, int j) {
    check_applicable(tau, DiagonalExchange{i, j});
    auto label = [&](int mu, int nu) {
        ExchangeLabels L;
        L.mu = mu;
        L.nu = nu;
        L.i = tau.edge_at(mu, 0);
        L.j = tau.edge_at(mu, 1);
        L.m = tau.edge_at(mu, 2);
        L.l = tau.edge_at(nu, 1);
        L.k = tau.edge_at(nu, 2);
        const bool jk = L.j == L.k, jm = L.j == L.m, jl = L.j == L.l;
        const bool km = L.k == L.m, kl = L.k == L.l, lm = L.l == L.m;
        if (jk && lm) L.case_label = 6;
        else if (jm && kl) L.case_label = 7;
        else if (jl && km) L.case_label = 8;
        else if (jk) L.case_label = 2;
        else if (jm) L.case_label = 3;
        else if (jl) L.case_label = 4;
        else if (km) L.case_label = 5;
        else if (!kl && !lm) L.case_label = 1;
        return L;  // case_label 0: needs the swapped labelling
    };
    ExchangeLabels L = label(i, j);
    if (L.case_label == 0) L = label(j, i);
    if (L.case_label == 0) throw NotApplicable("unclassifiable diagonal exchange");
    return L;
}

namespace {

std::vector<int> state_key(const DecoratedTriangulation& tau) { return tau.canonical_sides(); }

struct KeyHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<size_t>(x + 1)) * 1099511628211ull;
        return h;
    }
};

std::vector<Move> move_alphabet(const DecoratedTriangulation& tau) {
    const int nt = tau.triangle_count();
    std::vector<Move> out;
    for (int i = 0; i < nt; ++i) out.push_back(MarkRotation{i});
    for (int i = 0; i < nt; ++i)
        for (int j = i + 1; j < nt; ++j) {
            if (tau.edge_at(i, 0) == tau.edge_at(j, 0)) out.push_back(DiagonalExchange{i, j});
            out.push_back(transposition(nt, i, j));
        }
    return out;
}

}  // namespace

std::optional<MoveSequence> find_move_path(const DecoratedTriangulation& from,
                                           const DecoratedTriangulation& to, int depth_limit) {
    if (!(from.surface() == to.surface()))
        throw InvalidInput("find_move_path: triangulations of different surfaces");
    if (from == to) return MoveSequence{};

    struct Node {
        DecoratedTriangulation tau;
        int parent;
        std::optional<Move> via;
        int depth;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::vector<int>, int, KeyHash> seen;
    nodes.push_back({from, -1, std::nullopt, 0});
    seen.emplace(state_key(from), 0);
    std::deque<int> queue{0};

    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= depth_limit) continue;
        const DecoratedTriangulation here = nodes[cur].tau;
        for (const Move& mv : move_alphabet(here)) {
            DecoratedTriangulation next = apply_move(here, mv);
            auto key = state_key(next);
            if (seen.count(key)) continue;
            int id = static_cast<int>(nodes.size());
            nodes.push_back({next, cur, mv, nodes[cur].depth + 1});
            seen.emplace(std::move(key), id);
            if (next == to) {
                MoveSequence path;
                for (int n = id; nodes[n].parent >= 0; n = nodes[n].parent) path.push_back(*nodes[n].via);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(id);
        }
    }
    return std::nullopt;
}

bool detect_pentagon(const DecoratedTriangulation& tau, int i, int j, int k) {
    const int nt = tau.triangle_count();
    for (int t : {i, j, k})
        if (t < 0 || t >= nt) return false;
    if (i == j || j == k || i == k) return false;
    const int diag_ij = tau.edge_at(i, 0);
    const int diag_jk = tau.edge_at(j, 0);
    return diag_ij != diag_jk && tau.edge_at(j, 1) == diag_ij && tau.edge_at(k, 1) == diag_jk;
}

MoveSequence rotations_to_expose(const DecoratedTriangulation& tau, int e) {
    auto [a, b] = tau.slots_of_edge(e);
    if (a.tri == b.tri)
        throw NotApplicable("edge " + std::to_string(e + 1) + " bounds a single triangle twice");
    MoveSequence moves;
    for (Slot s : {a, b})
        for (int r = 0; r < s.side; ++r) moves.push_back(MarkRotation{s.tri});
    return moves;
}

DecoratedTriangulation insert_puncture(const DecoratedTriangulation& tau, int t) {
    SurfaceSig bigger{tau.surface().genus, tau.surface().punctures + 1};
    std::vector<Triangle> tris = tau.triangles();
    const auto [x, y, z] = tris.at(t).sides;
    const int base = tau.edge_count();
    const int spoke_a = base, spoke_b = base + 1, spoke_c = base + 2;
    tris[t].sides = {x, spoke_c, spoke_b};
    tris.push_back(Triangle{{y, spoke_a, spoke_c}});
    tris.push_back(Triangle{{z, spoke_b, spoke_a}});
    return DecoratedTriangulation(bigger, std::move(tris));
}

DecoratedTriangulation build_standard(int genus, int punctures) {
    SurfaceSig target = SurfaceSig::make(genus, punctures);
    std::vector<Triangle> tris;
    int base_punctures = 1;
    if (genus == 0) {
        tris = {Triangle{{0, 1, 2}}, Triangle{{0, 2, 1}}};
        base_punctures = 3;
    } else if (genus == 1) {
        tris = {Triangle{{0, 1, 2}}, Triangle{{0, 1, 2}}};
    } else {
        // boundary word a1 b1 a1^-1 b1^-1 ... on a 4g-gon, fanned from vertex 0
        const int n = 4 * genus;
        std::vector<int> side_edge(n);
        for (int h = 0; h < genus; ++h) {
            side_edge[4 * h] = side_edge[4 * h + 2] = 2 * h;
            side_edge[4 * h + 1] = side_edge[4 * h + 3] = 2 * h + 1;
        }
        auto diag = [&](int r) { return 2 * genus + (r - 2); };  // P0-P_r, 2 <= r <= n-2
        for (int r = 1; r <= n - 2; ++r) {
            int s0 = side_edge[r];
            int s1 = (r + 1 == n - 1) ? side_edge[n - 1] : diag(r + 1);
            int s2 = (r == 1) ? side_edge[0] : diag(r);
            tris.push_back(Triangle{{s0, s1, s2}});
        }
    }
    DecoratedTriangulation tau(SurfaceSig{genus, base_punctures}, std::move(tris));
    while (tau.surface().punctures < target.punctures)
        tau = insert_puncture(tau, tau.triangle_count() - 1);
    return tau;
}

}  // namespace qteich

namespace qteich {

std::vector<ExposedFlip> exposed_flips(const DecoratedTriangulation& tau) {
    std::vector<ExposedFlip> out;
    for (int e = 0; e < tau.edge_count(); ++e) {
        auto [a, b] = tau.slots_of_edge(e);
        if (a.tri == b.tri) continue;
        out.push_back({e, rotations_to_expose(tau, e), DiagonalExchange{a.tri, b.tri}});
    }
    return out;
}

std::map<int, CaseWitness> exchange_case_witnesses(const DecoratedTriangulation& start, int depth) {
    std::map<int, CaseWitness> witnesses;
    std::set<std::vector<int>> seen{start.canonical_sides()};
    std::deque<std::pair<DecoratedTriangulation, int>> queue{{start, 0}};
    while (!queue.empty()) {
        auto [tau, d] = queue.front();
        queue.pop_front();
        for (const auto& f : exposed_flips(tau)) {
            auto exposed = apply_moves(tau, f.rotations);
            int c = classify_exchange(exposed, f.flip.i, f.flip.j).case_label;
            if (!witnesses.count(c)) witnesses.emplace(c, CaseWitness{exposed, f.flip});
            if (d + 1 > depth) continue;
            auto next = apply_move(exposed, f.flip);
            if (seen.insert(next.canonical_sides()).second) queue.emplace_back(next, d + 1);
        }
    }
    return witnesses;
}

}  // namespace qteich
