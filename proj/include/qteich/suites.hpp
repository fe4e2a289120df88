#pragma once

// Verification suites. Each returns a report of named checks; exact checks are
// plain booleans, oracle checks carry the verdict.

#include "qteich/oracle.hpp"
#include "qteich/triangulation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qteich {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

struct Check {
    std::string id;
    std::string statement;
    Status status = Status::Fail;
    std::optional<Verdict> verdict;
    std::vector<std::pair<std::string, std::string>> info;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    /// Fail if any check failed, else Inconclusive if any was, else Pass.
    Status status() const;
    void add_exact(std::string id, std::string statement, bool ok,
                   std::vector<std::pair<std::string, std::string>> info = {});
    /// Passes when the verdict is the expected one.
    void add_oracle(std::string id, std::string statement, Verdict v, VerdictKind expected = VerdictKind::Equal,
                    std::vector<std::pair<std::string, std::string>> info = {});
    /// Ids of the appended checks are prefixed with "<other.suite>:".
    void append(const SuiteReport& other);
};

/// Relations among reindexings, mark rotations and diagonal exchanges,
/// exhaustive over all decorations of tau's underlying triangulation.
SuiteReport move_relations_suite(const DecoratedTriangulation& tau);

SuiteReport exact_sequence_suite(const DecoratedTriangulation& tau);
SuiteReport bivector_suite(const DecoratedTriangulation& tau);

/// Kashaev/shear and Penner/Kashaev squares on `samples` random inputs for
/// every mark rotation and every exposed flip of tau, plus the first flip of
/// every exchange case met in a flip search of depth `case_depth`.
SuiteReport compat_suite(const DecoratedTriangulation& tau, int samples, uint64_t seed, int case_depth = 0);

/// Ptolemy involution, rank/kernel/cokernel of the linearized Penner map and
/// the 2-form pullback.
SuiteReport penner_suite(const DecoratedTriangulation& tau, uint64_t seed);

/// H-generator commutations, F_tau homomorphism and the image of X_1...X_3m.
SuiteReport quantum_torus_suite(const DecoratedTriangulation& tau);

/// Relations among the generalized Kashaev maps (including the pentagon when
/// tau has a pentagon configuration in some decoration), preservation of
/// the defining relations by each map, and a corrupted exchange map that must
/// be refuted.
SuiteReport kashaev_relations_suite(const DecoratedTriangulation& tau, const TrialConfig& cfg,
                                    bool pentagon_only = false);

/// For every mark rotation and every exposed flip of tau: does the square
/// F_tau o (shear map) = (Kashaev map) o F_tau' commute at cfg.a, cfg.b?
/// A check passes when it commutes; `predicted` in the info records whether
/// commutation is expected (a = q^-2 for rotations, b = q^3 for flips).
SuiteReport ab_iff_suite(const DecoratedTriangulation& tau, const TrialConfig& cfg, bool include_cases = false);

/// Pairs of distinct move paths with equal endpoints give equal composites.
/// Needs a pentagon configuration in some decoration of tau.
SuiteReport path_independence_suite(const DecoratedTriangulation& tau, const TrialConfig& cfg);

/// Composite maps and quantum shear maps at q = a = b = 1 against the
/// classical coordinate changes on random moves and inputs.
SuiteReport specialization_suite(const std::vector<DecoratedTriangulation>& fixtures, int count, uint64_t seed);

/// Searches the decorations of tau for a pentagon configuration; returns the
/// decorated triangulation and (i, j, k).
struct PentagonSite {
    DecoratedTriangulation tau;
    int i = 0, j = 0, k = 0;
};
std::optional<PentagonSite> find_pentagon(const DecoratedTriangulation& tau);

/// Path pairs (lhs, rhs) of the pentagon relation at a site.
std::pair<MoveSequence, MoveSequence> pentagon_paths(int i, int j, int k);

}  // namespace qteich
