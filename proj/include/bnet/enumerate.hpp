#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnet/canonical.hpp"
#include "bnet/moves.hpp"
#include "bnet/oriented_map.hpp"
#include "bnet/projective.hpp"

namespace bnet {

/// Pseudo-double wheel W_n: two degree-n hubs joined through a 2n-cycle of
/// degree-3 rim vertices; the dual of the net (2 x n)*. n >= 3.
OrientedMap pseudo_double_wheel(int n);

/// Moebius wheel ~W_n: the quotient of W_n by its antipodal involution,
/// defined for odd n >= 3; the dual of the net (2 x n)*-bar.
ProjectiveMap moebius_wheel(int n);

/// The 6-vertex Q-bar-minimal quadrangulation dual to the net g^5_2, built
/// as an equivariant face addition on the non-contractible 2-cycle.
ProjectiveMap exceptional_seed_g52();

struct SphereEntry {
    CanonicalCode code;
    OrientedMap map;
};
struct ProjectiveEntry {
    CanonicalCode code;
    ProjectiveMap map;
};

/// Census keyed by vertex count; each level sorted by canonical code.
struct SphereCensus {
    std::map<int, std::vector<SphereEntry>> by_size;
    int count_at(int vertices) const;
    long total() const;
};
struct ProjectiveCensus {
    std::map<int, std::vector<ProjectiveEntry>> by_size;
    int count_at(int vertices) const;
    int bipartite_count_at(int vertices) const;
    long total() const;
};

/// Every member of Q with at most max_vertices vertices, exactly once up to
/// isomorphism: closure of the pseudo-double wheels under special
/// Q-splittings and Q-face-additions with canonical dedup. max_vertices >= 8.
SphereCensus generate_sphere_Q(int max_vertices, int jobs = 1);

/// Every member of Q-bar with at most max_vertices vertices: closure of
/// {g^5_2 dual} and the Moebius wheels under equivariant legal expansions.
/// max_vertices >= 4.
ProjectiveCensus generate_projective_Qbar(int max_vertices, int jobs = 1);

/// The ppf step: keeps the inputs admitting a deck involution, emits their
/// quotients, deduplicates by projective canonical code.
std::vector<ProjectiveEntry> filter_pipeline(const std::vector<OrientedMap>& maps);
/// Per-map filter: the quotient if the map covers an RP^2 map.
std::optional<ProjectiveMap> projective_quotient_of(const OrientedMap& m);

std::vector<SphereEntry> minimal_members_Q(const SphereCensus& census);
std::vector<ProjectiveEntry> minimal_members_Qbar(const ProjectiveCensus& census);

/// One row of the count table. Exceptional rows n < 3 count the nets
/// outside the quadrangulation machinery (circle, figure-eight,
/// pseudoline, two pseudolines).
struct CountRow {
    int n = 0;        // net crossings
    int n_check = 0;  // quadrangulation vertices, n + 1
    long qbar = 0;
    long qbar_bip = 0;
    std::optional<long> q_class_Q;  // sphere count at 2 * n_check vertices
};

/// Rows n = 0..max_n; the sphere column is filled only while
/// 2 * n_check <= sphere_cap_vertices.
std::vector<CountRow> count_table(int max_n, int sphere_cap_vertices = 18, int jobs = 1);

struct GenerationRecord {
    CanonicalCode parent;
    CanonicalCode child;
    MoveKind kind;
    int multiplicity = 0;
};

struct GenerationDag {
    ProjectiveCensus census;
    std::vector<GenerationRecord> records;
};
/// Parent-to-child records among Q-bar members with at most max_n + 1
/// vertices, with the number of distinct sites (up to the deck action)
/// yielding each child.
GenerationDag generation_dag(int max_n, int jobs = 1);

/// The small nets that fall outside quadrangulation duality.
struct ExceptionalNet {
    const char* name;
    const char* description;
    int crossings;
    bool homologically_trivial;  // meaningful on RP^2 only
};
const std::vector<ExceptionalNet>& exceptional_sphere_nets();      // 0*, 1*
const std::vector<ExceptionalNet>& exceptional_projective_nets();  // g^0, g^1

}  // namespace bnet
