#pragma once

#include <vector>

#include "bnet/oriented_map.hpp"
#include "bnet/projective.hpp"

namespace bnet {

enum class MoveKind { contraction, splitting, removal, addition };

/// A move site. Darts refer to the map the move applies to (for projective
/// maps, to the cover; the deck-partner site is implied).
///   contraction: d1 starts the face cycle, diagonal {vertex(d1), vertex(phi^2 d1)}
///   splitting:   d1, d2 are distinct darts at one vertex (unordered site)
///   removal:     d1 starts the face cycle
///   addition:    d1 starts the face cycle
struct MoveDescriptor {
    MoveKind kind;
    Dart d1 = kNoDart;
    Dart d2 = kNoDart;
    bool special = false;

    friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

/// Result of a tracked move: the new map, where every old dart went
/// (kNoDart if deleted; new darts of the surgery are appended past the old
/// range), and the site at which the inverse move undoes this one.
struct TrackedMove {
    OrientedMap map;
    std::vector<Dart> dart_map;
    MoveDescriptor inverse;
};

/// Contraction of a quadrangular face at the diagonal {a, c}: removes the
/// face interior and glues ba with bc and da with dc. V-1, E-2, F-1.
OrientedMap contract_face(const OrientedMap& q, Dart face_dart);
TrackedMove contract_face_tracked(const OrientedMap& q, Dart face_dart);

/// Inverse of contraction. x and y are distinct darts at one vertex; the
/// side keeping [x..y] inclusive becomes a, the rest moves to a new vertex c
/// behind a new quadrangular face. The edges of x and y are doubled.
/// V+1, E+2, F+1.
OrientedMap split_vertex(const OrientedMap& q, Dart x, Dart y);
TrackedMove split_vertex_tracked(const OrientedMap& q, Dart x, Dart y);

/// Removal of a face abcd whose corners are pairwise distinct of degree 3
/// with outgoing ends disjoint from {a,b,c,d}: deletes the four corners and
/// their edges. V-4, E-8, F-4.
OrientedMap remove_face(const OrientedMap& q, Dart face_dart);
TrackedMove remove_face_tracked(const OrientedMap& q, Dart face_dart);

/// Inverse of removal: inserts the four-vertex pinwheel gadget into a
/// quadrangular face. V+4, E+8, F+4.
OrientedMap add_face(const OrientedMap& q, Dart face_dart);
TrackedMove add_face_tracked(const OrientedMap& q, Dart face_dart);

/// Equivariant moves on RP^2 maps: the move is applied on the cover at the
/// named site and at its deck image, and the involution is transported to
/// the result. Site preconditions are quotient-level (a contraction needs
/// distinct quotient diagonal endpoints, a removal 8 distinct cover corners).
ProjectiveMap contract_face(const ProjectiveMap& p, Dart face_dart);
ProjectiveMap split_vertex(const ProjectiveMap& p, Dart x, Dart y);
ProjectiveMap remove_face(const ProjectiveMap& p, Dart face_dart);
ProjectiveMap add_face(const ProjectiveMap& p, Dart face_dart);

struct TrackedProjectiveMove {
    ProjectiveMap map;
    std::vector<Dart> dart_map;
    MoveDescriptor inverse;
};
TrackedProjectiveMove contract_face_tracked(const ProjectiveMap& p, Dart face_dart);
TrackedProjectiveMove split_vertex_tracked(const ProjectiveMap& p, Dart x, Dart y);
TrackedProjectiveMove remove_face_tracked(const ProjectiveMap& p, Dart face_dart);
TrackedProjectiveMove add_face_tracked(const ProjectiveMap& p, Dart face_dart);

ProjectiveMap apply_move(const ProjectiveMap& p, const MoveDescriptor& m);
OrientedMap apply_move(const OrientedMap& q, const MoveDescriptor& m);

/// Net-side transformations, dual to the quadrangulation moves.
/// Face splitting pinches two non-consecutive sides (distinct edges) of a
/// face into a new crossing; dual to a vertex splitting.
OrientedMap net_face_split(const OrientedMap& net, Dart side1, Dart side2);
/// Vertex surrounding encircles a degree-4 vertex with a small quadrilateral
/// circuit crossing its four edges; dual to a face addition.
OrientedMap net_vertex_surround(const OrientedMap& net, int vertex);
ProjectiveMap net_face_split(const ProjectiveMap& net, Dart side1, Dart side2);
ProjectiveMap net_vertex_surround(const ProjectiveMap& net, int vertex);

enum class MapClass { Q, Qbar };

/// All special contractions and removals that stay in the class, in
/// deterministic site order (faces ascending, first diagonal first).
/// Empty iff the map is class-minimal.
std::vector<MoveDescriptor> legal_reductions(const OrientedMap& q, MapClass cls = MapClass::Q);
std::vector<MoveDescriptor> legal_reductions(const ProjectiveMap& p, MapClass cls = MapClass::Qbar);

/// All special vertex splittings and face additions whose result stays in
/// the class (sites enumerated up to the deck action for RP^2 maps).
std::vector<MoveDescriptor> legal_expansions(const OrientedMap& q, MapClass cls = MapClass::Q);
std::vector<MoveDescriptor> legal_expansions(const ProjectiveMap& p, MapClass cls = MapClass::Qbar);

/// Lemma-level predicates, kept independent of apply-and-test so the two
/// can be cross-checked on generated instances.
struct QbarContractionCheck {
    bool cover_contractible = false;  // hypothesis: f is Q-contractible at {a,c}
    bool special = false;
    bool edge_a_cprime = false;       // condition (i): cover has an edge a c'
    bool b_equals_dprime_deg4 = false;  // condition (ii): b = d' and deg b = 4
    bool predicted_qbar_contractible = false;
};
QbarContractionCheck qbar_contraction_check(const ProjectiveMap& p, Dart face_dart);

/// True when the face is removable on the cover and no face among it and
/// its four edge-neighbors is the deck image of another; then the quotient
/// face is removable.
bool lemma11_guarantees_removable(const ProjectiveMap& p, Dart face_dart);
/// Direct quotient-removability test (the precondition of the equivariant
/// removal), for cross-checking.
bool quotient_face_removable(const ProjectiveMap& p, Dart face_dart);

}  // namespace bnet
