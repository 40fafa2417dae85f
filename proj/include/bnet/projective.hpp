#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnet/canonical.hpp"
#include "bnet/oriented_map.hpp"

namespace bnet {

/// Deck transformation of the double cover S^2 -> RP^2, restricted to a
/// sphere map: a permutation tau on darts with
///   tau^2 = id, no fixed dart, no fixed edge (tau(d) != alpha(d)),
///   tau alpha tau = alpha, tau sigma tau = sigma^-1 (orientation-reversing),
///   no fixed vertex, and no fixed face.
/// Together these make the quotient a map on RP^2 (all cell counts halve).
struct DeckInvolution {
    std::vector<Dart> tau;
};

struct invalid_involution_error : map_error {
    using map_error::map_error;
};

/// Throws invalid_involution_error describing the first violated condition.
void validate_deck_involution(const OrientedMap& m, const std::vector<Dart>& tau);
bool is_deck_involution(const OrientedMap& m, const std::vector<Dart>& tau);

/// Exhaustive search: fixes dart 0 and tries every image, extending by
/// propagation (tau sigma = sigma^-1 tau, tau alpha = alpha tau). O(E^2).
/// By Theorem 9 the result has at most one element for connected cellular
/// covers without degree-2 vertices; the search does not assume that.
std::vector<DeckInvolution> find_quotient_involutions(const OrientedMap& m);

/// A graph embedded in RP^2, stored as its connected double cover on S^2
/// plus the deck involution, with the quotient cell orbits precomputed.
class ProjectiveMap {
  public:
    ProjectiveMap(OrientedMap cover, DeckInvolution deck);

    const OrientedMap& cover() const { return cover_; }
    const std::vector<Dart>& tau() const { return deck_.tau; }
    const DeckInvolution& deck() const { return deck_; }

    int vertex_count() const { return cover_.vertex_count() / 2; }
    int edge_count() const { return cover_.edge_count() / 2; }
    int face_count() const { return cover_.face_count() / 2; }
    int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

    int vertex_partner(int v) const { return vertex_partner_[v]; }
    int face_partner(int f) const { return face_partner_[f]; }
    int edge_partner(int e) const { return edge_partner_[e]; }

    /// Quotient cell ids (0-based, one per orbit).
    int quotient_vertex(int cover_vertex) const { return q_vertex_of_[cover_vertex]; }
    int quotient_edge(int cover_edge) const { return q_edge_of_[cover_edge]; }
    int quotient_face(int cover_face) const { return q_face_of_[cover_face]; }
    /// A cover representative per quotient cell (the smaller index).
    int cover_vertex(int q_vertex) const { return q_vertex_rep_[q_vertex]; }
    int cover_face(int q_face) const { return q_face_rep_[q_face]; }
    int cover_edge(int q_edge) const { return q_edge_rep_[q_edge]; }

    int quotient_degree(int q_vertex) const { return cover_.degree(q_vertex_rep_[q_vertex]); }
    int quotient_face_degree(int q_face) const { return cover_.face_degree(q_face_rep_[q_face]); }

    /// Quotient multigraph: one (u, v) pair per edge orbit, in orbit order.
    std::vector<std::pair<int, int>> quotient_edges() const;

    /// Present when some quotient vertex has degree 2 (Theorem 9's
    /// uniqueness hypothesis fails; representation is still valid).
    bool has_degree_two_vertex() const { return has_degree_two_; }

    /// Dual map on RP^2: dual cover with the induced involution tau . alpha.
    ProjectiveMap dual() const;

  private:
    OrientedMap cover_;
    DeckInvolution deck_;
    std::vector<int> vertex_partner_, face_partner_, edge_partner_;
    std::vector<int> q_vertex_of_, q_edge_of_, q_face_of_;
    std::vector<int> q_vertex_rep_, q_edge_rep_, q_face_rep_;
    bool has_degree_two_ = false;
};

/// The RP^2 map defined by a cover and a deck involution.
ProjectiveMap quotient(const OrientedMap& m, const DeckInvolution& inv);

/// Inverse of quotient: the stored cover and deck involution.
std::pair<const OrientedMap&, const DeckInvolution&> lift(const ProjectiveMap& p);

/// Equal codes iff the quotients are isomorphic as RP^2-embedded graphs
/// (sound by Theorem 9: the deck involution of a connected cover is unique).
CanonicalCode canonical_code_projective(const ProjectiveMap& p);

/// Theorem 9 as an executable check.
struct InvolutionReport {
    enum class Status { pass, fail, inconclusive } status;
    std::vector<DeckInvolution> found;
};
InvolutionReport verify_unique_involution(const OrientedMap& m);

}  // namespace bnet
