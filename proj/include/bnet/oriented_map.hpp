#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bnet {

// A dart is a directed edge-end, identified by a dense index 0..2E-1.
using Dart = std::int32_t;
constexpr Dart kNoDart = -1;

struct map_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Rotation input does not describe a set of closed edges (dangling or
// over-used edge-ends, bad permutations, empty vertices).
struct malformed_rotation_error : map_error {
    using map_error::map_error;
};
// Input describes more than one connected component.
struct disconnected_error : map_error {
    using map_error::map_error;
};
// Input is a valid rotation system but not of Euler characteristic 2.
struct not_sphere_error : map_error {
    using map_error::map_error;
};
// A move was requested at a site that does not admit it.
struct invalid_move_error : map_error {
    using map_error::map_error;
};
struct not_a_net_error : map_error {
    using map_error::map_error;
};

/// A graph cellularly embedded in the oriented sphere, encoded by two
/// permutations on darts: sigma (next dart counterclockwise around the
/// origin vertex) and alpha (the opposite end of the same edge).
/// Vertices are the orbits of sigma, edges the orbits of alpha, and faces
/// the orbits of phi = sigma . alpha, traced with the face on the left.
/// Construction checks alpha is a fixed-point-free involution, the map is
/// connected, and V - E + F = 2. Instances are immutable.
class OrientedMap {
  public:
    /// Build from explicit permutations. sigma[d] and alpha[d] index darts.
    static OrientedMap from_permutations(std::vector<Dart> sigma, std::vector<Dart> alpha);

    /// Build from per-vertex rotations of edge ids: rotations[v] lists the
    /// edges incident to v in counterclockwise order, loops appearing twice.
    /// Every edge id in 0..E-1 must occur exactly twice overall.
    static OrientedMap from_edge_rotations(const std::vector<std::vector<int>>& rotations);

    /// Build from per-vertex neighbor rotations. Only valid for simple
    /// graphs (no loops, no parallel edges); use edge rotations otherwise.
    static OrientedMap from_neighbor_lists(const std::vector<std::vector<int>>& neighbors);

    int dart_count() const { return static_cast<int>(sigma_.size()); }
    int vertex_count() const { return n_vertices_; }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return n_faces_; }
    int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

    int vertex_of(Dart d) const { return vertex_of_[d]; }
    int face_of(Dart d) const { return face_of_[d]; }
    int edge_of(Dart d) const { return edge_of_[d]; }
    /// Vertex at the far end of d's edge.
    int head_of(Dart d) const { return vertex_of_[alpha_[d]]; }

    Dart vertex_dart(int v) const { return vertex_rep_[v]; }
    Dart face_dart(int f) const { return face_rep_[f]; }
    Dart edge_dart(int e) const { return edge_rep_[e]; }

    int degree(int v) const { return vertex_degree_[v]; }
    int face_degree(int f) const { return face_degree_[f]; }
    std::pair<int, int> edge_endpoints(int e) const {
        Dart d = edge_rep_[e];
        return {vertex_of_[d], vertex_of_[alpha_[d]]};
    }

    /// Darts of v in rotation order, starting at the representative.
    std::vector<Dart> vertex_darts(int v) const;
    /// Darts of f in phi order, starting at the representative.
    std::vector<Dart> face_darts(int f) const;
    /// Face orbit traced from a given dart.
    std::vector<Dart> face_cycle(Dart d) const;

    /// Per-vertex rotation lists of darts (surgery input).
    std::vector<std::vector<Dart>> rotation_lists() const;

    const std::vector<Dart>& sigma_perm() const { return sigma_; }
    const std::vector<Dart>& alpha_perm() const { return alpha_; }

    /// The dual map on the same darts: rotations become face traversals.
    /// Involutive on the nose: dual(dual(m)) == m dart for dart.
    OrientedMap dual() const;
    /// Reflection (sigma inverted); same underlying graph, mirror embedding.
    OrientedMap mirror() const;

  private:
    OrientedMap(std::vector<Dart> sigma, std::vector<Dart> alpha);

    std::vector<Dart> sigma_, sigma_inv_, alpha_;
    std::vector<int> vertex_of_, face_of_, edge_of_;
    std::vector<Dart> vertex_rep_, face_rep_, edge_rep_;
    std::vector<int> vertex_degree_, face_degree_;
    int n_vertices_ = 0;
    int n_faces_ = 0;
};

}  // namespace bnet
