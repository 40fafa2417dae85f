#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bnet/oriented_map.hpp"
#include "bnet/projective.hpp"

namespace bnet {

/// Abstract multigraph view (embedding forgotten) for connectivity-style
/// predicates that apply to covers and quotients alike.
struct Multigraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;
};
Multigraph multigraph_of(const OrientedMap& m);
Multigraph quotient_multigraph(const ProjectiveMap& p);

struct DegreeProfile {
    int min_degree = 0;
    std::vector<int> degrees;  // sorted ascending
    bool is_regular(int k) const;
};
DegreeProfile degree_profile(const OrientedMap& m);
DegreeProfile degree_profile(const ProjectiveMap& p);  // quotient degrees

bool is_simple(const OrientedMap& m);
/// Loop-free and no parallel pair bounding a disk; equals simplicity of the
/// lift (Theorem 8: quotient loops and disk-bounding pairs lift to loops and
/// parallel pairs, a non-contractible pair lifts to a simple 4-cycle).
bool is_simply_embedded(const ProjectiveMap& p);

bool is_quadrangulation(const OrientedMap& m);
bool is_quadrangulation(const ProjectiveMap& p);

bool is_bipartite(const OrientedMap& m);
bool is_bipartite(const Multigraph& g);
/// 2-colorability of the quotient graph (the cover is always bipartite).
bool is_bipartite(const ProjectiveMap& p);

/// Global minimum edge cut by repeated max-flow from a fixed source.
/// Returns INT_MAX for graphs with fewer than two vertices.
int min_edge_cut(const Multigraph& g);
int min_edge_cut(const OrientedMap& m);

/// All sides of every face are distinct edges and all corners distinct
/// vertices.
bool is_two_cell_embedded(const OrientedMap& m);
bool is_two_connected(const Multigraph& g);

/// Simple quadrangulations of S^2 of minimum degree 3 (the class Q).
bool is_class_Q(const OrientedMap& m);
/// Simply embedded quadrangulations of RP^2 of minimum degree 3 (Q-bar);
/// equivalently the cover is in Q.
bool is_class_Qbar(const ProjectiveMap& p);

enum class Surface { sphere, projective };

/// Basic-net test through the dual characterizations:
/// sphere (Prop 7): simple, 4-regular, 4-edge-connected;
/// projective (Thm 8): simply embedded, 4-regular, 4-edge-connected, dual
/// loop-free. The one-vertex two-loop forms (figure-eight, two crossing
/// pseudolines) are recognized as the exceptional basic nets.
/// Throws not_a_net_error on non-4-regular, non-exceptional input.
bool is_basic_net(const OrientedMap& m);
bool is_basic_net(const ProjectiveMap& p);

enum class HomologyClass { trivial, nontrivial };
/// A net is null-homologous in H_1(RP^2; Z_2) iff its dual quadrangulation
/// is bipartite.
HomologyClass homology_class(const ProjectiveMap& net);

}  // namespace bnet
