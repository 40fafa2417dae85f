#include "bnet/enumerate.hpp"
#include "bnet/predicates.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bnet;

namespace {

// Two octahedra, each with one edge removed, joined by two edges across the
// vacated faces: simple, 4-regular, planar, with a 2-edge cut.
OrientedMap two_octahedra_joined() {
    return OrientedMap::from_neighbor_lists({
        {6, 4, 3, 5},
        {2, 4, 7, 5},
        {3, 4, 1, 5},
        {0, 4, 2, 5},
        {0, 1, 2, 3},
        {3, 2, 1, 0},
        {0, 10, 9, 11},
        {8, 10, 1, 11},
        {9, 10, 7, 11},
        {6, 10, 8, 11},
        {6, 7, 8, 9},
        {9, 8, 7, 6},
    });
}

OrientedMap figure_eight() { return OrientedMap::from_edge_rotations({{0, 0, 1, 1}}); }

// Lift of g^1: two vertices joined by four parallel edges (the pillow).
OrientedMap pillow() { return OrientedMap::from_edge_rotations({{0, 1, 2, 3}, {0, 3, 2, 1}}); }

ProjectiveMap g1_net() {
    const auto m = pillow();
    const auto invs = find_quotient_involutions(m);
    REQUIRE(!invs.empty());
    return ProjectiveMap(m, invs.front());
}

}  // namespace

TEST_CASE("degree profiles") {
    const auto cube = pseudo_double_wheel(3);
    auto prof = degree_profile(cube);
    CHECK(prof.min_degree == 3);
    CHECK(prof.is_regular(3));

    const auto w5 = pseudo_double_wheel(5);
    prof = degree_profile(w5);
    CHECK(prof.min_degree == 3);
    CHECK(std::count(prof.degrees.begin(), prof.degrees.end(), 5) == 2);
    CHECK(std::count(prof.degrees.begin(), prof.degrees.end(), 3) == 10);

    CHECK(degree_profile(cube.dual()).is_regular(4));
}

TEST_CASE("simplicity") {
    CHECK(is_simple(pseudo_double_wheel(3)));
    CHECK_FALSE(is_simple(figure_eight()));
    CHECK_FALSE(is_simple(pillow()));
}

TEST_CASE("simple embedding via the lift") {
    CHECK(is_simply_embedded(moebius_wheel(3)));
    CHECK(is_simply_embedded(exceptional_seed_g52()));
    CHECK_FALSE(is_simply_embedded(g1_net()));  // quotient has loops

    // A degenerate splitting on a Q-bar member can double an edge in the
    // cover; the quotient then has a contractible parallel pair.
    const auto mw3 = moebius_wheel(3);
    bool found_doubled = false;
    const auto& cover = mw3.cover();
    for (int v = 0; v < mw3.vertex_count() && !found_doubled; ++v) {
        const auto ds = cover.vertex_darts(mw3.cover_vertex(v));
        for (std::size_t i = 0; i < ds.size() && !found_doubled; ++i) {
            for (std::size_t j = i + 1; j < ds.size() && !found_doubled; ++j) {
                try {
                    const auto child = split_vertex(mw3, ds[i], ds[j]);
                    if (!is_simple(child.cover())) {
                        CHECK_FALSE(is_simply_embedded(child));
                        found_doubled = true;
                    }
                } catch (const map_error&) {
                }
            }
        }
    }
    CHECK(found_doubled);
}

TEST_CASE("quadrangulation test") {
    CHECK(is_quadrangulation(pseudo_double_wheel(3)));
    CHECK(is_quadrangulation(OrientedMap::from_edge_rotations({{0}, {0, 1}, {1}})));
    CHECK_FALSE(is_quadrangulation(pseudo_double_wheel(3).dual()));
    CHECK(is_quadrangulation(moebius_wheel(5)));
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(pseudo_double_wheel(3)));
    CHECK(is_bipartite(pseudo_double_wheel(6)));
    CHECK_FALSE(is_bipartite(moebius_wheel(3)));
    CHECK(is_bipartite(exceptional_seed_g52()));
    CHECK_FALSE(is_bipartite(pseudo_double_wheel(3).dual()));  // octahedron
}

TEST_CASE("minimum edge cuts with the subset oracle") {
    const auto cube = pseudo_double_wheel(3);
    CHECK(min_edge_cut(cube) == 3);
    CHECK(oracles::brute_force_min_cut(multigraph_of(cube)) == 3);

    const auto oct = cube.dual();
    CHECK(min_edge_cut(oct) == 4);
    CHECK(oracles::brute_force_min_cut(multigraph_of(oct)) == 4);

    // Two triangles joined by a bridge.
    const auto bridged = OrientedMap::from_edge_rotations(
        {{0, 2}, {1, 0}, {2, 1, 3}, {3, 4, 6}, {5, 4}, {6, 5}});
    CHECK(min_edge_cut(bridged) == 1);
    CHECK(oracles::brute_force_min_cut(multigraph_of(bridged)) == 1);

    const auto joined = two_octahedra_joined();
    CHECK(min_edge_cut(joined) == 2);
    CHECK(oracles::brute_force_min_cut(multigraph_of(joined)) == 2);

    // Oracle agreement across the small census.
    const auto census = generate_sphere_Q(12);
    for (const auto& [size, level] : census.by_size)
        for (const auto& entry : level) {
            if (entry.map.edge_count() > 14) continue;
            CHECK(min_edge_cut(entry.map) ==
                  oracles::brute_force_min_cut(multigraph_of(entry.map)));
        }
}

TEST_CASE("class Q membership") {
    const auto cube = pseudo_double_wheel(3);
    CHECK(is_class_Q(cube));
    CHECK_FALSE(is_class_Q(OrientedMap::from_edge_rotations({{0}, {0, 1}, {1}})));
    const auto contracted = contract_face(cube, cube.face_dart(0));
    CHECK(is_quadrangulation(contracted));
    CHECK_FALSE(is_class_Q(contracted));  // degree-2 vertices appear
}

TEST_CASE("class Q-bar membership") {
    CHECK(is_class_Qbar(moebius_wheel(3)));
    CHECK(is_class_Qbar(exceptional_seed_g52()));
    const auto mw3 = moebius_wheel(3);
    const auto ds = mw3.cover().vertex_darts(mw3.cover_vertex(0));
    const auto split = split_vertex(mw3, ds[0], ds[1]);
    CHECK_FALSE(is_class_Qbar(split));  // a degree-2 quotient vertex appears
    CHECK(split.has_degree_two_vertex());
}

TEST_CASE("basic nets on the sphere") {
    CHECK(is_basic_net(pseudo_double_wheel(3).dual()));  // the net 6*
    CHECK(is_basic_net(figure_eight()));                 // 1*
    CHECK_FALSE(is_basic_net(two_octahedra_joined()));   // 2-edge cut
    CHECK_THROWS_AS(is_basic_net(pseudo_double_wheel(3)), not_a_net_error);
}

TEST_CASE("basic nets on the projective plane") {
    CHECK(is_basic_net(moebius_wheel(3).dual()));        // g^3
    CHECK(is_basic_net(exceptional_seed_g52().dual()));  // g^5_2
    CHECK(is_basic_net(g1_net()));                       // exceptional g^1
    CHECK_THROWS_AS(is_basic_net(moebius_wheel(3)), not_a_net_error);
}

TEST_CASE("two-cell embedding and connectivity") {
    const auto cube = pseudo_double_wheel(3);
    CHECK(is_two_cell_embedded(cube));
    CHECK(is_two_connected(multigraph_of(cube)));
    // The 3-path face repeats a corner.
    CHECK_FALSE(is_two_cell_embedded(OrientedMap::from_edge_rotations({{0}, {0, 1}, {1}})));
}

TEST_CASE("homology classes of small nets") {
    CHECK(homology_class(moebius_wheel(3).dual()) == HomologyClass::nontrivial);  // g^3
    CHECK(homology_class(exceptional_seed_g52().dual()) == HomologyClass::trivial);
    CHECK(homology_class(g1_net()) == HomologyClass::trivial);
}
