#include <set>

#include "bnet/enumerate.hpp"
#include "bnet/moves.hpp"
#include "bnet/predicates.hpp"
#include "doctest.h"

using namespace bnet;

TEST_CASE("contracting a cube face") {
    const auto cube = pseudo_double_wheel(3);
    const auto tracked = contract_face_tracked(cube, cube.face_dart(0));
    const auto& m = tracked.map;
    CHECK(m.vertex_count() == 7);
    CHECK(m.edge_count() == 10);
    CHECK(m.face_count() == 5);
    CHECK(m.euler_characteristic() == 2);
    CHECK(is_quadrangulation(m));
    CHECK(degree_profile(m).min_degree == 2);
    CHECK_FALSE(is_class_Q(m));

    // The recorded inverse splitting restores the cube.
    const auto back = apply_move(m, tracked.inverse);
    CHECK(are_isomorphic(back, cube));
}

TEST_CASE("contraction errors") {
    const auto cube = pseudo_double_wheel(3);
    CHECK_THROWS_AS(contract_face(cube.dual(), 0), invalid_move_error);  // triangle
    // The 3-path has one face; contraction needs more.
    const auto path = OrientedMap::from_edge_rotations({{0}, {0, 1}, {1}});
    CHECK_THROWS_AS(contract_face(path, 0), invalid_move_error);
}

TEST_CASE("splitting a cube vertex") {
    const auto cube = pseudo_double_wheel(3);
    const auto ds = cube.vertex_darts(0);
    const auto tracked = split_vertex_tracked(cube, ds[0], ds[1]);
    CHECK(tracked.map.vertex_count() == 9);
    CHECK(is_quadrangulation(tracked.map));
    CHECK(degree_profile(tracked.map).min_degree == 2);
    // The inverse contraction is special: one endpoint has degree 3.
    CHECK(tracked.inverse.kind == MoveKind::contraction);
    CHECK(tracked.inverse.special);
    CHECK(are_isomorphic(apply_move(tracked.map, tracked.inverse), cube));

    CHECK_THROWS_AS(split_vertex(cube, ds[0], ds[0]), invalid_move_error);
    CHECK_THROWS_AS(split_vertex(cube, ds[0], cube.vertex_darts(1)[0]), invalid_move_error);
}

TEST_CASE("no splitting of the cube stays in Q") {
    // Every split of a degree-3 vertex leaves a degree-2 vertex behind;
    // the brute-force scan over all dart pairs confirms the count is zero.
    const auto cube = pseudo_double_wheel(3);
    std::set<CanonicalCode> members;
    for (int v = 0; v < cube.vertex_count(); ++v) {
        const auto ds = cube.vertex_darts(v);
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (std::size_t j = i + 1; j < ds.size(); ++j) {
                const auto child = split_vertex(cube, ds[i], ds[j]);
                if (is_class_Q(child)) members.insert(canonical_code(child));
            }
    }
    CHECK(members.empty());
    // legal_expansions agrees: only face additions remain.
    for (const auto& mv : legal_expansions(cube, MapClass::Q))
        CHECK(mv.kind == MoveKind::addition);
}

TEST_CASE("removing a cube face leaves the 4-cycle") {
    const auto cube = pseudo_double_wheel(3);
    const auto tracked = remove_face_tracked(cube, cube.face_dart(0));
    CHECK(tracked.map.vertex_count() == 4);
    CHECK(tracked.map.edge_count() == 4);
    CHECK(tracked.map.face_count() == 2);
    CHECK(is_quadrangulation(tracked.map));
    // Adding back at the vacated face restores the cube.
    CHECK(are_isomorphic(apply_move(tracked.map, tracked.inverse), cube));
}

TEST_CASE("face addition inserts the pinwheel gadget") {
    const auto square = OrientedMap::from_edge_rotations({{0, 3}, {1, 0}, {2, 1}, {3, 2}});
    for (int f = 0; f < 2; ++f) {
        const auto grown = add_face(square, square.face_dart(f));
        CHECK(grown.vertex_count() == 8);
        CHECK(grown.edge_count() == 12);
        CHECK(grown.face_count() == 6);
        CHECK(are_isomorphic(grown, pseudo_double_wheel(3)));  // either face gives the cube
    }
    const auto tracked = add_face_tracked(square, square.face_dart(0));
    CHECK(are_isomorphic(apply_move(tracked.map, tracked.inverse), square));
    CHECK_THROWS_AS(add_face(pseudo_double_wheel(3).dual(), 0), invalid_move_error);
}

TEST_CASE("cube face additions give one 12-vertex member of Q") {
    const auto cube = pseudo_double_wheel(3);
    std::set<CanonicalCode> children;
    for (const auto& mv : legal_expansions(cube, MapClass::Q)) {
        REQUIRE(mv.kind == MoveKind::addition);
        const auto child = apply_move(cube, mv);
        CHECK(child.vertex_count() == 12);
        CHECK(is_class_Q(child));
        children.insert(canonical_code(child));
    }
    CHECK(children.size() == 1);  // the cube is face-transitive
}

TEST_CASE("pseudo-double wheels are Q-minimal") {
    for (int n = 3; n <= 6; ++n)
        CHECK(legal_reductions(pseudo_double_wheel(n), MapClass::Q).empty());
}

TEST_CASE("Moebius wheels and the g52 dual are Q-bar-minimal") {
    for (int n : {3, 5, 7}) CHECK(legal_reductions(moebius_wheel(n), MapClass::Qbar).empty());
    const auto g52 = exceptional_seed_g52();
    CHECK(legal_reductions(g52, MapClass::Qbar).empty());
    // Even though its cover has Q-removable faces (Theorem 12's exception).
    bool cover_has_removal = false;
    const auto& cover = g52.cover();
    for (int f = 0; f < cover.face_count(); ++f) {
        try {
            if (is_class_Q(remove_face(cover, cover.face_dart(f)))) cover_has_removal = true;
        } catch (const map_error&) {
        }
    }
    CHECK(cover_has_removal);
}

TEST_CASE("expansions of the Moebius wheel at one extra vertex") {
    // q-bar(5) = 0: no splitting of the 4-vertex quadrangulation stays in
    // the class.
    const auto mw3 = moebius_wheel(3);
    for (const auto& mv : legal_expansions(mw3, MapClass::Qbar))
        CHECK(mv.kind == MoveKind::addition);
}

TEST_CASE("move deltas") {
    const auto mw5 = moebius_wheel(5);
    for (const auto& mv : legal_expansions(mw5, MapClass::Qbar)) {
        const auto child = apply_move(mw5, mv);
        const int dv = child.vertex_count() - mw5.vertex_count();
        if (mv.kind == MoveKind::splitting) {
            CHECK(dv == 1);
            CHECK(child.edge_count() - mw5.edge_count() == 2);
            CHECK(child.face_count() - mw5.face_count() == 1);
        } else {
            CHECK(dv == 4);
            CHECK(child.edge_count() - mw5.edge_count() == 8);
            CHECK(child.face_count() - mw5.face_count() == 4);
        }
        CHECK(child.euler_characteristic() == 1);
        CHECK(is_quadrangulation(child));
    }
}

TEST_CASE("every child's reductions contain the inverse move") {
    const auto g52 = exceptional_seed_g52();
    for (const auto& mv : legal_expansions(g52, MapClass::Qbar)) {
        const TrackedProjectiveMove fwd = mv.kind == MoveKind::splitting
                                              ? split_vertex_tracked(g52, mv.d1, mv.d2)
                                              : add_face_tracked(g52, mv.d1);
        const auto reductions = legal_reductions(fwd.map, MapClass::Qbar);
        bool found = false;
        for (const auto& red : reductions) {
            if (red.kind != fwd.inverse.kind) continue;
            try {
                if (canonical_code_projective(apply_move(fwd.map, red)) ==
                    canonical_code_projective(g52))
                    found = true;
            } catch (const map_error&) {
            }
        }
        CHECK(found);
    }
}

TEST_CASE("net face splitting on a square face") {
    const auto net = pseudo_double_wheel(4).dual();  // the net (2 x 4)*
    int square = -1;
    for (int f = 0; f < net.face_count(); ++f)
        if (net.face_degree(f) == 4) square = f;
    REQUIRE(square >= 0);
    const auto cy = net.face_darts(square);
    const auto split = net_face_split(net, cy[0], cy[2]);
    CHECK(split.vertex_count() == net.vertex_count() + 1);
    CHECK(split.edge_count() == net.edge_count() + 2);
    CHECK(degree_profile(split).is_regular(4));
    // Splitting a 4-gon at distance 2 leaves two triangles.
    CHECK_THROWS_AS(net_face_split(net, cy[0], cy[1]), invalid_move_error);  // consecutive
    const auto oct = pseudo_double_wheel(3).dual();
    const auto tri = oct.face_darts(0);
    CHECK_THROWS_AS(net_face_split(oct, tri[0], tri[1]), invalid_move_error);
}

TEST_CASE("net vertex surrounding") {
    const auto oct = pseudo_double_wheel(3).dual();
    const auto grown = net_vertex_surround(oct, 0);
    CHECK(grown.vertex_count() == oct.vertex_count() + 4);
    CHECK(grown.edge_count() == oct.edge_count() + 8);
    CHECK(degree_profile(grown).is_regular(4));
    CHECK(is_basic_net(grown));
    CHECK_THROWS_AS(net_vertex_surround(pseudo_double_wheel(3), 0), invalid_move_error);
}

TEST_CASE("lemma 10 predicates on the g52 children") {
    // Cross-check the shortcut predicates against apply-and-test on every
    // face and diagonal of the small census.
    const auto census = generate_projective_Qbar(9);
    long hypotheses = 0;
    for (const auto& [size, level] : census.by_size) {
        for (const auto& entry : level) {
            const auto& p = entry.map;
            for (int f = 0; f < p.face_count(); ++f) {
                const auto cy = p.cover().face_darts(p.cover_face(f));
                for (int offset = 0; offset < 2; ++offset) {
                    const auto chk = qbar_contraction_check(p, cy[offset]);
                    if (!chk.cover_contractible) continue;
                    ++hypotheses;
                    bool applied = false;
                    try {
                        applied = is_class_Qbar(contract_face(p, cy[offset]));
                    } catch (const map_error&) {
                    }
                    CHECK(applied == chk.predicted_qbar_contractible);
                    if (chk.special) CHECK(applied == !chk.edge_a_cprime);
                }
                if (lemma11_guarantees_removable(p, cy[0]))
                    CHECK(quotient_face_removable(p, cy[0]));
            }
        }
    }
    CHECK(hypotheses > 0);
}
