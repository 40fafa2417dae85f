#include <random>

#include "bnet/enumerate.hpp"
#include "bnet/predicates.hpp"
#include "bnet/projective.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bnet;

TEST_CASE("the cube admits exactly the antipodal involution") {
    const auto cube = pseudo_double_wheel(3);
    const auto found = find_quotient_involutions(cube);
    REQUIRE(found.size() == 1);

    // Oracle: the full automorphism group of the cube map has order 48;
    // exactly one member is a valid deck involution.
    const auto autos = oracles::map_automorphisms(cube);
    CHECK(autos.size() == 48);
    int deck_count = 0;
    for (const auto& a : autos)
        if (a.orientation_reversing && is_deck_involution(cube, a.perm)) ++deck_count;
    CHECK(deck_count == 1);
    CHECK(found[0].tau == [&] {
        for (const auto& a : autos)
            if (a.orientation_reversing && is_deck_involution(cube, a.perm)) return a.perm;
        return std::vector<Dart>{};
    }());
}

TEST_CASE("pseudo-double wheels admit a deck involution iff n is odd") {
    CHECK(find_quotient_involutions(pseudo_double_wheel(3)).size() == 1);
    CHECK(find_quotient_involutions(pseudo_double_wheel(4)).empty());
    CHECK(find_quotient_involutions(pseudo_double_wheel(5)).size() == 1);
    CHECK(find_quotient_involutions(pseudo_double_wheel(6)).empty());
    CHECK(find_quotient_involutions(pseudo_double_wheel(7)).size() == 1);
}

TEST_CASE("quotient of the cube is the Moebius wheel") {
    const auto cube = pseudo_double_wheel(3);
    const auto inv = find_quotient_involutions(cube).at(0);
    const auto q = quotient(cube, inv);
    CHECK(q.vertex_count() == 4);
    CHECK(q.edge_count() == 6);
    CHECK(q.face_count() == 3);
    CHECK(q.euler_characteristic() == 1);
    CHECK(canonical_code_projective(q) == canonical_code_projective(moebius_wheel(3)));
}

TEST_CASE("lift undoes quotient") {
    const auto w5 = pseudo_double_wheel(5);
    const auto inv = find_quotient_involutions(w5).at(0);
    const auto p = quotient(w5, inv);
    const auto [cover, deck] = lift(p);
    CHECK(are_isomorphic(cover, w5));
    CHECK(canonical_code_projective(ProjectiveMap(cover, deck)) == canonical_code_projective(p));
    CHECK(cover.vertex_count() == 2 * p.vertex_count());
    CHECK(cover.edge_count() == 2 * p.edge_count());
    CHECK(cover.face_count() == 2 * p.face_count());
}

TEST_CASE("the g52 cover has twelve vertices and is its own unique lift") {
    const auto g52 = exceptional_seed_g52();
    CHECK(g52.vertex_count() == 6);
    CHECK(g52.face_count() == 5);
    const auto& cover = g52.cover();
    CHECK(cover.vertex_count() == 12);
    const auto found = find_quotient_involutions(cover);
    REQUIRE(found.size() == 1);
    CHECK(found[0].tau == g52.tau());
}

TEST_CASE("projective codes separate and identify") {
    std::mt19937 rng(41);
    const auto mw3 = moebius_wheel(3);
    const auto g52 = exceptional_seed_g52();
    CHECK(canonical_code_projective(mw3) != canonical_code_projective(g52));
    // Relabeled cover, same quotient.
    const auto cube = pseudo_double_wheel(3);
    for (int i = 0; i < 5; ++i) {
        const auto twin = oracles::relabeled(cube, rng);
        const auto inv = find_quotient_involutions(twin).at(0);
        CHECK(canonical_code_projective(quotient(twin, inv)) == canonical_code_projective(mw3));
    }
}

TEST_CASE("deck involution validation rejects bad candidates") {
    const auto cube = pseudo_double_wheel(3);
    std::vector<Dart> identity(cube.dart_count());
    for (Dart d = 0; d < cube.dart_count(); ++d) identity[d] = d;
    CHECK_THROWS_AS(validate_deck_involution(cube, identity), invalid_involution_error);
    CHECK_THROWS_AS(validate_deck_involution(cube, cube.alpha_perm()),
                    invalid_involution_error);  // fixes every edge

    // The doubled 2-cycle admits a sheet-swapping anti-automorphism that
    // fixes both faces; it must be rejected (the quotient would not be RP^2).
    const auto two_cycle = OrientedMap::from_edge_rotations({{0, 1}, {0, 1}});
    REQUIRE(two_cycle.face_count() == 2);
    bool found_fixed_face_candidate = false;
    for (const auto& a : oracles::map_automorphisms(two_cycle)) {
        if (!a.orientation_reversing) continue;
        bool involution = true, free = true;
        for (Dart d = 0; d < two_cycle.dart_count(); ++d) {
            if (a.perm[a.perm[d]] != d) involution = false;
            if (a.perm[d] == d || a.perm[d] == two_cycle.alpha(d)) free = false;
            if (two_cycle.vertex_of(a.perm[d]) == two_cycle.vertex_of(d)) free = false;
        }
        if (involution && free) {
            found_fixed_face_candidate = true;
            CHECK_FALSE(is_deck_involution(two_cycle, a.perm));
        }
    }
    CHECK(found_fixed_face_candidate);
}

TEST_CASE("verify_unique_involution statuses") {
    CHECK(verify_unique_involution(pseudo_double_wheel(3)).status ==
          InvolutionReport::Status::pass);
    CHECK(verify_unique_involution(pseudo_double_wheel(5)).status ==
          InvolutionReport::Status::pass);
    // Degree-2 vertices put the map outside the theorem hypothesis.
    const auto square = OrientedMap::from_edge_rotations({{0, 3}, {1, 0}, {2, 1}, {3, 2}});
    CHECK(verify_unique_involution(square).status == InvolutionReport::Status::inconclusive);
}

TEST_CASE("dual of a projective map carries the induced involution") {
    const auto mw5 = moebius_wheel(5);
    const auto net = mw5.dual();
    CHECK(net.vertex_count() == mw5.face_count());
    CHECK(net.face_count() == mw5.vertex_count());
    CHECK(net.edge_count() == mw5.edge_count());
    // Double dual returns the original quotient.
    CHECK(canonical_code_projective(net.dual()) == canonical_code_projective(mw5));
}
