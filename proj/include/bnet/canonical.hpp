#pragma once

#include <string>
#include <vector>

#include "bnet/oriented_map.hpp"

namespace bnet {

/// Order-independent fingerprint of a map up to dart relabeling and
/// reflection. Equal codes iff some relabeling conjugates alpha to alpha
/// and sigma to sigma or sigma^-1.
using CanonicalCode = std::string;

/// Breadth-first relabeling from every root dart under both orientations,
/// lexicographically minimal encoding. O(E^2); fine at census scale.
CanonicalCode canonical_code(const OrientedMap& m);

/// Same minimization, but also reports the winning relabeling. label_of[d]
/// is the canonical index of dart d; reflected says whether the winner
/// traversed sigma^-1.
struct CanonicalLabeling {
    std::vector<int> label_of;
    Dart root = kNoDart;
    bool reflected = false;
};
CanonicalLabeling canonical_labeling(const OrientedMap& m);

bool are_isomorphic(const OrientedMap& a, const OrientedMap& b);

/// Canonical code of a cover together with an involution tau on its darts
/// (deck-paired maps compare equal iff the quotients are isomorphic).
CanonicalCode canonical_code_paired(const OrientedMap& m, const std::vector<Dart>& tau);
CanonicalLabeling canonical_labeling_paired(const OrientedMap& m, const std::vector<Dart>& tau);

}  // namespace bnet
