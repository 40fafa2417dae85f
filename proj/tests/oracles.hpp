// Independent oracles for the test suites. Everything here recomputes
// results through a different route than the library code it checks.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "bnet/canonical.hpp"
#include "bnet/oriented_map.hpp"
#include "bnet/predicates.hpp"
#include "bnet/projective.hpp"

namespace oracles {

using bnet::Dart;
using bnet::OrientedMap;

// Face count straight from edge-rotation input: walk "next edge-end
// clockwise after crossing the edge" orbits on (vertex, position) slots,
// never touching the library's orbit machinery.
inline int count_faces_from_edge_rotations(const std::vector<std::vector<int>>& rotations) {
    // Slot = (vertex, position). Locate each edge's two slots.
    std::vector<std::array<int, 4>> ends;  // edge -> v1, p1, v2, p2
    int n_edges = 0;
    for (const auto& rot : rotations)
        for (int e : rot) n_edges = std::max(n_edges, e + 1);
    ends.assign(n_edges, {-1, -1, -1, -1});
    for (int v = 0; v < static_cast<int>(rotations.size()); ++v)
        for (int p = 0; p < static_cast<int>(rotations[v].size()); ++p) {
            auto& rec = ends[rotations[v][p]];
            if (rec[0] < 0) {
                rec[0] = v;
                rec[1] = p;
            } else {
                rec[2] = v;
                rec[3] = p;
            }
        }
    auto slot_id = [&](int v, int p) {
        int id = 0;
        for (int u = 0; u < v; ++u) id += static_cast<int>(rotations[u].size());
        return id + p;
    };
    int total_slots = 0;
    for (const auto& rot : rotations) total_slots += static_cast<int>(rot.size());
    std::vector<char> seen(total_slots, 0);
    int faces = 0;
    for (int v = 0; v < static_cast<int>(rotations.size()); ++v) {
        for (int p = 0; p < static_cast<int>(rotations[v].size()); ++p) {
            if (seen[slot_id(v, p)]) continue;
            ++faces;
            int cv = v, cp = p;
            while (!seen[slot_id(cv, cp)]) {
                seen[slot_id(cv, cp)] = 1;
                // Cross the edge at (cv, cp), then step to the next end
                // counterclockwise at the far vertex.
                const auto& rec = ends[rotations[cv][cp]];
                int wv, wp;
                if (rec[0] == cv && rec[1] == cp) {
                    wv = rec[2];
                    wp = rec[3];
                } else {
                    wv = rec[0];
                    wp = rec[1];
                }
                cv = wv;
                cp = (wp + 1) % static_cast<int>(rotations[cv].size());
            }
        }
    }
    return faces;
}

// Minimum edge cut by subset enumeration, smallest size first.
inline int brute_force_min_cut(const bnet::Multigraph& g) {
    const int m = static_cast<int>(g.edges.size());
    auto connected_without = [&](unsigned mask) {
        std::vector<std::vector<int>> adj(g.n_vertices);
        for (int e = 0; e < m; ++e) {
            if (mask & (1u << e)) continue;
            auto [u, v] = g.edges[e];
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<char> seen(g.n_vertices, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
        }
        return reached == g.n_vertices;
    };
    for (int k = 0; k <= m; ++k)
        for (unsigned mask = 0; mask < (1u << m); ++mask)
            if (std::popcount(mask) == k && !connected_without(mask)) return k;
    return m + 1;
}

// Dart-bijection isomorphism search: anchor dart 0 of a on every dart of b
// under both orientations and propagate. Independent of the canonical-code
// minimization.
inline bool brute_force_isomorphic(const OrientedMap& a, const OrientedMap& b) {
    if (a.dart_count() != b.dart_count()) return false;
    const int n = a.dart_count();
    for (Dart root = 0; root < n; ++root) {
        for (bool reflect : {false, true}) {
            std::vector<Dart> f(n, bnet::kNoDart);
            std::vector<Dart> stack{0};
            f[0] = root;
            bool ok = true;
            while (ok && !stack.empty()) {
                Dart d = stack.back();
                stack.pop_back();
                const Dart pairs[2][2] = {
                    {a.sigma(d), reflect ? b.sigma_inv(f[d]) : b.sigma(f[d])},
                    {a.alpha(d), b.alpha(f[d])}};
                for (const auto& pr : pairs) {
                    if (f[pr[0]] == bnet::kNoDart) {
                        f[pr[0]] = pr[1];
                        stack.push_back(pr[0]);
                    } else if (f[pr[0]] != pr[1]) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            std::vector<char> hit(n, 0);
            for (Dart d = 0; d < n; ++d) {
                if (f[d] == bnet::kNoDart || hit[f[d]]) {
                    ok = false;
                    break;
                }
                hit[f[d]] = 1;
            }
            if (ok) return true;
        }
    }
    return false;
}

// The full automorphism group of a map (orientation-preserving and
// reversing), as dart permutations.
struct MapAutomorphism {
    std::vector<Dart> perm;
    bool orientation_reversing;
};

inline std::vector<MapAutomorphism> map_automorphisms(const OrientedMap& m) {
    const int n = m.dart_count();
    std::vector<MapAutomorphism> out;
    for (Dart root = 0; root < n; ++root) {
        for (bool reflect : {false, true}) {
            std::vector<Dart> f(n, bnet::kNoDart);
            std::vector<Dart> stack{0};
            f[0] = root;
            bool ok = true;
            while (ok && !stack.empty()) {
                Dart d = stack.back();
                stack.pop_back();
                const Dart pairs[2][2] = {
                    {m.sigma(d), reflect ? m.sigma_inv(f[d]) : m.sigma(f[d])},
                    {m.alpha(d), m.alpha(f[d])}};
                for (const auto& pr : pairs) {
                    if (f[pr[0]] == bnet::kNoDart) {
                        f[pr[0]] = pr[1];
                        stack.push_back(pr[0]);
                    } else if (f[pr[0]] != pr[1]) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) out.push_back({std::move(f), reflect});
        }
    }
    return out;
}

// Random sphere map with the given edge count: random rotation over the
// fixed pairing (0,1)(2,3)..., retried until connected with chi = 2.
inline std::optional<OrientedMap> random_sphere_map(std::mt19937& rng, int edges,
                                                    int attempts = 400) {
    const int n = 2 * edges;
    std::vector<Dart> alpha(n);
    for (Dart d = 0; d < n; ++d) alpha[d] = d ^ 1;
    std::vector<Dart> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int t = 0; t < attempts; ++t) {
        std::shuffle(sigma.begin(), sigma.end(), rng);
        try {
            return OrientedMap::from_permutations(sigma, alpha);
        } catch (const bnet::map_error&) {
        }
    }
    return std::nullopt;
}

// Relabeled copy: conjugates both permutations by a random dart bijection.
inline OrientedMap relabeled(const OrientedMap& m, std::mt19937& rng) {
    const int n = m.dart_count();
    std::vector<Dart> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<Dart> sigma(n), alpha(n);
    for (Dart d = 0; d < n; ++d) {
        sigma[pi[d]] = pi[m.sigma(d)];
        alpha[pi[d]] = pi[m.alpha(d)];
    }
    return OrientedMap::from_permutations(sigma, alpha);
}

// Exhaustive enumeration of the simply embedded quadrangulations of RP^2
// of minimum degree 3 with n_check vertices, straight from raw signed
// rotation systems (local rotations plus edge signs, tree gauge-fixed),
// deduplicated through the double cover. Feasible for n_check <= 6.
std::set<bnet::CanonicalCode> raw_projective_quadrangulations(int n_check);

}  // namespace oracles
