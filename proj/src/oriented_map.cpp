#include "bnet/oriented_map.hpp"

#include <algorithm>
#include <map>

namespace bnet {

namespace {

void check_permutation(const std::vector<Dart>& p, const char* name) {
    const int n = static_cast<int>(p.size());
    std::vector<char> hit(n, 0);
    for (Dart d : p) {
        if (d < 0 || d >= n)
            throw malformed_rotation_error(std::string(name) + " image out of range");
        if (hit[d])
            throw malformed_rotation_error(std::string(name) + " is not a permutation");
        hit[d] = 1;
    }
}

}  // namespace

OrientedMap OrientedMap::from_permutations(std::vector<Dart> sigma, std::vector<Dart> alpha) {
    return OrientedMap(std::move(sigma), std::move(alpha));
}

OrientedMap::OrientedMap(std::vector<Dart> sigma, std::vector<Dart> alpha)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)) {
    const int n = dart_count();
    if (n == 0) throw malformed_rotation_error("map has no darts");
    if (n % 2 != 0) throw malformed_rotation_error("odd dart count");
    if (alpha_.size() != sigma_.size())
        throw malformed_rotation_error("sigma/alpha size mismatch");
    check_permutation(sigma_, "sigma");
    check_permutation(alpha_, "alpha");
    for (Dart d = 0; d < n; ++d) {
        if (alpha_[d] == d) throw malformed_rotation_error("alpha fixes a dart (dangling edge-end)");
        if (alpha_[alpha_[d]] != d) throw malformed_rotation_error("alpha is not an involution");
    }

    sigma_inv_.assign(n, kNoDart);
    for (Dart d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

    // Connectivity under <sigma, alpha>.
    {
        std::vector<char> seen(n, 0);
        std::vector<Dart> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart e : {sigma_[d], alpha_[d]}) {
                if (!seen[e]) {
                    seen[e] = 1;
                    ++reached;
                    stack.push_back(e);
                }
            }
        }
        if (reached != n) throw disconnected_error("map is not connected");
    }

    auto trace_orbits = [n](const std::vector<Dart>& next, std::vector<int>& orbit_of,
                            std::vector<Dart>& rep, std::vector<int>& size) {
        orbit_of.assign(n, -1);
        rep.clear();
        size.clear();
        for (Dart d = 0; d < n; ++d) {
            if (orbit_of[d] >= 0) continue;
            const int id = static_cast<int>(rep.size());
            rep.push_back(d);
            int count = 0;
            for (Dart e = d; orbit_of[e] < 0; e = next[e]) {
                orbit_of[e] = id;
                ++count;
            }
            size.push_back(count);
        }
    };

    trace_orbits(sigma_, vertex_of_, vertex_rep_, vertex_degree_);
    n_vertices_ = static_cast<int>(vertex_rep_.size());

    std::vector<Dart> phi(n);
    for (Dart d = 0; d < n; ++d) phi[d] = sigma_[alpha_[d]];
    trace_orbits(phi, face_of_, face_rep_, face_degree_);
    n_faces_ = static_cast<int>(face_rep_.size());

    edge_of_.assign(n, -1);
    edge_rep_.clear();
    for (Dart d = 0; d < n; ++d) {
        if (edge_of_[d] >= 0) continue;
        const int id = static_cast<int>(edge_rep_.size());
        edge_rep_.push_back(d);
        edge_of_[d] = id;
        edge_of_[alpha_[d]] = id;
    }

    if (euler_characteristic() != 2)
        throw not_sphere_error("Euler characteristic " + std::to_string(euler_characteristic()) +
                               ", expected 2");
}

OrientedMap OrientedMap::from_edge_rotations(const std::vector<std::vector<int>>& rotations) {
    int total = 0;
    for (const auto& rot : rotations) {
        if (rot.empty()) throw malformed_rotation_error("isolated vertex");
        total += static_cast<int>(rot.size());
    }
    if (total == 0) throw malformed_rotation_error("no edges");
    if (total % 2 != 0) throw malformed_rotation_error("odd dart count");
    const int n_edges = total / 2;

    // Darts numbered in input order; pair the two occurrences of each edge.
    std::vector<Dart> sigma(total), alpha(total, kNoDart);
    std::vector<Dart> first_end(n_edges, kNoDart);
    Dart d = 0;
    for (const auto& rot : rotations) {
        const Dart base = d;
        const int deg = static_cast<int>(rot.size());
        for (int i = 0; i < deg; ++i, ++d) {
            sigma[d] = base + (i + 1) % deg;
            const int e = rot[i];
            if (e < 0 || e >= n_edges)
                throw malformed_rotation_error("edge id " + std::to_string(e) + " out of range");
            if (first_end[e] == kNoDart) {
                first_end[e] = d;
            } else if (alpha[first_end[e]] == kNoDart) {
                alpha[first_end[e]] = d;
                alpha[d] = first_end[e];
            } else {
                throw malformed_rotation_error("edge " + std::to_string(e) +
                                               " has more than two ends");
            }
        }
    }
    for (int e = 0; e < n_edges; ++e)
        if (first_end[e] == kNoDart || alpha[first_end[e]] == kNoDart)
            throw malformed_rotation_error("edge " + std::to_string(e) + " is dangling");
    return OrientedMap(std::move(sigma), std::move(alpha));
}

OrientedMap OrientedMap::from_neighbor_lists(const std::vector<std::vector<int>>& neighbors) {
    const int n = static_cast<int>(neighbors.size());
    std::map<std::pair<int, int>, int> edge_ids;
    std::vector<std::vector<int>> rotations(n);
    for (int v = 0; v < n; ++v) {
        rotations[v].reserve(neighbors[v].size());
        for (int w : neighbors[v]) {
            if (w < 0 || w >= n)
                throw malformed_rotation_error("neighbor " + std::to_string(w) + " out of range");
            if (w == v) throw malformed_rotation_error("loop at vertex " + std::to_string(v) +
                                                       "; use edge rotations");
            auto key = std::minmax(v, w);
            auto [it, inserted] = edge_ids.try_emplace(key, static_cast<int>(edge_ids.size()));
            rotations[v].push_back(it->second);
        }
        // Parallel edges would repeat a neighbor in some list.
        auto sorted = neighbors[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw malformed_rotation_error("parallel edges at vertex " + std::to_string(v) +
                                           "; use edge rotations");
    }
    return from_edge_rotations(rotations);
}

std::vector<Dart> OrientedMap::vertex_darts(int v) const {
    std::vector<Dart> out;
    out.reserve(vertex_degree_[v]);
    const Dart start = vertex_rep_[v];
    Dart d = start;
    do {
        out.push_back(d);
        d = sigma_[d];
    } while (d != start);
    return out;
}

std::vector<Dart> OrientedMap::face_darts(int f) const { return face_cycle(face_rep_[f]); }

std::vector<Dart> OrientedMap::face_cycle(Dart start) const {
    std::vector<Dart> out;
    Dart d = start;
    do {
        out.push_back(d);
        d = phi(d);
    } while (d != start);
    return out;
}

std::vector<std::vector<Dart>> OrientedMap::rotation_lists() const {
    std::vector<std::vector<Dart>> out(n_vertices_);
    for (int v = 0; v < n_vertices_; ++v) out[v] = vertex_darts(v);
    return out;
}

OrientedMap OrientedMap::dual() const {
    std::vector<Dart> phi_perm(dart_count());
    for (Dart d = 0; d < dart_count(); ++d) phi_perm[d] = phi(d);
    return OrientedMap(std::move(phi_perm), alpha_);
}

OrientedMap OrientedMap::mirror() const { return OrientedMap(sigma_inv_, alpha_); }

}  // namespace bnet
