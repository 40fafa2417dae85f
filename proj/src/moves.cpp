#include "bnet/moves.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "bnet/predicates.hpp"

namespace bnet {

namespace {

std::vector<Dart> rotation_from(const OrientedMap& m, Dart start) {
    std::vector<Dart> out;
    Dart d = start;
    do {
        out.push_back(d);
        d = m.sigma(d);
    } while (d != start);
    return out;
}

// Rotation-list workbench for local surgery. Darts keep their ids while
// edits accumulate; build() compacts to a fresh map and reports where every
// dart went. Killed darts may linger inside rotation lists; they are
// filtered at build time, which keeps edit order irrelevant.
class Surgeon {
  public:
    explicit Surgeon(const OrientedMap& m)
        : rot_(m.rotation_lists()),
          alpha_(m.alpha_perm()),
          alive_(m.dart_count(), 1) {}

    Dart fresh_dart() {
        alpha_.push_back(kNoDart);
        alive_.push_back(1);
        return static_cast<Dart>(alpha_.size() - 1);
    }
    void pair_darts(Dart a, Dart b) {
        alpha_[a] = b;
        alpha_[b] = a;
    }
    int fresh_vertex(std::vector<Dart> rotation) {
        rot_.push_back(std::move(rotation));
        return static_cast<int>(rot_.size() - 1);
    }
    void set_rotation(int v, std::vector<Dart> rotation) { rot_[v] = std::move(rotation); }
    void clear_vertex(int v) { rot_[v].clear(); }
    void kill_edge(Dart d) {
        alive_[d] = 0;
        alive_[alpha_[d]] = 0;
    }

    void insert_after(Dart ref, Dart nd) { insert(ref, nd, 1); }
    void insert_before(Dart ref, Dart nd) { insert(ref, nd, 0); }

    struct Built {
        OrientedMap map;
        std::vector<Dart> dart_map;
    };

    Built build() const {
        std::vector<Dart> dart_map(alpha_.size(), kNoDart);
        int next = 0;
        for (const auto& list : rot_)
            for (Dart d : list)
                if (alive_[d]) dart_map[d] = next++;
        std::vector<Dart> sigma(next, kNoDart), alpha(next, kNoDart);
        for (const auto& list : rot_) {
            std::vector<Dart> live;
            for (Dart d : list)
                if (alive_[d]) live.push_back(d);
            for (std::size_t i = 0; i < live.size(); ++i)
                sigma[dart_map[live[i]]] = dart_map[live[(i + 1) % live.size()]];
        }
        int placed = 0;
        for (std::size_t d = 0; d < alpha_.size(); ++d) {
            if (dart_map[d] == kNoDart) continue;
            ++placed;
            if (!alive_[d] || alpha_[d] == kNoDart || dart_map[alpha_[d]] == kNoDart)
                throw invalid_move_error("surgery left a dangling edge-end");
            alpha[dart_map[d]] = dart_map[alpha_[d]];
        }
        for (std::size_t d = 0; d < alive_.size(); ++d)
            if (alive_[d] && dart_map[d] == kNoDart)
                throw invalid_move_error("surgery lost a live dart");
        (void)placed;
        return {OrientedMap::from_permutations(std::move(sigma), std::move(alpha)),
                std::move(dart_map)};
    }

  private:
    void insert(Dart ref, Dart nd, int offset) {
        for (auto& list : rot_) {
            auto it = std::find(list.begin(), list.end(), ref);
            if (it != list.end()) {
                list.insert(it + offset, nd);
                return;
            }
        }
        throw invalid_move_error("insertion reference dart not found");
    }

    std::vector<std::vector<Dart>> rot_;
    std::vector<Dart> alpha_;
    std::vector<char> alive_;
};

std::vector<Dart> quad_cycle(const OrientedMap& m, Dart face_dart, const char* what) {
    auto cycle = m.face_cycle(face_dart);
    if (cycle.size() != 4)
        throw invalid_move_error(std::string(what) + " needs a quadrangular face");
    return cycle;
}

void expect_deltas(const OrientedMap& before, const OrientedMap& after, int dv, int de, int df,
                   const char* what) {
    if (after.vertex_count() != before.vertex_count() + dv ||
        after.edge_count() != before.edge_count() + de ||
        after.face_count() != before.face_count() + df)
        throw invalid_move_error(std::string(what) + " degenerates at this site");
}

}  // namespace

TrackedMove contract_face_tracked(const OrientedMap& q, Dart face_dart) {
    if (q.face_count() <= 1) throw invalid_move_error("contraction needs more than one face");
    const auto cy = quad_cycle(q, face_dart, "contraction");
    const Dart da = cy[0], db = cy[1], dc = cy[2], dd = cy[3];
    const int a = q.vertex_of(da), c = q.vertex_of(dc);
    if (a == c) throw invalid_move_error("face is not contractible at this diagonal (a = c)");

    auto a_rot = rotation_from(q, da);  // ends at alpha(dd): the corner of f at a
    auto c_rot = rotation_from(q, dc);  // ends at alpha(db)
    std::vector<Dart> merged = a_rot;
    merged.insert(merged.end(), c_rot.begin() + 1, c_rot.end() - 1);

    Surgeon s(q);
    s.set_rotation(a, std::move(merged));
    s.clear_vertex(c);
    s.kill_edge(db);
    s.kill_edge(dc);
    auto built = s.build();
    expect_deltas(q, built.map, -1, -2, -1, "contraction");

    TrackedMove out{std::move(built.map), std::move(built.dart_map), {}};
    const int deg_a = q.degree(a), deg_c = q.degree(c);
    out.inverse = {MoveKind::splitting, out.dart_map[da], out.dart_map[q.alpha(dd)],
                   deg_a == 3 || deg_c == 3};
    return out;
}

OrientedMap contract_face(const OrientedMap& q, Dart face_dart) {
    return contract_face_tracked(q, face_dart).map;
}

TrackedMove split_vertex_tracked(const OrientedMap& q, Dart x, Dart y) {
    if (x == y) throw invalid_move_error("splitting darts coincide");
    const int v = q.vertex_of(x);
    if (q.vertex_of(y) != v) throw invalid_move_error("splitting darts at different vertices");

    const auto r = rotation_from(q, x);
    const int m = static_cast<int>(r.size());
    const int k = static_cast<int>(std::find(r.begin(), r.end(), y) - r.begin());

    Surgeon s(q);
    const Dart n1 = s.fresh_dart(), n1p = s.fresh_dart();
    const Dart n2 = s.fresh_dart(), n2p = s.fresh_dart();
    s.pair_darts(n1, n1p);
    s.pair_darts(n2, n2p);
    std::vector<Dart> a_rot(r.begin(), r.begin() + k + 1);
    std::vector<Dart> c_rot{n1};
    c_rot.insert(c_rot.end(), r.begin() + k + 1, r.end());
    c_rot.push_back(n2);
    s.set_rotation(v, std::move(a_rot));
    s.fresh_vertex(std::move(c_rot));
    s.insert_after(q.alpha(x), n2p);
    s.insert_before(q.alpha(y), n1p);
    auto built = s.build();
    expect_deltas(q, built.map, +1, +2, +1, "splitting");

    TrackedMove out{std::move(built.map), std::move(built.dart_map), {}};
    // New face (x, n2p, n1, alpha(y)); diagonal {a, c} at positions 0 and 2.
    const int deg_a = k + 1, deg_c = m - k + 1;
    out.inverse = {MoveKind::contraction, out.dart_map[x], kNoDart, deg_a == 3 || deg_c == 3};
    return out;
}

OrientedMap split_vertex(const OrientedMap& q, Dart x, Dart y) {
    return split_vertex_tracked(q, x, y).map;
}

namespace {

// Face removal preconditions on a sphere map: pairwise distinct corners of
// degree 3 whose outgoing ends avoid the corners. Returns the outgoing
// darts; throws naming the violated clause otherwise.
std::array<Dart, 4> removal_outgoing(const OrientedMap& q, const std::vector<Dart>& cy) {
    std::array<int, 4> corner{};
    for (int i = 0; i < 4; ++i) corner[i] = q.vertex_of(cy[i]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (corner[i] == corner[j])
                throw invalid_move_error("not removable: corners are not pairwise distinct");
    for (int i = 0; i < 4; ++i)
        if (q.degree(corner[i]) != 3)
            throw invalid_move_error("not removable: corner of degree != 3");
    std::array<Dart, 4> out{};
    for (int i = 0; i < 4; ++i) {
        // Degree 3: the rotation at corner i is (cy[i], out, alpha(cy[i-1])).
        out[i] = q.sigma(cy[i]);
        if (out[i] == q.alpha(cy[(i + 3) % 4]))
            throw invalid_move_error("not removable: face corner inconsistency");
        const int head = q.head_of(out[i]);
        for (int j = 0; j < 4; ++j)
            if (head == corner[j])
                throw invalid_move_error("not removable: outgoing end returns to the face");
    }
    return out;
}

}  // namespace

TrackedMove remove_face_tracked(const OrientedMap& q, Dart face_dart) {
    const auto cy = quad_cycle(q, face_dart, "removal");
    const auto out_darts = removal_outgoing(q, cy);

    Surgeon s(q);
    for (int i = 0; i < 4; ++i) {
        s.kill_edge(cy[i]);
        s.kill_edge(out_darts[i]);
        s.clear_vertex(q.vertex_of(cy[i]));
    }
    auto built = s.build();
    expect_deltas(q, built.map, -4, -8, -4, "removal");

    TrackedMove out{std::move(built.map), std::move(built.dart_map), {}};
    // The vacated face contains the surviving dart phi^2(alpha(d0)) (the
    // side of the adjacent quad joining two outgoing heads).
    out.inverse = {MoveKind::addition, out.dart_map[q.phi(q.phi(q.alpha(face_dart)))], kNoDart,
                   false};
    return out;
}

OrientedMap remove_face(const OrientedMap& q, Dart face_dart) {
    return remove_face_tracked(q, face_dart).map;
}

TrackedMove add_face_tracked(const OrientedMap& q, Dart face_dart) {
    const auto cy = quad_cycle(q, face_dart, "addition");

    Surgeon s(q);
    std::array<Dart, 4> spoke{}, spoke_corner{}, inner_f{}, inner_b{};
    for (int i = 0; i < 4; ++i) {
        spoke[i] = s.fresh_dart();         // at the new vertex n_i
        spoke_corner[i] = s.fresh_dart();  // at the old corner
        s.pair_darts(spoke[i], spoke_corner[i]);
    }
    for (int i = 0; i < 4; ++i) {
        inner_f[i] = s.fresh_dart();  // at n_i toward n_{i+1}
        inner_b[i] = s.fresh_dart();  // at n_{i+1} toward n_i
        s.pair_darts(inner_f[i], inner_b[i]);
    }
    for (int i = 0; i < 4; ++i)
        s.fresh_vertex({spoke[i], inner_b[(i + 3) % 4], inner_f[i]});
    for (int i = 0; i < 4; ++i) s.insert_before(cy[i], spoke_corner[i]);
    auto built = s.build();
    expect_deltas(q, built.map, +4, +8, +4, "addition");

    TrackedMove out{std::move(built.map), std::move(built.dart_map), {}};
    out.inverse = {MoveKind::removal, out.dart_map[inner_f[0]], kNoDart, false};
    return out;
}

OrientedMap add_face(const OrientedMap& q, Dart face_dart) {
    return add_face_tracked(q, face_dart).map;
}

namespace {

// tau transported through one or two surgeries; unknown images (new darts)
// are resolved by propagating the anti-automorphism relations from known
// ones, then the whole candidate is validated.
std::vector<Dart> complete_involution(const OrientedMap& m, std::vector<Dart> tau) {
    std::vector<Dart> stack;
    for (Dart d = 0; d < m.dart_count(); ++d)
        if (tau[d] != kNoDart) stack.push_back(d);
    while (!stack.empty()) {
        const Dart d = stack.back();
        stack.pop_back();
        const Dart pairs[2][2] = {{m.sigma(d), m.sigma_inv(tau[d])},
                                  {m.alpha(d), m.alpha(tau[d])}};
        for (const auto& pr : pairs) {
            if (tau[pr[0]] == kNoDart) {
                tau[pr[0]] = pr[1];
                stack.push_back(pr[0]);
            } else if (tau[pr[0]] != pr[1]) {
                throw invalid_involution_error("transported involution is inconsistent");
            }
        }
    }
    validate_deck_involution(m, tau);
    return tau;
}

// Composition of dart maps across two surgeries, restricted to the darts of
// the original cover.
std::vector<Dart> compose_maps(const OrientedMap& original, const std::vector<Dart>& m1,
                               const std::vector<Dart>& m2) {
    std::vector<Dart> full(original.dart_count(), kNoDart);
    for (Dart d = 0; d < original.dart_count(); ++d)
        if (m1[d] != kNoDart) full[d] = m2[m1[d]];
    return full;
}

std::vector<Dart> transport_tau(const std::vector<Dart>& tau, const std::vector<Dart>& full,
                                int new_dart_count) {
    std::vector<Dart> out(new_dart_count, kNoDart);
    for (std::size_t d = 0; d < tau.size(); ++d) {
        if (full[d] == kNoDart) continue;
        if (full[tau[d]] == kNoDart)
            throw invalid_involution_error("surgery did not respect the deck pairing");
        out[full[d]] = full[tau[d]];
    }
    return out;
}

Dart mapped_or_throw(const std::vector<Dart>& map, Dart d, const char* what) {
    if (map[d] == kNoDart) throw invalid_move_error(std::string(what) + ": image site destroyed");
    return map[d];
}

}  // namespace

TrackedProjectiveMove contract_face_tracked(const ProjectiveMap& p, Dart face_dart) {
    const OrientedMap& m = p.cover();
    const auto& tau = p.tau();
    const auto cy = quad_cycle(m, face_dart, "contraction");
    const int a = m.vertex_of(cy[0]), c = m.vertex_of(cy[2]);
    if (a == c || p.quotient_vertex(a) == p.quotient_vertex(c))
        throw invalid_move_error("quotient face is not contractible at this diagonal");

    auto s1 = contract_face_tracked(m, face_dart);
    // Image face traced in reverse: (E_d, E_c, E_b, E_a) with E_x = tau(alpha(cy[x])).
    const std::array<Dart, 4> image = {tau[m.alpha(cy[3])], tau[m.alpha(cy[2])],
                                       tau[m.alpha(cy[1])], tau[m.alpha(cy[0])]};
    const Dart e2 = mapped_or_throw(s1.dart_map, image[0], "equivariant contraction");
    const auto cy2 = s1.map.face_cycle(e2);
    bool intact = cy2.size() == 4;
    for (int i = 0; intact && i < 4; ++i) intact = cy2[i] == s1.dart_map[image[i]];
    if (!intact)
        throw invalid_move_error("equivariant contraction: deck-image face disturbed");

    auto s2 = contract_face_tracked(s1.map, e2);
    auto full = compose_maps(m, s1.dart_map, s2.dart_map);
    auto tau2 = complete_involution(s2.map, transport_tau(tau, full, s2.map.dart_count()));

    TrackedProjectiveMove out{ProjectiveMap(std::move(s2.map), DeckInvolution{std::move(tau2)}),
                              full,
                              {MoveKind::splitting, full[cy[0]], full[m.alpha(cy[3])],
                               m.degree(a) == 3 || m.degree(c) == 3}};
    return out;
}

TrackedProjectiveMove split_vertex_tracked(const ProjectiveMap& p, Dart x, Dart y) {
    const OrientedMap& m = p.cover();
    const auto& tau = p.tau();
    const int v = m.vertex_of(x);
    const int vp = p.vertex_partner(v);
    for (Dart d : {x, y})
        if (m.head_of(d) == v || m.head_of(d) == vp)
            throw invalid_move_error("splitting across a loop or the deck pairing");

    auto s1 = split_vertex_tracked(m, x, y);
    auto s2 = split_vertex_tracked(s1.map, s1.dart_map[tau[y]], s1.dart_map[tau[x]]);
    auto full = compose_maps(m, s1.dart_map, s2.dart_map);
    auto tau2 = complete_involution(s2.map, transport_tau(tau, full, s2.map.dart_count()));

    const auto rot = rotation_from(m, x);
    const int k = static_cast<int>(std::find(rot.begin(), rot.end(), y) - rot.begin());
    const int deg_a = k + 1, deg_c = static_cast<int>(rot.size()) - k + 1;
    TrackedProjectiveMove out{
        ProjectiveMap(std::move(s2.map), DeckInvolution{std::move(tau2)}),
        full,
        {MoveKind::contraction, full[x], kNoDart, deg_a == 3 || deg_c == 3}};
    return out;
}

bool quotient_face_removable(const ProjectiveMap& p, Dart face_dart) {
    const OrientedMap& m = p.cover();
    const auto cy = m.face_cycle(face_dart);
    if (cy.size() != 4) return false;
    std::set<int> gadget;
    for (Dart d : cy) {
        const int v = m.vertex_of(d);
        if (m.degree(v) != 3) return false;
        gadget.insert(v);
        gadget.insert(p.vertex_partner(v));
    }
    if (gadget.size() != 8) return false;
    for (Dart d : cy) {
        const Dart out = m.sigma(d);
        if (out == m.alpha(cy[3]) || gadget.count(m.head_of(out))) return false;
    }
    // Recheck the plain removal clauses (corner distinctness is implied).
    try {
        removal_outgoing(m, cy);
    } catch (const invalid_move_error&) {
        return false;
    }
    return true;
}

TrackedProjectiveMove remove_face_tracked(const ProjectiveMap& p, Dart face_dart) {
    const OrientedMap& m = p.cover();
    const auto& tau = p.tau();
    if (!quotient_face_removable(p, face_dart))
        throw invalid_move_error("quotient face is not removable");
    const Dart inverse_site = m.phi(m.phi(m.alpha(face_dart)));

    auto s1 = remove_face_tracked(m, face_dart);
    const Dart e2 =
        mapped_or_throw(s1.dart_map, tau[m.alpha(face_dart)], "equivariant removal");
    auto s2 = remove_face_tracked(s1.map, e2);
    auto full = compose_maps(m, s1.dart_map, s2.dart_map);
    auto tau2 = complete_involution(s2.map, transport_tau(tau, full, s2.map.dart_count()));

    TrackedProjectiveMove out{ProjectiveMap(std::move(s2.map), DeckInvolution{std::move(tau2)}),
                              full,
                              {MoveKind::addition, full[inverse_site], kNoDart, false}};
    return out;
}

TrackedProjectiveMove add_face_tracked(const ProjectiveMap& p, Dart face_dart) {
    const OrientedMap& m = p.cover();
    const auto& tau = p.tau();
    auto s1 = add_face_tracked(m, face_dart);
    const Dart e2 = mapped_or_throw(s1.dart_map, tau[m.alpha(face_dart)], "equivariant addition");
    auto s2 = add_face_tracked(s1.map, e2);
    auto full = compose_maps(m, s1.dart_map, s2.dart_map);
    auto tau2 = complete_involution(s2.map, transport_tau(tau, full, s2.map.dart_count()));

    // Inverse removal at the first gadget's inner face.
    const Dart inner_final = s2.dart_map[s1.inverse.d1];
    TrackedProjectiveMove out{ProjectiveMap(std::move(s2.map), DeckInvolution{std::move(tau2)}),
                              full,
                              {MoveKind::removal, inner_final, kNoDart, false}};
    return out;
}

ProjectiveMap contract_face(const ProjectiveMap& p, Dart d) {
    return contract_face_tracked(p, d).map;
}
ProjectiveMap split_vertex(const ProjectiveMap& p, Dart x, Dart y) {
    return split_vertex_tracked(p, x, y).map;
}
ProjectiveMap remove_face(const ProjectiveMap& p, Dart d) {
    return remove_face_tracked(p, d).map;
}
ProjectiveMap add_face(const ProjectiveMap& p, Dart d) { return add_face_tracked(p, d).map; }

OrientedMap apply_move(const OrientedMap& q, const MoveDescriptor& m) {
    switch (m.kind) {
        case MoveKind::contraction: return contract_face(q, m.d1);
        case MoveKind::splitting: return split_vertex(q, m.d1, m.d2);
        case MoveKind::removal: return remove_face(q, m.d1);
        case MoveKind::addition: return add_face(q, m.d1);
    }
    throw invalid_move_error("unknown move kind");
}

ProjectiveMap apply_move(const ProjectiveMap& p, const MoveDescriptor& m) {
    switch (m.kind) {
        case MoveKind::contraction: return contract_face(p, m.d1);
        case MoveKind::splitting: return split_vertex(p, m.d1, m.d2);
        case MoveKind::removal: return remove_face(p, m.d1);
        case MoveKind::addition: return add_face(p, m.d1);
    }
    throw invalid_move_error("unknown move kind");
}

namespace {

struct NetSplitBuilt {
    Surgeon::Built built;
};

Surgeon::Built net_face_split_build(const OrientedMap& net, Dart c_i, Dart c_j) {
    if (net.face_of(c_i) != net.face_of(c_j))
        throw invalid_move_error("face splitting sides on different faces");
    if (c_i == c_j || net.edge_of(c_i) == net.edge_of(c_j))
        throw invalid_move_error("face splitting needs two distinct edges");
    if (net.phi(c_i) == c_j || net.phi(c_j) == c_i)
        throw invalid_move_error("face splitting sides must be non-consecutive");

    Surgeon s(net);
    const Dart old_ai = net.alpha(c_i), old_aj = net.alpha(c_j);
    const Dart m1 = s.fresh_dart(), a1 = s.fresh_dart();
    const Dart m3 = s.fresh_dart(), a2 = s.fresh_dart();
    s.pair_darts(c_i, m1);   // edge u - x
    s.pair_darts(a1, old_ai);  // edge x - ubar
    s.pair_darts(c_j, m3);   // edge w - x
    s.pair_darts(a2, old_aj);  // edge x - wbar
    // The strands u-x-w and ubar-x-wbar cross transversally at x; the split
    // face keeps its walk direction, so sigma_x sends m3 to a1 and m1 to a2.
    s.fresh_vertex({m1, a2, m3, a1});
    auto built = s.build();
    expect_deltas(net, built.map, +1, +2, +1, "face splitting");
    return built;
}

Surgeon::Built net_vertex_surround_build(const OrientedMap& net, int vertex) {
    if (net.degree(vertex) != 4)
        throw invalid_move_error("vertex surrounding needs a degree-4 vertex");
    const auto g = net.vertex_darts(vertex);
    for (Dart d : g)
        if (net.head_of(d) == vertex)
            throw invalid_move_error("vertex surrounding at a loop is unsupported");

    Surgeon s(net);
    std::array<Dart, 4> old_alpha{}, t{}, o{}, qd{}, r{};
    for (int i = 0; i < 4; ++i) old_alpha[i] = net.alpha(g[i]);
    for (int i = 0; i < 4; ++i) {
        t[i] = s.fresh_dart();
        o[i] = s.fresh_dart();
        qd[i] = s.fresh_dart();
        r[i] = s.fresh_dart();
    }
    for (int i = 0; i < 4; ++i) {
        s.pair_darts(g[i], t[i]);        // edge v - w_i
        s.pair_darts(o[i], old_alpha[i]);  // edge w_i - h_i
        s.pair_darts(qd[i], r[i]);       // circle edge w_i - w_{i+1}
    }
    for (int i = 0; i < 4; ++i) s.fresh_vertex({qd[i], t[i], r[(i + 3) % 4], o[i]});
    auto built = s.build();
    expect_deltas(net, built.map, +4, +8, +4, "vertex surrounding");
    return built;
}

}  // namespace

OrientedMap net_face_split(const OrientedMap& net, Dart side1, Dart side2) {
    return net_face_split_build(net, side1, side2).map;
}

OrientedMap net_vertex_surround(const OrientedMap& net, int vertex) {
    return net_vertex_surround_build(net, vertex).map;
}

ProjectiveMap net_face_split(const ProjectiveMap& net, Dart side1, Dart side2) {
    const OrientedMap& m = net.cover();
    const auto& tau = net.tau();
    const Dart i2 = tau[m.alpha(side1)], j2 = tau[m.alpha(side2)];
    std::set<int> edges{m.edge_of(side1), m.edge_of(side2), m.edge_of(i2), m.edge_of(j2)};
    if (edges.size() != 4)
        throw invalid_move_error("equivariant face splitting: sites share an edge");
    auto s1 = net_face_split_build(m, side1, side2);
    auto s2 = net_face_split_build(s1.map, s1.dart_map[i2], s1.dart_map[j2]);
    auto full = compose_maps(m, s1.dart_map, s2.dart_map);
    auto tau2 = complete_involution(s2.map, transport_tau(tau, full, s2.map.dart_count()));
    return ProjectiveMap(std::move(s2.map), DeckInvolution{std::move(tau2)});
}

ProjectiveMap net_vertex_surround(const ProjectiveMap& net, int vertex) {
    const OrientedMap& m = net.cover();
    const auto& tau = net.tau();
    const int partner = net.vertex_partner(vertex);
    for (Dart d : m.vertex_darts(vertex))
        if (m.head_of(d) == partner || m.head_of(d) == vertex)
            throw invalid_move_error("equivariant surrounding at a deck-crossing edge");
    const Dart at_partner = tau[m.vertex_dart(vertex)];
    auto s1 = net_vertex_surround_build(m, vertex);
    auto s2 = net_vertex_surround_build(
        s1.map, s1.map.vertex_of(s1.dart_map[at_partner]));
    auto full = compose_maps(m, s1.dart_map, s2.dart_map);
    auto tau2 = complete_involution(s2.map, transport_tau(tau, full, s2.map.dart_count()));
    return ProjectiveMap(std::move(s2.map), DeckInvolution{std::move(tau2)});
}

namespace {

template <typename Map, typename Contract, typename Remove, typename Member>
std::vector<MoveDescriptor> reductions_impl(const Map& q, const OrientedMap& cover, int n_faces,
                                            const std::vector<int>& face_reps, Contract contract,
                                            Remove remove, Member member) {
    std::vector<MoveDescriptor> out;
    for (int f = 0; f < n_faces; ++f) {
        const auto cy = cover.face_cycle(face_reps[f]);
        for (int offset = 0; offset < 2; ++offset) {
            const Dart d0 = cy[offset];
            const int a = cover.vertex_of(d0), c = cover.vertex_of(cy[offset + 2]);
            if (cover.degree(a) != 3 && cover.degree(c) != 3) continue;  // special only
            if (a == c) continue;
            try {
                if (member(contract(q, d0)))
                    out.push_back({MoveKind::contraction, d0, kNoDart, true});
            } catch (const map_error&) {
            }
        }
    }
    for (int f = 0; f < n_faces; ++f) {
        const Dart d0 = face_reps[f];
        try {
            if (member(remove(q, d0))) out.push_back({MoveKind::removal, d0, kNoDart, false});
        } catch (const map_error&) {
        }
    }
    return out;
}

template <typename Map, typename Split, typename Add, typename Member>
std::vector<MoveDescriptor> expansions_impl(const Map& q, const OrientedMap& cover,
                                            const std::vector<int>& vertex_reps,
                                            const std::vector<int>& face_reps, Split split,
                                            Add add, Member member) {
    std::vector<MoveDescriptor> out;
    for (int v : vertex_reps) {
        const auto ds = cover.vertex_darts(v);
        const int m = static_cast<int>(ds.size());
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const int deg_a = j - i + 1, deg_c = m - (j - i) + 1;
                if (deg_a != 3 && deg_c != 3) continue;  // special splittings only
                try {
                    if (member(split(q, ds[i], ds[j])))
                        out.push_back({MoveKind::splitting, ds[i], ds[j], true});
                } catch (const map_error&) {
                }
            }
        }
    }
    for (int f : face_reps) {
        try {
            if (member(add(q, f))) out.push_back({MoveKind::addition, f, kNoDart, false});
        } catch (const map_error&) {
        }
    }
    return out;
}

}  // namespace

std::vector<MoveDescriptor> legal_reductions(const OrientedMap& q, MapClass cls) {
    if (cls != MapClass::Q) throw invalid_move_error("sphere maps carry class Q");
    if (!is_class_Q(q)) throw invalid_move_error("map is not in class Q");
    std::vector<int> face_reps(q.face_count());
    for (int f = 0; f < q.face_count(); ++f) face_reps[f] = q.face_dart(f);
    return reductions_impl(
        q, q, q.face_count(), face_reps,
        [](const OrientedMap& m, Dart d) { return contract_face(m, d); },
        [](const OrientedMap& m, Dart d) { return remove_face(m, d); },
        [](const OrientedMap& child) { return is_class_Q(child); });
}

std::vector<MoveDescriptor> legal_reductions(const ProjectiveMap& p, MapClass cls) {
    if (cls != MapClass::Qbar) throw invalid_move_error("projective maps carry class Q-bar");
    if (!is_class_Qbar(p)) throw invalid_move_error("map is not in class Q-bar");
    std::vector<int> face_reps(p.face_count());
    for (int f = 0; f < p.face_count(); ++f) face_reps[f] = p.cover().face_dart(p.cover_face(f));
    return reductions_impl(
        p, p.cover(), p.face_count(), face_reps,
        [](const ProjectiveMap& m, Dart d) { return contract_face(m, d); },
        [](const ProjectiveMap& m, Dart d) { return remove_face(m, d); },
        [](const ProjectiveMap& child) { return is_class_Qbar(child); });
}

std::vector<MoveDescriptor> legal_expansions(const OrientedMap& q, MapClass cls) {
    if (cls != MapClass::Q) throw invalid_move_error("sphere maps carry class Q");
    if (!is_class_Q(q)) throw invalid_move_error("map is not in class Q");
    std::vector<int> vertex_reps(q.vertex_count()), face_reps(q.face_count());
    for (int v = 0; v < q.vertex_count(); ++v) vertex_reps[v] = v;
    for (int f = 0; f < q.face_count(); ++f) face_reps[f] = q.face_dart(f);
    return expansions_impl(
        q, q, vertex_reps, face_reps,
        [](const OrientedMap& m, Dart x, Dart y) { return split_vertex(m, x, y); },
        [](const OrientedMap& m, Dart d) { return add_face(m, d); },
        [](const OrientedMap& child) { return is_class_Q(child); });
}

std::vector<MoveDescriptor> legal_expansions(const ProjectiveMap& p, MapClass cls) {
    if (cls != MapClass::Qbar) throw invalid_move_error("projective maps carry class Q-bar");
    if (!is_class_Qbar(p)) throw invalid_move_error("map is not in class Q-bar");
    std::vector<int> vertex_reps(p.vertex_count()), face_reps(p.face_count());
    for (int v = 0; v < p.vertex_count(); ++v) vertex_reps[v] = p.cover_vertex(v);
    for (int f = 0; f < p.face_count(); ++f) face_reps[f] = p.cover().face_dart(p.cover_face(f));
    return expansions_impl(
        p, p.cover(), vertex_reps, face_reps,
        [](const ProjectiveMap& m, Dart x, Dart y) { return split_vertex(m, x, y); },
        [](const ProjectiveMap& m, Dart d) { return add_face(m, d); },
        [](const ProjectiveMap& child) { return is_class_Qbar(child); });
}

QbarContractionCheck qbar_contraction_check(const ProjectiveMap& p, Dart face_dart) {
    const OrientedMap& m = p.cover();
    const auto cy = quad_cycle(m, face_dart, "contraction check");
    const int a = m.vertex_of(cy[0]), b = m.vertex_of(cy[1]);
    const int c = m.vertex_of(cy[2]), d = m.vertex_of(cy[3]);

    QbarContractionCheck res;
    res.special = m.degree(a) == 3 || m.degree(c) == 3;
    if (a != c) {
        try {
            res.cover_contractible = is_class_Q(contract_face(m, face_dart));
        } catch (const map_error&) {
        }
    }
    const int c_prime = p.vertex_partner(c);
    for (int e = 0; e < m.edge_count(); ++e) {
        auto [u, v] = m.edge_endpoints(e);
        if ((u == a && v == c_prime) || (u == c_prime && v == a)) res.edge_a_cprime = true;
    }
    res.b_equals_dprime_deg4 = (b == p.vertex_partner(d)) && m.degree(b) == 4;
    res.predicted_qbar_contractible =
        res.cover_contractible && !res.edge_a_cprime && !res.b_equals_dprime_deg4;
    return res;
}

bool lemma11_guarantees_removable(const ProjectiveMap& p, Dart face_dart) {
    const OrientedMap& m = p.cover();
    const auto cy = m.face_cycle(face_dart);
    if (cy.size() != 4) return false;
    try {
        removal_outgoing(m, cy);
    } catch (const invalid_move_error&) {
        return false;
    }
    // f_0 and its four edge-neighbors, no face the deck image of another.
    std::array<int, 5> faces{};
    faces[0] = m.face_of(face_dart);
    for (int i = 0; i < 4; ++i) faces[i + 1] = m.face_of(m.alpha(cy[i]));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (faces[i] == p.face_partner(faces[j])) return false;
    return true;
}

}  // namespace bnet
