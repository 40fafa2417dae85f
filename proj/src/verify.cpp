#include "bnet/verify.hpp"

#include <algorithm>
#include <random>

#include "bnet/codec.hpp"
#include "bnet/predicates.hpp"

namespace bnet {

namespace {

class Suite {
  public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
            if (result_.notes.size() < 5) result_.notes.push_back(what);
        }
    }

    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

std::string describe(const ProjectiveEntry& e) {
    return "n_check=" + std::to_string(e.map.vertex_count());
}

void sphere_structure(Suite& s, const SphereCensus& census) {
    for (const auto& [size, level] : census.by_size) {
        for (const auto& entry : level) {
            const auto& m = entry.map;
            long degree_sum = 0, face_sum = 0;
            for (int v = 0; v < m.vertex_count(); ++v) degree_sum += m.degree(v);
            for (int f = 0; f < m.face_count(); ++f) face_sum += m.face_degree(f);
            s.check(m.euler_characteristic() == 2, "euler");
            s.check(degree_sum == 2 * m.edge_count(), "vertex degree sum");
            s.check(face_sum == 2 * m.edge_count(), "face degree sum");
            s.check(is_class_Q(m), "census member outside Q");
            s.check(are_isomorphic(m.dual().dual(), m), "dual not involutive");
        }
    }
}

void prop7_suite(Suite& s, const SphereCensus& census) {
    for (const auto& [size, level] : census.by_size) {
        for (const auto& entry : level) {
            const auto& m = entry.map;
            s.check(is_two_cell_embedded(m), "not 2-cell-embedded");
            s.check(is_two_connected(multigraph_of(m)), "not 2-connected");
            s.check(min_edge_cut(m) >= 3, "not 3-edge-connected");
            s.check(is_bipartite(m), "sphere quadrangulation not bipartite");
            const auto net = m.dual();
            s.check(is_simple(net), "dual net not simple");
            s.check(degree_profile(net).is_regular(4), "dual net not 4-regular");
            const int cut = min_edge_cut(net);
            s.check(cut >= 4, "dual net not 4-edge-connected");
            s.check(cut % 2 == 0, "dual net min cut odd");
            s.check(is_basic_net(net), "dual fails basic-net test");
        }
    }
}

void projective_structure(Suite& s, const ProjectiveCensus& census) {
    for (const auto& [size, level] : census.by_size) {
        for (const auto& entry : level) {
            const auto& p = entry.map;
            s.check(p.euler_characteristic() == 1, "quotient euler");
            s.check(p.cover().vertex_count() == 2 * p.vertex_count(), "vertex orbit count");
            s.check(p.cover().edge_count() == 2 * p.edge_count(), "edge orbit count");
            s.check(p.cover().face_count() == 2 * p.face_count(), "face orbit count");
            s.check(is_class_Qbar(p), "census member outside Q-bar");
            const auto [cover, deck] = lift(p);
            s.check(canonical_code_projective(ProjectiveMap(cover, deck)) == entry.code,
                    "lift-quotient round trip");
        }
    }
}

void thm8_suite(Suite& s, const ProjectiveCensus& census) {
    for (const auto& [size, level] : census.by_size) {
        for (const auto& entry : level) {
            const auto& p = entry.map;
            s.check(is_simply_embedded(p), "not simply embedded");
            s.check(is_class_Q(p.cover()), "cover outside Q (Thm 8 (3) <=> (4))");
            const auto net = p.dual();
            bool basic = false;
            try {
                basic = is_basic_net(net);
            } catch (const not_a_net_error&) {
            }
            s.check(basic, "dual fails basic-net test (Thm 8 (2))");
            const int cut = min_edge_cut(quotient_multigraph(net));
            s.check(cut >= 4, "dual net not 4-edge-connected");
            s.check(cut % 2 == 0, "dual net min cut odd (Lemma 6)");
            const bool bip = is_bipartite(p);
            s.check(bip == (homology_class(net) == HomologyClass::trivial),
                    "bipartite tag vs homology class");
        }
    }
}

void theorem9_suite(Suite& s, const SphereCensus& census) {
    for (const auto& [size, level] : census.by_size) {
        for (const auto& entry : level) {
            const auto report = verify_unique_involution(entry.map);
            s.check(report.status != InvolutionReport::Status::fail,
                    "two deck involutions on one cover at " + std::to_string(size));
        }
    }
}

void lemma_suite(Suite& s, const ProjectiveCensus& census, int max_vertices) {
    for (const auto& [size, level] : census.by_size) {
        if (size > max_vertices) continue;
        for (const auto& entry : level) {
            const auto& p = entry.map;
            const auto& cover = p.cover();
            for (int f = 0; f < p.face_count(); ++f) {
                const auto cy = cover.face_darts(p.cover_face(f));
                for (int offset = 0; offset < 2; ++offset) {
                    const auto chk = qbar_contraction_check(p, cy[offset]);
                    if (!chk.cover_contractible) continue;
                    bool applied = false;
                    try {
                        applied = is_class_Qbar(contract_face(p, cy[offset]));
                    } catch (const map_error&) {
                    }
                    s.check(applied == chk.predicted_qbar_contractible,
                            "Lemma 10(b) mismatch at " + describe(entry));
                    if (chk.special)
                        s.check(applied == !chk.edge_a_cprime,
                                "Lemma 10(c) mismatch at " + describe(entry));
                }
                if (lemma11_guarantees_removable(p, cy[0]))
                    s.check(quotient_face_removable(p, cy[0]),
                            "Lemma 11 mismatch at " + describe(entry));
            }
        }
    }
}

void roundtrip_suite(Suite& s, const SphereCensus& sphere, const ProjectiveCensus& projective,
                     unsigned seed, int iterations) {
    std::vector<const SphereEntry*> sphere_pool;
    for (const auto& [size, level] : sphere.by_size)
        for (const auto& entry : level) sphere_pool.push_back(&entry);
    std::vector<const ProjectiveEntry*> projective_pool;
    for (const auto& [size, level] : projective.by_size)
        for (const auto& entry : level) projective_pool.push_back(&entry);

    std::mt19937 rng(seed);
    auto pick = [&rng](auto& pool) { return pool[rng() % pool.size()]; };

    for (int i = 0; i < iterations; ++i) {
        if (i % 2 == 0 && !sphere_pool.empty()) {
            const auto* entry = pick(sphere_pool);
            auto moves = legal_expansions(entry->map, MapClass::Q);
            auto reductions = legal_reductions(entry->map, MapClass::Q);
            moves.insert(moves.end(), reductions.begin(), reductions.end());
            if (moves.empty()) continue;
            const auto& mv = moves[rng() % moves.size()];
            TrackedMove forward = mv.kind == MoveKind::splitting
                                      ? split_vertex_tracked(entry->map, mv.d1, mv.d2)
                                  : mv.kind == MoveKind::addition
                                      ? add_face_tracked(entry->map, mv.d1)
                                  : mv.kind == MoveKind::contraction
                                      ? contract_face_tracked(entry->map, mv.d1)
                                      : remove_face_tracked(entry->map, mv.d1);
            const auto back = apply_move(forward.map, forward.inverse);
            s.check(canonical_code(back) == entry->code, "sphere move round trip");
        } else if (!projective_pool.empty()) {
            const auto* entry = pick(projective_pool);
            auto moves = legal_expansions(entry->map, MapClass::Qbar);
            auto reductions = legal_reductions(entry->map, MapClass::Qbar);
            moves.insert(moves.end(), reductions.begin(), reductions.end());
            if (moves.empty()) continue;
            const auto& mv = moves[rng() % moves.size()];
            TrackedProjectiveMove forward =
                mv.kind == MoveKind::splitting ? split_vertex_tracked(entry->map, mv.d1, mv.d2)
                : mv.kind == MoveKind::addition ? add_face_tracked(entry->map, mv.d1)
                : mv.kind == MoveKind::contraction
                    ? contract_face_tracked(entry->map, mv.d1)
                    : remove_face_tracked(entry->map, mv.d1);
            const auto back = apply_move(forward.map, forward.inverse);
            s.check(canonical_code_projective(back) == entry->code,
                    "projective move round trip");
        }
    }
}

void duality_suite(Suite& s, const SphereCensus& sphere, const ProjectiveCensus& projective,
                   int sphere_limit, int projective_limit) {
    for (const auto& [size, level] : sphere.by_size) {
        if (size > sphere_limit) continue;
        for (const auto& entry : level) {
            const auto& q = entry.map;
            const auto net = q.dual();
            for (const auto& mv : legal_expansions(q, MapClass::Q)) {
                if (mv.kind == MoveKind::splitting) {
                    s.check(are_isomorphic(split_vertex(q, mv.d1, mv.d2).dual(),
                                           net_face_split(net, mv.d1, mv.d2)),
                            "sphere splitting vs net face splitting");
                } else {
                    s.check(are_isomorphic(add_face(q, mv.d1).dual(),
                                           net_vertex_surround(net, q.face_of(mv.d1))),
                            "sphere addition vs net vertex surrounding");
                }
            }
        }
    }
    for (const auto& [size, level] : projective.by_size) {
        if (size > projective_limit) continue;
        for (const auto& entry : level) {
            const auto& p = entry.map;
            const auto net = p.dual();
            for (const auto& mv : legal_expansions(p, MapClass::Qbar)) {
                if (mv.kind == MoveKind::splitting) {
                    s.check(canonical_code_projective(split_vertex(p, mv.d1, mv.d2).dual()) ==
                                canonical_code_projective(net_face_split(net, mv.d1, mv.d2)),
                            "projective splitting vs net face splitting");
                } else {
                    // The dual net's vertex indices coincide with the cover's
                    // face indices (both trace phi orbits in min-dart order).
                    s.check(canonical_code_projective(add_face(p, mv.d1).dual()) ==
                                canonical_code_projective(net_vertex_surround(
                                    net, p.cover().face_of(mv.d1))),
                            "projective addition vs net vertex surrounding");
                }
            }
        }
    }
}

void cross_validation_suite(Suite& s, const SphereCensus& sphere,
                            const ProjectiveCensus& projective, int max_n_check) {
    for (int n_check = 4; n_check <= max_n_check; ++n_check) {
        auto it = sphere.by_size.find(2 * n_check);
        if (it == sphere.by_size.end()) continue;
        std::vector<OrientedMap> covers;
        for (const auto& entry : it->second) covers.push_back(entry.map);
        const auto filtered = filter_pipeline(covers);
        std::vector<CanonicalCode> lhs, rhs;
        for (const auto& e : filtered) lhs.push_back(e.code);
        auto jt = projective.by_size.find(n_check);
        if (jt != projective.by_size.end())
            for (const auto& e : jt->second) rhs.push_back(e.code);
        std::sort(rhs.begin(), rhs.end());
        s.check(lhs == rhs, "filter pipeline vs direct generator at n_check=" +
                                std::to_string(n_check));
    }
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    std::vector<SuiteResult> results;
    const int n_check_max = options.max_crossings + 1;

    const auto sphere = generate_sphere_Q(std::max(8, options.sphere_max_vertices), options.jobs);
    if (options.theorem9_only) {
        Suite s("theorem9");
        theorem9_suite(s, sphere);
        results.push_back(s.take());
        return results;
    }
    const auto projective = generate_projective_Qbar(std::max(4, n_check_max), options.jobs);

    {
        Suite s("sphere-structure");
        sphere_structure(s, sphere);
        results.push_back(s.take());
    }
    {
        Suite s("prop7");
        prop7_suite(s, sphere);
        results.push_back(s.take());
    }
    {
        Suite s("projective-structure");
        projective_structure(s, projective);
        results.push_back(s.take());
    }
    {
        Suite s("thm8");
        thm8_suite(s, projective);
        results.push_back(s.take());
    }
    {
        Suite s("theorem9");
        theorem9_suite(s, sphere);
        results.push_back(s.take());
    }
    {
        Suite s("lemma10-11");
        lemma_suite(s, projective, std::min(n_check_max, 10));
        results.push_back(s.take());
    }
    {
        Suite s("move-roundtrips");
        roundtrip_suite(s, sphere, projective, options.rng_seed, options.random_roundtrips);
        results.push_back(s.take());
    }
    {
        Suite s("duality-transport");
        duality_suite(s, sphere, projective, 9, std::min(n_check_max, 8));
        results.push_back(s.take());
    }
    {
        Suite s("cross-validation");
        cross_validation_suite(s, sphere, projective,
                               std::min({n_check_max, options.sphere_max_vertices / 2, 10}));
        results.push_back(s.take());
    }
    return results;
}

}  // namespace bnet
