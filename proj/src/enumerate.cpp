#include "bnet/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "bnet/predicates.hpp"

namespace bnet {

namespace {

// Dart-level involution induced by a vertex involution of a simple map.
std::vector<Dart> involution_from_vertex_map(const OrientedMap& m, const std::vector<int>& mu) {
    std::vector<Dart> tau(m.dart_count(), kNoDart);
    for (Dart d = 0; d < m.dart_count(); ++d) {
        const int u = mu[m.vertex_of(d)], w = mu[m.head_of(d)];
        Dart image = kNoDart;
        for (Dart e : m.vertex_darts(u)) {
            if (m.head_of(e) == w) {
                if (image != kNoDart)
                    throw invalid_involution_error("vertex involution ambiguous on a multigraph");
                image = e;
            }
        }
        if (image == kNoDart) throw invalid_involution_error("vertex map is not an automorphism");
        tau[d] = image;
    }
    return tau;
}

}  // namespace

OrientedMap pseudo_double_wheel(int n) {
    if (n < 3) throw std::invalid_argument("pseudo_double_wheel needs n >= 3");
    // Vertices: hub A = 0 (even rims), hub B = 1 (odd rims), rims 2..2n+1.
    // Edges: cycle c_i = i (rim i to rim i+1), spokes s_i = 2n + i.
    const int rims = 2 * n;
    std::vector<std::vector<int>> rot(2 + rims);
    for (int i = 0; i < rims; i += 2) rot[0].push_back(rims + i);
    for (int i = rims - 1; i >= 1; i -= 2) rot[1].push_back(rims + i);
    for (int i = 0; i < rims; ++i) {
        const int east = i, west = (i + rims - 1) % rims, spoke = rims + i;
        if (i % 2 == 0)
            rot[2 + i] = {east, spoke, west};
        else
            rot[2 + i] = {east, west, spoke};
    }
    return OrientedMap::from_edge_rotations(rot);
}

ProjectiveMap moebius_wheel(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("moebius_wheel needs odd n >= 3");
    const OrientedMap cover = pseudo_double_wheel(n);
    std::vector<int> mu(cover.vertex_count());
    mu[0] = 1;
    mu[1] = 0;
    for (int i = 0; i < 2 * n; ++i) mu[2 + i] = 2 + (i + n) % (2 * n);
    return ProjectiveMap(cover, DeckInvolution{involution_from_vertex_map(cover, mu)});
}

ProjectiveMap exceptional_seed_g52() {
    // Non-contractible 2-cycle on RP^2: covered by the 4-cycle with the
    // antipodal involution.
    std::vector<std::vector<int>> rot{{0, 3}, {1, 0}, {2, 1}, {3, 2}};
    const OrientedMap square = OrientedMap::from_edge_rotations(rot);
    const std::vector<int> mu{2, 3, 0, 1};
    ProjectiveMap two_cycle(square, DeckInvolution{involution_from_vertex_map(square, mu)});
    return add_face(two_cycle, two_cycle.cover().face_dart(two_cycle.cover_face(0)));
}

int SphereCensus::count_at(int vertices) const {
    auto it = by_size.find(vertices);
    return it == by_size.end() ? 0 : static_cast<int>(it->second.size());
}

long SphereCensus::total() const {
    long t = 0;
    for (const auto& [size, level] : by_size) t += static_cast<long>(level.size());
    return t;
}

int ProjectiveCensus::count_at(int vertices) const {
    auto it = by_size.find(vertices);
    return it == by_size.end() ? 0 : static_cast<int>(it->second.size());
}

int ProjectiveCensus::bipartite_count_at(int vertices) const {
    auto it = by_size.find(vertices);
    if (it == by_size.end()) return 0;
    int count = 0;
    for (const auto& entry : it->second)
        if (is_bipartite(entry.map)) ++count;
    return count;
}

long ProjectiveCensus::total() const {
    long t = 0;
    for (const auto& [size, level] : by_size) t += static_cast<long>(level.size());
    return t;
}

namespace {

// Levelized closure with a global canonical-code store. Children of one
// size bucket may be produced by several workers; results are merged and
// sorted so the census is identical for any job count.
template <typename Entry, typename Map>
class Closure {
  public:
    using ExpandFn = std::vector<std::pair<int, Map>> (*)(const Map&, int);
    using CodeFn = CanonicalCode (*)(const Map&);

    Closure(int max_size, int jobs, ExpandFn expand, CodeFn code)
        : max_size_(max_size), jobs_(std::max(1, jobs)), expand_(expand), code_(code) {}

    void seed(const Map& m, int size) {
        if (size > max_size_) return;
        insert(size, code_(m), m);
    }

    std::map<int, std::vector<Entry>> run() {
        for (int size = 0; size <= max_size_; ++size) {
            auto it = levels_.find(size);
            if (it == levels_.end()) continue;
            auto& level = it->second;
            std::sort(level.begin(), level.end(),
                      [](const Entry& a, const Entry& b) { return a.code < b.code; });
            expand_level(level);
        }
        return std::move(levels_);
    }

  private:
    void expand_level(const std::vector<Entry>& level) {
        std::vector<std::vector<std::pair<int, Map>>> produced(level.size());
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                produced[i] = expand_(level[i].map, max_size_);
        };
        if (jobs_ == 1 || level.size() < 2) {
            work(0, level.size());
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (level.size() + jobs_ - 1) / jobs_;
            for (std::size_t b = 0; b < level.size(); b += chunk)
                pool.emplace_back(work, b, std::min(b + chunk, level.size()));
            for (auto& t : pool) t.join();
        }
        for (auto& children : produced)
            for (auto& [size, child] : children) insert(size, code_(child), child);
    }

    void insert(int size, CanonicalCode code, const Map& m) {
        if (!seen_.insert(code).second) return;
        levels_[size].push_back(Entry{std::move(code), m});
    }

    int max_size_;
    int jobs_;
    ExpandFn expand_;
    CodeFn code_;
    std::map<int, std::vector<Entry>> levels_;
    std::unordered_set<CanonicalCode> seen_;
};

std::vector<std::pair<int, OrientedMap>> expand_sphere(const OrientedMap& q, int max_size) {
    std::vector<std::pair<int, OrientedMap>> out;
    const int v = q.vertex_count();
    for (const auto& move : legal_expansions(q, MapClass::Q)) {
        const int child_size = v + (move.kind == MoveKind::splitting ? 1 : 4);
        if (child_size > max_size) continue;
        out.emplace_back(child_size, apply_move(q, move));
    }
    return out;
}

std::vector<std::pair<int, ProjectiveMap>> expand_projective(const ProjectiveMap& p,
                                                             int max_size) {
    std::vector<std::pair<int, ProjectiveMap>> out;
    const int v = p.vertex_count();
    for (const auto& move : legal_expansions(p, MapClass::Qbar)) {
        const int child_size = v + (move.kind == MoveKind::splitting ? 1 : 4);
        if (child_size > max_size) continue;
        out.emplace_back(child_size, apply_move(p, move));
    }
    return out;
}

}  // namespace

SphereCensus generate_sphere_Q(int max_vertices, int jobs) {
    if (max_vertices < 8) throw std::invalid_argument("sphere census needs max_vertices >= 8");
    Closure<SphereEntry, OrientedMap> closure(max_vertices, jobs, &expand_sphere,
                                              &canonical_code);
    for (int n = 3; 2 * n + 2 <= max_vertices; ++n)
        closure.seed(pseudo_double_wheel(n), 2 * n + 2);
    SphereCensus census;
    census.by_size = closure.run();
    return census;
}

ProjectiveCensus generate_projective_Qbar(int max_vertices, int jobs) {
    if (max_vertices < 4)
        throw std::invalid_argument("projective census needs max_vertices >= 4");
    Closure<ProjectiveEntry, ProjectiveMap> closure(max_vertices, jobs, &expand_projective,
                                                    &canonical_code_projective);
    for (int n = 3; n + 1 <= max_vertices; n += 2) closure.seed(moebius_wheel(n), n + 1);
    if (max_vertices >= 6) closure.seed(exceptional_seed_g52(), 6);
    ProjectiveCensus census;
    census.by_size = closure.run();
    return census;
}

std::optional<ProjectiveMap> projective_quotient_of(const OrientedMap& m) {
    auto involutions = find_quotient_involutions(m);
    if (involutions.empty()) return std::nullopt;
    return ProjectiveMap(m, involutions.front());
}

std::vector<ProjectiveEntry> filter_pipeline(const std::vector<OrientedMap>& maps) {
    std::vector<ProjectiveEntry> out;
    std::unordered_set<CanonicalCode> seen;
    for (const auto& m : maps) {
        for (const auto& inv : find_quotient_involutions(m)) {
            ProjectiveMap p(m, inv);
            auto code = canonical_code_projective(p);
            if (seen.insert(code).second) out.push_back({std::move(code), std::move(p)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ProjectiveEntry& a, const ProjectiveEntry& b) { return a.code < b.code; });
    return out;
}

std::vector<SphereEntry> minimal_members_Q(const SphereCensus& census) {
    std::vector<SphereEntry> out;
    for (const auto& [size, level] : census.by_size)
        for (const auto& entry : level)
            if (legal_reductions(entry.map, MapClass::Q).empty()) out.push_back(entry);
    return out;
}

std::vector<ProjectiveEntry> minimal_members_Qbar(const ProjectiveCensus& census) {
    std::vector<ProjectiveEntry> out;
    for (const auto& [size, level] : census.by_size)
        for (const auto& entry : level)
            if (legal_reductions(entry.map, MapClass::Qbar).empty()) out.push_back(entry);
    return out;
}

const std::vector<ExceptionalNet>& exceptional_sphere_nets() {
    static const std::vector<ExceptionalNet> nets{
        {"0*", "embedded circle", 0, false},
        {"1*", "figure-eight curve", 1, false},
    };
    return nets;
}

const std::vector<ExceptionalNet>& exceptional_projective_nets() {
    static const std::vector<ExceptionalNet> nets{
        {"g0", "pseudoline", 0, false},
        {"g1", "two crossing pseudolines", 1, true},
    };
    return nets;
}

std::vector<CountRow> count_table(int max_n, int sphere_cap_vertices, int jobs) {
    if (max_n < 3) throw std::invalid_argument("count_table needs max_n >= 3");
    std::vector<CountRow> rows;
    // Exceptional rows: net counts per surface for n < 3 crossings.
    for (int n = 0; n < 3; ++n) {
        CountRow row;
        row.n = n;
        row.n_check = n + 1;
        for (const auto& net : exceptional_projective_nets()) {
            if (net.crossings == n) {
                row.qbar += 1;
                if (net.homologically_trivial) row.qbar_bip += 1;
            }
        }
        long sphere = 0;
        for (const auto& net : exceptional_sphere_nets())
            if (net.crossings == n) sphere += 1;
        row.q_class_Q = sphere;
        rows.push_back(row);
    }

    const auto projective = generate_projective_Qbar(max_n + 1, jobs);
    SphereCensus sphere;
    const int sphere_max = std::min(2 * (max_n + 1), sphere_cap_vertices);
    if (sphere_max >= 8) sphere = generate_sphere_Q(sphere_max, jobs);

    for (int n = 3; n <= max_n; ++n) {
        CountRow row;
        row.n = n;
        row.n_check = n + 1;
        row.qbar = projective.count_at(row.n_check);
        row.qbar_bip = projective.bipartite_count_at(row.n_check);
        if (2 * row.n_check <= sphere_max) row.q_class_Q = sphere.count_at(2 * row.n_check);
        rows.push_back(row);
    }
    return rows;
}

GenerationDag generation_dag(int max_n, int jobs) {
    if (max_n < 5) throw std::invalid_argument("generation_dag needs max_n >= 5");
    GenerationDag dag;
    dag.census = generate_projective_Qbar(max_n + 1, jobs);
    for (const auto& [size, level] : dag.census.by_size) {
        for (const auto& entry : level) {
            // Multiplicity: distinct sites (up to deck action) per child code.
            std::map<std::pair<CanonicalCode, MoveKind>, int> counts;
            for (const auto& move : legal_expansions(entry.map, MapClass::Qbar)) {
                const int child_size = size + (move.kind == MoveKind::splitting ? 1 : 4);
                if (child_size > max_n + 1) continue;
                auto child = apply_move(entry.map, move);
                counts[{canonical_code_projective(child), move.kind}] += 1;
            }
            for (const auto& [key, multiplicity] : counts)
                dag.records.push_back({entry.code, key.first, key.second, multiplicity});
        }
    }
    return dag;
}

}  // namespace bnet
