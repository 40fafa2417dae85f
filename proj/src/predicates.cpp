#include "bnet/predicates.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace bnet {

Multigraph multigraph_of(const OrientedMap& m) {
    Multigraph g;
    g.n_vertices = m.vertex_count();
    g.edges.reserve(m.edge_count());
    for (int e = 0; e < m.edge_count(); ++e) g.edges.push_back(m.edge_endpoints(e));
    return g;
}

Multigraph quotient_multigraph(const ProjectiveMap& p) {
    Multigraph g;
    g.n_vertices = p.vertex_count();
    g.edges = p.quotient_edges();
    return g;
}

bool DegreeProfile::is_regular(int k) const {
    return !degrees.empty() && degrees.front() == k && degrees.back() == k;
}

DegreeProfile degree_profile(const OrientedMap& m) {
    DegreeProfile out;
    out.degrees.reserve(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) out.degrees.push_back(m.degree(v));
    std::sort(out.degrees.begin(), out.degrees.end());
    out.min_degree = out.degrees.front();
    return out;
}

DegreeProfile degree_profile(const ProjectiveMap& p) {
    DegreeProfile out;
    out.degrees.reserve(p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v) out.degrees.push_back(p.quotient_degree(v));
    std::sort(out.degrees.begin(), out.degrees.end());
    out.min_degree = out.degrees.front();
    return out;
}

bool is_simple(const OrientedMap& m) {
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < m.edge_count(); ++e) {
        auto [u, v] = m.edge_endpoints(e);
        if (u == v) return false;
        if (!seen.insert(std::minmax(u, v)).second) return false;
    }
    return true;
}

bool is_simply_embedded(const ProjectiveMap& p) { return is_simple(p.cover()); }

bool is_quadrangulation(const OrientedMap& m) {
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_degree(f) != 4) return false;
    return true;
}

bool is_quadrangulation(const ProjectiveMap& p) { return is_quadrangulation(p.cover()); }

bool is_bipartite(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.n_vertices);
    for (auto [u, v] : g.edges) {
        if (u == v) return false;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(g.n_vertices, -1);
    for (int s = 0; s < g.n_vertices; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_bipartite(const OrientedMap& m) { return is_bipartite(multigraph_of(m)); }
bool is_bipartite(const ProjectiveMap& p) { return is_bipartite(quotient_multigraph(p)); }

namespace {

// Unit-capacity max-flow (Edmonds-Karp), undirected edges as arc pairs.
struct FlowNet {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> at;

    explicit FlowNet(const Multigraph& g) : at(g.n_vertices) {
        for (auto [u, v] : g.edges) {
            if (u == v) continue;  // loops never separate
            at[u].push_back(static_cast<int>(arcs.size()));
            arcs.push_back({v, 1});
            at[v].push_back(static_cast<int>(arcs.size()));
            arcs.push_back({u, 1});
        }
    }

    int max_flow(int s, int t) {
        std::vector<int> saved;
        saved.reserve(arcs.size());
        for (const Arc& a : arcs) saved.push_back(a.cap);
        int flow = 0;
        while (true) {
            std::vector<int> via(at.size(), -1);
            std::queue<int> q;
            q.push(s);
            via[s] = -2;
            while (!q.empty() && via[t] == -1) {
                int u = q.front();
                q.pop();
                for (int id : at[u]) {
                    if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
                        via[arcs[id].to] = id;
                        q.push(arcs[id].to);
                    }
                }
            }
            if (via[t] == -1) break;
            for (int v = t; v != s;) {
                int id = via[v];
                --arcs[id].cap;
                ++arcs[id ^ 1].cap;
                v = arcs[id ^ 1].to;
            }
            ++flow;
        }
        for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].cap = saved[i];
        return flow;
    }
};

}  // namespace

int min_edge_cut(const Multigraph& g) {
    if (g.n_vertices < 2) return std::numeric_limits<int>::max();
    FlowNet net(g);
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < g.n_vertices && best > 0; ++t) best = std::min(best, net.max_flow(0, t));
    return best;
}

int min_edge_cut(const OrientedMap& m) { return min_edge_cut(multigraph_of(m)); }

bool is_two_cell_embedded(const OrientedMap& m) {
    for (int f = 0; f < m.face_count(); ++f) {
        const auto cycle = m.face_darts(f);
        std::set<int> edges, corners;
        for (Dart d : cycle) {
            if (!edges.insert(m.edge_of(d)).second) return false;
            if (!corners.insert(m.vertex_of(d)).second) return false;
        }
    }
    return true;
}

bool is_two_connected(const Multigraph& g) {
    if (g.n_vertices < 3) return false;
    std::vector<std::vector<int>> adj(g.n_vertices);
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto connected_without = [&](int skip) {
        int start = skip == 0 ? 1 : 0;
        std::vector<char> seen(g.n_vertices, 0);
        seen[start] = 1;
        std::vector<int> stack{start};
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (v != skip && !seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        return reached == g.n_vertices - (skip >= 0 ? 1 : 0);
    };
    if (!connected_without(-1)) return false;
    for (int v = 0; v < g.n_vertices; ++v)
        if (!connected_without(v)) return false;
    return true;
}

bool is_class_Q(const OrientedMap& m) {
    return is_quadrangulation(m) && degree_profile(m).min_degree >= 3 && is_simple(m);
}

bool is_class_Qbar(const ProjectiveMap& p) { return is_class_Q(p.cover()); }

namespace {

bool is_figure_eight_pattern(const OrientedMap& m) {
    // One vertex, two loops; chi = 2 already forces the generic-immersion
    // rotation, so the pattern is the basic net 1*.
    if (m.vertex_count() != 1 || m.edge_count() != 2) return false;
    for (int e = 0; e < m.edge_count(); ++e) {
        auto [u, v] = m.edge_endpoints(e);
        if (u != v) return false;
    }
    return true;
}

bool is_two_pseudolines_pattern(const ProjectiveMap& p) {
    // One quotient vertex, two quotient loop-edges: the net g^1.
    if (p.vertex_count() != 1 || p.edge_count() != 2) return false;
    for (auto [u, v] : p.quotient_edges())
        if (u != v) return false;
    return true;
}

}  // namespace

bool is_basic_net(const OrientedMap& m) {
    if (is_figure_eight_pattern(m)) return true;
    if (!degree_profile(m).is_regular(4))
        throw not_a_net_error("not 4-regular and not an exceptional net");
    return is_simple(m) && min_edge_cut(m) >= 4;
}

bool is_basic_net(const ProjectiveMap& p) {
    if (is_two_pseudolines_pattern(p)) return true;
    if (!degree_profile(p).is_regular(4))
        throw not_a_net_error("not 4-regular and not an exceptional net");
    if (!is_simply_embedded(p)) return false;
    if (min_edge_cut(quotient_multigraph(p)) < 4) return false;
    // Dual loop-free: no edge orbit has the same quotient face on both sides.
    const auto& cover = p.cover();
    for (int qe = 0; qe < p.edge_count(); ++qe) {
        Dart d = cover.edge_dart(p.cover_edge(qe));
        int f1 = p.quotient_face(cover.face_of(d));
        int f2 = p.quotient_face(cover.face_of(cover.alpha(d)));
        if (f1 == f2) return false;
    }
    return true;
}

HomologyClass homology_class(const ProjectiveMap& net) {
    return is_bipartite(net.dual()) ? HomologyClass::trivial : HomologyClass::nontrivial;
}

}  // namespace bnet
