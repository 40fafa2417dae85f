#include "bnet/projective.hpp"

#include <algorithm>

namespace bnet {

namespace {

// Orbit pairing of a fixed-point-free cell involution; returns false on a
// fixed cell.
bool pair_orbits(const std::vector<int>& partner, std::vector<int>& q_of, std::vector<int>& rep) {
    const int n = static_cast<int>(partner.size());
    q_of.assign(n, -1);
    rep.clear();
    for (int i = 0; i < n; ++i) {
        if (q_of[i] >= 0) continue;
        if (partner[i] == i) return false;
        const int id = static_cast<int>(rep.size());
        q_of[i] = q_of[partner[i]] = id;
        rep.push_back(i);
    }
    return true;
}

}  // namespace

void validate_deck_involution(const OrientedMap& m, const std::vector<Dart>& tau) {
    const int n = m.dart_count();
    if (static_cast<int>(tau.size()) != n)
        throw invalid_involution_error("tau size mismatch");
    for (Dart d = 0; d < n; ++d) {
        if (tau[d] < 0 || tau[d] >= n) throw invalid_involution_error("tau image out of range");
        if (tau[d] == d) throw invalid_involution_error("tau fixes a dart");
        if (tau[tau[d]] != d) throw invalid_involution_error("tau is not an involution");
        if (tau[d] == m.alpha(d)) throw invalid_involution_error("tau fixes an edge");
        if (tau[m.alpha(d)] != m.alpha(tau[d]))
            throw invalid_involution_error("tau does not commute with alpha");
        if (tau[m.sigma(d)] != m.sigma_inv(tau[d]))
            throw invalid_involution_error("tau does not reverse orientation");
    }
    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.vertex_of(tau[m.vertex_dart(v)]) == v)
            throw invalid_involution_error("tau fixes a vertex");
    // Deck image of a face: the face containing tau(alpha(d)) for d in it.
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_of(tau[m.alpha(m.face_dart(f))]) == f)
            throw invalid_involution_error("tau fixes a face");
}

bool is_deck_involution(const OrientedMap& m, const std::vector<Dart>& tau) {
    try {
        validate_deck_involution(m, tau);
        return true;
    } catch (const invalid_involution_error&) {
        return false;
    }
}

std::vector<DeckInvolution> find_quotient_involutions(const OrientedMap& m) {
    const int n = m.dart_count();
    std::vector<DeckInvolution> out;
    std::vector<Dart> tau(n), stack;
    for (Dart image = 0; image < n; ++image) {
        tau.assign(n, kNoDart);
        tau[0] = image;
        stack.assign(1, 0);
        bool ok = true;
        while (ok && !stack.empty()) {
            const Dart d = stack.back();
            stack.pop_back();
            const Dart pairs[2][2] = {{m.sigma(d), m.sigma_inv(tau[d])},
                                      {m.alpha(d), m.alpha(tau[d])}};
            for (const auto& pr : pairs) {
                if (tau[pr[0]] == kNoDart) {
                    tau[pr[0]] = pr[1];
                    stack.push_back(pr[0]);
                } else if (tau[pr[0]] != pr[1]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && is_deck_involution(m, tau)) out.push_back(DeckInvolution{tau});
    }
    return out;
}

ProjectiveMap::ProjectiveMap(OrientedMap cover, DeckInvolution deck)
    : cover_(std::move(cover)), deck_(std::move(deck)) {
    validate_deck_involution(cover_, deck_.tau);
    const auto& tau = deck_.tau;

    vertex_partner_.resize(cover_.vertex_count());
    for (int v = 0; v < cover_.vertex_count(); ++v)
        vertex_partner_[v] = cover_.vertex_of(tau[cover_.vertex_dart(v)]);
    edge_partner_.resize(cover_.edge_count());
    for (int e = 0; e < cover_.edge_count(); ++e)
        edge_partner_[e] = cover_.edge_of(tau[cover_.edge_dart(e)]);
    face_partner_.resize(cover_.face_count());
    for (int f = 0; f < cover_.face_count(); ++f)
        face_partner_[f] = cover_.face_of(tau[cover_.alpha(cover_.face_dart(f))]);

    // Fixed cells were rejected by validation, so all pairings succeed.
    pair_orbits(vertex_partner_, q_vertex_of_, q_vertex_rep_);
    pair_orbits(edge_partner_, q_edge_of_, q_edge_rep_);
    pair_orbits(face_partner_, q_face_of_, q_face_rep_);

    for (int v = 0; v < vertex_count(); ++v)
        if (quotient_degree(v) == 2) has_degree_two_ = true;
}

std::vector<std::pair<int, int>> ProjectiveMap::quotient_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int qe = 0; qe < edge_count(); ++qe) {
        auto [u, v] = cover_.edge_endpoints(q_edge_rep_[qe]);
        out.emplace_back(q_vertex_of_[u], q_vertex_of_[v]);
    }
    return out;
}

ProjectiveMap ProjectiveMap::dual() const {
    // tau . alpha commutes with alpha and anti-commutes with phi, so it is
    // the deck involution of the dual cover.
    std::vector<Dart> dual_tau(cover_.dart_count());
    for (Dart d = 0; d < cover_.dart_count(); ++d) dual_tau[d] = deck_.tau[cover_.alpha(d)];
    return ProjectiveMap(cover_.dual(), DeckInvolution{std::move(dual_tau)});
}

ProjectiveMap quotient(const OrientedMap& m, const DeckInvolution& inv) {
    return ProjectiveMap(m, inv);
}

std::pair<const OrientedMap&, const DeckInvolution&> lift(const ProjectiveMap& p) {
    return {p.cover(), p.deck()};
}

CanonicalCode canonical_code_projective(const ProjectiveMap& p) {
    return canonical_code_paired(p.cover(), p.tau());
}

InvolutionReport verify_unique_involution(const OrientedMap& m) {
    InvolutionReport report;
    report.found = find_quotient_involutions(m);
    bool hypothesis_ok = true;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.degree(v) == 2) hypothesis_ok = false;
    if (!hypothesis_ok)
        report.status = InvolutionReport::Status::inconclusive;
    else
        report.status = report.found.size() <= 1 ? InvolutionReport::Status::pass
                                                 : InvolutionReport::Status::fail;
    return report;
}

}  // namespace bnet
