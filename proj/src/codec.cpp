#include "bnet/codec.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "bnet/predicates.hpp"

namespace bnet {

namespace {

char vertex_letter(int v) {
    if (v < 26) return static_cast<char>('a' + v);
    if (v < 52) return static_cast<char>('A' + v - 26);
    throw codec_error("more than 52 vertices");
}

int letter_vertex(char c, int n, std::size_t pos) {
    int v;
    if (c >= 'a' && c <= 'z') v = c - 'a';
    else if (c >= 'A' && c <= 'Z') v = 26 + (c - 'A');
    else throw codec_error("bad vertex letter at position " + std::to_string(pos));
    if (v >= n)
        throw codec_error("vertex letter '" + std::string(1, c) + "' out of range at position " +
                          std::to_string(pos));
    return v;
}

// Canonical presentation shared by the text and binary emitters: vertices
// ordered by their first canonical dart, rotations started at it and read
// in the canonical direction.
struct Presentation {
    std::vector<int> order;         // presentation index -> map vertex
    std::vector<int> index_of;      // map vertex -> presentation index
    std::vector<std::vector<int>> lists;  // neighbor lists in presentation ids
};

Presentation present(const OrientedMap& m, const CanonicalLabeling& labeling) {
    if (!is_simple(m)) throw codec_error("codec requires a simple map");
    const int n = m.vertex_count();
    std::vector<std::pair<int, Dart>> first(n, {-1, kNoDart});
    for (Dart d = 0; d < m.dart_count(); ++d) {
        const int v = m.vertex_of(d);
        if (first[v].first < 0 || labeling.label_of[d] < first[v].first)
            first[v] = {labeling.label_of[d], d};
    }
    Presentation p;
    p.order.resize(n);
    for (int v = 0; v < n; ++v) p.order[v] = v;
    std::sort(p.order.begin(), p.order.end(),
              [&](int a, int b) { return first[a].first < first[b].first; });
    p.index_of.assign(n, -1);
    for (int i = 0; i < n; ++i) p.index_of[p.order[i]] = i;
    p.lists.resize(n);
    for (int i = 0; i < n; ++i) {
        const int v = p.order[i];
        Dart d = first[v].second;
        for (int k = 0; k < m.degree(v); ++k) {
            p.lists[i].push_back(p.index_of[m.head_of(d)]);
            d = labeling.reflected ? m.sigma_inv(d) : m.sigma(d);
        }
    }
    return p;
}

}  // namespace

std::string emit_ascii(const OrientedMap& m) {
    const auto p = present(m, canonical_labeling(m));
    std::string out = std::to_string(m.vertex_count()) + " ";
    for (std::size_t i = 0; i < p.lists.size(); ++i) {
        if (i) out += ',';
        for (int w : p.lists[i]) out += vertex_letter(w);
    }
    return out;
}

OrientedMap parse_ascii(const std::string& line) {
    std::istringstream in(line);
    int n = 0;
    if (!(in >> n) || n <= 0) throw codec_error("missing vertex count");
    std::string rest;
    std::getline(in, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());

    std::vector<std::vector<int>> lists(1);
    std::size_t pos = line.size() - rest.size();
    for (char c : rest) {
        if (c == ',') lists.emplace_back();
        else lists.back().push_back(letter_vertex(c, n, pos));
        ++pos;
    }
    if (static_cast<int>(lists.size()) != n)
        throw codec_error("expected " + std::to_string(n) + " rotation lists, found " +
                          std::to_string(lists.size()));
    // Symmetric adjacency before handing to the map builder.
    for (int v = 0; v < n; ++v)
        for (int w : lists[v])
            if (std::count(lists[w].begin(), lists[w].end(), v) !=
                std::count(lists[v].begin(), lists[v].end(), w))
                throw codec_error("non-symmetric adjacency between " +
                                  std::string(1, vertex_letter(v)) + " and " +
                                  std::string(1, vertex_letter(w)));
    try {
        return OrientedMap::from_neighbor_lists(lists);
    } catch (const map_error& e) {
        throw codec_error(std::string("bad map: ") + e.what());
    }
}

std::string emit_planar_code(const std::vector<OrientedMap>& maps, bool header) {
    std::string out;
    if (header) out = ">>planar_code<<";
    for (const auto& m : maps) {
        if (m.vertex_count() > 255) throw codec_error("planar_code limits maps to 255 vertices");
        const auto p = present(m, canonical_labeling(m));
        out += static_cast<char>(m.vertex_count());
        for (const auto& list : p.lists) {
            for (int w : list) out += static_cast<char>(w + 1);
            out += '\0';
        }
    }
    return out;
}

std::optional<std::vector<std::vector<int>>> PlanarCodeReader::next() {
    if (at_start_) {
        at_start_ = false;
        if (in_.peek() == '>') {
            std::string head;
            for (int i = 0; i < 15 && in_.good(); ++i) {
                head += static_cast<char>(in_.get());
                ++offset_;
            }
            if (head != ">>planar_code<<")
                throw codec_error("unrecognized header at byte 0: " + head);
        }
    }
    const int first = in_.get();
    if (first == EOF) return std::nullopt;
    ++offset_;
    const int n = first & 0xff;
    if (n == 0) throw codec_error("zero vertex count at byte " + std::to_string(offset_ - 1));
    std::vector<std::vector<int>> lists(n);
    for (int v = 0; v < n; ++v) {
        while (true) {
            const int b = in_.get();
            if (b == EOF)
                throw codec_error("truncated record at byte " + std::to_string(offset_));
            ++offset_;
            const int w = b & 0xff;
            if (w == 0) break;
            if (w > n)
                throw codec_error("neighbor index " + std::to_string(w) +
                                  " out of range at byte " + std::to_string(offset_ - 1));
            lists[v].push_back(w - 1);
        }
    }
    return lists;
}

std::vector<OrientedMap> parse_planar_code(const std::string& bytes) {
    std::istringstream in(bytes, std::ios::binary);
    PlanarCodeReader reader(in);
    std::vector<OrientedMap> out;
    while (auto lists = reader.next()) {
        try {
            out.push_back(OrientedMap::from_neighbor_lists(*lists));
        } catch (const map_error& e) {
            throw codec_error("bad map near byte " + std::to_string(reader.offset()) + ": " +
                              e.what());
        }
    }
    return out;
}

std::string emit_quotient_ascii(const ProjectiveMap& p) {
    const OrientedMap& m = p.cover();
    if (m.vertex_count() > 52) throw codec_error("quotient ascii limits covers to 52 vertices");
    const auto labeling = canonical_labeling_paired(m, p.tau());
    const int n = m.vertex_count(), k = n / 2;

    std::vector<int> first(n, -1);
    for (Dart d = 0; d < m.dart_count(); ++d) {
        const int v = m.vertex_of(d);
        if (first[v] < 0 || labeling.label_of[d] < first[v]) first[v] = labeling.label_of[d];
    }
    // One lowercase representative per deck orbit, ordered canonically.
    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
        if (first[v] < first[p.vertex_partner(v)]) reps.push_back(v);
    std::sort(reps.begin(), reps.end(), [&](int a, int b) { return first[a] < first[b]; });

    std::vector<int> letter_of(n, -1);  // 0..k-1 lowercase, k..2k-1 uppercase
    for (int i = 0; i < k; ++i) {
        letter_of[reps[i]] = i;
        letter_of[p.vertex_partner(reps[i])] = k + i;
    }

    std::string out = std::to_string(k) + " ";
    for (int i = 0; i < k; ++i) {
        if (i) out += ',';
        const int v = reps[i];
        Dart start = kNoDart;
        for (Dart d : m.vertex_darts(v))
            if (start == kNoDart || labeling.label_of[d] < labeling.label_of[start]) start = d;
        Dart d = start;
        for (int a = 0; a < m.degree(v); ++a) {
            const int w = letter_of[m.head_of(d)];
            out += w < k ? static_cast<char>('a' + w) : static_cast<char>('A' + w - k);
            d = labeling.reflected ? m.sigma_inv(d) : m.sigma(d);
        }
    }
    return out;
}

ProjectiveMap parse_quotient_ascii(const std::string& line) {
    std::istringstream in(line);
    int k = 0;
    if (!(in >> k) || k <= 0) throw codec_error("missing vertex count");
    if (k > 26) throw codec_error("quotient ascii limits quotients to 26 vertices");
    std::string rest;
    std::getline(in, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());

    // Lowercase vertex i is cover vertex i, its deck image is k + i.
    std::vector<std::vector<int>> lists(2 * k);
    int current = 0;
    std::size_t pos = line.size() - rest.size();
    for (char c : rest) {
        if (c == ',') {
            if (++current >= k) throw codec_error("more rotation lists than vertices");
        } else if (c >= 'a' && c <= 'z' && c - 'a' < k) {
            lists[current].push_back(c - 'a');
        } else if (c >= 'A' && c <= 'Z' && c - 'A' < k) {
            lists[current].push_back(k + (c - 'A'));
        } else {
            throw codec_error("bad vertex letter at position " + std::to_string(pos));
        }
        ++pos;
    }
    if (current + 1 != k)
        throw codec_error("expected " + std::to_string(k) + " rotation lists, found " +
                          std::to_string(current + 1));

    // The involution maps rotations to reversed, case-swapped rotations.
    auto swap_vertex = [k](int v) { return v < k ? v + k : v - k; };
    for (int i = 0; i < k; ++i) {
        lists[k + i].resize(lists[i].size());
        std::transform(lists[i].rbegin(), lists[i].rend(), lists[k + i].begin(), swap_vertex);
    }

    OrientedMap cover = [&] {
        try {
            return OrientedMap::from_neighbor_lists(lists);
        } catch (const map_error& e) {
            throw codec_error(std::string("bad cover: ") + e.what());
        }
    }();

    std::vector<Dart> tau(cover.dart_count(), kNoDart);
    for (Dart d = 0; d < cover.dart_count(); ++d) {
        const int u = swap_vertex(cover.vertex_of(d)), w = swap_vertex(cover.head_of(d));
        for (Dart e : cover.vertex_darts(u))
            if (cover.head_of(e) == w) tau[d] = e;
    }
    try {
        return ProjectiveMap(std::move(cover), DeckInvolution{std::move(tau)});
    } catch (const map_error& e) {
        throw codec_error(std::string("involution invalid on reconstruction: ") + e.what());
    }
}

std::string emit_count_csv(const std::vector<CountRow>& rows) {
    std::string out = "n,n_check,qbar,qbar_bip,qQ\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.n_check) + ',' +
               std::to_string(row.qbar) + ',' + std::to_string(row.qbar_bip) + ',';
        if (row.q_class_Q) out += std::to_string(*row.q_class_Q);
        out += '\n';
    }
    return out;
}

}  // namespace bnet
