#include "bnet/canonical.hpp"

#include <cstdint>
#include <cstring>

namespace bnet {

namespace {

// One BFS relabeling attempt. Emits per visited dart the labels of its
// sigma-image (or sigma^-1 when reflected), alpha-image, and optionally
// tau-image, comparing against the incumbent best as it goes.
// Returns -1/0/+1 like a three-way compare against best.
int encode_attempt(const OrientedMap& m, const std::vector<Dart>* tau, Dart root, bool reflected,
                   std::vector<int>& label, std::vector<Dart>& order, std::vector<std::uint16_t>& out,
                   const std::vector<std::uint16_t>& best) {
    const int n = m.dart_count();
    label.assign(n, -1);
    order.clear();
    out.clear();
    label[root] = 0;
    order.push_back(root);
    int cmp = best.empty() ? -1 : 0;  // no incumbent: always a win
    std::size_t pos = 0;
    auto visit = [&](Dart e) {
        if (label[e] < 0) {
            label[e] = static_cast<int>(order.size());
            order.push_back(e);
        }
        return static_cast<std::uint16_t>(label[e]);
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Dart d = order[i];
        std::uint16_t entry[3];
        int k = 0;
        entry[k++] = visit(reflected ? m.sigma_inv(d) : m.sigma(d));
        entry[k++] = visit(m.alpha(d));
        if (tau) entry[k++] = visit((*tau)[d]);
        for (int j = 0; j < k; ++j, ++pos) {
            out.push_back(entry[j]);
            if (cmp == 0) {
                if (entry[j] < best[pos]) cmp = -1;
                else if (entry[j] > best[pos]) return +1;
            }
        }
    }
    return cmp;
}

struct Canonicalized {
    std::vector<std::uint16_t> code;
    CanonicalLabeling labeling;
};

Canonicalized canonicalize(const OrientedMap& m, const std::vector<Dart>* tau) {
    const int n = m.dart_count();
    Canonicalized result;
    std::vector<int> label;
    std::vector<Dart> order;
    std::vector<std::uint16_t> attempt;
    for (Dart root = 0; root < n; ++root) {
        for (bool reflected : {false, true}) {
            if (encode_attempt(m, tau, root, reflected, label, order, attempt, result.code) < 0) {
                result.code = attempt;
                result.labeling.label_of = label;
                result.labeling.root = root;
                result.labeling.reflected = reflected;
            }
        }
    }
    return result;
}

CanonicalCode to_bytes(const std::vector<std::uint16_t>& code) {
    CanonicalCode bytes(code.size() * 2, '\0');
    for (std::size_t i = 0; i < code.size(); ++i) {
        bytes[2 * i] = static_cast<char>(code[i] >> 8);
        bytes[2 * i + 1] = static_cast<char>(code[i] & 0xff);
    }
    return bytes;
}

}  // namespace

CanonicalCode canonical_code(const OrientedMap& m) {
    return to_bytes(canonicalize(m, nullptr).code);
}

CanonicalLabeling canonical_labeling(const OrientedMap& m) {
    return canonicalize(m, nullptr).labeling;
}

bool are_isomorphic(const OrientedMap& a, const OrientedMap& b) {
    if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

CanonicalCode canonical_code_paired(const OrientedMap& m, const std::vector<Dart>& tau) {
    return to_bytes(canonicalize(m, &tau).code);
}

CanonicalLabeling canonical_labeling_paired(const OrientedMap& m, const std::vector<Dart>& tau) {
    return canonicalize(m, &tau).labeling;
}

}  // namespace bnet
