#pragma once

// Quotient lower intervals: the poset of Bruhat cosets of w under the order
// induced by either projection, the quotient Bruhat graph, separatedness,
// and a small graded-poset analysis toolkit.

#include <coxlab/coset.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxlab {

/// A finite poset given by its full order relation, with printable labels
/// for witness messages.
struct FinitePoset {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq;  // leq[i][j] = (i <= j)

    int size() const { return int(labels.size()); }

    /// Covering pairs i < j with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        const int n = size();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j || !leq[std::size_t(i)][std::size_t(j)]) continue;
                bool cover = true;
                for (int k = 0; k < n && cover; ++k)
                    if (k != i && k != j && leq[std::size_t(i)][std::size_t(k)] &&
                        leq[std::size_t(k)][std::size_t(j)])
                        cover = false;
                if (cover) out.emplace_back(i, j);
            }
        }
        return out;
    }
};

struct PosetReport {
    bool is_graded = false;
    std::optional<std::vector<int>> rank_of;  // per element, when graded
    std::optional<int> offset;                // rank shift against the ambient rank
    std::string failure_witness;              // empty when graded

    explicit operator bool() const { return is_graded; }
};

/// Checks that `ranks` turns the poset into a graded poset: a unique
/// minimum of rank 0, and every maximal chain of every principal lower set
/// ends after exactly as many covers as the top element's rank.
inline PosetReport check_graded(const FinitePoset& poset, const std::vector<int>& ranks) {
    PosetReport report;
    const int n = poset.size();
    if (n == 0) {
        report.failure_witness = "empty poset";
        return report;
    }

    int bottom = -1;
    for (int i = 0; i < n; ++i) {
        bool is_min = true;
        for (int j = 0; j < n && is_min; ++j)
            if (!poset.leq[std::size_t(i)][std::size_t(j)]) is_min = false;
        if (is_min) {
            bottom = i;
            break;
        }
    }
    if (bottom < 0) {
        report.failure_witness = "no minimum element";
        return report;
    }
    if (ranks[std::size_t(bottom)] != 0) {
        report.failure_witness = "minimum " + poset.labels[std::size_t(bottom)] + " has rank " +
                                 std::to_string(ranks[std::size_t(bottom)]) + ", not 0";
        return report;
    }

    // Lengths of maximal chains from the bottom, accumulated over covers
    // in rank-of-longest-path order. Gradedness forces a single length per
    // element, equal to its declared rank.
    auto covers = poset.covers();
    std::vector<std::vector<int>> chain_lengths(static_cast<std::size_t>(n));
    chain_lengths[std::size_t(bottom)] = {0};
    // Process targets in order of the number of elements below them, which
    // dominates any chain length.
    std::vector<int> below(std::size_t(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && poset.leq[std::size_t(i)][std::size_t(j)]) ++below[std::size_t(j)];
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[std::size_t(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return below[std::size_t(a)] < below[std::size_t(b)]; });

    for (int v : order) {
        for (const auto& [a, b] : covers) {
            if (b != v) continue;
            for (int len : chain_lengths[std::size_t(a)]) {
                auto& lens = chain_lengths[std::size_t(v)];
                if (std::find(lens.begin(), lens.end(), len + 1) == lens.end())
                    lens.push_back(len + 1);
            }
        }
    }

    for (int v = 0; v < n; ++v) {
        auto& lens = chain_lengths[std::size_t(v)];
        if (lens.empty()) {
            report.failure_witness =
                poset.labels[std::size_t(v)] + " is not reachable from the minimum by covers";
            return report;
        }
        std::sort(lens.begin(), lens.end());
        if (lens.size() > 1) {
            report.failure_witness = "maximal chains to " + poset.labels[std::size_t(v)] +
                                     " have lengths " + std::to_string(lens.front()) + " and " +
                                     std::to_string(lens.back());
            return report;
        }
        if (lens.front() != ranks[std::size_t(v)]) {
            report.failure_witness = "chains to " + poset.labels[std::size_t(v)] + " have length " +
                                     std::to_string(lens.front()) + " but its rank is " +
                                     std::to_string(ranks[std::size_t(v)]);
            return report;
        }
    }

    report.is_graded = true;
    report.rank_of = ranks;
    return report;
}

namespace detail {

inline std::string element_label(const Element& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.data().size(); ++i) {
        if (i) s += " ";
        s += std::to_string(e.data()[i]);
    }
    return s + "]";
}

inline FinitePoset induced_poset(const CoxeterSystem& sys, const std::vector<Element>& members) {
    FinitePoset p;
    p.labels.reserve(members.size());
    for (const auto& m : members) p.labels.push_back(element_label(m));
    p.leq.assign(members.size(), std::vector<bool>(members.size(), false));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            p.leq[i][j] = bruhat_leq(sys, members[i], members[j]);
    return p;
}

}  // namespace detail

/// Is (Q, <=, l) graded with the ambient length as rank? Forces e in Q.
inline PosetReport check_faithful(const CoxeterSystem& sys, const std::vector<Element>& subset) {
    std::vector<int> ranks;
    ranks.reserve(subset.size());
    for (const auto& m : subset) ranks.push_back(m.length());
    return check_graded(detail::induced_poset(sys, subset), ranks);
}

/// Like check_faithful but with ranks shifted by the only viable offset,
/// the minimum length over the subset.
inline PosetReport check_almost_faithful(const CoxeterSystem& sys,
                                         const std::vector<Element>& subset) {
    if (subset.empty()) return check_faithful(sys, subset);
    int offset = subset.front().length();
    for (const auto& m : subset) offset = std::min(offset, m.length());
    std::vector<int> ranks;
    ranks.reserve(subset.size());
    for (const auto& m : subset) ranks.push_back(m.length() - offset);
    auto report = check_graded(detail::induced_poset(sys, subset), ranks);
    if (report.is_graded) report.offset = offset;
    return report;
}

/// Order isomorphism search by backtracking over invariant-compatible
/// candidates; deterministic (first match in index order).
inline std::optional<std::vector<int>> poset_isomorphic(const FinitePoset& a, const FinitePoset& b) {
    const int n = a.size();
    if (n != b.size()) return std::nullopt;

    // Invariant per element: (#below, #above) in the full relation.
    auto profile = [](const FinitePoset& p) {
        std::vector<std::pair<int, int>> prof(std::size_t(p.size()), {0, 0});
        for (int i = 0; i < p.size(); ++i)
            for (int j = 0; j < p.size(); ++j) {
                if (i == j) continue;
                if (p.leq[std::size_t(i)][std::size_t(j)]) {
                    ++prof[std::size_t(i)].second;
                    ++prof[std::size_t(j)].first;
                }
            }
        return prof;
    };
    auto pa = profile(a), pb = profile(b);
    {
        auto ma = pa, mb = pb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return std::nullopt;
    }

    std::vector<int> map(std::size_t(n), -1), used(std::size_t(n), 0);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[std::size_t(cand)] || pa[std::size_t(i)] != pb[std::size_t(cand)]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (a.leq[std::size_t(i)][std::size_t(j)] !=
                        b.leq[std::size_t(cand)][std::size_t(map[std::size_t(j)])] ||
                    a.leq[std::size_t(j)][std::size_t(i)] !=
                        b.leq[std::size_t(map[std::size_t(j)])][std::size_t(cand)])
                    ok = false;
            }
            if (!ok) continue;
            map[std::size_t(i)] = cand;
            used[std::size_t(cand)] = 1;
            if (place(i + 1)) return true;
            used[std::size_t(cand)] = 0;
            map[std::size_t(i)] = -1;
        }
        return false;
    };
    if (place(0)) return map;
    return std::nullopt;
}

/// The quotient lower interval: cosets of w ordered by their projections,
/// plus the quotient Bruhat graph arcs induced by member edges.
struct QuotientInterval {
    Element w;
    std::vector<BruhatCoset> cosets;
    std::vector<std::vector<bool>> leq;       // quotient Bruhat order
    std::vector<std::pair<int, int>> arcs;    // sorted coset index pairs
    int bottom = -1;                          // coset of e
    int top = -1;                             // coset of w

    int coset_of(const Element& u) const {
        for (std::size_t i = 0; i < cosets.size(); ++i)
            if (cosets[i].contains(u)) return int(i);
        throw std::invalid_argument("element is not in any coset of the interval");
    }

    FinitePoset poset() const {
        FinitePoset p;
        p.labels.reserve(cosets.size());
        for (const auto& c : cosets) p.labels.push_back(detail::element_label(c.v_max));
        p.leq = leq;
        return p;
    }
};

inline QuotientInterval quotient_interval(const CoxeterSystem& sys, const Element& w) {
    QuotientInterval q;
    q.w = w;
    q.cosets = partition(sys, w);
    const std::size_t n = q.cosets.size();

    q.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bool via_max = bruhat_leq(sys, q.cosets[i].v_max, q.cosets[j].v_max);
            bool via_min = bruhat_leq(sys, q.cosets[i].v_min, q.cosets[j].v_min);
            if (via_max != via_min)
                throw std::logic_error("projection orders disagree on cosets " +
                                       detail::element_label(q.cosets[i].v_max) + " and " +
                                       detail::element_label(q.cosets[j].v_max));
            q.leq[i][j] = via_max;
        }
    }

    LowerInterval interval(sys, w);
    std::vector<int> coset_of(interval.size(), -1);
    for (std::size_t ci = 0; ci < n; ++ci)
        for (const auto& m : q.cosets[ci].members)
            coset_of[std::size_t(interval.index_of(m))] = int(ci);
    for (const auto& [a, b] : interval.edges()) {
        int ca = coset_of[std::size_t(a)], cb = coset_of[std::size_t(b)];
        if (ca != cb) q.arcs.emplace_back(ca, cb);
    }
    std::sort(q.arcs.begin(), q.arcs.end());
    q.arcs.erase(std::unique(q.arcs.begin(), q.arcs.end()), q.arcs.end());

    Element e = sys.identity();
    for (std::size_t i = 0; i < n; ++i) {
        if (q.cosets[i].contains(e)) q.bottom = int(i);
        if (q.cosets[i].contains(w)) q.top = int(i);
    }
    return q;
}

/// w is separated when its descent sets avoid the support of the minimal
/// representative of its own coset.
inline bool is_separated(const CoxeterSystem& sys, const Element& w) {
    GenSet sup = support(sys, project_down(sys, w, w));
    return (sys.descents(w, Side::Left) & sup).empty() &&
           (sys.descents(w, Side::Right) & sup).empty();
}

/// Compares quotient arcs with the edges between the coset minima.
struct QuotientGraphReport {
    bool separated = false;
    bool min_edge_implies_arc = false;  // holds for every w
    bool arc_implies_min_edge = false;  // guaranteed for separated w
    int vertices = 0;
    int arc_count = 0;
    std::vector<std::string> counterexamples;  // arcs without a matching min edge

    bool equivalent() const { return min_edge_implies_arc && arc_implies_min_edge; }
};

inline QuotientGraphReport quotient_graph_check(const CoxeterSystem& sys, const Element& w) {
    QuotientGraphReport report;
    report.separated = is_separated(sys, w);

    QuotientInterval q = quotient_interval(sys, w);
    report.vertices = int(q.cosets.size());
    report.arc_count = int(q.arcs.size());

    auto has_edge = [&](const Element& a, const Element& b) {
        return a.length() < b.length() && is_reflection(sys, sys.multiply(b, sys.inverse(a)));
    };

    report.min_edge_implies_arc = true;
    report.arc_implies_min_edge = true;
    std::vector<std::pair<int, int>> arcs_set = q.arcs;
    for (std::size_t i = 0; i < q.cosets.size(); ++i) {
        for (std::size_t j = 0; j < q.cosets.size(); ++j) {
            if (i == j) continue;
            bool arc = std::binary_search(arcs_set.begin(), arcs_set.end(),
                                          std::pair<int, int>(int(i), int(j)));
            bool min_edge = has_edge(q.cosets[i].v_min, q.cosets[j].v_min);
            if (min_edge && !arc) report.min_edge_implies_arc = false;
            if (arc && !min_edge) {
                report.arc_implies_min_edge = false;
                report.counterexamples.push_back(
                    "arc " + detail::element_label(q.cosets[i].v_max) + " -> " +
                    detail::element_label(q.cosets[j].v_max) + " has no edge between minima " +
                    detail::element_label(q.cosets[i].v_min) + " -> " +
                    detail::element_label(q.cosets[j].v_min));
            }
        }
    }
    return report;
}

}  // namespace coxlab
