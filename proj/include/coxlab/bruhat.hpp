#pragma once

// Bruhat order and lower intervals B(w) = [e, w], together with the Bruhat
// graph restricted to the interval (edges u -> v with v = tu, t a
// reflection, and length increasing).

#include <coxlab/coxeter.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coxlab {

/// u <= w in Bruhat order, by the descent recursion: strip a left descent s
/// of w, and of u whenever s shortens u too (lifting property).
inline bool bruhat_leq(const CoxeterSystem& sys, Element u, Element w) {
    for (;;) {
        if (u.length() >= w.length()) return u == w;
        int s = 0;
        for (int g = 1; g <= sys.rank(); ++g) {
            if (sys.is_left_descent(w, g)) {
                s = g;
                break;
            }
        }
        if (sys.is_left_descent(u, s)) u = sys.left_mul(s, u);
        w = sys.left_mul(s, w);
    }
}

/// Independent type A order test: rank-matrix dominance on one-line forms.
inline bool bruhat_leq_dot(const CoxeterSystem& sys, const Element& u, const Element& w) {
    if (!sys.is_type_a())
        throw std::invalid_argument("dominance order test requires a type A system");
    const int m = sys.points();
    // cnt(i, j) = #{k <= i : x(k) >= j}, compared entrywise.
    std::vector<int> cu(std::size_t(m) + 1, 0), cw(std::size_t(m) + 1, 0);
    for (int i = 1; i <= m; ++i) {
        for (int j = int(u.data()[i - 1]); j >= 1; --j) ++cu[j];
        for (int j = int(w.data()[i - 1]); j >= 1; --j) ++cw[j];
        for (int j = 1; j <= m; ++j)
            if (cu[j] > cw[j]) return false;
    }
    return true;
}

/// The finite lower interval [e, w] with its Bruhat graph.
class LowerInterval {
public:
    LowerInterval(const CoxeterSystem& sys, Element w) : w_(std::move(w)) {
        build(sys);
    }

    const Element& top() const { return w_; }

    /// Members sorted by (length, canonical form).
    const std::vector<Element>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    bool contains(const Element& u) const { return index_.count(u) > 0; }

    int index_of(const Element& u) const {
        auto it = index_.find(u);
        if (it == index_.end()) throw std::invalid_argument("element is not in the interval");
        return it->second;
    }

    /// Directed edges (u, v) as member indices, v = tu with length increasing.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Incident edge count of a member (in-edges plus out-edges).
    int degree(const Element& u) const { return degree_[std::size_t(index_of(u))]; }
    int degree_at(int idx) const { return degree_[std::size_t(idx)]; }

    /// Member lists binned by length.
    std::map<int, std::vector<Element>> levels() const {
        std::map<int, std::vector<Element>> out;
        for (const auto& m : members_) out[m.length()].push_back(m);
        return out;
    }

    std::vector<int> level_counts() const {
        std::vector<int> out(std::size_t(w_.length()) + 1, 0);
        for (const auto& m : members_) ++out[std::size_t(m.length())];
        return out;
    }

private:
    void build(const CoxeterSystem& sys) {
        // Downward closure from w: every coatom arises by deleting one letter
        // of a fixed reduced word, so single deletions reach all of [e, w].
        ElementSet seen{w_};
        std::vector<Element> queue{w_};
        std::vector<std::pair<Element, Element>> edge_list;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Element v = queue[head];
            Word word = reduced_word(sys, v);
            for (std::size_t i = 0; i < word.size(); ++i) {
                Word sub;
                sub.reserve(word.size() - 1);
                sub.insert(sub.end(), word.begin(), word.begin() + long(i));
                sub.insert(sub.end(), word.begin() + long(i) + 1, word.end());
                Element u = sys.evaluate(sub);
                // u = t_i v for the i-th left inversion of v, hence an edge.
                edge_list.emplace_back(u, v);
                if (u.length() == v.length() - 1 && seen.insert(u).second)
                    queue.push_back(std::move(u));
            }
        }

        members_.assign(seen.begin(), seen.end());
        std::sort(members_.begin(), members_.end());
        index_.reserve(members_.size());
        for (std::size_t i = 0; i < members_.size(); ++i) index_[members_[i]] = int(i);

        // A member's in-edges all come from its own word deletions, but the
        // deletions were generated per queue entry; a non-coatom endpoint u
        // of some deletion still lies in the interval, so each deletion pair
        // is a genuine edge. Deduplicate and re-key by index.
        edges_.reserve(edge_list.size());
        for (const auto& [u, v] : edge_list) edges_.emplace_back(index_.at(u), index_.at(v));
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        degree_.assign(members_.size(), 0);
        for (const auto& [a, b] : edges_) {
            ++degree_[std::size_t(a)];
            ++degree_[std::size_t(b)];
        }
    }

    Element w_;
    std::vector<Element> members_;
    std::unordered_map<Element, int, ElementHash> index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
};

inline LowerInterval lower_interval(const CoxeterSystem& sys, const Element& w) {
    return LowerInterval(sys, w);
}

/// Reachability closure of the interval's Bruhat graph; row u holds all v
/// with a directed path u -> ... -> v (plus the diagonal).
class OrderMatrix {
public:
    explicit OrderMatrix(const LowerInterval& interval) : n_(int(interval.size())) {
        rows_.assign(std::size_t(n_), std::vector<bool>(std::size_t(n_), false));
        for (int i = 0; i < n_; ++i) rows_[std::size_t(i)][std::size_t(i)] = true;
        // Members are sorted by length, so edges point to larger indices;
        // sweeping targets in increasing order completes the closure.
        std::vector<std::vector<int>> in_edges(static_cast<std::size_t>(n_));
        for (const auto& [a, b] : interval.edges()) in_edges[std::size_t(b)].push_back(a);
        for (int v = 0; v < n_; ++v)
            for (int u : in_edges[std::size_t(v)])
                for (int k = 0; k <= u; ++k)
                    if (rows_[std::size_t(k)][std::size_t(u)]) rows_[std::size_t(k)][std::size_t(v)] = true;
    }

    bool leq(int i, int j) const { return rows_[std::size_t(i)][std::size_t(j)]; }
    int size() const { return n_; }

private:
    int n_;
    std::vector<std::vector<bool>> rows_;
};

/// The slice {v : lo <= v <= hi} of B(hi).
struct IntervalSlice {
    Element lo;
    Element hi;
    std::vector<Element> members;  // sorted by (length, canonical form)
};

inline IntervalSlice interval_slice(const CoxeterSystem& sys, const Element& lo, const Element& hi) {
    if (!bruhat_leq(sys, lo, hi))
        throw std::invalid_argument("interval slice requires lo <= hi in Bruhat order");
    IntervalSlice out{lo, hi, {}};
    LowerInterval interval(sys, hi);
    for (const auto& v : interval.members())
        if (bruhat_leq(sys, lo, v)) out.members.push_back(v);
    return out;
}

inline int degree(const LowerInterval& interval, const Element& u) {
    return interval.degree(u);
}

}  // namespace coxlab
