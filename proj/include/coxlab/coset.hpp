#pragma once

// Two-sided cosets W_I u W_J with I = D_L(w), J = D_R(w), their min/max
// projections, the induced partition of B(w), and middle/side lengths.

#include <coxlab/bruhat.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coxlab {

/// One two-sided coset W_{D_L(w)} u W_{D_R(w)} inside B(w).
struct BruhatCoset {
    GenSet left_index;             // I = D_L(w)
    GenSet right_index;            // J = D_R(w)
    std::vector<Element> members;  // sorted by (length, canonical form)
    Element v_min;                 // Bruhat minimum of the coset
    Element v_max;                 // Bruhat maximum of the coset
    int mid = 0;                   // l(v_min)
    int side = 0;                  // l(v_max) - l(v_min)

    int length() const { return mid + side; }
    int degree() const { return side; }

    bool contains(const Element& u) const {
        return std::binary_search(members.begin(), members.end(), u);
    }
};

namespace detail {

inline void require_below(const CoxeterSystem& sys, const Element& u, const Element& w) {
    if (!bruhat_leq(sys, u, w))
        throw std::invalid_argument("element is not below w in Bruhat order");
}

// Saturate {u} under left multiplication by I and right multiplication by J.
inline std::vector<Element> two_sided_orbit(const CoxeterSystem& sys, const Element& u,
                                            GenSet I, GenSet J, std::size_t cap = 1u << 20) {
    ElementSet seen{u};
    std::vector<Element> queue{u};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Element cur = queue[head];
        auto push = [&](Element next) {
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw std::runtime_error("two-sided coset enumeration exceeded cap");
                queue.push_back(std::move(next));
            }
        };
        for (int s : I.to_vector()) push(sys.left_mul(s, cur));
        for (int s : J.to_vector()) push(sys.right_mul(cur, s));
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

inline Element unique_length_extreme(const std::vector<Element>& members, bool max) {
    // Members are sorted by (length, canonical form): the extremes sit at the
    // ends. A length tie at either end would contradict the interval shape.
    const Element& ext = max ? members.back() : members.front();
    if (members.size() > 1) {
        const Element& next = max ? members[members.size() - 2] : members[1];
        if (next.length() == ext.length())
            throw std::logic_error("two-sided coset has no unique length extreme");
    }
    return ext;
}

}  // namespace detail

/// Greedy minimum of C_w(u): strip descents lying in D_L(w) / D_R(w) until
/// none remain; lands on the unique two-sided quotient representative.
inline Element project_down(const CoxeterSystem& sys, const Element& w, const Element& u) {
    detail::require_below(sys, u, w);
    GenSet I = sys.descents(w, Side::Left);
    GenSet J = sys.descents(w, Side::Right);
    Element x = u;
    for (;;) {
        bool moved = false;
        for (int s : I.to_vector()) {
            if (sys.is_left_descent(x, s)) {
                x = sys.left_mul(s, x);
                moved = true;
                break;
            }
        }
        if (moved) continue;
        for (int s : J.to_vector()) {
            if (sys.is_right_descent(x, s)) {
                x = sys.right_mul(x, s);
                moved = true;
                break;
            }
        }
        if (!moved) return x;
    }
}

/// The coset C_w(u) by closure under both index sets.
inline BruhatCoset coset(const CoxeterSystem& sys, const Element& w, const Element& u) {
    detail::require_below(sys, u, w);
    BruhatCoset c;
    c.left_index = sys.descents(w, Side::Left);
    c.right_index = sys.descents(w, Side::Right);
    c.members = detail::two_sided_orbit(sys, u, c.left_index, c.right_index);
    c.v_min = detail::unique_length_extreme(c.members, false);
    c.v_max = detail::unique_length_extreme(c.members, true);
    c.mid = c.v_min.length();
    c.side = c.v_max.length() - c.v_min.length();
    return c;
}

/// Maximum of C_w(u), by enumeration.
inline Element project_up(const CoxeterSystem& sys, const Element& w, const Element& u) {
    return coset(sys, w, u).v_max;
}

/// Greedy ascent inside the coset; must agree with project_up, and is
/// cross-checked against it by the exhaustive suites.
inline Element project_up_greedy(const CoxeterSystem& sys, const Element& w, const Element& u) {
    detail::require_below(sys, u, w);
    GenSet I = sys.descents(w, Side::Left);
    GenSet J = sys.descents(w, Side::Right);
    Element x = u;
    for (;;) {
        bool moved = false;
        for (int s : I.to_vector()) {
            if (!sys.is_left_descent(x, s)) {
                x = sys.left_mul(s, x);
                moved = true;
                break;
            }
        }
        if (moved) continue;
        for (int s : J.to_vector()) {
            if (!sys.is_right_descent(x, s)) {
                x = sys.right_mul(x, s);
                moved = true;
                break;
            }
        }
        if (!moved) return x;
    }
}

inline bool same_coset(const CoxeterSystem& sys, const Element& w, const Element& u,
                       const Element& v) {
    return project_down(sys, w, u) == project_down(sys, w, v);
}

/// (mid_w(u), side_w(u)) = (l(P_down(u)), l(u) - l(P_down(u))).
inline std::pair<int, int> mid_side(const CoxeterSystem& sys, const Element& w, const Element& u) {
    int mid = project_down(sys, w, u).length();
    return {mid, u.length() - mid};
}

/// All distinct cosets {C_w(u) : u in B(w)}, sorted by length of the top
/// representative descending, then by its canonical form.
inline std::vector<BruhatCoset> partition(const CoxeterSystem& sys, const Element& w) {
    LowerInterval interval(sys, w);
    GenSet I = sys.descents(w, Side::Left);
    GenSet J = sys.descents(w, Side::Right);

    std::map<Element, std::vector<Element>> groups;  // keyed by the minimum
    for (const auto& u : interval.members()) groups[project_down(sys, w, u)].push_back(u);

    std::vector<BruhatCoset> out;
    out.reserve(groups.size());
    for (auto& [key, members] : groups) {
        BruhatCoset c;
        c.left_index = I;
        c.right_index = J;
        c.members = std::move(members);  // already sorted: interval order is stable under grouping
        c.v_min = detail::unique_length_extreme(c.members, false);
        c.v_max = detail::unique_length_extreme(c.members, true);
        if (c.v_min != key) throw std::logic_error("coset minimum does not match its projection");
        c.mid = c.v_min.length();
        c.side = c.v_max.length() - c.v_min.length();
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const BruhatCoset& a, const BruhatCoset& b) {
        if (a.v_max.length() != b.v_max.length()) return a.v_max.length() > b.v_max.length();
        return a.v_max.data() < b.v_max.data();
    });
    return out;
}

/// B_up(w): elements u <= w whose descent sets contain those of w on both
/// sides; these are the coset maxima.
inline std::vector<Element> critical_set(const CoxeterSystem& sys, const Element& w) {
    GenSet I = sys.descents(w, Side::Left);
    GenSet J = sys.descents(w, Side::Right);
    std::vector<Element> out;
    LowerInterval interval(sys, w);
    for (const auto& u : interval.members())
        if (I.subset_of(sys.descents(u, Side::Left)) && J.subset_of(sys.descents(u, Side::Right)))
            out.push_back(u);
    return out;
}

/// B_down(w): elements of B(w) with no descent inside either index set;
/// these are the coset minima.
inline std::vector<Element> min_set(const CoxeterSystem& sys, const Element& w) {
    GenSet I = sys.descents(w, Side::Left);
    GenSet J = sys.descents(w, Side::Right);
    std::vector<Element> out;
    LowerInterval interval(sys, w);
    for (const auto& u : interval.members())
        if ((sys.descents(u, Side::Left) & I).empty() && (sys.descents(u, Side::Right) & J).empty())
            out.push_back(u);
    return out;
}

}  // namespace coxlab
