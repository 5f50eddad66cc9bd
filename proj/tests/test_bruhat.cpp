#include <doctest.h>

#include <coxlab/bruhat.hpp>

#include <set>

#include "oracles.hpp"

using namespace coxlab;

namespace {

Element ol(const CoxeterSystem& sys, std::initializer_list<int> line) {
    return sys.from_one_line(std::vector<int>(line));
}

std::set<std::vector<std::int64_t>> lines(const std::vector<Element>& els) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& e : els) out.insert(e.data());
    return out;
}

}  // namespace

TEST_CASE("bruhat order basics") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});
    CHECK(bruhat_leq(sys, ol(sys, {1, 3, 2, 4}), w));
    CHECK(bruhat_leq(sys, sys.identity(), w));
    CHECK_FALSE(bruhat_leq(sys, w, ol(sys, {2, 1, 4, 3})));
    CHECK(bruhat_leq_dot(sys, ol(sys, {2, 1, 4, 3}), w));
    CHECK(bruhat_leq_dot(sys, w, w));

    auto rl = CoxeterSystem::from_matrix(CoxeterMatrix::type_a(3));
    CHECK_THROWS_AS(bruhat_leq_dot(rl, rl.identity(), rl.identity()), std::invalid_argument);
}

TEST_CASE("descent recursion matches dominance on all S4 pairs") {
    auto sys = CoxeterSystem::type_a(3);
    auto group = enumerate_group(sys);
    int agreements = 0;
    for (const auto& u : group) {
        for (const auto& w : group) {
            bool a = bruhat_leq(sys, u, w);
            bool b = bruhat_leq_dot(sys, u, w);
            bool c = oracles::dominance_leq(oracles::Perm(u.data().begin(), u.data().end()),
                                            oracles::Perm(w.data().begin(), w.data().end()));
            CHECK(a == b);
            CHECK(b == c);
            ++agreements;
        }
    }
    CHECK(agreements == 576);
}

TEST_CASE("lower interval of 3412") {
    auto sys = CoxeterSystem::type_a(3);
    auto interval = lower_interval(sys, ol(sys, {3, 4, 1, 2}));
    CHECK(interval.size() == 14);
    CHECK(interval.level_counts() == std::vector<int>{1, 3, 5, 4, 1});

    std::set<std::vector<std::int64_t>> expected;
    for (auto line : std::vector<std::vector<int>>{
             {3, 4, 1, 2},
             {3, 2, 1, 4}, {3, 1, 4, 2}, {2, 4, 1, 3}, {1, 4, 3, 2},
             {2, 3, 1, 4}, {3, 1, 2, 4}, {2, 1, 4, 3}, {1, 3, 4, 2}, {1, 4, 2, 3},
             {2, 1, 3, 4}, {1, 3, 2, 4}, {1, 2, 4, 3},
             {1, 2, 3, 4}})
        expected.insert(sys.from_one_line(line).data());
    CHECK(lines(interval.members()) == expected);
}

TEST_CASE("trivial intervals") {
    auto sys = CoxeterSystem::type_a(3);
    auto interval = lower_interval(sys, sys.identity());
    CHECK(interval.size() == 1);
    CHECK(interval.edges().empty());
    CHECK(interval.degree(sys.identity()) == 0);
}

TEST_CASE("interval enumeration is sound and complete over S4") {
    auto sys = CoxeterSystem::type_a(3);
    auto group = enumerate_group(sys);
    for (const auto& w : group) {
        auto interval = lower_interval(sys, w);
        ElementSet via_dot;
        for (const auto& u : group)
            if (bruhat_leq_dot(sys, u, w)) via_dot.insert(u);
        CHECK(via_dot.size() == interval.size());
        for (const auto& m : interval.members()) CHECK(via_dot.count(m) == 1);
    }
}

TEST_CASE("edges are exactly the reflection moves that raise length") {
    auto sys = CoxeterSystem::type_a(3);
    for (const auto& w : enumerate_group(sys)) {
        auto interval = lower_interval(sys, w);
        std::set<std::pair<int, int>> edges(interval.edges().begin(), interval.edges().end());
        const auto& ms = interval.members();
        for (std::size_t i = 0; i < ms.size(); ++i) {
            for (std::size_t j = 0; j < ms.size(); ++j) {
                bool expect = ms[i].length() < ms[j].length() &&
                              is_reflection(sys, sys.multiply(ms[j], sys.inverse(ms[i])));
                CHECK(edges.count({int(i), int(j)}) == std::size_t(expect));
            }
        }
    }
}

TEST_CASE("graph reachability agrees with the order on all S4 intervals") {
    auto sys = CoxeterSystem::type_a(3);
    for (const auto& w : enumerate_group(sys)) {
        auto interval = lower_interval(sys, w);
        OrderMatrix order(interval);
        const auto& ms = interval.members();
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = 0; j < ms.size(); ++j)
                CHECK(order.leq(int(i), int(j)) == bruhat_leq(sys, ms[i], ms[j]));
    }
}

TEST_CASE("subword property on all S4 pairs") {
    auto sys = CoxeterSystem::type_a(3);
    auto group = enumerate_group(sys);
    for (const auto& w : group) {
        Word word = reduced_word(sys, w);
        // Evaluations of all subwords of one fixed reduced word.
        ElementSet reachable;
        const std::size_t l = word.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << l); ++mask) {
            Word sub;
            for (std::size_t i = 0; i < l; ++i)
                if ((mask >> i) & 1) sub.push_back(word[i]);
            reachable.insert(sys.evaluate(sub));
        }
        for (const auto& u : group)
            CHECK(bruhat_leq(sys, u, w) == (reachable.count(u) > 0));
    }
}

TEST_CASE("lifting property on all S4 pairs") {
    auto sys = CoxeterSystem::type_a(3);
    auto group = enumerate_group(sys);
    for (const auto& w : group) {
        for (const auto& u : group) {
            if (!(bruhat_leq(sys, u, w) && u.length() < w.length())) continue;
            for (int s = 1; s <= 3; ++s) {
                if (sys.is_left_descent(w, s) && !sys.is_left_descent(u, s))
                    CHECK(bruhat_leq(sys, sys.left_mul(s, u), w));
                if (sys.is_right_descent(w, s) && !sys.is_right_descent(u, s))
                    CHECK(bruhat_leq(sys, sys.right_mul(u, s), w));
            }
        }
    }
}

TEST_CASE("interval slices") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});

    auto whole = interval_slice(sys, sys.identity(), w);
    CHECK(whole.members.size() == 14);

    auto mid = interval_slice(sys, ol(sys, {2, 1, 4, 3}), w);
    CHECK(lines(mid.members) ==
          lines({ol(sys, {2, 1, 4, 3}), ol(sys, {3, 1, 4, 2}), ol(sys, {2, 4, 1, 3}), w}));

    auto point = interval_slice(sys, w, w);
    CHECK(point.members.size() == 1);

    CHECK_THROWS_AS(interval_slice(sys, w, sys.identity()), std::invalid_argument);
}

TEST_CASE("degrees") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});
    auto interval = lower_interval(sys, w);
    CHECK(interval.degree(w) == 4);
    for (const auto& u : interval.members()) CHECK(interval.degree(u) >= w.length());
    CHECK_THROWS_AS(interval.degree(ol(sys, {4, 3, 2, 1})), std::invalid_argument);
}

TEST_CASE("intervals on the root lattice backend") {
    // Infinite dihedral group: B(s1 s2 s1) is a 6-element zigzag.
    CoxeterMatrix m;
    m.rank = 2;
    m.entries = {1, 0, 0, 1};
    auto sys = CoxeterSystem::from_matrix(m);
    auto interval = lower_interval(sys, sys.evaluate({1, 2, 1}));
    CHECK(interval.size() == 6);
    CHECK(interval.level_counts() == std::vector<int>{1, 2, 2, 1});

    // A3 as a root-lattice system reproduces the 14-element interval.
    auto rl = CoxeterSystem::from_matrix(CoxeterMatrix::type_a(3));
    CHECK(lower_interval(rl, rl.evaluate({2, 1, 3, 2})).size() == 14);
}
