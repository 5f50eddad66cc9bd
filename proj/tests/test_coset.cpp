#include <doctest.h>

#include <coxlab/coset.hpp>

#include <map>
#include <set>

using namespace coxlab;

namespace {

Element ol(const CoxeterSystem& sys, const std::vector<int>& line) {
    return sys.from_one_line(line);
}

std::set<std::vector<std::int64_t>> lines(const std::vector<Element>& els) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& e : els) out.insert(e.data());
    return out;
}

std::set<std::vector<std::int64_t>> lines(const CoxeterSystem& sys,
                                          const std::vector<std::vector<int>>& raw) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& line : raw) out.insert(ol(sys, line).data());
    return out;
}

}  // namespace

TEST_CASE("coset membership around 3412") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});

    auto top = coset(sys, w, ol(sys, {2, 1, 4, 3}));
    CHECK(lines(top.members) ==
          lines(sys, {{3, 4, 1, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 1, 4, 3}}));
    CHECK(top.v_max == w);
    CHECK(top.v_min == ol(sys, {2, 1, 4, 3}));
    CHECK(top.mid == 2);
    CHECK(top.side == 2);
    CHECK(top.length() == 4);
    CHECK(top.degree() == 2);

    auto bottom = coset(sys, w, sys.identity());
    CHECK(lines(bottom.members) == lines(sys, {{1, 2, 3, 4}, {1, 3, 2, 4}}));
    CHECK(bottom.v_max == ol(sys, {1, 3, 2, 4}));

    auto trivial = coset(sys, sys.identity(), sys.identity());
    CHECK(trivial.members.size() == 1);
    CHECK(trivial.mid == 0);
    CHECK(trivial.side == 0);

    CHECK_THROWS_AS(coset(sys, ol(sys, {2, 1, 4, 3}), w), std::invalid_argument);
}

TEST_CASE("projections") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});

    CHECK(project_down(sys, w, ol(sys, {3, 2, 1, 4})) == ol(sys, {2, 1, 3, 4}));
    CHECK(project_down(sys, w, sys.identity()) == sys.identity());
    CHECK(project_up(sys, w, ol(sys, {2, 1, 4, 3})) == w);
    CHECK(project_up(sys, w, sys.identity()) == ol(sys, {1, 3, 2, 4}));
    CHECK(project_up(sys, w, w) == w);

    auto s5 = CoxeterSystem::type_a(4);
    auto w5 = ol(s5, {4, 5, 3, 1, 2});
    CHECK(project_down(s5, w5, w5) == ol(s5, {2, 1, 3, 5, 4}));
    CHECK(project_down(s5, w5, w5) == s5.multiply(s5.generator(1), s5.generator(4)));
}

TEST_CASE("coset equivalence") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});
    CHECK(same_coset(sys, w, ol(sys, {2, 1, 4, 3}), ol(sys, {3, 1, 4, 2})));
    CHECK_FALSE(same_coset(sys, w, ol(sys, {2, 1, 4, 3}), ol(sys, {2, 1, 3, 4})));
    CHECK(same_coset(sys, w, ol(sys, {2, 3, 1, 4}), ol(sys, {2, 3, 1, 4})));
}

TEST_CASE("mid and side lengths") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});
    CHECK(mid_side(sys, w, w) == std::pair{2, 2});
    CHECK(mid_side(sys, w, ol(sys, {1, 3, 2, 4})) == std::pair{0, 1});
    CHECK(mid_side(sys, w, sys.identity()) == std::pair{0, 0});
}

TEST_CASE("partition of B(3412) matches the four known cosets") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});
    auto cosets = partition(sys, w);
    REQUIRE(cosets.size() == 4);

    std::multiset<std::size_t> sizes;
    for (const auto& c : cosets) sizes.insert(c.members.size());
    CHECK(sizes == std::multiset<std::size_t>{2, 4, 4, 4});

    // Keyed by top representative: (members, bottom, mid, side).
    std::map<std::vector<std::int64_t>, const BruhatCoset*> by_max;
    for (const auto& c : cosets) by_max[c.v_max.data()] = &c;

    auto expect = [&](std::vector<int> vmax, std::vector<std::vector<int>> members,
                      std::vector<int> vmin, int mid, int side) {
        auto it = by_max.find(ol(sys, vmax).data());
        REQUIRE(it != by_max.end());
        const auto& c = *it->second;
        CHECK(lines(c.members) == lines(sys, members));
        CHECK(c.v_min == ol(sys, vmin));
        CHECK(c.mid == mid);
        CHECK(c.side == side);
        CHECK(c.length() == mid + side);
    };
    expect({3, 4, 1, 2}, {{3, 4, 1, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 1, 4, 3}},
           {2, 1, 4, 3}, 2, 2);
    expect({3, 2, 1, 4}, {{3, 2, 1, 4}, {2, 3, 1, 4}, {3, 1, 2, 4}, {2, 1, 3, 4}},
           {2, 1, 3, 4}, 1, 2);
    expect({1, 4, 3, 2}, {{1, 4, 3, 2}, {1, 3, 4, 2}, {1, 4, 2, 3}, {1, 2, 4, 3}},
           {1, 2, 4, 3}, 1, 2);
    expect({1, 3, 2, 4}, {{1, 3, 2, 4}, {1, 2, 3, 4}}, {1, 2, 3, 4}, 0, 1);

    // Deterministic order: top length descending, then canonical form.
    CHECK(cosets[0].v_max == ol(sys, {3, 4, 1, 2}));
    CHECK(cosets[1].v_max == ol(sys, {1, 4, 3, 2}));
    CHECK(cosets[2].v_max == ol(sys, {3, 2, 1, 4}));
    CHECK(cosets[3].v_max == ol(sys, {1, 3, 2, 4}));

    CHECK(partition(sys, sys.identity()).size() == 1);
}

TEST_CASE("partition of B(45312)") {
    auto sys = CoxeterSystem::type_a(4);
    auto w = ol(sys, {4, 5, 3, 1, 2});
    auto cosets = partition(sys, w);
    REQUIRE(cosets.size() == 4);

    std::set<std::vector<std::int64_t>> ups, downs;
    std::multiset<std::tuple<int, int, int>> stats;
    for (const auto& c : cosets) {
        ups.insert(c.v_max.data());
        downs.insert(c.v_min.data());
        stats.insert({c.length(), c.mid, c.side});
    }
    CHECK(ups == lines(sys, {{4, 5, 3, 1, 2}, {4, 3, 2, 1, 5}, {1, 5, 4, 3, 2}, {1, 4, 3, 2, 5}}));
    CHECK(downs == lines(sys, {{2, 1, 3, 5, 4}, {2, 1, 3, 4, 5}, {1, 2, 3, 5, 4}, {1, 2, 3, 4, 5}}));
    CHECK(stats == std::multiset<std::tuple<int, int, int>>{
                       {8, 2, 6}, {6, 1, 5}, {6, 1, 5}, {3, 0, 3}});
}

TEST_CASE("partition of B(52341)") {
    auto sys = CoxeterSystem::type_a(4);
    auto w = ol(sys, {5, 2, 3, 4, 1});
    auto cosets = partition(sys, w);
    REQUIRE(cosets.size() == 6);

    std::map<std::vector<std::int64_t>, const BruhatCoset*> by_max;
    for (const auto& c : cosets) by_max[c.v_max.data()] = &c;
    auto expect = [&](std::vector<int> vmax, std::vector<int> vmin, int len, int mid, int side) {
        auto it = by_max.find(ol(sys, vmax).data());
        REQUIRE(it != by_max.end());
        const auto& c = *it->second;
        CHECK(c.v_min == ol(sys, vmin));
        CHECK(c.length() == len);
        CHECK(c.mid == mid);
        CHECK(c.side == side);
    };
    expect({5, 2, 3, 4, 1}, {1, 4, 3, 2, 5}, 7, 3, 4);
    expect({5, 2, 1, 4, 3}, {1, 4, 2, 3, 5}, 6, 2, 4);
    expect({3, 2, 5, 4, 1}, {1, 3, 4, 2, 5}, 6, 2, 4);
    expect({2, 1, 5, 4, 3}, {1, 2, 4, 3, 5}, 4, 1, 3);
    expect({3, 2, 1, 5, 4}, {1, 3, 2, 4, 5}, 4, 1, 3);
    expect({2, 1, 3, 5, 4}, {1, 2, 3, 4, 5}, 2, 0, 2);
}

TEST_CASE("critical and minimum sets") {
    auto sys = CoxeterSystem::type_a(3);
    auto w = ol(sys, {3, 4, 1, 2});
    CHECK(lines(critical_set(sys, w)) ==
          lines(sys, {{3, 4, 1, 2}, {3, 2, 1, 4}, {1, 4, 3, 2}, {1, 3, 2, 4}}));
    CHECK(lines(min_set(sys, w)) ==
          lines(sys, {{2, 1, 4, 3}, {2, 1, 3, 4}, {1, 2, 4, 3}, {1, 2, 3, 4}}));
    CHECK(lines(critical_set(sys, sys.identity())) == lines(sys, {{1, 2, 3, 4}}));
    CHECK(lines(min_set(sys, sys.identity())) == lines(sys, {{1, 2, 3, 4}}));

    auto s5 = CoxeterSystem::type_a(4);
    auto w5 = ol(s5, {4, 5, 3, 1, 2});
    CHECK(lines(critical_set(s5, w5)) ==
          lines(s5, {{4, 5, 3, 1, 2}, {4, 3, 2, 1, 5}, {1, 5, 4, 3, 2}, {1, 4, 3, 2, 5}}));
    CHECK(lines(min_set(s5, w5)) ==
          lines(s5, {{2, 1, 3, 5, 4}, {2, 1, 3, 4, 5}, {1, 2, 3, 5, 4}, {1, 2, 3, 4, 5}}));
}

TEST_CASE("partition properties over all of S4") {
    auto sys = CoxeterSystem::type_a(3);
    for (const auto& w : enumerate_group(sys)) {
        LowerInterval interval(sys, w);
        OrderMatrix order(interval);
        auto cosets = partition(sys, w);

        // Disjoint cover of B(w).
        std::size_t total = 0;
        ElementSet seen;
        for (const auto& c : cosets) {
            total += c.members.size();
            for (const auto& m : c.members) CHECK(seen.insert(m).second);
        }
        CHECK(total == interval.size());
        for (const auto& m : interval.members()) CHECK(seen.count(m) == 1);

        // Extremes match the descent-characterized sets.
        ElementSet maxes, mins;
        for (const auto& c : cosets) {
            maxes.insert(c.v_max);
            mins.insert(c.v_min);
        }
        auto ups = critical_set(sys, w);
        auto downs = min_set(sys, w);
        CHECK(ElementSet(ups.begin(), ups.end()) == maxes);
        CHECK(ElementSet(downs.begin(), downs.end()) == mins);

        for (const auto& c : cosets) {
            // Each coset is the full Bruhat interval between its extremes.
            auto slice = interval_slice(sys, c.v_min, c.v_max);
            CHECK(lines(slice.members) == lines(c.members));

            // Induced subgraph is side-regular.
            std::map<std::vector<std::int64_t>, int> deg;
            for (const auto& [a, b] : interval.edges()) {
                const auto& ea = interval.members()[std::size_t(a)];
                const auto& eb = interval.members()[std::size_t(b)];
                if (c.contains(ea) && c.contains(eb)) {
                    ++deg[ea.data()];
                    ++deg[eb.data()];
                }
            }
            for (const auto& m : c.members) CHECK(deg[m.data()] == c.side);

            // Greedy ascent finds the same maximum as enumeration.
            for (const auto& m : c.members) CHECK(project_up_greedy(sys, w, m) == c.v_max);
        }

        // Projection monotonicity and order agreement on all pairs.
        const auto& ms = interval.members();
        for (std::size_t i = 0; i < ms.size(); ++i) {
            for (std::size_t j = 0; j < ms.size(); ++j) {
                bool up_leq = bruhat_leq(sys, project_up(sys, w, ms[i]), project_up(sys, w, ms[j]));
                bool down_leq =
                    bruhat_leq(sys, project_down(sys, w, ms[i]), project_down(sys, w, ms[j]));
                CHECK(up_leq == down_leq);
                if (order.leq(int(i), int(j))) {
                    CHECK(up_leq);
                    auto [mi, si] = mid_side(sys, w, ms[i]);
                    auto [mj, sj] = mid_side(sys, w, ms[j]);
                    CHECK(mi <= mj);
                    if (same_coset(sys, w, ms[i], ms[j])) CHECK(si <= sj);
                }
            }
        }

        // Equivalent elements have equal interval degrees.
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = 0; j < ms.size(); ++j)
                if (same_coset(sys, w, ms[i], ms[j]))
                    CHECK(interval.degree_at(int(i)) == interval.degree_at(int(j)));
    }
}
