#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// code paths so cross-checks stay independent.

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracles {

using Perm = std::vector<int>;  // one-line, values 1..m

inline std::vector<Perm> all_perms(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int inversion_count(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

// (u o v)(i) = u(v(i))
inline Perm compose(const Perm& u, const Perm& v) {
    Perm r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[std::size_t(v[i]) - 1];
    return r;
}

inline Perm transposition(int m, int a, int b) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 1);
    std::swap(p[a - 1], p[b - 1]);
    return p;
}

// Dominance criterion for the symmetric group's Bruhat order:
// u <= w iff #{k <= i : u(k) >= j} <= #{k <= i : w(k) >= j} for all i, j.
inline bool dominance_leq(const Perm& u, const Perm& w) {
    const int m = int(u.size());
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            int cu = 0, cw = 0;
            for (int k = 1; k <= i; ++k) {
                if (u[k - 1] >= j) ++cu;
                if (w[k - 1] >= j) ++cw;
            }
            if (cu > cw) return false;
        }
    }
    return true;
}

}  // namespace oracles
