#pragma once

// Exact Coxeter system arithmetic on two integer backends:
//  - TypeA: elements are one-line permutations of {1..n+1}, s_i = (i, i+1).
//  - RootLattice: elements act on simple-root coordinates through integer
//    matrices derived from a crystallographic Coxeter matrix.
// All operations are exact; no floating point anywhere.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace coxlab {

enum class Side { Left, Right };

/// A set of generator indices (1-based), stored as a bitmask. Rank <= 32.
class GenSet {
public:
    GenSet() = default;
    GenSet(std::initializer_list<int> gens) {
        for (int s : gens) add(s);
    }

    static GenSet single(int s) { return GenSet{s}; }

    bool contains(int s) const { return (bits_ >> (s - 1)) & 1u; }
    GenSet& add(int s) {
        bits_ |= 1u << (s - 1);
        return *this;
    }
    GenSet& remove(int s) {
        bits_ &= ~(1u << (s - 1));
        return *this;
    }

    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }

    bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
    GenSet operator&(GenSet o) const { return GenSet(bits_ & o.bits_); }
    GenSet operator|(GenSet o) const { return GenSet(bits_ | o.bits_); }

    bool operator==(const GenSet&) const = default;
    auto operator<=>(const GenSet&) const = default;

    /// Members in increasing order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b; b &= b - 1)
            out.push_back(__builtin_ctz(b) + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int g : to_vector()) {
            if (!first) s += ",";
            s += "s" + std::to_string(g);
            first = false;
        }
        return s + "}";
    }

    std::uint32_t bits() const { return bits_; }

private:
    explicit GenSet(std::uint32_t bits) : bits_(bits) {}
    std::uint32_t bits_ = 0;
};

/// A word in the generators; letters are 1-based indices.
using Word = std::vector<int>;

/// Symmetric matrix of bond orders m(i,j); 0 encodes an infinite bond.
struct CoxeterMatrix {
    static constexpr int infinite_bond = 0;

    int rank = 0;
    std::vector<int> entries;  // rank x rank, row-major

    int at(int i, int j) const { return entries[std::size_t(i - 1) * rank + (j - 1)]; }

    static CoxeterMatrix type_a(int rank) {
        CoxeterMatrix m;
        m.rank = rank;
        m.entries.assign(std::size_t(rank) * rank, 2);
        for (int i = 1; i <= rank; ++i) {
            m.entries[std::size_t(i - 1) * rank + (i - 1)] = 1;
            if (i < rank) {
                m.entries[std::size_t(i - 1) * rank + i] = 3;
                m.entries[std::size_t(i) * rank + (i - 1)] = 3;
            }
        }
        return m;
    }

    /// Throws std::invalid_argument naming the offending entry.
    void validate() const {
        if (rank < 1) throw std::invalid_argument("coxeter matrix rank must be >= 1");
        if (entries.size() != std::size_t(rank) * rank)
            throw std::invalid_argument("coxeter matrix must be square of size rank*rank");
        for (int i = 1; i <= rank; ++i) {
            if (at(i, i) != 1)
                throw std::invalid_argument("coxeter matrix entry m[" + std::to_string(i) + "][" +
                                            std::to_string(i) + "] = " + std::to_string(at(i, i)) +
                                            " must be 1 on the diagonal");
            for (int j = i + 1; j <= rank; ++j) {
                if (at(i, j) != at(j, i))
                    throw std::invalid_argument("coxeter matrix not symmetric at m[" + std::to_string(i) +
                                                "][" + std::to_string(j) + "]");
                int m = at(i, j);
                if (m != 2 && m != 3 && m != 4 && m != 6 && m != infinite_bond)
                    throw std::invalid_argument("coxeter matrix entry m[" + std::to_string(i) + "][" +
                                                std::to_string(j) + "] = " + std::to_string(m) +
                                                " is not crystallographic (allowed: 2,3,4,6,0=inf)");
            }
        }
    }
};

/// Immutable group element with its canonical form and cached length.
/// TypeA: data = one-line permutation w(1..n+1).
/// RootLattice: data = action matrix on simple-root coordinates followed by
/// the matrix of the inverse, both row-major.
class Element {
public:
    Element() = default;
    Element(std::vector<std::int64_t> data, int length) : data_(std::move(data)), len_(length) {}

    int length() const { return len_; }
    const std::vector<std::int64_t>& data() const { return data_; }

    bool operator==(const Element& o) const { return data_ == o.data_; }

    // Orders by (length, canonical form); used for all deterministic output.
    std::strong_ordering operator<=>(const Element& o) const {
        if (auto c = len_ <=> o.len_; c != 0) return c;
        return data_ <=> o.data_;
    }

private:
    std::vector<std::int64_t> data_;
    int len_ = 0;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t v : e.data()) {
            h ^= std::size_t(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using ElementSet = std::unordered_set<Element, ElementHash>;

class CoxeterSystem {
public:
    enum class Backend { TypeA, RootLattice };

    static CoxeterSystem type_a(int rank) {
        if (rank < 1) throw std::invalid_argument("type A rank must be >= 1");
        CoxeterSystem sys;
        sys.backend_ = Backend::TypeA;
        sys.rank_ = rank;
        sys.matrix_ = CoxeterMatrix::type_a(rank);
        return sys;
    }

    static CoxeterSystem from_matrix(const CoxeterMatrix& m) {
        m.validate();
        if (m.rank > 32) throw std::invalid_argument("rank > 32 not supported");
        CoxeterSystem sys;
        sys.backend_ = Backend::RootLattice;
        sys.rank_ = m.rank;
        sys.matrix_ = m;
        sys.cartan_ = derive_cartan(m);
        return sys;
    }

    Backend backend() const { return backend_; }
    bool is_type_a() const { return backend_ == Backend::TypeA; }
    int rank() const { return rank_; }
    const CoxeterMatrix& matrix() const { return matrix_; }
    const std::vector<int>& cartan() const { return cartan_; }
    GenSet all_generators() const {
        GenSet g;
        for (int s = 1; s <= rank_; ++s) g.add(s);
        return g;
    }

    /// Degree of the one-line form; permutations live on {1..points()}.
    int points() const { return rank_ + 1; }

    Element identity() const {
        if (is_type_a()) {
            std::vector<std::int64_t> d(points());
            std::iota(d.begin(), d.end(), 1);
            return Element(std::move(d), 0);
        }
        std::vector<std::int64_t> d(2 * std::size_t(rank_) * rank_, 0);
        for (int i = 0; i < rank_; ++i) {
            d[std::size_t(i) * rank_ + i] = 1;
            d[std::size_t(rank_) * rank_ + std::size_t(i) * rank_ + i] = 1;
        }
        return Element(std::move(d), 0);
    }

    Element generator(int s) const {
        check_gen(s);
        return right_mul(identity(), s);
    }

    bool is_right_descent(const Element& w, int s) const {
        check_gen(s);
        if (is_type_a()) return w.data()[s - 1] > w.data()[s];
        // w(alpha_s) is a negative root iff column s of the action matrix is <= 0.
        return column_negative(w.data().data(), s - 1);
    }

    bool is_left_descent(const Element& w, int s) const {
        check_gen(s);
        if (is_type_a()) {
            // s is a left descent iff value s appears to the right of s+1.
            int ps = 0, ps1 = 0;
            for (int i = 0; i < points(); ++i) {
                if (w.data()[i] == s) ps = i;
                if (w.data()[i] == s + 1) ps1 = i;
            }
            return ps > ps1;
        }
        return column_negative(w.data().data() + std::size_t(rank_) * rank_, s - 1);
    }

    bool is_descent(const Element& w, int s, Side side) const {
        return side == Side::Left ? is_left_descent(w, s) : is_right_descent(w, s);
    }

    GenSet descents(const Element& w, Side side) const {
        GenSet out;
        for (int s = 1; s <= rank_; ++s)
            if (is_descent(w, s, side)) out.add(s);
        return out;
    }

    Element right_mul(const Element& w, int s) const {
        check_gen(s);
        int len = w.length() + (is_right_descent(w, s) ? -1 : 1);
        std::vector<std::int64_t> d = w.data();
        if (is_type_a()) {
            std::swap(d[s - 1], d[s]);
            return Element(std::move(d), len);
        }
        apply_gen_right(d.data(), s - 1);                                // M * S_s
        apply_gen_left(d.data() + std::size_t(rank_) * rank_, s - 1);    // S_s * Minv
        check_root_signs(d);
        return Element(std::move(d), len);
    }

    Element left_mul(int s, const Element& w) const {
        check_gen(s);
        int len = w.length() + (is_left_descent(w, s) ? -1 : 1);
        std::vector<std::int64_t> d = w.data();
        if (is_type_a()) {
            for (auto& v : d) {
                if (v == s)
                    v = s + 1;
                else if (v == s + 1)
                    v = s;
            }
            return Element(std::move(d), len);
        }
        apply_gen_left(d.data(), s - 1);
        apply_gen_right(d.data() + std::size_t(rank_) * rank_, s - 1);
        check_root_signs(d);
        return Element(std::move(d), len);
    }

    /// Group product with (uv)(i) = u(v(i)); the leftmost factor acts last.
    Element multiply(const Element& u, const Element& v) const {
        if (is_type_a()) {
            std::vector<std::int64_t> d(points());
            for (int i = 0; i < points(); ++i) d[i] = u.data()[v.data()[i] - 1];
            int len = inversion_count(d);
            return Element(std::move(d), len);
        }
        const std::size_t nn = std::size_t(rank_) * rank_;
        std::vector<std::int64_t> d(2 * nn, 0);
        mat_mul(u.data().data(), v.data().data(), d.data());
        mat_mul(v.data().data() + nn, u.data().data() + nn, d.data() + nn);
        check_root_signs(d);
        int len = strip_length(d);
        return Element(std::move(d), len);
    }

    Element inverse(const Element& w) const {
        if (is_type_a()) {
            std::vector<std::int64_t> d(points());
            for (int i = 0; i < points(); ++i) d[w.data()[i] - 1] = i + 1;
            return Element(std::move(d), w.length());
        }
        const std::size_t nn = std::size_t(rank_) * rank_;
        std::vector<std::int64_t> d(2 * nn);
        std::copy_n(w.data().begin() + nn, nn, d.begin());
        std::copy_n(w.data().begin(), nn, d.begin() + nn);
        return Element(std::move(d), w.length());
    }

    Element evaluate(const Word& word) const {
        Element w = identity();
        for (int s : word) w = right_mul(w, s);
        return w;
    }

    /// Builds a one-line permutation element; TypeA only.
    Element from_one_line(const std::vector<int>& line) const {
        if (!is_type_a()) throw std::invalid_argument("one-line elements require a type A system");
        if (int(line.size()) != points())
            throw std::invalid_argument("one-line length " + std::to_string(line.size()) +
                                        " does not match " + std::to_string(points()) + " points");
        std::vector<std::int64_t> d(line.begin(), line.end());
        std::vector<bool> seen(points(), false);
        for (std::int64_t v : d) {
            if (v < 1 || v > points() || seen[std::size_t(v) - 1])
                throw std::invalid_argument("not a permutation of 1.." + std::to_string(points()));
            seen[std::size_t(v) - 1] = true;
        }
        return Element(std::move(d), inversion_count(d));
    }

    bool belongs(const Element& w) const {
        return w.data().size() == (is_type_a() ? std::size_t(points())
                                               : 2 * std::size_t(rank_) * rank_);
    }

private:
    CoxeterSystem() = default;

    void check_gen(int s) const {
        if (s < 1 || s > rank_)
            throw std::invalid_argument("generator index " + std::to_string(s) +
                                        " out of range 1.." + std::to_string(rank_));
    }

    static std::vector<int> derive_cartan(const CoxeterMatrix& m) {
        // Fixed generalized-Cartan realization: for i < j the pair
        // (c[i][j], c[j][i]) is (0,0), (-1,-1), (-1,-2), (-1,-3), (-2,-2)
        // for bond order 2, 3, 4, 6, infinity.
        std::vector<int> c(std::size_t(m.rank) * m.rank, 0);
        for (int i = 1; i <= m.rank; ++i) c[std::size_t(i - 1) * m.rank + (i - 1)] = 2;
        for (int i = 1; i <= m.rank; ++i) {
            for (int j = i + 1; j <= m.rank; ++j) {
                int cij = 0, cji = 0;
                switch (m.at(i, j)) {
                    case 2: break;
                    case 3: cij = -1; cji = -1; break;
                    case 4: cij = -1; cji = -2; break;
                    case 6: cij = -1; cji = -3; break;
                    case CoxeterMatrix::infinite_bond: cij = -2; cji = -2; break;
                }
                c[std::size_t(i - 1) * m.rank + (j - 1)] = cij;
                c[std::size_t(j - 1) * m.rank + (i - 1)] = cji;
            }
        }
        return c;
    }

    static int inversion_count(const std::vector<std::int64_t>& line) {
        int inv = 0;
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j)
                if (line[i] > line[j]) ++inv;
        return inv;
    }

    std::int64_t cartan_at(int i0, int j0) const { return cartan_[std::size_t(i0) * rank_ + j0]; }

    // M <- M * S_s (column operations): col_j -= c[s][j] * col_s for all j.
    void apply_gen_right(std::int64_t* m, int s0) const {
        const int n = rank_;
        std::vector<std::int64_t> col_s(n);
        for (int k = 0; k < n; ++k) col_s[k] = m[std::size_t(k) * n + s0];
        for (int j = 0; j < n; ++j) {
            std::int64_t c = cartan_at(s0, j);
            if (c == 0) continue;
            for (int k = 0; k < n; ++k) m[std::size_t(k) * n + j] -= c * col_s[k];
        }
    }

    // M <- S_s * M (row operation): row_s -= sum_i c[s][i] * row_i.
    void apply_gen_left(std::int64_t* m, int s0) const {
        const int n = rank_;
        std::vector<std::int64_t> acc(n, 0);
        for (int i = 0; i < n; ++i) {
            std::int64_t c = cartan_at(s0, i);
            if (c == 0) continue;
            for (int j = 0; j < n; ++j) acc[j] += c * m[std::size_t(i) * n + j];
        }
        for (int j = 0; j < n; ++j) m[std::size_t(s0) * n + j] -= acc[j];
    }

    void mat_mul(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const {
        const int n = rank_;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                std::int64_t aik = a[std::size_t(i) * n + k];
                if (aik == 0) continue;
                for (int j = 0; j < n; ++j) out[std::size_t(i) * n + j] += aik * b[std::size_t(k) * n + j];
            }
    }

    bool column_negative(const std::int64_t* m, int col) const {
        for (int k = 0; k < rank_; ++k) {
            std::int64_t v = m[std::size_t(k) * rank_ + col];
            if (v > 0) return false;
        }
        return true;
    }

    // Every image of a simple root must be a nonnegative or nonpositive
    // integer vector; a mixed-sign column signals a corrupted element.
    void check_root_signs(const std::vector<std::int64_t>& d) const {
        const int n = rank_;
        for (const std::int64_t* m : {d.data(), d.data() + std::size_t(n) * n}) {
            for (int j = 0; j < n; ++j) {
                bool has_pos = false, has_neg = false;
                for (int k = 0; k < n; ++k) {
                    std::int64_t v = m[std::size_t(k) * n + j];
                    has_pos |= v > 0;
                    has_neg |= v < 0;
                }
                if (has_pos && has_neg)
                    throw std::logic_error("root positivity dichotomy violated: column " +
                                           std::to_string(j + 1) + " has mixed signs");
            }
        }
    }

    bool is_identity_matrix(const std::vector<std::int64_t>& d) const {
        const int n = rank_;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[std::size_t(i) * n + j] != (i == j ? 1 : 0)) return false;
        return true;
    }

    // Number of right-descent strips needed to reach the identity.
    int strip_length(std::vector<std::int64_t> d) const {
        const int n = rank_;
        const std::size_t nn = std::size_t(n) * n;
        int len = 0;
        while (!is_identity_matrix(d)) {
            int s0 = -1;
            for (int s = 0; s < n; ++s) {
                if (column_negative(d.data(), s)) {
                    s0 = s;
                    break;
                }
            }
            if (s0 < 0) throw std::logic_error("non-identity element without right descent");
            apply_gen_right(d.data(), s0);
            apply_gen_left(d.data() + nn, s0);
            ++len;
        }
        return len;
    }

    Backend backend_ = Backend::TypeA;
    int rank_ = 0;
    CoxeterMatrix matrix_;
    std::vector<int> cartan_;
};

/// Canonical reduced word: repeatedly strip the smallest left descent.
inline Word reduced_word(const CoxeterSystem& sys, const Element& w) {
    Word out;
    out.reserve(std::size_t(w.length()));
    Element x = w;
    while (x.length() > 0) {
        int s = 0;
        for (int g = 1; g <= sys.rank(); ++g) {
            if (sys.is_left_descent(x, g)) {
                s = g;
                break;
            }
        }
        out.push_back(s);
        x = sys.left_mul(s, x);
    }
    return out;
}

inline bool is_reduced(const CoxeterSystem& sys, const Word& word) {
    return sys.evaluate(word).length() == int(word.size());
}

/// Reflections t_i = s_1...s_{i-1} s_i s_{i-1}...s_1 of a reduced word;
/// their set is the left inversion set of the word's value.
inline std::vector<Element> inversions(const CoxeterSystem& sys, const Word& word) {
    if (!is_reduced(sys, word)) throw std::invalid_argument("inversions requires a reduced word");
    std::vector<Element> out;
    out.reserve(word.size());
    Element prefix = sys.identity();  // s_1 ... s_{i-1}
    for (std::size_t i = 0; i < word.size(); ++i) {
        Element t = sys.multiply(prefix, sys.generator(word[i]));
        t = sys.multiply(t, sys.inverse(prefix));
        out.push_back(std::move(t));
        prefix = sys.right_mul(prefix, word[i]);
    }
    return out;
}

inline std::vector<Element> left_inversion_set(const CoxeterSystem& sys, const Element& w) {
    return inversions(sys, reduced_word(sys, w));
}

inline bool is_reflection(const CoxeterSystem& sys, const Element& x) {
    if (sys.is_type_a()) {
        int moved = 0;
        for (int i = 0; i < sys.points(); ++i)
            if (x.data()[i] != i + 1) ++moved;
        return moved == 2;
    }
    if (x.length() % 2 == 0) return false;
    // A reflection fixes a corank-1 sublattice: rank(M - I) == 1.
    const int n = sys.rank();
    std::vector<std::int64_t> m(x.data().begin(), x.data().begin() + std::size_t(n) * n);
    for (int i = 0; i < n; ++i) m[std::size_t(i) * n + i] -= 1;
    // Fraction-free row elimination with gcd normalization.
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (m[std::size_t(r) * n + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(m[std::size_t(rank) * n + j], m[std::size_t(pivot) * n + j]);
        std::int64_t p = m[std::size_t(rank) * n + col];
        for (int r = rank + 1; r < n; ++r) {
            std::int64_t q = m[std::size_t(r) * n + col];
            if (q == 0) continue;
            std::int64_t g = 0;
            for (int j = 0; j < n; ++j) {
                m[std::size_t(r) * n + j] = m[std::size_t(r) * n + j] * p - m[std::size_t(rank) * n + j] * q;
                g = std::gcd(g, m[std::size_t(r) * n + j]);
            }
            if (g > 1)
                for (int j = 0; j < n; ++j) m[std::size_t(r) * n + j] /= g;
        }
        ++rank;
    }
    return rank == 1;
}

/// Unique length-additive split of w across a parabolic subgroup.
/// Left: w == part * rep with part in W_J and rep the minimal-length
/// representative of W_J w. Right: w == rep * part for w W_J.
struct ParabolicDecomposition {
    Element part;
    Element rep;
};

inline ParabolicDecomposition parabolic_decompose(const CoxeterSystem& sys, const Element& w,
                                                  GenSet J, Side side) {
    for (int s : J.to_vector())
        if (s < 1 || s > sys.rank())
            throw std::invalid_argument("generator index " + std::to_string(s) +
                                        " out of range 1.." + std::to_string(sys.rank()));
    Element rep = w;
    for (;;) {
        int found = 0;
        for (int s : J.to_vector()) {
            if (sys.is_descent(rep, s, side)) {
                found = s;
                break;
            }
        }
        if (!found) break;
        rep = side == Side::Left ? sys.left_mul(found, rep) : sys.right_mul(rep, found);
    }
    Element part = side == Side::Left ? sys.multiply(w, sys.inverse(rep))
                                      : sys.multiply(sys.inverse(rep), w);
    return {std::move(part), std::move(rep)};
}

/// Weak order comparison through inversion-set containment.
inline bool weak_leq(const CoxeterSystem& sys, const Element& u, const Element& w, Side side) {
    if (u.length() > w.length()) return false;
    // Left weak order compares right inversion sets, and vice versa.
    const Element& u_src = u;
    const Element& w_src = w;
    Element ui = sys.inverse(u_src), wi = sys.inverse(w_src);
    const Element& uu = side == Side::Left ? ui : u_src;
    const Element& ww = side == Side::Left ? wi : w_src;
    auto tu = left_inversion_set(sys, uu);
    auto tw = left_inversion_set(sys, ww);
    ElementSet wset(tw.begin(), tw.end());
    return std::all_of(tu.begin(), tu.end(), [&](const Element& t) { return wset.count(t) > 0; });
}

/// Letters appearing in any reduced word of w.
inline GenSet support(const CoxeterSystem& sys, const Element& w) {
    GenSet out;
    for (int s : reduced_word(sys, w)) out.add(s);
    return out;
}

/// All reduced words of w, by backtracking over left descents. Exponential;
/// intended for small test scopes only.
inline std::vector<Word> all_reduced_words(const CoxeterSystem& sys, const Element& w) {
    if (w.length() == 0) return {Word{}};
    std::vector<Word> out;
    for (int s = 1; s <= sys.rank(); ++s) {
        if (!sys.is_left_descent(w, s)) continue;
        for (Word rest : all_reduced_words(sys, sys.left_mul(s, w))) {
            rest.insert(rest.begin(), s);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

/// Breadth-first enumeration of the subgroup generated by `gens`,
/// sorted by (length, canonical form). Throws if `cap` is exceeded.
inline std::vector<Element> generated_subgroup(const CoxeterSystem& sys, GenSet gens,
                                               std::size_t cap = 1u << 20) {
    ElementSet seen;
    std::vector<Element> queue{sys.identity()};
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Element cur = queue[head];
        for (int s : gens.to_vector()) {
            Element next = sys.right_mul(cur, s);
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw std::runtime_error("subgroup enumeration exceeded cap; group may be infinite");
                queue.push_back(std::move(next));
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

inline std::vector<Element> enumerate_group(const CoxeterSystem& sys, std::size_t cap = 1u << 20) {
    return generated_subgroup(sys, sys.all_generators(), cap);
}

}  // namespace coxlab
