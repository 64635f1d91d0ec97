#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace tq {

/// Ordered monomial x_1^{a_1} ... x_n^{a_n} over n generators, stored as its
/// exponent vector. The empty exponent pattern (all zero) is the unit 1.
struct Monomial {
    std::vector<std::uint32_t> exp;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}

    static Monomial unit(int n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }

    /// The generator x_i (0-based index).
    static Monomial gen(int n, int i) {
        Monomial m = unit(n);
        m.exp.at(i) = 1;
        return m;
    }

    /// Tally a word into an exponent vector. Only meaningful for words that
    /// are already in nondecreasing generator order.
    static Monomial from_sorted_word(int n, std::span<const int> word) {
        Monomial m = unit(n);
        for (int g : word) m.exp.at(g) += 1;
        return m;
    }

    int num_gens() const { return static_cast<int>(exp.size()); }

    int degree() const {
        return std::accumulate(exp.begin(), exp.end(), 0);
    }

    bool is_unit() const { return degree() == 0; }

    /// Expansion as a nondecreasing word of generator indices.
    std::vector<int> word() const {
        std::vector<int> w;
        w.reserve(degree());
        for (int i = 0; i < num_gens(); ++i)
            for (std::uint32_t k = 0; k < exp[i]; ++k) w.push_back(i);
        return w;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Canonical basis order: degree first, then lexicographic on words.
/// On exponent vectors of equal degree this puts the one with the larger
/// exponent at the first differing slot earlier, e.g. with two generators
/// the degree-2 layer reads x1^2, x1 x2, x2^2.
inline int monomial_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.exp.size() && i < b.exp.size(); ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    }
    if (a.exp.size() != b.exp.size()) return a.exp.size() < b.exp.size() ? -1 : 1;
    return 0;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_cmp(a, b) < 0;
    }
};

/// Degree-then-lex comparison of raw words (sequences of generator indices).
/// This is the well-order that makes straightening terminate: every rule
/// rewrites a word to strictly smaller ones.
inline int word_cmp(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace tq
