#include "tq/model.hpp"

#include <stdexcept>
#include <string>

namespace tq {

namespace {

Rational rational_pow(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

// alpha! = prod over slots of exp[i]!
Rational multi_factorial(const Monomial& m) {
    Rational out(1);
    for (std::uint32_t e : m.exp)
        for (std::uint32_t j = 2; j <= e; ++j) out = out * Rational(static_cast<long>(j));
    return out;
}

Rational q_integer(const Rational& q, int n) {
    Rational out(0);
    Rational p(1);
    for (int j = 0; j < n; ++j) {
        out = out + p;
        p = p * q;
    }
    return out;
}

Rational diagonal_weight(const Monomial& m, const GramData& gram) {
    int d = m.degree();
    switch (gram.kind) {
        case GramKind::bargmann:
            return multi_factorial(m) * rational_pow(gram.hbar, d);
        case GramKind::qbargmann: {
            Rational w(1);
            for (int j = 1; j <= d; ++j) w = w * q_integer(gram.q, j);
            return w * rational_pow(gram.hbar, d);
        }
        case GramKind::explicit_blocks:
            break;
    }
    throw std::logic_error("diagonal_weight: not a diagonal gram kind");
}

void enumerate_degree(int slot, int remaining, std::vector<std::uint32_t>& exp,
                      std::vector<Monomial>& out) {
    int n = static_cast<int>(exp.size());
    if (slot == n - 1) {
        exp[slot] = static_cast<std::uint32_t>(remaining);
        out.push_back(Monomial{exp});
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exp[slot] = static_cast<std::uint32_t>(e);
        enumerate_degree(slot + 1, remaining - e, exp, out);
    }
}

}  // namespace

Scalar gram_pairing(const Monomial& m, const Monomial& n, const GramData& gram) {
    if (m.degree() != n.degree()) return Scalar(0);
    if (gram.kind == GramKind::explicit_blocks) {
        // The unit is normalized to weight 1; entry lines cannot name it.
        if (m.is_unit() && n.is_unit()) return Scalar(1);
        auto it = gram.entries.find({m, n});
        return it == gram.entries.end() ? Scalar(0) : it->second;
    }
    if (!(m == n)) return Scalar(0);
    return Scalar(diagonal_weight(m, gram));
}

std::vector<Monomial> basis(int D, const Presentation& pres) {
    if (D < 0) throw std::invalid_argument("basis: negative degree bound");
    int n = static_cast<int>(pres.names.size());
    std::vector<Monomial> out;
    for (int d = 0; d <= D; ++d) {
        std::vector<std::uint32_t> exp(static_cast<std::size_t>(n), 0);
        enumerate_degree(0, d, exp, out);
    }
    return out;
}

Space build_space(int D, const Presentation& pres, const GramData& gram) {
    if (gram.kind == GramKind::qbargmann && pres.names.size() != 1)
        throw std::invalid_argument("q-bargmann gram requires exactly one generator");
    if (!(gram.hbar > Rational(0)))
        throw std::invalid_argument("gram data: hbar must be positive");

    Space sp;
    sp.D = D;
    sp.elems = basis(D, pres);
    for (int i = 0; i < sp.dim(); ++i) sp.index.emplace(sp.elems[i], i);
    sp.offset.assign(static_cast<std::size_t>(D) + 2, 0);
    for (const Monomial& m : sp.elems) ++sp.offset[static_cast<std::size_t>(m.degree()) + 1];
    for (int d = 0; d <= D; ++d) sp.offset[d + 1] += sp.offset[d];

    if (gram.kind == GramKind::explicit_blocks)
        for (const auto& [pr, sc] : gram.entries)
            if (pr.first.degree() != pr.second.degree() && !sc.is_zero())
                throw std::invalid_argument("gram data: entry pairs monomials of unequal degree");

    for (int d = 0; d <= D; ++d) {
        int sz = sp.block_size(d);
        ScalarMatrix G(sz, sz);
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j)
                G.at(i, j) = gram_pairing(sp.elems[sp.offset[d] + i], sp.elems[sp.offset[d] + j], gram);
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j)
                if (!(G.at(i, j) == G.at(j, i).conj()))
                    throw std::invalid_argument("gram data: degree " + std::to_string(d) +
                                                " block is not Hermitian");
        // Sylvester: every leading principal minor strictly positive.
        for (int k = 1; k <= sz; ++k) {
            ScalarMatrix minor(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor.at(i, j) = G.at(i, j);
            Scalar det = minor.determinant();
            if (!det.is_real() || !(det.re > Rational(0)))
                throw std::invalid_argument("gram data: degree " + std::to_string(d) +
                                            " block is not positive definite");
        }
        sp.gram_inv.push_back(G.inverse());
        sp.gram.push_back(std::move(G));
    }
    return sp;
}

}  // namespace tq
