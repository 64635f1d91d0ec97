#pragma once

#include <map>
#include <utility>

#include "tq/presentation.hpp"

namespace tq {

/// Term key of a symbol: the pair (h, k) stands for h k* with h, k ordered
/// monomials. Terms with k = 1 span the polynomial algebra itself, terms
/// with h = 1 span its conjugate.
using MonoPair = std::pair<Monomial, Monomial>;

struct MonoPairLess {
    bool operator()(const MonoPair& a, const MonoPair& b) const {
        int c = monomial_cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return monomial_cmp(a.second, b.second) < 0;
    }
};

/// Element of the symbol space: a finite linear combination of h k* terms.
/// The space carries a conjugation and a left module action but, by design,
/// no full product; mixed products k* h are deliberately not defined.
class SymbolElem {
public:
    using TermMap = std::map<MonoPair, Scalar, MonoPairLess>;

    SymbolElem() = default;

    static SymbolElem zero() { return SymbolElem(); }
    static SymbolElem one(int n) {
        return SymbolElem::term(Monomial::unit(n), Monomial::unit(n));
    }
    static SymbolElem term(const Monomial& h, const Monomial& k,
                           const Scalar& c = Scalar(1)) {
        SymbolElem g;
        g.add_term(h, k, c);
        return g;
    }

    void add_term(const Monomial& h, const Monomial& k, const Scalar& c) {
        if (c.is_zero()) return;
        MonoPair key{h, k};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    /// Maximal degree of the polynomial (left) sides; -1 when zero.
    int holo_degree() const {
        int d = -1;
        for (const auto& [p, c] : terms_) d = std::max(d, p.first.degree());
        return d;
    }
    /// Maximal degree of the conjugated (right) sides; -1 when zero.
    int anti_degree() const {
        int d = -1;
        for (const auto& [p, c] : terms_) d = std::max(d, p.second.degree());
        return d;
    }

    Scalar coeff(const Monomial& h, const Monomial& k) const {
        auto it = terms_.find({h, k});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    SymbolElem operator-() const {
        SymbolElem r;
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }
    SymbolElem& operator+=(const SymbolElem& o) {
        for (const auto& [p, c] : o.terms_) add_term(p.first, p.second, c);
        return *this;
    }
    SymbolElem& operator-=(const SymbolElem& o) {
        for (const auto& [p, c] : o.terms_) add_term(p.first, p.second, -c);
        return *this;
    }
    SymbolElem& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, v] : terms_) v *= c;
        return *this;
    }

    friend SymbolElem operator+(SymbolElem a, const SymbolElem& b) { return a += b; }
    friend SymbolElem operator-(SymbolElem a, const SymbolElem& b) { return a -= b; }
    friend SymbolElem operator*(SymbolElem a, const Scalar& c) { return a *= c; }
    friend SymbolElem operator*(const Scalar& c, SymbolElem a) { return a *= c; }
    friend bool operator==(const SymbolElem& a, const SymbolElem& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymbolElem& a, const SymbolElem& b) { return !(a == b); }

    const TermMap& terms() const { return terms_; }
    TermMap::const_iterator begin() const { return terms_.begin(); }
    TermMap::const_iterator end() const { return terms_.end(); }

private:
    TermMap terms_;
};

/// Embeds a polynomial as the symbol p * 1. Linear.
SymbolElem embed_poly(const NcPoly& p, int num_gens);

/// True when every term has trivial conjugate part (the symbol lies in the
/// embedded polynomial algebra).
bool in_poly_span(const SymbolElem& g);

/// True when every term has trivial polynomial part (the symbol lies in the
/// conjugated span).
bool in_star_span(const SymbolElem& g);

/// Inverse of embed_poly. Throws unless in_poly_span(g).
NcPoly extract_poly(const SymbolElem& g);

/// Anti-linear involution c (h, k) -> conj(c) (k, h).
SymbolElem conjugate(const SymbolElem& g);

/// The symbol k* for a polynomial k; equals conjugate(embed_poly(k)).
SymbolElem star_of(const NcPoly& k, int num_gens);

/// Left action phi . (h, k) = (phi h, k), expanded to normal form. Restricts
/// to the algebra product on the embedded polynomial span.
SymbolElem left_act(const NcPoly& phi, const SymbolElem& g, const Presentation& pres);

/// Product on the conjugated span: (k*) (l*) := (l k)*. Throws if either
/// argument has a term outside that span.
SymbolElem star_multiply(const SymbolElem& a, const SymbolElem& b, const Presentation& pres);

}  // namespace tq
