#pragma once

#include <map>

#include "tq/monomial.hpp"
#include "tq/scalar.hpp"

namespace tq {

/// Noncommutative polynomial in normal form: a finite linear combination of
/// ordered monomials. Zero coefficients are never stored, so term-map
/// equality is equality of polynomials.
class NcPoly {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    NcPoly() = default;

    static NcPoly zero() { return NcPoly(); }
    static NcPoly one(int n) { return NcPoly::monomial(Monomial::unit(n)); }
    static NcPoly monomial(const Monomial& m, const Scalar& c = Scalar(1)) {
        NcPoly p;
        p.add_term(m, c);
        return p;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    /// Maximal term degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    NcPoly operator-() const {
        NcPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    NcPoly& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
    friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    const TermMap& terms() const { return terms_; }
    TermMap::const_iterator begin() const { return terms_.begin(); }
    TermMap::const_iterator end() const { return terms_.end(); }

private:
    TermMap terms_;
};

}  // namespace tq
