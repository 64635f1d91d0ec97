#include "tq/symbol.hpp"

#include <stdexcept>

namespace tq {

SymbolElem embed_poly(const NcPoly& p, int num_gens) {
    SymbolElem g;
    Monomial unit = Monomial::unit(num_gens);
    for (const auto& [m, c] : p) g.add_term(m, unit, c);
    return g;
}

bool in_poly_span(const SymbolElem& g) {
    for (const auto& [p, c] : g)
        if (!p.second.is_unit()) return false;
    return true;
}

bool in_star_span(const SymbolElem& g) {
    for (const auto& [p, c] : g)
        if (!p.first.is_unit()) return false;
    return true;
}

NcPoly extract_poly(const SymbolElem& g) {
    if (!in_poly_span(g))
        throw std::invalid_argument("extract_poly: symbol has conjugate-side terms");
    NcPoly out;
    for (const auto& [p, c] : g) out.add_term(p.first, c);
    return out;
}

SymbolElem conjugate(const SymbolElem& g) {
    SymbolElem out;
    for (const auto& [p, c] : g) out.add_term(p.second, p.first, c.conj());
    return out;
}

SymbolElem star_of(const NcPoly& k, int num_gens) {
    return conjugate(embed_poly(k, num_gens));
}

SymbolElem left_act(const NcPoly& phi, const SymbolElem& g, const Presentation& pres) {
    SymbolElem out;
    for (const auto& [pair, c] : g) {
        NcPoly moved = multiply(phi, NcPoly::monomial(pair.first), pres);
        for (const auto& [m, mc] : moved) out.add_term(m, pair.second, c * mc);
    }
    return out;
}

SymbolElem star_multiply(const SymbolElem& a, const SymbolElem& b, const Presentation& pres) {
    if (!in_star_span(a) || !in_star_span(b))
        throw std::invalid_argument(
            "star_multiply: arguments must lie in the conjugated span");
    // (k*)(l*) = (l k)*, term by term, anti-linearly in the coefficients:
    // restore the underlying polynomials, multiply in reverse order, conjugate.
    int n = pres.num_gens();
    NcPoly ka = extract_poly(conjugate(a));
    NcPoly kb = extract_poly(conjugate(b));
    return star_of(multiply(kb, ka, pres), n);
}

}  // namespace tq
