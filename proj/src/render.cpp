#include "tq/render.hpp"

#include <stdexcept>

namespace tq {

std::string rat_str(const Rational& r) { return r.str(); }

std::string scalar_str(const Scalar& c) {
    bool has_re = !(c.re == Rational(0));
    bool has_im = !(c.im == Rational(0));
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out += c.re.str();
    if (has_im) {
        if (has_re) out += c.im < Rational(0) ? "-" : "+";
        out += (has_re && c.im < Rational(0) ? (-c.im).str() : c.im.str());
        out += "i";
    }
    return out;
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += names.at(i);
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out;
}

namespace {

// Shared sum assembly. Each term arrives as a body string plus its
// coefficient; the coefficient's sign is folded into the separator when the
// coefficient is real or purely imaginary, and complex coefficients are
// parenthesized.
struct TermWriter {
    std::string out;

    void add(const Scalar& c, const std::string& body) {
        bool has_re = !(c.re == Rational(0));
        bool has_im = !(c.im == Rational(0));
        bool negative = (has_re && !has_im && c.re < Rational(0)) ||
                        (!has_re && has_im && c.im < Rational(0));
        Scalar mag = negative ? -c : c;
        std::string coeff;
        if (has_re && has_im)
            coeff = "(" + scalar_str(mag) + ")";
        else if (!mag.is_one())
            coeff = scalar_str(mag);
        std::string term;
        if (body.empty() || body == "1")
            term = coeff.empty() ? "1" : coeff;
        else
            term = coeff.empty() ? body : coeff + " " + body;
        if (out.empty())
            out += negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
};

}  // namespace

std::string poly_str(const NcPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    TermWriter w;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        w.add(it->second, monomial_str(it->first, names));
    return w.out;
}

std::string symbol_str(const SymbolElem& g, const std::vector<std::string>& names) {
    if (g.is_zero()) return "0";
    TermWriter w;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        const auto& [h, k] = it->first;
        std::string body;
        if (!h.is_unit()) body = monomial_str(h, names);
        if (!k.is_unit()) {
            if (!body.empty()) body += "·";
            body += monomial_str(k, names) + "*";
        }
        w.add(it->second, body);  // both units: empty body renders as "1"
    }
    return w.out;
}

std::string letter_str(const Letter& l, const std::vector<std::string>& names) {
    return names.at(static_cast<std::size_t>(l.gen)) + (l.anti ? "*" : "");
}

std::string word_str(const FreeWord& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += "·";
        out += "G[" + letter_str(l, names) + "]";
    }
    return out;
}

std::string relation_str(const Relation& r, const std::vector<std::string>& names) {
    if (r.is_zero()) return "0";
    TermWriter w;
    for (auto it = r.terms.rbegin(); it != r.terms.rend(); ++it)
        w.add(it->second, it->first.empty() ? "1" : word_str(it->first, names));
    return w.out;
}

namespace {

// s^2 = hbar, so even s-powers are integer hbar powers and odd ones are
// half-integer.
std::string hbar_str(int spow) {
    if (spow == 0) return "";
    if (spow % 2 == 0) {
        int p = spow / 2;
        return p == 1 ? "hbar" : "hbar^" + std::to_string(p);
    }
    return spow == 1 ? "hbar^(1/2)" : "hbar^(" + std::to_string(spow) + "/2)";
}

}  // namespace

std::string deformed_str(const DeformedRelation& d, const std::vector<std::string>& names) {
    if (d.terms.empty()) return "0";
    TermWriter w;
    for (auto it = d.terms.rbegin(); it != d.terms.rend(); ++it) {
        std::string body = it->first.empty() ? "1" : word_str(it->first, names);
        // Highest s-power first within a word.
        for (auto pit = it->second.rbegin(); pit != it->second.rend(); ++pit) {
            std::string factor = hbar_str(pit->first);
            w.add(pit->second, factor.empty() ? body : factor + "·" + body);
        }
    }
    return w.out;
}

}  // namespace tq
