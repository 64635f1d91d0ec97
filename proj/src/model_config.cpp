#include "tq/model_config.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "tq/presentation.hpp"
#include "tq/render.hpp"

namespace tq {

namespace {

struct Tok {
    enum Kind { Ident, Int, Punct, End } kind = End;
    std::string text;
    int col = 0;  // 1-based
};

std::vector<Tok> tokenize_line(const std::string& line, std::vector<Diagnostic>& diags,
                               int lineno) {
    std::vector<Tok> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;
        int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) ||
                                       line[j] == '_'))
                ++j;
            toks.push_back({Tok::Ident, line.substr(i, j - i), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            toks.push_back({Tok::Int, line.substr(i, j - i), col});
            i = j;
        } else if (std::string("=:,[]/+-*").find(c) != std::string::npos) {
            toks.push_back({Tok::Punct, std::string(1, c), col});
            ++i;
        } else {
            diags.push_back({lineno, col, std::string("unexpected character '") + c + "'"});
            ++i;
        }
    }
    toks.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
    return toks;
}

// Cursor over one line of tokens.
struct Cur {
    const std::vector<Tok>* toks;
    std::size_t at = 0;

    const Tok& peek() const { return (*toks)[std::min(at, toks->size() - 1)]; }
    const Tok& next() { return (*toks)[std::min(at++, toks->size() - 1)]; }
    bool is_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
    bool eat_punct(const char* p) {
        if (!is_punct(p)) return false;
        ++at;
        return true;
    }
    bool done() const { return peek().kind == Tok::End; }
};

struct Parser {
    std::vector<Diagnostic> diags;
    int lineno = 0;

    void err(int col, std::string msg) { diags.push_back({lineno, col, std::move(msg)}); }

    // INT [/ INT], with an optional leading sign already consumed by caller.
    std::optional<Rational> rational(Cur& c) {
        if (c.peek().kind != Tok::Int) {
            err(c.peek().col, "expected a number");
            return std::nullopt;
        }
        std::string num = c.next().text;
        std::string den = "1";
        if (c.eat_punct("/")) {
            if (c.peek().kind != Tok::Int) {
                err(c.peek().col, "expected a denominator");
                return std::nullopt;
            }
            den = c.next().text;
        }
        if (mpz_class(den) == 0) {
            err(c.peek().col, "zero denominator");
            return std::nullopt;
        }
        return Rational(mpq_class(mpz_class(num), mpz_class(den)));
    }

    // [sign] component [(+|-) component], component = rational ['i'] | 'i'.
    std::optional<Scalar> scalar(Cur& c) {
        Scalar out(0);
        bool first = true;
        while (true) {
            bool neg = false;
            if (c.eat_punct("-"))
                neg = true;
            else if (c.eat_punct("+"))
                neg = false;
            else if (!first)
                break;
            Rational mag(1);
            bool imag = false;
            if (c.peek().kind == Tok::Ident && c.peek().text == "i") {
                c.next();
                imag = true;
            } else {
                auto r = rational(c);
                if (!r) return std::nullopt;
                mag = *r;
                if (c.peek().kind == Tok::Ident && c.peek().text == "i") {
                    c.next();
                    imag = true;
                }
            }
            if (neg) mag = -mag;
            if (imag)
                out += Scalar(Rational(0), mag);
            else
                out += Scalar(mag);
            if (first)
                first = false;
            else
                break;
            if (!c.is_punct("+") && !c.is_punct("-")) break;
        }
        return out;
    }
};

int gen_index(const std::vector<std::string>& gens, const std::string& name) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace

ParseResult parse_model(const std::string& text, bool run_confluence) {
    ParseResult res;
    ModelConfig& cfg = res.config;
    Parser P;

    enum class Section { none, algebra, params, gram, truncation, ccr, unknown };
    Section sec = Section::none;
    int algebra_line = 1;
    std::map<std::string, std::pair<int, int>> param_pos;
    // Right sides are parsed after the whole file is read, so [params] may
    // come later in the file than the rules that use it.
    struct PendingRule {
        int j, i, line, col;
        std::vector<Tok> rhs_toks;
    };
    std::vector<PendingRule> pending_rules;
    struct PendingEntry {
        Monomial m1, m2;
        Scalar value;
        int line, col;
        bool diagonal;
    };
    std::vector<PendingEntry> pending_entries;
    bool saw_explicit_lines = false;

    std::istringstream stream(text);
    std::string raw;
    int lineno = 0;

    // Monomial word: juxtaposed generator letters, required nondecreasing.
    auto parse_word = [&](Cur& c) -> std::optional<Monomial> {
        std::vector<int> word;
        while (c.peek().kind == Tok::Ident) {
            int g = gen_index(cfg.generators, c.peek().text);
            if (g < 0) break;
            c.next();
            word.push_back(g);
        }
        if (word.empty()) {
            P.err(c.peek().col, "expected a monomial");
            return std::nullopt;
        }
        if (!std::is_sorted(word.begin(), word.end())) {
            P.err(c.peek().col, "monomial letters must be in generator order");
            return std::nullopt;
        }
        return Monomial::from_sorted_word(static_cast<int>(cfg.generators.size()), word);
    };

    // term+ separated by +/-: each term is coefficient atoms (numbers, i,
    // parameters) followed by generator letters.
    auto parse_rule_rhs = [&](Cur& c) -> std::optional<NcPoly> {
        NcPoly out;
        bool first = true;
        while (true) {
            bool neg = false;
            if (c.eat_punct("-"))
                neg = true;
            else if (c.eat_punct("+"))
                neg = false;
            else if (!first) {
                P.err(c.peek().col, "expected '+' or '-'");
                return std::nullopt;
            }
            first = false;
            Scalar coeff(1);
            std::vector<int> word;
            bool any = false;
            while (true) {
                const Tok& t = c.peek();
                if (t.kind == Tok::Int) {
                    auto r = P.rational(c);
                    if (!r) return std::nullopt;
                    if (!word.empty()) {
                        P.err(t.col, "coefficient after generator letters");
                        return std::nullopt;
                    }
                    coeff *= Scalar(*r);
                    any = true;
                } else if (t.kind == Tok::Ident) {
                    if (t.text == "i") {
                        if (!word.empty()) {
                            P.err(t.col, "coefficient after generator letters");
                            return std::nullopt;
                        }
                        coeff *= Scalar::i();
                        c.next();
                        any = true;
                        continue;
                    }
                    int g = gen_index(cfg.generators, t.text);
                    if (g >= 0) {
                        word.push_back(g);
                        c.next();
                        any = true;
                        continue;
                    }
                    auto it = cfg.params.find(t.text);
                    if (it != cfg.params.end()) {
                        if (!word.empty()) {
                            P.err(t.col, "coefficient after generator letters");
                            return std::nullopt;
                        }
                        coeff *= Scalar(it->second);
                        c.next();
                        any = true;
                        continue;
                    }
                    P.err(t.col, "unbound parameter " + t.text);
                    return std::nullopt;
                } else {
                    break;
                }
            }
            if (!any) {
                P.err(c.peek().col, "expected a term");
                return std::nullopt;
            }
            if (!std::is_sorted(word.begin(), word.end())) {
                P.err(c.peek().col, "rule terms must use ordered monomials");
                return std::nullopt;
            }
            if (neg) coeff = -coeff;
            out.add_term(Monomial::from_sorted_word(static_cast<int>(cfg.generators.size()), word),
                         coeff);
            if (c.done()) break;
            if (!c.is_punct("+") && !c.is_punct("-")) {
                P.err(c.peek().col, "expected '+' or '-'");
                return std::nullopt;
            }
        }
        return out;
    };

    while (std::getline(stream, raw)) {
        ++lineno;
        P.lineno = lineno;
        std::vector<Tok> toks = tokenize_line(raw, P.diags, lineno);
        Cur c{&toks};
        if (c.done()) continue;

        if (c.is_punct("[")) {
            c.next();
            if (c.peek().kind != Tok::Ident) {
                P.err(c.peek().col, "expected a section name");
                continue;
            }
            std::string name = c.next().text;
            if (!c.eat_punct("]")) {
                P.err(c.peek().col, "expected ']'");
                continue;
            }
            if (name == "algebra") {
                sec = Section::algebra;
                algebra_line = lineno;
            } else if (name == "params")
                sec = Section::params;
            else if (name == "gram")
                sec = Section::gram;
            else if (name == "truncation")
                sec = Section::truncation;
            else if (name == "ccr")
                sec = Section::ccr;
            else {
                P.err(c.peek().col, "unknown section [" + name + "]");
                sec = Section::unknown;
            }
            if (!c.done()) P.err(c.peek().col, "trailing tokens after section header");
            continue;
        }

        if (sec == Section::unknown) continue;
        if (sec == Section::none) {
            P.err(c.peek().col, "content before the first section header");
            continue;
        }

        if (c.peek().kind != Tok::Ident) {
            P.err(c.peek().col, "expected a key");
            continue;
        }
        std::string key = c.next().text;

        switch (sec) {
            case Section::algebra: {
                if (key == "generators") {
                    if (!c.eat_punct("=")) {
                        P.err(c.peek().col, "expected '='");
                        break;
                    }
                    if (!cfg.generators.empty()) {
                        P.err(c.peek().col, "generators already declared");
                        break;
                    }
                    while (true) {
                        if (c.peek().kind != Tok::Ident) {
                            P.err(c.peek().col, "expected a generator name");
                            break;
                        }
                        std::string g = c.next().text;
                        if (g == "i" || g == "hbar") {
                            P.err(c.peek().col, "'" + g + "' is reserved");
                        } else if (gen_index(cfg.generators, g) >= 0) {
                            P.err(c.peek().col, "duplicate generator " + g);
                        } else {
                            cfg.generators.push_back(g);
                        }
                        if (!c.eat_punct(",")) break;
                    }
                    if (!c.done()) P.err(c.peek().col, "trailing tokens");
                } else if (key == "rule") {
                    if (!c.eat_punct(":")) {
                        P.err(c.peek().col, "expected ':' after rule");
                        break;
                    }
                    int col0 = c.peek().col;
                    std::string ga, gb;
                    if (c.peek().kind == Tok::Ident) ga = c.next().text;
                    if (c.peek().kind == Tok::Ident) gb = c.next().text;
                    int j = gen_index(cfg.generators, ga);
                    int i = gen_index(cfg.generators, gb);
                    if (ga.empty() || gb.empty() || j < 0 || i < 0) {
                        P.err(col0, "rule left side must be two known generators");
                        break;
                    }
                    if (!c.eat_punct("=")) {
                        P.err(c.peek().col, "expected '='");
                        break;
                    }
                    if (j <= i) {
                        P.err(col0, "rule left side must be a descent (later generator first)");
                        break;
                    }
                    pending_rules.push_back(
                        {j, i, lineno, col0, std::vector<Tok>(toks.begin() + c.at, toks.end())});
                } else {
                    P.err(c.peek().col, "unknown key '" + key + "' in [algebra]");
                }
                break;
            }
            case Section::params: {
                if (!c.eat_punct("=")) {
                    P.err(c.peek().col, "expected '='");
                    break;
                }
                if (key == "i") {
                    P.err(c.peek().col, "'i' is reserved");
                    break;
                }
                bool neg = c.eat_punct("-");
                auto r = P.rational(c);
                if (!r) break;
                if (!c.done()) {
                    P.err(c.peek().col, "parameters must be rational numbers");
                    break;
                }
                if (cfg.params.count(key)) {
                    P.err(c.peek().col, "duplicate parameter " + key);
                    break;
                }
                cfg.params.emplace(key, neg ? -*r : *r);
                param_pos[key] = {lineno, c.peek().col};
                break;
            }
            case Section::gram: {
                if (key == "kind") {
                    if (!c.eat_punct("=")) {
                        P.err(c.peek().col, "expected '='");
                        break;
                    }
                    std::string rest;
                    for (std::size_t t = c.at; t + 1 < toks.size(); ++t) rest += toks[t].text;
                    if (rest == "bargmann")
                        cfg.gram_kind = GramKind::bargmann;
                    else if (rest == "q-bargmann")
                        cfg.gram_kind = GramKind::qbargmann;
                    else if (rest == "explicit")
                        cfg.gram_kind = GramKind::explicit_blocks;
                    else
                        P.err(c.peek().col, "unknown gram kind '" + rest + "'");
                } else if (key == "weight" || key == "entry") {
                    saw_explicit_lines = true;
                    if (!c.eat_punct(":")) {
                        P.err(c.peek().col, "expected ':'");
                        break;
                    }
                    int col0 = c.peek().col;
                    auto m1 = parse_word(c);
                    if (!m1) break;
                    std::optional<Monomial> m2;
                    if (key == "entry") {
                        if (!c.eat_punct(",")) {
                            P.err(c.peek().col, "expected ',' between the two monomials");
                            break;
                        }
                        m2 = parse_word(c);
                        if (!m2) break;
                    }
                    if (!c.eat_punct("=")) {
                        P.err(c.peek().col, "expected '='");
                        break;
                    }
                    auto v = P.scalar(c);
                    if (!v) break;
                    if (!c.done()) {
                        P.err(c.peek().col, "trailing tokens");
                        break;
                    }
                    if (key == "weight") {
                        if (!v->is_real() || !(v->re > Rational(0))) {
                            P.err(col0, "non-positive weight");
                            break;
                        }
                        pending_entries.push_back({*m1, *m1, *v, lineno, col0, true});
                    } else {
                        if (m1->degree() != m2->degree()) {
                            P.err(col0, "entry pairs monomials of unequal degree");
                            break;
                        }
                        pending_entries.push_back({*m1, *m2, *v, lineno, col0, false});
                    }
                } else {
                    P.err(c.peek().col, "unknown key '" + key + "' in [gram]");
                }
                break;
            }
            case Section::truncation:
            case Section::ccr: {
                std::string want = sec == Section::truncation ? "degree" : "dmax";
                if (key != want) {
                    P.err(c.peek().col, "unknown key '" + key + "'");
                    break;
                }
                if (!c.eat_punct("=")) {
                    P.err(c.peek().col, "expected '='");
                    break;
                }
                if (c.peek().kind != Tok::Int || c.peek().text.size() > 6) {
                    P.err(c.peek().col, "expected a small integer");
                    break;
                }
                int v = std::stoi(c.next().text);
                if (sec == Section::truncation) {
                    if (v < 0 || v > 64) {
                        P.err(c.peek().col, "degree out of range (0..64)");
                        break;
                    }
                    cfg.degree = v;
                } else {
                    if (v < 1 || v > 8) {
                        P.err(c.peek().col, "dmax out of range (1..8)");
                        break;
                    }
                    cfg.dmax = v;
                }
                if (!c.done()) P.err(c.peek().col, "trailing tokens");
                break;
            }
            default:
                break;
        }
    }

    // Semantic validation.
    if (cfg.generators.empty()) {
        P.lineno = algebra_line;
        P.err(1, "no generators declared");
        res.diagnostics.insert(res.diagnostics.end(), P.diags.begin(), P.diags.end());
        return res;
    }
    for (const std::string& g : cfg.generators)
        if (cfg.params.count(g)) {
            auto [l, col] = param_pos[g];
            P.diags.push_back({l, col, "'" + g + "' is both a generator and a parameter"});
        }

    int n = static_cast<int>(cfg.generators.size());
    for (auto& pr : pending_rules) {
        P.lineno = pr.line;
        Cur rc{&pr.rhs_toks};
        auto rhs = parse_rule_rhs(rc);
        if (!rhs) continue;
        if (cfg.rules.count({pr.j, pr.i})) {
            P.diags.push_back({pr.line, pr.col, "duplicate rule for this generator pair"});
            continue;
        }
        std::string msg = check_rule(n, pr.j, pr.i, *rhs);
        if (!msg.empty()) {
            P.diags.push_back({pr.line, pr.col, msg});
            continue;
        }
        cfg.rules.emplace(std::make_pair(pr.j, pr.i), std::move(*rhs));
    }
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (!cfg.rules.count({j, i}))
                P.diags.push_back({algebra_line, 1,
                                   "no rule for " + cfg.generators[j] + " " + cfg.generators[i]});

    if (auto it = cfg.params.find("hbar");
        it != cfg.params.end() && !(it->second > Rational(0))) {
        auto [l, col] = param_pos["hbar"];
        P.diags.push_back({l, col, "hbar must be positive"});
    }

    if (saw_explicit_lines && cfg.gram_kind != GramKind::explicit_blocks)
        P.diags.push_back(
            {algebra_line, 1, "weight and entry lines require gram kind = explicit"});
    if (cfg.gram_kind == GramKind::qbargmann && n != 1)
        P.diags.push_back({algebra_line, 1, "q-bargmann gram requires exactly one generator"});

    if (cfg.gram_kind == GramKind::explicit_blocks) {
        for (const auto& pe : pending_entries) {
            if (pe.m1.degree() > cfg.degree) continue;
            MonoPair k1{pe.m1, pe.m2}, k2{pe.m2, pe.m1};
            Scalar conj = pe.value.conj();
            auto it = cfg.gram_entries.find(k1);
            if (it != cfg.gram_entries.end() && !(it->second == pe.value)) {
                P.diags.push_back({pe.line, pe.col, "conflicting gram entry"});
                continue;
            }
            cfg.gram_entries[k1] = pe.value;
            auto it2 = cfg.gram_entries.find(k2);
            if (it2 != cfg.gram_entries.end() && !(it2->second == conj)) {
                P.diags.push_back({pe.line, pe.col, "conflicting gram entry (not Hermitian)"});
                continue;
            }
            cfg.gram_entries[k2] = conj;
        }
        Presentation ptmp{cfg.generators, cfg.rules};
        for (const Monomial& m : basis(cfg.degree, ptmp))
            if (m.degree() > 0 && !cfg.gram_entries.count({m, m})) {
                P.diags.push_back({algebra_line, 1,
                                   "missing weight for monomial of degree " +
                                       std::to_string(m.degree())});
                break;
            }
    }

    res.diagnostics.insert(res.diagnostics.end(), P.diags.begin(), P.diags.end());

    if (res.ok() && run_confluence && n > 1) {
        Presentation pres{cfg.generators, cfg.rules};
        ConfluenceReport rep = check_confluence(pres, 3);
        for (const ConfluenceFailure& f : rep.failures) {
            std::string w;
            for (int g : f.word) {
                if (!w.empty()) w += ' ';
                w += cfg.generators[static_cast<std::size_t>(g)];
            }
            res.diagnostics.push_back(
                {algebra_line, 1, "straightening rules are not confluent: witness " + w});
            break;
        }
    }
    return res;
}

namespace {

// Rule right sides and gram monomials use repeated-letter words, and complex
// coefficients split into a real and an imaginary term, so the canonical
// form stays inside the line grammar.
std::string word_text(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (int g : m.word()) {
        if (!out.empty()) out += ' ';
        out += names[static_cast<std::size_t>(g)];
    }
    return out;
}

void append_term(std::string& out, bool& first, const Rational& mag, bool imag,
                 const std::string& word) {
    Rational m = mag;
    bool neg = m < Rational(0);
    if (neg) m = -m;
    if (first) {
        if (neg) out += "- ";
        first = false;
    } else {
        out += neg ? " - " : " + ";
    }
    std::string body;
    if (!(m.is_one()) || (!imag && word.empty())) body = m.str();
    if (imag) body += body.empty() ? "i" : " i";
    if (!word.empty()) body += (body.empty() ? "" : " ") + word;
    out += body;
}

std::string rhs_text(const NcPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p) {
        std::string w = word_text(m, names);
        if (!c.re.is_zero()) append_term(out, first, c.re, false, w);
        if (!c.im.is_zero()) append_term(out, first, c.im, true, w);
    }
    return out;
}

std::string scalar_text(const Scalar& c) {
    std::string out;
    bool first = true;
    if (!c.re.is_zero()) append_term(out, first, c.re, false, "");
    if (!c.im.is_zero()) append_term(out, first, c.im, true, "");
    if (first) out = "0";
    return out;
}

}  // namespace

std::string render_model(const ModelConfig& cfg) {
    std::string out = "[algebra]\ngenerators = ";
    for (std::size_t i = 0; i < cfg.generators.size(); ++i) {
        if (i) out += ", ";
        out += cfg.generators[i];
    }
    out += '\n';
    for (const auto& [key, rhs] : cfg.rules)
        out += "rule: " + cfg.generators[static_cast<std::size_t>(key.first)] + " " +
               cfg.generators[static_cast<std::size_t>(key.second)] + " = " +
               rhs_text(rhs, cfg.generators) + "\n";
    if (!cfg.params.empty()) {
        out += "\n[params]\n";
        for (const auto& [k, v] : cfg.params) out += k + " = " + v.str() + "\n";
    }
    out += "\n[gram]\nkind = ";
    switch (cfg.gram_kind) {
        case GramKind::bargmann: out += "bargmann"; break;
        case GramKind::qbargmann: out += "q-bargmann"; break;
        case GramKind::explicit_blocks: out += "explicit"; break;
    }
    out += '\n';
    if (cfg.gram_kind == GramKind::explicit_blocks) {
        MonoPairLess less;
        for (const auto& [pr, v] : cfg.gram_entries) {
            if (pr.first == pr.second)
                out += "weight: " + word_text(pr.first, cfg.generators) + " = " + scalar_text(v) +
                       "\n";
            else if (less(pr, MonoPair{pr.second, pr.first}))
                out += "entry: " + word_text(pr.first, cfg.generators) + " , " +
                       word_text(pr.second, cfg.generators) + " = " + scalar_text(v) + "\n";
        }
    }
    out += "\n[truncation]\ndegree = " + std::to_string(cfg.degree) + "\n";
    out += "\n[ccr]\ndmax = " + std::to_string(cfg.dmax) + "\n";
    return out;
}

Model build_model(const ModelConfig& cfg) {
    Model m;
    m.pres.names = cfg.generators;
    m.pres.rules = cfg.rules;
    m.gram.kind = cfg.gram_kind;
    if (auto it = cfg.params.find("hbar"); it != cfg.params.end()) m.gram.hbar = it->second;
    if (auto it = cfg.params.find("q"); it != cfg.params.end()) m.gram.q = it->second;
    m.gram.entries = cfg.gram_entries;
    m.degree = cfg.degree;
    m.dmax = cfg.dmax;
    return m;
}

SymbolElem parse_symbol_expr(const std::string& text, const ModelConfig& cfg,
                             std::vector<Diagnostic>& diags) {
    std::vector<Tok> toks = tokenize_line(text, diags, 1);
    Cur c{&toks};
    std::vector<int> plain;
    std::vector<int> starred;
    std::string last_starred;
    while (!c.done()) {
        if (c.peek().kind != Tok::Ident) {
            diags.push_back({1, c.peek().col, "expected a generator letter"});
            return SymbolElem::zero();
        }
        const Tok& t = c.next();
        int g = gen_index(cfg.generators, t.text);
        if (g < 0) {
            diags.push_back({1, t.col, "unknown generator " + t.text});
            return SymbolElem::zero();
        }
        bool star = c.eat_punct("*");
        if (star) {
            starred.push_back(g);
            last_starred = t.text;
        } else if (!starred.empty()) {
            diags.push_back({1, t.col,
                             "the product " + last_starred + "* " + t.text +
                                 " is undefined in this realization; write symbols in "
                                 "anti-Wick form (plain letters before starred ones)"});
            return SymbolElem::zero();
        } else {
            plain.push_back(g);
        }
    }
    if (plain.empty() && starred.empty()) {
        diags.push_back({1, 1, "empty symbol expression"});
        return SymbolElem::zero();
    }
    Presentation pres{cfg.generators, cfg.rules};
    NcPoly h = normal_form(plain, pres);
    std::reverse(starred.begin(), starred.end());
    NcPoly k = normal_form(starred, pres);
    return left_act(h, star_of(k, pres.num_gens()), pres);
}

}  // namespace tq
