#include "tq/ccr.hpp"

#include <cstdint>
#include <stdexcept>

#include "tq/quantize.hpp"

namespace tq {

void Relation::add_term(const FreeWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Relation& Relation::operator+=(const Relation& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
}

Relation Relation::operator*(const Scalar& c) const {
    Relation r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms) r.terms.emplace(w, v * c);
    return r;
}

namespace {

TruncatedOperator letter_op(const Letter& l, const Space& sp, const Presentation& pres) {
    NcPoly g = NcPoly::monomial(Monomial::gen(static_cast<int>(pres.names.size()), l.gen));
    return l.anti ? annihilation_op(g, sp, pres) : creation_op(g, sp, pres);
}

TruncatedOperator identity_op(const Space& sp) {
    TruncatedOperator t;
    t.mat = ScalarMatrix::identity(sp.dim());
    t.raise = 0;
    t.valid_in_degree = sp.D;
    return t;
}

std::vector<Letter> alphabet(int num_gens) {
    std::vector<Letter> out;
    for (int i = 0; i < num_gens; ++i) out.push_back({false, i});
    for (int i = 0; i < num_gens; ++i) out.push_back({true, i});
    return out;
}

}  // namespace

TruncatedOperator pi_eval(const FreeWord& w, const Space& sp, const Model& model) {
    if (!(model.gram.hbar == Rational(1)))
        throw std::invalid_argument("pi_eval: model must be specialized at hbar = 1");
    if (static_cast<int>(w.size()) > model.dmax)
        throw std::invalid_argument("pi_eval: word degree exceeds dmax");
    if (2 * model.dmax > sp.D)
        throw std::invalid_argument("pi_eval: truncation degree below 2*dmax");
    TruncatedOperator acc = identity_op(sp);
    for (const Letter& l : w) acc = compose(acc, letter_op(l, sp, model.pres), sp.D);
    return acc;
}

namespace {

// Row of the kernel elimination: the flattened valid entries of a word's
// operator matrix, plus the free-algebra combination it stands for.
struct ElimRow {
    std::map<std::int64_t, Scalar> entries;
    Relation combo;

    // f by value: callers pass an entry of this->entries, erased mid-loop.
    void axpy(Scalar f, const ElimRow& o) {
        for (const auto& [i, v] : o.entries) {
            auto it = entries.find(i);
            if (it == entries.end()) {
                entries.emplace(i, -f * v);
            } else {
                it->second -= f * v;
                if (it->second.is_zero()) entries.erase(it);
            }
        }
        combo += o.combo * (-f);
    }

    void scale(const Scalar& f) {
        for (auto& [i, v] : entries) v *= f;
        combo = combo * f;
    }
};

struct KernelResult {
    std::vector<Relation> relations;
    int dim = 0;
};

// Kernel of the evaluation on words of degree <= dmax at one truncation.
// Words are processed in ascending degree-then-lex order, so each found
// combination has leading coefficient 1 on its largest word and the
// collection is already triangular.
KernelResult kernel_at(const Model& model, int dmax, int T) {
    Space sp = build_space(T, model.pres, model.gram);
    int n = static_cast<int>(model.pres.names.size());
    std::vector<Letter> alpha = alphabet(n);
    std::vector<TruncatedOperator> alpha_ops;
    for (const Letter& l : alpha) alpha_ops.push_back(letter_op(l, sp, model.pres));

    int valid_cols = 0;
    while (valid_cols < sp.dim() && sp.degree_of(valid_cols) <= T - dmax) ++valid_cols;

    std::map<std::int64_t, ElimRow> table;
    KernelResult out;

    auto feed = [&](const FreeWord& w, const TruncatedOperator& op) {
        ElimRow row;
        for (int j = 0; j < valid_cols; ++j)
            for (int i = 0; i < sp.dim(); ++i)
                if (!op.mat.at(i, j).is_zero())
                    row.entries.emplace(static_cast<std::int64_t>(j) * sp.dim() + i,
                                        op.mat.at(i, j));
        row.combo.add_term(w, Scalar(1));
        while (!row.entries.empty()) {
            auto lead = row.entries.begin();
            auto it = table.find(lead->first);
            if (it == table.end()) {
                row.scale(Scalar(1) / lead->second);
                table.emplace(lead->first, std::move(row));
                return;
            }
            row.axpy(lead->second, it->second);
        }
        out.relations.push_back(std::move(row.combo));
        ++out.dim;
    };

    std::vector<std::pair<FreeWord, TruncatedOperator>> level;
    level.emplace_back(FreeWord{}, identity_op(sp));
    feed(level[0].first, level[0].second);
    for (int d = 1; d <= dmax; ++d) {
        std::vector<std::pair<FreeWord, TruncatedOperator>> next;
        for (const auto& [w, op] : level)
            for (std::size_t li = 0; li < alpha.size(); ++li) {
                FreeWord nw = w;
                nw.push_back(alpha[li]);
                TruncatedOperator nop = compose(op, alpha_ops[li], sp.D);
                feed(nw, nop);
                next.emplace_back(std::move(nw), std::move(nop));
            }
        level = std::move(next);
    }
    return out;
}

// Clear every relation's coefficients at the leading words of the earlier
// ones; leading coefficients are already 1 by construction.
void reduce_rref(std::vector<Relation>& rels) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            auto it = rels[i].terms.find(rels[j].leading_word());
            if (it != rels[i].terms.end()) rels[i] += rels[j] * (-it->second);
        }
        Scalar lead = rels[i].terms.rbegin()->second;
        if (!lead.is_one()) rels[i] = rels[i] * (Scalar(1) / lead);
    }
}

}  // namespace

RelationFinding find_relations(const Model& model, int dmax, int D) {
    if (dmax < 1) throw std::invalid_argument("find_relations: dmax must be at least 1");
    if (D < 2 * dmax) throw std::invalid_argument("find_relations: require D >= 2*dmax");
    if (!(model.gram.hbar == Rational(1)))
        throw std::invalid_argument("find_relations: model must be specialized at hbar = 1");

    KernelResult at_d = kernel_at(model, dmax, D);
    KernelResult at_d2 = kernel_at(model, dmax, D + 2);

    // Constraints at D are a subset of those at D+2, so the confirmed span
    // is exactly the D+2 kernel.
    RelationFinding f;
    f.relations = std::move(at_d2.relations);
    reduce_rref(f.relations);
    f.dim_at_D = at_d.dim;
    f.dim_at_D2 = at_d2.dim;
    f.D = D;
    f.dmax = dmax;
    return f;
}

std::vector<Relation> homogeneous_parts(const Relation& r) {
    if (r.is_zero()) throw std::invalid_argument("homogeneous_parts: zero relation");
    std::vector<Relation> parts(static_cast<std::size_t>(r.top_degree()) + 1);
    for (const auto& [w, c] : r.terms) parts[w.size()].add_term(w, c);
    return parts;
}

bool evaluates_to_zero(const Relation& r, const Model& model, int T) {
    Space sp = build_space(T, model.pres, model.gram);
    TruncatedOperator acc;
    acc.mat = ScalarMatrix(sp.dim(), sp.dim());
    acc.raise = 0;
    acc.valid_in_degree = sp.D;
    for (const auto& [w, c] : r.terms) {
        TruncatedOperator op = identity_op(sp);
        for (const Letter& l : w) op = compose(op, letter_op(l, sp, model.pres), sp.D);
        acc = add_scaled(acc, c, op);
    }
    if (acc.valid_in_degree < 0)
        throw std::invalid_argument("evaluates_to_zero: truncation too small for the relation");
    for (int j = 0; j < sp.dim(); ++j) {
        if (sp.degree_of(j) > acc.valid_in_degree) continue;
        for (int i = 0; i < sp.dim(); ++i)
            if (!acc.mat.at(i, j).is_zero()) return false;
    }
    return true;
}

ClassicalRelation classical_relation(const Relation& r, const Model& model) {
    if (r.is_zero()) throw std::invalid_argument("classical_relation: zero relation");
    ClassicalRelation out;
    out.part = homogeneous_parts(r).back();
    out.in_kernel = evaluates_to_zero(out.part, model, model.degree) &&
                    evaluates_to_zero(out.part, model, model.degree + 2);
    return out;
}

DeformedRelation hbar_deform(const Relation& r) {
    if (r.is_zero()) throw std::invalid_argument("hbar_deform: zero relation");
    DeformedRelation d;
    d.top_degree = r.top_degree();
    for (const auto& [w, c] : r.terms)
        d.terms[w][d.top_degree - static_cast<int>(w.size())] += c;
    return d;
}

namespace {

Rational rat_pow(const Rational& b, int e) {
    if (e < 0) {
        if (b.is_zero()) throw std::domain_error("rat_pow: negative power of zero");
        return Rational(1) / rat_pow(b, -e);
    }
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

}  // namespace

Relation specialize(const DeformedRelation& d, const Rational& s) {
    Relation r;
    for (const auto& [w, sp] : d.terms)
        for (const auto& [p, c] : sp) r.add_term(w, c * Scalar(rat_pow(s, p)));
    return r;
}

DqReport dequantize(const std::vector<Relation>& relations, int num_gens, int bound) {
    if (bound < 0) throw std::invalid_argument("dequantize: negative degree bound");
    DqReport rep;
    rep.bound = bound;
    rep.num_letters = 2 * num_gens;
    for (const Relation& r : relations) {
        if (r.is_zero()) continue;
        Relation top = homogeneous_parts(r).back();
        Scalar lead = top.terms.rbegin()->second;
        if (!lead.is_one()) top = top * (Scalar(1) / lead);
        rep.classical.push_back(std::move(top));
    }

    std::int64_t base = rep.num_letters;
    auto letter_code = [&](const Letter& l) -> std::int64_t {
        return (l.anti ? num_gens : 0) + l.gen;
    };
    auto word_code = [&](const FreeWord& w) -> std::int64_t {
        std::int64_t v = 0;
        for (const Letter& l : w) v = v * base + letter_code(l);
        return v;
    };

    for (int d = 0; d <= bound; ++d) {
        std::int64_t total = 1;
        for (int i = 0; i < d; ++i) total *= base;
        // Rank of the degree-d slice of the two-sided ideal, spanned by
        // u R v over all words u, v with |u| + deg R + |v| = d.
        std::map<std::int64_t, std::map<std::int64_t, Scalar>> table;
        std::int64_t rank = 0;
        for (const Relation& rel : rep.classical) {
            int rdeg = rel.top_degree();
            if (rdeg > d) continue;
            std::vector<std::pair<std::int64_t, Scalar>> rel_codes;
            for (const auto& [w, c] : rel.terms) rel_codes.emplace_back(word_code(w), c);
            for (int a = 0; a + rdeg <= d; ++a) {
                int b = d - rdeg - a;
                std::int64_t ucount = 1, vcount = 1, vshift = 1;
                for (int i = 0; i < a; ++i) ucount *= base;
                for (int i = 0; i < b; ++i) vcount *= base, vshift *= base;
                std::int64_t mid_shift = vshift;
                for (int i = 0; i < rdeg; ++i) mid_shift *= base;
                for (std::int64_t u = 0; u < ucount; ++u)
                    for (std::int64_t v = 0; v < vcount; ++v) {
                        std::map<std::int64_t, Scalar> row;
                        for (const auto& [wc, c] : rel_codes)
                            row.emplace(u * mid_shift + wc * vshift + v, c);
                        while (!row.empty()) {
                            auto lead = row.begin();
                            auto it = table.find(lead->first);
                            if (it == table.end()) {
                                Scalar inv = Scalar(1) / lead->second;
                                for (auto& [i2, v2] : row) v2 *= inv;
                                table.emplace(lead->first, std::move(row));
                                ++rank;
                                break;
                            }
                            Scalar f = lead->second;
                            for (const auto& [i2, v2] : it->second) {
                                auto slot = row.find(i2);
                                if (slot == row.end()) {
                                    row.emplace(i2, -f * v2);
                                } else {
                                    slot->second -= f * v2;
                                    if (slot->second.is_zero()) row.erase(slot);
                                }
                            }
                        }
                    }
            }
        }
        rep.graded_dims.push_back(static_cast<int>(total - rank));
    }
    return rep;
}

}  // namespace tq
