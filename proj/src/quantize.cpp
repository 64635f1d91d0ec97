#include "tq/quantize.hpp"

#include <climits>
#include <random>
#include <stdexcept>

#include "tq/render.hpp"

namespace tq {

Scalar inner_product(const NcPoly& phi, const NcPoly& psi, const GramData& gram) {
    Scalar out(0);
    for (const auto& [m, a] : phi)
        for (const auto& [n, b] : psi) {
            if (m.degree() != n.degree()) continue;
            out += a.conj() * b * gram_pairing(m, n, gram);
        }
    return out;
}

Scalar star_inner_product(const SymbolElem& a, const SymbolElem& b, const GramData& gram) {
    if (!in_star_span(a) || !in_star_span(b))
        throw std::invalid_argument(
            "star_inner_product: arguments must lie in the conjugated span");
    // <a, b>_* = <b*, a*> with the stars landing back in P.
    return inner_product(extract_poly(conjugate(b)), extract_poly(conjugate(a)), gram);
}

std::vector<Scalar> to_coords(const NcPoly& p, const Space& sp) {
    std::vector<Scalar> v(static_cast<std::size_t>(sp.dim()), Scalar(0));
    for (const auto& [m, c] : p) {
        auto it = sp.index.find(m);
        if (it == sp.index.end())
            throw std::invalid_argument("to_coords: term degree exceeds truncation");
        v[static_cast<std::size_t>(it->second)] = c;
    }
    return v;
}

NcPoly from_coords(const std::vector<Scalar>& v, const Space& sp) {
    NcPoly p;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.add_term(sp.elems[i], v[i]);
    return p;
}

TruncatedOperator creation_op(const NcPoly& h, const Space& sp, const Presentation& pres) {
    TruncatedOperator op;
    op.mat = ScalarMatrix(sp.dim(), sp.dim());
    op.raise = std::max(0, h.degree());
    op.valid_in_degree = sp.D - op.raise;
    for (int j = 0; j < sp.dim(); ++j) {
        NcPoly col = multiply(NcPoly::monomial(sp.elems[j]), h, pres);
        for (const auto& [m, c] : col) {
            if (m.degree() > sp.D) continue;
            op.mat.at(sp.index.at(m), j) = c;
        }
    }
    return op;
}

namespace {

ScalarMatrix block_of(const ScalarMatrix& m, int r0, int nr, int c0, int nc) {
    ScalarMatrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b.at(i, j) = m.at(r0 + i, c0 + j);
    return b;
}

}  // namespace

TruncatedOperator annihilation_op(const NcPoly& k, const Space& sp, const Presentation& pres) {
    TruncatedOperator c = creation_op(k, sp, pres);
    TruncatedOperator op;
    op.mat = ScalarMatrix(sp.dim(), sp.dim());
    int min_deg = INT_MAX;
    for (const auto& [m, s] : k) min_deg = std::min(min_deg, m.degree());
    op.raise = k.is_zero() ? 0 : -min_deg;
    op.valid_in_degree = sp.D - std::max(0, op.raise);

    // Adjoint of C with respect to the graded form, block by block:
    // the (e, d) block of the adjoint is G_e^{-1} (C_{d,e})^H G_d.
    for (int e = 0; e <= sp.D; ++e) {
        for (const auto& [m, s] : k) {
            int d = e + m.degree();
            if (d > sp.D) continue;
            ScalarMatrix cde =
                block_of(c.mat, sp.offset[d], sp.block_size(d), sp.offset[e], sp.block_size(e));
            if (cde.is_zero()) continue;
            ScalarMatrix blk =
                sp.gram_inv[e].multiply(cde.conj_transpose()).multiply(sp.gram[d]);
            for (int i = 0; i < blk.rows; ++i)
                for (int j = 0; j < blk.cols; ++j)
                    op.mat.at(sp.offset[e] + i, sp.offset[d] + j) += blk.at(i, j);
        }
    }
    return op;
}

TruncatedOperator toeplitz_op(const SymbolElem& g, const Space& sp, const Presentation& pres) {
    TruncatedOperator acc;
    bool first = true;
    for (const auto& [pr, c] : g) {
        const auto& [h, k] = pr;
        TruncatedOperator t = compose(annihilation_op(NcPoly::monomial(k), sp, pres),
                                      creation_op(NcPoly::monomial(h), sp, pres), sp.D);
        if (first) {
            t.mat *= c;
            acc = std::move(t);
            first = false;
        } else {
            acc = add_scaled(acc, c, t);
        }
    }
    if (first) {
        acc.mat = ScalarMatrix(sp.dim(), sp.dim());
        acc.raise = 0;
        acc.valid_in_degree = sp.D;
    }
    return acc;
}

NcPoly projection(const SymbolElem& g, const Space& sp, const Presentation& pres) {
    TruncatedOperator t = toeplitz_op(g, sp, pres);
    if (t.valid_in_degree < 0)
        throw std::invalid_argument("projection: symbol degree exceeds truncation");
    NcPoly out;
    for (int i = 0; i < sp.dim(); ++i)
        if (!t.mat.at(i, 0).is_zero()) out.add_term(sp.elems[i], t.mat.at(i, 0));
    return out;
}

namespace {

// Deterministic randomized inputs. Hand-rolled modulo draw so the stream is
// identical across platforms.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational() {
        int num = uniform(-3, 3);
        int den = uniform(1, 2);
        return Rational(num, den);
    }

    Scalar scalar() {
        Scalar c{rational()};
        if (uniform(0, 2) == 0) c += Scalar(Rational(0), rational());
        if (c.is_zero()) c = Scalar(1);
        return c;
    }

    Monomial monomial(int n, int max_deg) {
        int d = uniform(0, max_deg);
        std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
        for (int t = 0; t < d; ++t) ++e[static_cast<std::size_t>(uniform(0, n - 1))];
        return Monomial(std::move(e));
    }

    NcPoly poly(int n, int max_deg) {
        NcPoly p;
        int t = uniform(1, 3);
        for (int i = 0; i < t; ++i) p.add_term(monomial(n, max_deg), scalar());
        return p;
    }

    SymbolElem symbol(int n, int max_h, int max_k) {
        SymbolElem g;
        int t = uniform(1, 3);
        for (int i = 0; i < t; ++i) g.add_term(monomial(n, max_h), monomial(n, max_k), scalar());
        return g;
    }
};

// Columns of degree <= min validity hold true operator entries on both
// sides; rows need no restriction because a valid column is untruncated.
bool equal_on_valid(const TruncatedOperator& x, const TruncatedOperator& y, const Space& sp) {
    int v = std::min(x.valid_in_degree, y.valid_in_degree);
    for (int j = 0; j < sp.dim(); ++j) {
        if (sp.degree_of(j) > v) continue;
        for (int i = 0; i < sp.dim(); ++i)
            if (!(x.mat.at(i, j) == y.mat.at(i, j))) return false;
    }
    return true;
}

}  // namespace

AxiomReport verify_axioms(const Model& model, int D, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_axioms: trials must be at least 1");
    const Presentation& pres = model.pres;
    int n = static_cast<int>(pres.names.size());
    const auto& names = pres.names;
    Space sp = build_space(D, pres, model.gram);
    int cap = std::max(1, D / 4);

    AxiomReport rep;
    rep.degree = D;
    rep.trials = trials;
    rep.seed = seed;
    Rng rng(seed);

    {
        AxiomCheck c{"T1_identity"};
        TruncatedOperator t = toeplitz_op(SymbolElem::one(n), sp, pres);
        if (!(t.mat == ScalarMatrix::identity(sp.dim()))) {
            c.pass = false;
            c.witness = "T_1 differs from the identity matrix";
        }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c{"Tg_equals_Mg"};
        for (int t = 0; t < trials && c.pass; ++t) {
            NcPoly psi = rng.poly(n, cap);
            TruncatedOperator tg = toeplitz_op(embed_poly(psi, n), sp, pres);
            TruncatedOperator mg = creation_op(psi, sp, pres);
            if (!(tg.mat == mg.mat)) {
                c.pass = false;
                c.witness = "psi = " + poly_str(psi, names);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c{"TgTpsi_compose"};
        for (int t = 0; t < trials && c.pass; ++t) {
            SymbolElem g = rng.symbol(n, cap, cap);
            NcPoly psi = rng.poly(n, cap);
            TruncatedOperator left =
                compose(toeplitz_op(g, sp, pres), creation_op(psi, sp, pres), sp.D);
            TruncatedOperator right = toeplitz_op(left_act(psi, g, pres), sp, pres);
            if (!equal_on_valid(left, right, sp)) {
                c.pass = false;
                c.witness =
                    "g = " + symbol_str(g, names) + ", psi = " + poly_str(psi, names);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c{"adjoint_pairing"};
        for (int t = 0; t < trials && c.pass; ++t) {
            SymbolElem g = rng.symbol(n, cap, cap);
            TruncatedOperator tg = toeplitz_op(g, sp, pres);
            TruncatedOperator ts = toeplitz_op(conjugate(g), sp, pres);
            if (tg.valid_in_degree < 0 || ts.valid_in_degree < 0) continue;
            NcPoly phi1 = rng.poly(n, tg.valid_in_degree);
            NcPoly phi2 = rng.poly(n, ts.valid_in_degree);
            Scalar lhs = inner_product(from_coords(tg.mat.apply(to_coords(phi1, sp)), sp),
                                       phi2, model.gram);
            Scalar rhs = inner_product(phi1, from_coords(ts.mat.apply(to_coords(phi2, sp)), sp),
                                       model.gram);
            if (!(lhs == rhs)) {
                c.pass = false;
                c.witness = "g = " + symbol_str(g, names) + ", phi1 = " + poly_str(phi1, names) +
                            ", phi2 = " + poly_str(phi2, names);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c{"anti_wick"};
        for (int t = 0; t < trials && c.pass; ++t) {
            Monomial h = rng.monomial(n, cap);
            Monomial k = rng.monomial(n, cap);
            TruncatedOperator lhs = toeplitz_op(SymbolElem::term(h, k), sp, pres);
            TruncatedOperator rhs = compose(annihilation_op(NcPoly::monomial(k), sp, pres),
                                            creation_op(NcPoly::monomial(h), sp, pres), sp.D);
            if (!(lhs.mat == rhs.mat)) {
                c.pass = false;
                c.witness = "h = " + monomial_str(h, names) + ", k = " + monomial_str(k, names);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c{"product_reversal"};
        for (int t = 0; t < trials && c.pass; ++t) {
            int m = rng.uniform(2, 3);
            std::vector<NcPoly> fs;
            NcPoly prod = NcPoly::one(n);
            for (int i = 0; i < m; ++i) {
                fs.push_back(NcPoly::monomial(rng.monomial(n, cap), rng.scalar()));
                prod = multiply(prod, fs.back(), pres);
            }
            TruncatedOperator lhs = toeplitz_op(embed_poly(prod, n), sp, pres);
            TruncatedOperator rhs = toeplitz_op(embed_poly(fs[m - 1], n), sp, pres);
            for (int i = m - 2; i >= 0; --i)
                rhs = compose(rhs, toeplitz_op(embed_poly(fs[i], n), sp, pres), sp.D);
            if (!equal_on_valid(lhs, rhs, sp)) {
                c.pass = false;
                c.witness = "factors = " + poly_str(fs[0], names) + " ; " + poly_str(fs[1], names);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c{"star_product_reversal"};
        for (int t = 0; t < trials && c.pass; ++t) {
            int m = rng.uniform(2, 3);
            std::vector<SymbolElem> stars;
            for (int i = 0; i < m; ++i)
                stars.push_back(star_of(NcPoly::monomial(rng.monomial(n, cap), rng.scalar()), n));
            SymbolElem prod = stars[0];
            for (int i = 1; i < m; ++i) prod = star_multiply(prod, stars[i], pres);
            TruncatedOperator lhs = toeplitz_op(prod, sp, pres);
            TruncatedOperator rhs = toeplitz_op(stars[m - 1], sp, pres);
            for (int i = m - 2; i >= 0; --i)
                rhs = compose(rhs, toeplitz_op(stars[i], sp, pres), sp.D);
            if (!equal_on_valid(lhs, rhs, sp)) {
                c.pass = false;
                c.witness = "m = " + std::to_string(m);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c{"projection_idempotent"};
        for (int t = 0; t < trials && c.pass; ++t) {
            NcPoly phi = rng.poly(n, cap);
            if (!(projection(embed_poly(phi, n), sp, pres) == phi)) {
                c.pass = false;
                c.witness = "phi = " + poly_str(phi, names);
                break;
            }
            SymbolElem g = rng.symbol(n, cap, cap);
            NcPoly p1 = projection(g, sp, pres);
            NcPoly p2 = projection(embed_poly(p1, n), sp, pres);
            if (!(p1 == p2)) {
                c.pass = false;
                c.witness = "g = " + symbol_str(g, names);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        AxiomCheck c{"gram_adjoint_matrix"};
        for (int t = 0; t < trials && c.pass; ++t) {
            SymbolElem g = rng.symbol(n, cap, cap);
            TruncatedOperator tg = toeplitz_op(g, sp, pres);
            TruncatedOperator ts = toeplitz_op(conjugate(g), sp, pres);
            for (int i = 0; i < sp.dim() && c.pass; ++i) {
                if (sp.degree_of(i) > tg.valid_in_degree) continue;
                NcPoly ei = NcPoly::monomial(sp.elems[i]);
                NcPoly tei = from_coords(tg.mat.apply(to_coords(ei, sp)), sp);
                for (int j = 0; j < sp.dim(); ++j) {
                    if (sp.degree_of(j) > ts.valid_in_degree) continue;
                    NcPoly ej = NcPoly::monomial(sp.elems[j]);
                    Scalar lhs = inner_product(tei, ej, model.gram);
                    Scalar rhs = inner_product(
                        ei, from_coords(ts.mat.apply(to_coords(ej, sp)), sp), model.gram);
                    if (!(lhs == rhs)) {
                        c.pass = false;
                        c.witness = "g = " + symbol_str(g, names) + ", basis pair (" +
                                    monomial_str(sp.elems[i], names) + ", " +
                                    monomial_str(sp.elems[j], names) + ")";
                        break;
                    }
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

KernelWitness kernel_witness_check(const SymbolElem& g, const Space& sp,
                                   const Presentation& pres) {
    TruncatedOperator t = toeplitz_op(g, sp, pres);
    KernelWitness w;
    w.toeplitz_zero = true;
    for (int j = 0; j < sp.dim() && w.toeplitz_zero; ++j) {
        if (sp.degree_of(j) > t.valid_in_degree) continue;
        for (int i = 0; i < sp.dim(); ++i)
            if (!t.mat.at(i, j).is_zero()) {
                w.toeplitz_zero = false;
                break;
            }
    }
    w.range_in_kernel = true;
    for (int j = 0; j < sp.dim() && w.range_in_kernel; ++j) {
        if (sp.degree_of(j) > t.valid_in_degree) continue;
        SymbolElem mg = left_act(NcPoly::monomial(sp.elems[j]), g, pres);
        if (!projection(mg, sp, pres).is_zero()) w.range_in_kernel = false;
    }
    return w;
}

}  // namespace tq
