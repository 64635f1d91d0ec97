#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tq/model.hpp"
#include "tq/symbol.hpp"

namespace tq {

// Sesquilinear pairing on P, conjugate-linear in the FIRST argument,
// graded: terms of different degree pair to zero.
Scalar inner_product(const NcPoly& phi, const NcPoly& psi, const GramData& gram);

// Pairing on the conjugated span: <a, b>_* := <b*, a*>. The star map is
// anti-unitary between the two pairings. Throws when an argument has a term
// outside the conjugated span.
Scalar star_inner_product(const SymbolElem& a, const SymbolElem& b, const GramData& gram);

std::vector<Scalar> to_coords(const NcPoly& p, const Space& sp);
NcPoly from_coords(const std::vector<Scalar>& v, const Space& sp);

// A*(h): right multiplication by h on the truncated basis. raise = deg h.
TruncatedOperator creation_op(const NcPoly& h, const Space& sp, const Presentation& pres);

// A(k): the exact Gram adjoint of creation_op(k), computed blockwise as
// G_e^{-1} C^H G_d. Lowers degree, so it is exact on the whole truncated
// basis (valid_in_degree = D).
TruncatedOperator annihilation_op(const NcPoly& k, const Space& sp, const Presentation& pres);

// T_g for g = sum c (h, k): sum of c A(k)A*(h). This anti-Wick factored form
// is the definition of the quantization here; the usual axioms are then
// theorems checked by verify_axioms.
TruncatedOperator toeplitz_op(const SymbolElem& g, const Space& sp, const Presentation& pres);

// P(g) := T_g(1). Identity on embedded polynomials, idempotent through embed.
NcPoly projection(const SymbolElem& g, const Space& sp, const Presentation& pres);

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // empty when pass; first failing instance otherwise
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    int degree = 0;
    int trials = 0;
    std::uint64_t seed = 0;

    bool all_pass() const {
        for (const AxiomCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Exact verification of the operator identities on their validity regions:
// T_1 = I, T_psi = M_psi, T_g T_psi = T_{psi g}, the adjoint pairing, the
// anti-Wick factorization, product reversal on both sides, projection
// idempotence, and the Gram-adjoint matrix identity. Randomized inputs,
// deterministic for a fixed seed; every comparison is exact.
AxiomReport verify_axioms(const Model& model, int D, int trials, std::uint64_t seed);

struct KernelWitness {
    bool toeplitz_zero = false;
    bool range_in_kernel = false;
    bool agree() const { return toeplitz_zero == range_in_kernel; }
};

// Two sides of the kernel criterion, computed along independent paths:
// whether T_g vanishes on the validity region, and whether the range of
// M_g projects to zero there.
KernelWitness kernel_witness_check(const SymbolElem& g, const Space& sp,
                                   const Presentation& pres);

}  // namespace tq
