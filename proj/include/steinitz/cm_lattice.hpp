#pragma once

#include <string>
#include <vector>

#include "steinitz/involution.hpp"
#include "steinitz/pseudo_module.hpp"

namespace steinitz {

/// Integer lattice of rank 2l carrying a Galois involution sigma and the
/// complex-multiplication action S of sqrt(-D), as matrices on a fixed basis.
class CMLattice {
public:
    CMLattice(QuadField field, ZMat sigma, ZMat s);

    const QuadField& field() const { return field_; }
    const ZMat& sigma() const { return sigma_; }
    const ZMat& S() const { return s_; }
    std::size_t rank() const { return sigma_.rows(); }

private:
    QuadField field_;
    ZMat sigma_, s_;
};

/// Per-invariant validation flags; validate_cm reports, it never throws.
struct CMValidation {
    bool even_rank = false;
    bool sigma_involution = false;   // sigma^2 = 1
    bool cm_square = false;          // S^2 = -D
    bool semilinear = false;         // sigma S = -S sigma
    bool rank_balanced = false;      // rank M+ = rank M- = l
    bool half_integral_action = true; // (1+S)/2 integral when D = 3 mod 4
    std::size_t l = 0;
    bool ok() const {
        return even_rank && sigma_involution && cm_square && semilinear &&
               rank_balanced && half_integral_action;
    }
    std::vector<std::string> failures() const;
};

CMValidation validate_cm(const CMLattice& m);

/// The action of omega on the lattice: S in plain mode, (1+S)/2 otherwise.
ZMat omega_action(const CMLattice& m);

/// Z-basis of L = O_K * M+ (rank 2l, certifying Lemma 6 freeness); throws
/// RankDefect if the span is degenerate.
ZMat ok_span_fixed(const CMLattice& m);

struct Lemma3Report {
    Int idx1; // (M- : S M+)
    Int idx2; // (M+ : S M-)
    bool holds;
};
Lemma3Report lemma3_check(const CMLattice& m);

struct Theorem3Report {
    Int h1;
    bool sum_equals_whole; // O_K M+ + M- = M
    bool holds;
};
Theorem3Report theorem3_check(const CMLattice& m); // throws ModeMismatch

struct PipelineReport {
    std::size_t l = 0;
    Int h1;
    Int idx_anti;             // (M- : S M+)
    Int index_lm;             // (L : Msub)
    unsigned t = 0;
    unsigned r = 0;
    std::size_t steinitz_index = 0;
    bool steinitz_principal = false;
    QForm steinitz_form;
    bool cross_checked = false;
    std::vector<std::string> notes;
};

/// D = p prime, p = 3 mod 4: index (L : S*M) = p^t and the Steinitz class is
/// principal; cross-checked through the constructive decomposition.
PipelineReport theorem4_pipeline(const CMLattice& m, const ClassGroup& cg);

/// D = p prime, p = 1 mod 4: (L : 2S*M) = 2^t p^r, St = [P]^t for the
/// ramified prime P over 2, with 2^t = 2^l |H^1| and the decomposition class
/// as independent checks.
PipelineReport theorem5_pipeline(const CMLattice& m, const ClassGroup& cg);

/// D = 10 Dummit-Miller criterion: parity of v_2(2^l |H^1| (M- : S M+))
/// fixes the class; the lattice form also runs (L : 2S*M) and the
/// decomposition cross-check.
PipelineReport dm_pipeline(const CMLattice& m, const ClassGroup& cg);

struct DmInvariantReport {
    Int quantity; // 2^l * h1 * idx_anti
    unsigned e;   // v_2(quantity)
    bool principal;
    std::size_t class_index;
    QForm steinitz_form;
};
/// Invariant-triple form of the criterion, evaluated in the D = 10 class
/// group.
DmInvariantReport dm_from_invariants(unsigned l, const Int& h1, const Int& idx_anti,
                                     const ClassGroup& cg);

/// Generators of Msub expressed on the free O_K-basis of L = O_K M+, as a
/// pseudo-module inside O_K^l.
PseudoModule coords_module(const CMLattice& m, const ZMat& sub_gens);

} // namespace steinitz
