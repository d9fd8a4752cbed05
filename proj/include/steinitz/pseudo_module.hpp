#pragma once

#include <array>
#include <vector>

#include "steinitz/ideal.hpp"

namespace steinitz {

/// Fractional ideal num/den with den > 0, normalized so that den is coprime
/// to the content of num.
struct FracIdeal {
    IdealHNF num;
    Int den;
    FracIdeal() : den(1) {}
    FracIdeal(IdealHNF n, Int d) : num(std::move(n)), den(std::move(d)) {}
    static FracIdeal unit() { return {}; }
    bool operator==(const FracIdeal& o) const { return num == o.num && den == o.den; }
    bool is_integral() const { return den == 1; }
    std::string str() const;
};

FracIdeal normalize(FracIdeal f);
FracIdeal frac_mul(const FracIdeal& x, const FracIdeal& y, const QuadField& k);
/// Inverse via the conjugate: A^-1 = conj(A) / N(A).
FracIdeal frac_inv(const FracIdeal& x, const QuadField& k);
/// Z-basis of the fractional ideal as two K-numbers.
std::array<KNum, 2> frac_basis(const FracIdeal& x);

/// One pseudo-generator: the sub-O_K-module coeff * vec of K^n.
struct PseudoElem {
    FracIdeal coeff;
    std::vector<KNum> vec;
};

/// Finitely generated torsion-free O_K-module presented inside K^n as a sum
/// of pseudo-generators.
struct PseudoModule {
    std::size_t n = 0;
    std::vector<PseudoElem> elems;

    static PseudoModule standard(std::size_t n); // O_K^n
    static PseudoModule from_vectors(std::size_t n, const std::vector<std::vector<KNum>>& gens);
    static PseudoModule direct_sum(const PseudoModule& a, const PseudoModule& b);
};

/// Flatten to a Z-lattice in Z^(2n) on the per-coordinate basis (1, omega):
/// returns integer generator columns together with the common denominator
/// that was cleared.
struct FlatLattice {
    ZMat gens;
    Int den;
};
FlatLattice flatten(const PseudoModule& m, const QuadField& k);

/// The constructive decomposition M = B_1 + ... + B_n of a finite-index
/// submodule of O_K^n: project onto the last coordinate, split off a copy of
/// the image ideal with a Bezout-chosen element mapping to 1, recurse on the
/// kernel part.  Throws NotIntegral / NotFiniteIndex on bad input.
std::vector<FracIdeal> theorem2_decompose(const PseudoModule& m, const QuadField& k);

struct SteinitzResult {
    IdealHNF ideal;          // integral representative of the product of the B_i
    std::size_t class_index; // position in the class group
    Int norm;                // = (O_K^n : M) for integral full-rank input
};

SteinitzResult steinitz_class(const PseudoModule& m, const ClassGroup& cg);

/// Independent index oracle: |det| ratio of the flattened Z-lattice bases.
/// Throws NotSubmodule when M is not inside L.
Int module_index_oracle(const PseudoModule& l, const PseudoModule& m, const QuadField& k);

/// Explicit change of pseudo-basis realizing A1 + A2 = O_K + A1*A2 on K^2:
/// columns f1, f2 give the new basis vectors in coordinates of (e1, e2);
/// coefficient ideals are O_K and A1*A2.  lattices_match records the Z-lattice
/// equality check of the two pseudo-modules.
struct Lemma5Witness {
    std::array<KNum, 2> f1, f2;
    FracIdeal c1, c2;
    bool lattices_match;
};

Lemma5Witness lemma5_witness(const IdealHNF& a1, const IdealHNF& a2, const QuadField& k);

} // namespace steinitz
