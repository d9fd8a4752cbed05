#pragma once

#include <random>

#include "steinitz/cm_lattice.hpp"

namespace steinitz {
namespace synthetic {

/// Deterministic generator; every randomized suite takes an explicit seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    /// Uniform integer in [lo, hi].
    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen_);
    }

private:
    std::mt19937_64 gen_;
};

/// Random unimodular matrix together with its inverse (built from elementary
/// operations, entries kept small).
struct Unimodular {
    ZMat u, uinv;
};
Unimodular random_unimodular(std::size_t n, Rng& rng, int steps = -1);

/// Block-diagonal involution from [1], [-1] and swap blocks, conjugated by a
/// random unimodular matrix.
InvolutionLattice random_involution(std::size_t max_rank, Rng& rng);

/// CM lattice built from the module O_K^copies + A for a sigma-stable ideal
/// A, with sigma = coordinatewise conjugation and S = multiplication by
/// sqrt(-D), conjugated by a random unimodular matrix.  The Steinitz class of
/// the module is the class of A.
struct SyntheticCM {
    CMLattice lattice;
    IdealHNF ideal;
    std::size_t true_class;
    std::size_t l;
};

CMLattice cm_from_module(const QuadField& k, std::size_t copies, const IdealHNF& a);
CMLattice conjugated(const CMLattice& m, const Unimodular& u);

/// Random sigma-stable ideal: a product of ramified primes and a rational
/// integer.
IdealHNF random_stable_ideal(const QuadField& k, Rng& rng);

SyntheticCM random_cm(const ClassGroup& cg, std::size_t max_l, Rng& rng);

/// Random full-rank integral pseudo-module inside O_K^n.
PseudoModule random_pseudo_module(const QuadField& k, std::size_t n, Rng& rng);

/// Replace the generating set by a random unimodular combination of itself
/// (same module, different presentation).
PseudoModule unimodular_regenerate(const PseudoModule& m, const QuadField& k, Rng& rng);

} // namespace synthetic
} // namespace steinitz
