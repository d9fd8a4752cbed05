#pragma once

#include "steinitz/zmat.hpp"

namespace steinitz {

/// Z^m with an order-2 action: sigma^2 = 1.
class InvolutionLattice {
public:
    explicit InvolutionLattice(ZMat sigma); // throws ValidationFailed
    std::size_t rank() const { return sigma_.rows(); }
    const ZMat& sigma() const { return sigma_; }

private:
    ZMat sigma_;
};

/// Saturated Z-basis (columns) of ker(sigma - 1).
ZMat fixed_sublattice(const InvolutionLattice& m);
/// Saturated Z-basis (columns) of ker(sigma + 1).
ZMat anti_fixed_sublattice(const InvolutionLattice& m);

/// |H^1(G, M)| = |ker(1 + sigma) / im(1 - sigma)| for the order-2 action.
Int h1_order(const InvolutionLattice& m);

/// (Z^m : M+ + M-); throws InfiniteIndex when the eigenranks do not fill m.
Int decomposition_index(const InvolutionLattice& m);

struct Theorem1Report {
    Int index;
    Int h1;
    std::size_t rank_minus;
    bool holds; // index * h1 == 2^rank_minus
};

Theorem1Report verify_theorem1(const InvolutionLattice& m);

/// (span(A) : span(B)) for equal-rank B inside span(A); throws NotSublattice
/// on non-integral coordinates.
Int sublattice_index(const ZMat& a, const ZMat& b);

} // namespace steinitz
