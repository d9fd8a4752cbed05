#include "steinitz/involution.hpp"

#include "steinitz/errors.hpp"

namespace steinitz {

InvolutionLattice::InvolutionLattice(ZMat sigma) : sigma_(std::move(sigma)) {
    if (sigma_.rows() != sigma_.cols())
        throw ValidationFailed("sigma must be square");
    if (!(sigma_ * sigma_).is_identity())
        throw ValidationFailed("sigma^2 != identity");
}

ZMat fixed_sublattice(const InvolutionLattice& m) {
    return kernel(m.sigma() - ZMat::identity(m.rank()));
}

ZMat anti_fixed_sublattice(const InvolutionLattice& m) {
    return kernel(m.sigma() + ZMat::identity(m.rank()));
}

Int h1_order(const InvolutionLattice& m) {
    const std::size_t n = m.rank();
    ZMat id = ZMat::identity(n);
    ZMat ker = kernel(m.sigma() + id); // contains im(1 - sigma)
    if (ker.cols() == 0)
        return 1;
    ZMat im = id - m.sigma(); // columns generate im(1 - sigma)
    auto coords = integral_coords(ker, im);
    if (!coords)
        throw InternalError("im(1-sigma) not inside ker(1+sigma)");
    HnfResult h = hnf(*coords);
    if (h.rank != ker.cols())
        throw InternalError("im(1-sigma) has deficient rank in ker(1+sigma)");
    Int order = 1;
    for (std::size_t i = 0; i < h.rank; ++i)
        order *= h.h.at(h.pivot_rows[i], i);
    return order;
}

Int decomposition_index(const InvolutionLattice& m) {
    ZMat p = fixed_sublattice(m);
    ZMat q = anti_fixed_sublattice(m);
    if (p.cols() + q.cols() != m.rank())
        throw InfiniteIndex("fixed and anti-fixed ranks do not fill the lattice");
    Int d = det_abs(ZMat::hcat(p, q));
    if (d == 0)
        throw InfiniteIndex("degenerate eigenbasis");
    return d;
}

Theorem1Report verify_theorem1(const InvolutionLattice& m) {
    Theorem1Report r;
    r.index = decomposition_index(m);
    r.h1 = h1_order(m);
    r.rank_minus = anti_fixed_sublattice(m).cols();
    Int pow2 = 1;
    pow2 <<= r.rank_minus;
    r.holds = (r.index * r.h1 == pow2);
    return r;
}

Int sublattice_index(const ZMat& a, const ZMat& b) {
    if (a.cols() != b.cols())
        throw NotSublattice("rank mismatch between bases");
    if (a.cols() == 0)
        return 1;
    return lattice_index(a, b);
}

} // namespace steinitz
