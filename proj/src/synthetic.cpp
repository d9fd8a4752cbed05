#include "steinitz/synthetic.hpp"

namespace steinitz {
namespace synthetic {

Unimodular random_unimodular(std::size_t n, Rng& rng, int steps) {
    if (steps < 0)
        steps = static_cast<int>(3 * n + 4);
    ZMat u = ZMat::identity(n);
    ZMat uinv = ZMat::identity(n);
    if (n < 2)
        return {u, uinv};
    for (int s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.pick(0, static_cast<long>(n) - 1));
        int kind = static_cast<int>(rng.pick(0, 2));
        if (kind == 0 && i != j) {
            // row_i += c * row_j on u  <=>  col_j -= c * col_i on uinv
            Int c(rng.pick(-2, 2));
            if (c == 0)
                continue;
            for (std::size_t t = 0; t < n; ++t)
                u.at(i, t) += c * u.at(j, t);
            uinv.addmul_col(j, i, -c);
        } else if (kind == 1 && i != j) {
            for (std::size_t t = 0; t < n; ++t)
                std::swap(u.at(i, t), u.at(j, t));
            uinv.swap_cols(i, j);
        } else {
            for (std::size_t t = 0; t < n; ++t)
                u.at(i, t) = -u.at(i, t);
            uinv.negate_col(i);
        }
    }
    return {u, uinv};
}

InvolutionLattice random_involution(std::size_t max_rank, Rng& rng) {
    std::size_t m = 0;
    std::vector<int> blocks; // 0: [1], 1: [-1], 2: swap
    while (true) {
        std::size_t room = max_rank - m;
        if (room == 0)
            break;
        if (m > 0 && rng.pick(0, 3) == 0)
            break;
        int b = static_cast<int>(rng.pick(0, room >= 2 ? 2 : 1));
        blocks.push_back(b);
        m += (b == 2) ? 2 : 1;
    }
    ZMat sigma(m, m);
    std::size_t at = 0;
    for (int b : blocks) {
        if (b == 0) {
            sigma.at(at, at) = 1;
            at += 1;
        } else if (b == 1) {
            sigma.at(at, at) = -1;
            at += 1;
        } else {
            sigma.at(at, at + 1) = 1;
            sigma.at(at + 1, at) = 1;
            at += 2;
        }
    }
    Unimodular u = random_unimodular(m, rng);
    return InvolutionLattice(u.u * sigma * u.uinv);
}

CMLattice cm_from_module(const QuadField& k, std::size_t copies, const IdealHNF& a) {
    const std::size_t l = copies + 1;
    const std::size_t n = 2 * l;
    // flat basis per coordinate: (1, omega); last coordinate uses the HNF
    // basis of the ideal.
    ZMat basis(n, n);
    for (std::size_t i = 0; i < copies; ++i) {
        basis.at(2 * i, 2 * i) = 1;
        basis.at(2 * i + 1, 2 * i + 1) = 1;
    }
    basis.at(2 * copies, 2 * copies) = a.a;
    basis.at(2 * copies, 2 * copies + 1) = a.b;
    basis.at(2 * copies + 1, 2 * copies + 1) = a.c;

    // conjugation and sqrt(-D) on the flat coordinates
    ZMat conj2(2, 2), cm2(2, 2);
    if (k.half()) {
        conj2.at(0, 0) = 1; conj2.at(0, 1) = 1;
        conj2.at(1, 1) = -1;
        cm2.at(0, 0) = -1; cm2.at(0, 1) = -(1 + k.D()) / 2;
        cm2.at(1, 0) = 2;  cm2.at(1, 1) = 1;
    } else {
        conj2.at(0, 0) = 1;
        conj2.at(1, 1) = -1;
        cm2.at(0, 1) = -k.D();
        cm2.at(1, 0) = 1;
    }
    auto blockdiag = [&](const ZMat& b) {
        ZMat m(n, n);
        for (std::size_t c = 0; c < l; ++c)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    m.at(2 * c + i, 2 * c + j) = b.at(i, j);
        return m;
    };
    ZMat conj_flat = blockdiag(conj2);
    ZMat cm_flat = blockdiag(cm2);

    auto on_basis = [&](const ZMat& flat, const char* what) {
        auto x = integral_coords(basis, flat * basis);
        if (!x)
            throw InternalError(std::string("module not stable under ") + what);
        return *x;
    };
    ZMat sigma = on_basis(conj_flat, "conjugation");
    ZMat s = on_basis(cm_flat, "sqrt(-D)");
    return CMLattice(k, std::move(sigma), std::move(s));
}

CMLattice conjugated(const CMLattice& m, const Unimodular& u) {
    return CMLattice(m.field(), u.u * m.sigma() * u.uinv, u.u * m.S() * u.uinv);
}

IdealHNF random_stable_ideal(const QuadField& k, Rng& rng) {
    std::vector<IdealHNF> ramified;
    for (Int q = 2; q < 50; ++q) {
        if (!is_prime(q) || mod_floor(k.disc(), q) != 0)
            continue;
        PrimeSplit ps = prime_above(q, k);
        if (ps.type == SplitType::Ramified)
            ramified.push_back(ps.p1);
    }
    IdealHNF a = unit_ideal();
    for (const auto& p : ramified)
        if (rng.pick(0, 2) == 0)
            a = ideal_mul(a, p, k);
    long scale = rng.pick(1, 3);
    if (scale > 1)
        a = ideal_mul(a, IdealHNF(Int(scale), Int(0), Int(scale)), k);
    return a;
}

SyntheticCM random_cm(const ClassGroup& cg, std::size_t max_l, Rng& rng) {
    const QuadField& k = cg.field;
    std::size_t l = static_cast<std::size_t>(rng.pick(1, static_cast<long>(max_l)));
    IdealHNF a = random_stable_ideal(k, rng);
    CMLattice base = cm_from_module(k, l - 1, a);
    Unimodular u = random_unimodular(base.rank(), rng);
    SyntheticCM out{conjugated(base, u), a, ideal_class_of(a, cg), l};
    return out;
}

PseudoModule random_pseudo_module(const QuadField& k, std::size_t n, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        PseudoModule m;
        m.n = n;
        std::size_t gens = n + 1 + static_cast<std::size_t>(rng.pick(0, 1));
        for (std::size_t g = 0; g < gens; ++g) {
            PseudoElem e;
            e.coeff = FracIdeal::unit();
            e.vec.resize(n);
            bool zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                e.vec[i] = KNum{Rat(rng.pick(-3, 3)), Rat(rng.pick(-3, 3))};
                zero = zero && e.vec[i].is_zero();
            }
            if (zero)
                e.vec[0] = KNum{Rat(1), Rat(0)};
            if (rng.pick(0, 3) == 0) {
                // scale one generator by a small algebraic integer
                KNum s{Rat(rng.pick(1, 2)), Rat(rng.pick(0, 1))};
                for (auto& x : e.vec)
                    x = k.mul(s, x);
            }
            m.elems.push_back(std::move(e));
        }
        FlatLattice fl = flatten(m, k);
        if (rank(fl.gens) == 2 * n)
            return m;
    }
    throw InternalError("could not sample a full-rank module");
}

PseudoModule unimodular_regenerate(const PseudoModule& m, const QuadField& k, Rng& rng) {
    const std::size_t g = m.elems.size();
    for (const auto& e : m.elems)
        if (!e.coeff.is_integral() || !(e.coeff.num == unit_ideal()))
            throw InternalError("regeneration needs plain O_K coefficients");
    Unimodular u = random_unimodular(g, rng);
    PseudoModule out;
    out.n = m.n;
    out.elems.resize(g);
    for (std::size_t i = 0; i < g; ++i) {
        out.elems[i].coeff = FracIdeal::unit();
        out.elems[i].vec.assign(m.n, KNum{});
        for (std::size_t j = 0; j < g; ++j) {
            const Int& c = u.u.at(i, j);
            if (c == 0)
                continue;
            for (std::size_t t = 0; t < m.n; ++t)
                out.elems[i].vec[t] =
                    k.add(out.elems[i].vec[t], k.mul(KNum{Rat(c), Rat(0)}, m.elems[j].vec[t]));
        }
    }
    // drop zero rows that a degenerate combination might have produced
    std::vector<PseudoElem> kept;
    for (auto& e : out.elems) {
        bool zero = true;
        for (const auto& x : e.vec)
            zero = zero && x.is_zero();
        if (!zero)
            kept.push_back(std::move(e));
    }
    out.elems = std::move(kept);
    return out;
}

} // namespace synthetic
} // namespace steinitz
