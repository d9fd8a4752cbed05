#include "steinitz/cm_lattice.hpp"

#include <sstream>

namespace steinitz {

CMLattice::CMLattice(QuadField field, ZMat sigma, ZMat s)
    : field_(std::move(field)), sigma_(std::move(sigma)), s_(std::move(s)) {
    if (sigma_.rows() != sigma_.cols() || s_.rows() != s_.cols() ||
        sigma_.rows() != s_.rows())
        throw ValidationFailed("sigma and S must be square of equal size");
}

std::vector<std::string> CMValidation::failures() const {
    std::vector<std::string> out;
    if (!even_rank)
        out.push_back("OddRank");
    if (!sigma_involution)
        out.push_back("SigmaSquare");
    if (!cm_square)
        out.push_back("CMSquare");
    if (!semilinear)
        out.push_back("Semilinearity");
    if (!rank_balanced)
        out.push_back("RankBalance");
    if (!half_integral_action)
        out.push_back("HalfIntegralAction");
    return out;
}

CMValidation validate_cm(const CMLattice& m) {
    CMValidation v;
    const std::size_t n = m.rank();
    v.even_rank = (n % 2 == 0);
    v.l = n / 2;
    ZMat id = ZMat::identity(n);
    v.sigma_involution = (m.sigma() * m.sigma()).is_identity();
    v.cm_square = (m.S() * m.S() == id.scaled(-m.field().D()));
    v.semilinear = (m.sigma() * m.S() == -(m.S() * m.sigma()));
    std::size_t rp = kernel(m.sigma() - id).cols();
    std::size_t rm = kernel(m.sigma() + id).cols();
    v.rank_balanced = (rp == v.l && rm == v.l);
    if (m.field().half()) {
        v.half_integral_action = true;
        ZMat w = id + m.S();
        for (std::size_t i = 0; i < n && v.half_integral_action; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (mod_floor(w.at(i, j), 2) != 0) {
                    v.half_integral_action = false;
                    break;
                }
    }
    return v;
}

ZMat omega_action(const CMLattice& m) {
    if (!m.field().half())
        return m.S();
    ZMat w = ZMat::identity(m.rank()) + m.S();
    ZMat r(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            r.at(i, j) = exact_div(w.at(i, j), 2);
    return r;
}

static void require_valid(const CMLattice& m) {
    CMValidation v = validate_cm(m);
    if (!v.ok()) {
        std::ostringstream os;
        os << "invalid CM lattice:";
        for (const auto& f : v.failures())
            os << " " << f;
        throw ValidationFailed(os.str());
    }
}

/// Columns [P | omega(P)] for the fixed-part basis P; spans O_K * M+.
static ZMat free_basis(const CMLattice& m) {
    InvolutionLattice inv(m.sigma());
    ZMat p = fixed_sublattice(inv);
    return ZMat::hcat(p, omega_action(m) * p);
}

ZMat ok_span_fixed(const CMLattice& m) {
    require_valid(m);
    InvolutionLattice inv(m.sigma());
    ZMat p = fixed_sublattice(inv);
    ZMat gens = ZMat::hcat(ZMat::hcat(p, m.S() * p), omega_action(m) * p);
    HnfResult h = hnf(gens);
    if (h.rank != m.rank())
        throw RankDefect("O_K * M+ has rank below 2l");
    return h.h;
}

Lemma3Report lemma3_check(const CMLattice& m) {
    require_valid(m);
    InvolutionLattice inv(m.sigma());
    ZMat p = fixed_sublattice(inv);
    ZMat q = anti_fixed_sublattice(inv);
    Lemma3Report r;
    r.idx1 = sublattice_index(q, m.S() * p);
    r.idx2 = sublattice_index(p, m.S() * q);
    Int want;
    mpz_pow_ui(want.get_mpz_t(), m.field().D().get_mpz_t(), p.cols());
    r.holds = (r.idx1 * r.idx2 == want);
    return r;
}

Theorem3Report theorem3_check(const CMLattice& m) {
    if (!m.field().half())
        throw ModeMismatch("Theorem 3 requires D = 3 mod 4, got D = " +
                           to_string(m.field().D()));
    require_valid(m);
    InvolutionLattice inv(m.sigma());
    Theorem3Report r;
    r.h1 = h1_order(inv);
    ZMat sum = ZMat::hcat(free_basis(m), anti_fixed_sublattice(inv));
    HnfResult h = hnf(sum);
    Int covol = 1;
    for (std::size_t i = 0; i < h.rank; ++i)
        covol *= h.h.at(h.pivot_rows[i], i);
    r.sum_equals_whole = (h.rank == m.rank() && covol == 1);
    r.holds = (r.h1 == 1) && r.sum_equals_whole;
    return r;
}

PseudoModule coords_module(const CMLattice& m, const ZMat& sub_gens) {
    ZMat phi = free_basis(m);
    auto coords = integral_coords(phi, sub_gens);
    if (!coords)
        throw NotSubmodule("generators are not inside O_K * M+");
    const std::size_t l = m.rank() / 2;
    PseudoModule pm;
    pm.n = l;
    for (std::size_t j = 0; j < coords->cols(); ++j) {
        PseudoElem e;
        e.coeff = FracIdeal::unit();
        e.vec.resize(l);
        bool zero = true;
        for (std::size_t i = 0; i < l; ++i) {
            e.vec[i] = KNum{Rat(coords->at(i, j)), Rat(coords->at(l + i, j))};
            zero = zero && e.vec[i].is_zero();
        }
        if (!zero)
            pm.elems.push_back(std::move(e));
    }
    return pm;
}

namespace {

struct CommonData {
    std::size_t l;
    Int h1;
    Int idx_anti;
    ZMat phi;
};

CommonData common_data(const CMLattice& m) {
    require_valid(m);
    InvolutionLattice inv(m.sigma());
    ZMat p = fixed_sublattice(inv);
    ZMat q = anti_fixed_sublattice(inv);
    CommonData c;
    c.l = p.cols();
    c.h1 = h1_order(inv);
    c.idx_anti = sublattice_index(q, m.S() * p);
    ok_span_fixed(m); // certify Lemma 6 freeness
    c.phi = free_basis(m);
    return c;
}

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace

PipelineReport theorem4_pipeline(const CMLattice& m, const ClassGroup& cg) {
    const Int& p = m.field().D();
    if (!is_prime(p))
        throw NotPrime("Theorem 4 requires prime D, got " + to_string(p));
    if (!m.field().half())
        throw ModeMismatch("Theorem 4 requires D = 3 mod 4");
    CommonData c = common_data(m);

    PipelineReport rep;
    rep.l = c.l;
    rep.h1 = c.h1;
    rep.idx_anti = c.idx_anti;

    ZMat msub = m.S(); // columns generate [sqrt(-p)] M
    auto coords = integral_coords(c.phi, msub);
    if (!coords)
        throw NotSubmodule("S*M is not inside O_K * M+");
    rep.index_lm = lattice_index(c.phi, msub);

    Int residue = rep.index_lm;
    rep.t = valuation(residue, p);
    rep.r = 0;
    if (residue != 1)
        throw FactorResidue("(L : S*M) is not a power of p");

    rep.steinitz_index = cg.principal_index;
    rep.steinitz_principal = true;
    rep.steinitz_form = cg.reps[cg.principal_index];

    SteinitzResult sr = steinitz_class(coords_module(m, msub), cg);
    rep.cross_checked =
        (sr.class_index == cg.principal_index) && (sr.norm == rep.index_lm);
    if (!rep.cross_checked)
        rep.notes.push_back("decomposition cross-check disagrees: class " +
                            cg.reps[sr.class_index].str() + ", norm " + to_string(sr.norm));
    return rep;
}

PipelineReport theorem5_pipeline(const CMLattice& m, const ClassGroup& cg) {
    const Int& p = m.field().D();
    if (!is_prime(p))
        throw NotPrime("Theorem 5 requires prime D, got " + to_string(p));
    if (mod_floor(p, 4) != 1)
        throw ModeMismatch("Theorem 5 requires D = 1 mod 4");
    CommonData c = common_data(m);

    PipelineReport rep;
    rep.l = c.l;
    rep.h1 = c.h1;
    rep.idx_anti = c.idx_anti;

    ZMat msub = m.S().scaled(2); // [2 sqrt(-p)] M
    auto coords = integral_coords(c.phi, msub);
    if (!coords)
        throw NotSubmodule("2S*M is not inside O_K * M+");
    rep.index_lm = lattice_index(c.phi, msub);

    Int residue = rep.index_lm;
    rep.t = valuation(residue, Int(2));
    rep.r = valuation(residue, p);
    if (residue != 1)
        throw FactorResidue("(L : 2S*M) has a factor other than 2 and p");

    PrimeSplit ps = prime_above(Int(2), m.field());
    if (ps.type != SplitType::Ramified)
        throw InternalError("2 must ramify when D = 1 mod 4");
    rep.steinitz_index = class_pow(ps.p1, rep.t, cg);
    rep.steinitz_principal = (rep.steinitz_index == cg.principal_index);
    rep.steinitz_form = cg.reps[rep.steinitz_index];

    bool chk_a = (pow_int(Int(2), rep.t) == pow_int(Int(2), c.l) * c.h1);
    if (!chk_a)
        rep.notes.push_back("2^t != 2^l |H1|");
    SteinitzResult sr = steinitz_class(coords_module(m, msub), cg);
    bool chk_b = (sr.class_index == rep.steinitz_index) && (sr.norm == rep.index_lm);
    if (!chk_b)
        rep.notes.push_back("decomposition cross-check disagrees: class " +
                            cg.reps[sr.class_index].str() + ", norm " + to_string(sr.norm));
    bool chk_c =
        (rep.index_lm * rep.idx_anti == pow_int(Int(2), c.l) * c.h1 * pow_int(p, c.l));
    if (!chk_c)
        rep.notes.push_back("index chain (L:M) = 2^l |H1| p^l / idx1 fails");
    rep.cross_checked = chk_a && chk_b && chk_c;
    return rep;
}

DmInvariantReport dm_from_invariants(unsigned l, const Int& h1, const Int& idx_anti,
                                     const ClassGroup& cg) {
    if (cg.field.D() != 10)
        throw ModeMismatch("the Dummit-Miller criterion lives in Q(sqrt(-10))");
    if (h1 < 1 || idx_anti < 1)
        throw ValidationFailed("invariants must be positive");
    DmInvariantReport r;
    r.quantity = pow_int(Int(2), l) * h1 * idx_anti;
    Int residue = r.quantity;
    r.e = valuation(residue, Int(2));
    r.principal = (r.e % 2 == 0);
    if (r.principal) {
        r.class_index = cg.principal_index;
    } else {
        PrimeSplit ps = prime_above(Int(2), cg.field);
        r.class_index = ideal_class_of(ps.p1, cg);
    }
    r.steinitz_form = cg.reps[r.class_index];
    return r;
}

PipelineReport dm_pipeline(const CMLattice& m, const ClassGroup& cg) {
    if (m.field().D() != 10)
        throw ModeMismatch("dm_pipeline requires D = 10, got " + to_string(m.field().D()));
    CommonData c = common_data(m);

    PipelineReport rep;
    rep.l = c.l;
    rep.h1 = c.h1;
    rep.idx_anti = c.idx_anti;

    DmInvariantReport inv =
        dm_from_invariants(static_cast<unsigned>(c.l), c.h1, c.idx_anti, cg);
    rep.t = inv.e;
    rep.r = 0;
    rep.steinitz_index = inv.class_index;
    rep.steinitz_principal = inv.principal;
    rep.steinitz_form = inv.steinitz_form;

    ZMat msub = m.S().scaled(2);
    auto coords = integral_coords(c.phi, msub);
    if (!coords)
        throw NotSubmodule("2S*M is not inside O_K * M+");
    rep.index_lm = lattice_index(c.phi, msub);
    Int residue = rep.index_lm;
    unsigned v2 = valuation(residue, Int(2));
    unsigned v5 = valuation(residue, Int(5));
    if (residue != 1)
        throw FactorResidue("(L : 2S*M) has a factor other than 2 and 5");
    rep.notes.push_back("(L:2SM) = 2^" + std::to_string(v2) + " * 5^" + std::to_string(v5));

    SteinitzResult sr = steinitz_class(coords_module(m, msub), cg);
    rep.cross_checked = (sr.class_index == rep.steinitz_index) && (sr.norm == rep.index_lm);
    if (!rep.cross_checked)
        rep.notes.push_back("decomposition cross-check disagrees: class " +
                            cg.reps[sr.class_index].str() + ", norm " + to_string(sr.norm));
    return rep;
}

} // namespace steinitz
