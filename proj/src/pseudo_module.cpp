#include "steinitz/pseudo_module.hpp"

#include <sstream>

namespace steinitz {

std::string FracIdeal::str() const {
    std::ostringstream os;
    os << num.str();
    if (den != 1)
        os << "/" << den.get_str();
    return os.str();
}

FracIdeal normalize(FracIdeal f) {
    if (f.den < 0)
        throw InternalError("FracIdeal with negative denominator");
    Int g = gcd(gcd(f.num.a, f.num.b), gcd(f.num.c, f.den));
    if (g > 1) {
        f.num.a /= g;
        f.num.b /= g;
        f.num.c /= g;
        f.den /= g;
    }
    return f;
}

FracIdeal frac_mul(const FracIdeal& x, const FracIdeal& y, const QuadField& k) {
    return normalize({ideal_mul(x.num, y.num, k), x.den * y.den});
}

FracIdeal frac_inv(const FracIdeal& x, const QuadField& k) {
    IdealHNF cj = ideal_conj(x.num, k);
    Int n = ideal_norm(x.num);
    // (num/den)^-1 = den * conj(num) / N(num)
    return normalize({IdealHNF(cj.a * x.den, cj.b * x.den, cj.c * x.den), n});
}

std::array<KNum, 2> frac_basis(const FracIdeal& x) {
    Rat d(x.den);
    return {KNum{Rat(x.num.a) / d, Rat(0)}, KNum{Rat(x.num.b) / d, Rat(x.num.c) / d}};
}

PseudoModule PseudoModule::standard(std::size_t n) {
    PseudoModule m;
    m.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        PseudoElem e;
        e.coeff = FracIdeal::unit();
        e.vec.assign(n, KNum{});
        e.vec[i] = KNum{Rat(1), Rat(0)};
        m.elems.push_back(std::move(e));
    }
    return m;
}

PseudoModule PseudoModule::from_vectors(std::size_t n,
                                        const std::vector<std::vector<KNum>>& gens) {
    PseudoModule m;
    m.n = n;
    for (const auto& v : gens) {
        if (v.size() != n)
            throw InternalError("generator length mismatch");
        bool zero = true;
        for (const auto& x : v)
            zero = zero && x.is_zero();
        if (zero)
            continue; // zero generators add nothing
        PseudoElem e;
        e.coeff = FracIdeal::unit();
        e.vec = v;
        m.elems.push_back(std::move(e));
    }
    return m;
}

PseudoModule PseudoModule::direct_sum(const PseudoModule& a, const PseudoModule& b) {
    PseudoModule m;
    m.n = a.n + b.n;
    for (const auto& e : a.elems) {
        PseudoElem ne;
        ne.coeff = e.coeff;
        ne.vec = e.vec;
        ne.vec.resize(m.n, KNum{});
        m.elems.push_back(std::move(ne));
    }
    for (const auto& e : b.elems) {
        PseudoElem ne;
        ne.coeff = e.coeff;
        ne.vec.assign(m.n, KNum{});
        for (std::size_t j = 0; j < b.n; ++j)
            ne.vec[a.n + j] = e.vec[j];
        m.elems.push_back(std::move(ne));
    }
    return m;
}

namespace {

KNum knum_mul(const QuadField& k, const KNum& x, const KNum& y) { return k.mul(x, y); }

/// Z-generators of the module: pairs (vector in K^n, its last coordinate),
/// two per pseudo-element.
struct ZGen {
    std::vector<KNum> vec;
};

std::vector<ZGen> z_generators(const PseudoModule& m, const QuadField& k) {
    std::vector<ZGen> out;
    for (const auto& e : m.elems) {
        for (const KNum& u : frac_basis(e.coeff)) {
            ZGen g;
            g.vec.reserve(m.n);
            for (const KNum& x : e.vec)
                g.vec.push_back(knum_mul(k, u, x));
            out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace

FlatLattice flatten(const PseudoModule& m, const QuadField& k) {
    auto zg = z_generators(m, k);
    // common denominator over all coordinates
    Int den = 1;
    for (const auto& g : zg)
        for (const auto& x : g.vec) {
            den = lcm(den, x.a.get_den());
            den = lcm(den, x.b.get_den());
        }
    ZMat gens(2 * m.n, zg.size());
    for (std::size_t j = 0; j < zg.size(); ++j)
        for (std::size_t i = 0; i < m.n; ++i) {
            Rat a = zg[j].vec[i].a * den;
            Rat b = zg[j].vec[i].b * den;
            gens.at(2 * i, j) = a.get_num();
            gens.at(2 * i + 1, j) = b.get_num();
        }
    return {std::move(gens), den};
}

namespace {

/// Express 1 as an integer combination of the given K-numbers; returns the
/// coefficients.  Throws InternalError when 1 is not in the Z-span (callers
/// only ask when it provably is).
std::vector<Int> represent_one(const std::vector<KNum>& gens) {
    Int den = 1;
    for (const auto& x : gens) {
        den = lcm(den, x.a.get_den());
        den = lcm(den, x.b.get_den());
    }
    ZMat g(2, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        g.at(0, j) = Rat(gens[j].a * den).get_num();
        g.at(1, j) = Rat(gens[j].b * den).get_num();
    }
    HnfResult r = hnf(g, true);
    if (r.rank != 2)
        throw InternalError("represent_one: span has rank < 2");
    // solve h * z' = (den, 0); h = [[a,b],[0,c]], so z2' = 0
    const Int& ha = r.h.at(0, 0);
    Int z2 = 0;
    if (mod_floor(den, ha) != 0)
        throw InternalError("represent_one: 1 is not in the span");
    Int z1 = den / ha;
    std::size_t k0 = gens.size() - 2; // echelon columns sit at the tail of u
    std::vector<Int> out(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        out[j] = r.u.at(j, k0) * z1 + r.u.at(j, k0 + 1) * z2;
    return out;
}

std::vector<FracIdeal> decompose_rec(std::vector<PseudoElem> elems, std::size_t n,
                                     const QuadField& k) {
    // B = sum of coeff_i * vec_i[n-1] via the Z-generators, with preimages
    auto sum_last_ideal = [&](const std::vector<PseudoElem>& es) {
        std::vector<KNum> rho;
        std::vector<std::vector<KNum>> pre;
        for (const auto& e : es)
            for (const KNum& u : frac_basis(e.coeff)) {
                std::vector<KNum> g;
                g.reserve(n);
                for (const KNum& x : e.vec)
                    g.push_back(k.mul(u, x));
                rho.push_back(g[n - 1]);
                pre.push_back(std::move(g));
            }
        return std::pair(std::move(rho), std::move(pre));
    };

    if (n == 1) {
        auto [rho, pre] = sum_last_ideal(elems);
        Int den = 1;
        for (const auto& x : rho) {
            den = lcm(den, x.a.get_den());
            den = lcm(den, x.b.get_den());
        }
        std::vector<AlgInt> gens;
        for (const auto& x : rho)
            gens.push_back({Rat(x.a * den).get_num(), Rat(x.b * den).get_num()});
        IdealHNF num = ideal_from_generators(std::span<const AlgInt>(gens), k);
        return {normalize({num, den})};
    }

    auto [rho, pre] = sum_last_ideal(elems);
    Int den = 1;
    for (const auto& x : rho) {
        den = lcm(den, x.a.get_den());
        den = lcm(den, x.b.get_den());
    }
    ZMat g(2, rho.size());
    for (std::size_t j = 0; j < rho.size(); ++j) {
        g.at(0, j) = Rat(rho[j].a * den).get_num();
        g.at(1, j) = Rat(rho[j].b * den).get_num();
    }
    HnfResult hr = hnf(g, true);
    if (hr.rank != 2)
        throw NotFiniteIndex("projection to the last coordinate is rank-deficient");
    IdealHNF bnum{hr.h.at(0, 0), hr.h.at(0, 1), hr.h.at(1, 1)};
    FracIdeal b = normalize({bnum, den});

    Rat dq(den);
    KNum beta1{Rat(bnum.a) / dq, Rat(0)};
    KNum beta2{Rat(bnum.b) / dq, Rat(bnum.c) / dq};
    // preimages of the two HNF basis elements
    std::size_t k0 = rho.size() - 2;
    std::vector<KNum> m1(n, KNum{}), m2(n, KNum{});
    for (std::size_t j = 0; j < rho.size(); ++j) {
        const Int& u1 = hr.u.at(j, k0);
        const Int& u2 = hr.u.at(j, k0 + 1);
        for (std::size_t i = 0; i < n; ++i) {
            m1[i] = k.add(m1[i], k.mul(KNum{Rat(u1), Rat(0)}, pre[j][i]));
            m2[i] = k.add(m2[i], k.mul(KNum{Rat(u2), Rat(0)}, pre[j][i]));
        }
    }

    // Bezout: x, y in B^-1 with x*beta1 + y*beta2 = 1
    FracIdeal binv = frac_inv(b, k);
    auto w = frac_basis(binv);
    std::vector<KNum> combo = {k.mul(w[0], beta1), k.mul(w[1], beta1),
                               k.mul(w[0], beta2), k.mul(w[1], beta2)};
    std::vector<Int> z = represent_one(combo);
    KNum x = k.add(k.mul(KNum{Rat(z[0]), Rat(0)}, w[0]), k.mul(KNum{Rat(z[1]), Rat(0)}, w[1]));
    KNum y = k.add(k.mul(KNum{Rat(z[2]), Rat(0)}, w[0]), k.mul(KNum{Rat(z[3]), Rat(0)}, w[1]));

    std::vector<KNum> evec(n);
    for (std::size_t i = 0; i < n; ++i)
        evec[i] = k.add(k.mul(x, m1[i]), k.mul(y, m2[i]));
    if (!(evec[n - 1] == KNum{Rat(1), Rat(0)}))
        throw InternalError("splitting element does not project to 1");

    // N-generators: v - rho(v) * e, last coordinate dropped
    std::vector<PseudoElem> rest;
    for (const auto& e : elems) {
        KNum r = e.vec[n - 1];
        PseudoElem ne;
        ne.coeff = e.coeff;
        ne.vec.resize(n - 1);
        bool zero = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            ne.vec[i] = k.sub(e.vec[i], k.mul(r, evec[i]));
            zero = zero && ne.vec[i].is_zero();
        }
        if (!zero)
            rest.push_back(std::move(ne));
    }

    std::vector<FracIdeal> out = decompose_rec(std::move(rest), n - 1, k);
    out.push_back(b);
    return out;
}

} // namespace

std::vector<FracIdeal> theorem2_decompose(const PseudoModule& m, const QuadField& k) {
    if (m.n == 0 || m.elems.empty())
        throw NotFiniteIndex("empty module");
    for (const auto& e : m.elems) {
        if (e.vec.size() != m.n)
            throw InternalError("pseudo-generator length mismatch");
        for (const KNum& u : frac_basis(e.coeff))
            for (const KNum& x : e.vec)
                if (!k.mul(u, x).is_integral())
                    throw NotIntegral("module is not contained in O_K^n");
    }
    FlatLattice fl = flatten(m, k);
    if (rank(fl.gens) != 2 * m.n)
        throw NotFiniteIndex("module has deficient rank in O_K^n");
    return decompose_rec(m.elems, m.n, k);
}

SteinitzResult steinitz_class(const PseudoModule& m, const ClassGroup& cg) {
    std::vector<FracIdeal> bs = theorem2_decompose(m, cg.field);
    FracIdeal prod = FracIdeal::unit();
    for (const auto& b : bs)
        prod = frac_mul(prod, b, cg.field);
    if (!prod.is_integral())
        throw InternalError("Steinitz ideal of an integral module came out fractional");
    SteinitzResult r;
    r.ideal = prod.num;
    r.class_index = ideal_class_of(prod.num, cg);
    r.norm = ideal_norm(prod.num);
    return r;
}

Int module_index_oracle(const PseudoModule& l, const PseudoModule& m, const QuadField& k) {
    if (l.n != m.n)
        throw NotSubmodule("ambient ranks differ");
    FlatLattice fl = flatten(l, k);
    FlatLattice fm = flatten(m, k);
    Int scale = lcm(fl.den, fm.den);
    ZMat gl = fl.gens.scaled(scale / fl.den);
    ZMat gm = fm.gens.scaled(scale / fm.den);
    HnfResult hl = hnf(gl);
    if (hl.rank != 2 * l.n)
        throw NotFiniteIndex("ambient module is rank-deficient");
    auto coords = integral_coords(hl.h, gm);
    if (!coords)
        throw NotSubmodule("some generator lies outside the ambient module");
    HnfResult hc = hnf(*coords);
    if (hc.rank != 2 * l.n)
        throw NotFiniteIndex("submodule is rank-deficient");
    Int idx = 1;
    for (std::size_t i = 0; i < hc.rank; ++i)
        idx *= hc.h.at(hc.pivot_rows[i], i);
    return idx;
}

namespace {

/// Deterministic small elements of an ideal: s*gen1 + t*gen2 ordered by
/// max(|s|,|t|).
std::vector<AlgInt> small_elements(const IdealHNF& a, const QuadField& k, int radius) {
    std::vector<AlgInt> out;
    for (int r = 1; r <= radius; ++r)
        for (int s = -r; s <= r; ++s)
            for (int t = -r; t <= r; ++t) {
                if (std::max(std::abs(s), std::abs(t)) != r)
                    continue;
                AlgInt g{a.a * s + a.b * t, a.c * t};
                if (!g.is_zero())
                    out.push_back(g);
            }
    return out;
}

bool lattices_equal(const PseudoModule& p, const PseudoModule& q, const QuadField& k) {
    FlatLattice fp = flatten(p, k);
    FlatLattice fq = flatten(q, k);
    Int scale = lcm(fp.den, fq.den);
    return same_lattice(fp.gens.scaled(scale / fp.den), fq.gens.scaled(scale / fq.den));
}

} // namespace

Lemma5Witness lemma5_witness(const IdealHNF& a1, const IdealHNF& a2, const QuadField& k) {
    const KNum one{Rat(1), Rat(0)};
    const KNum zero{};
    Lemma5Witness w;
    w.c1 = FracIdeal::unit();
    w.c2 = FracIdeal{ideal_mul(a1, a2, k), Int(1)};

    auto verify = [&](const Lemma5Witness& cand) {
        PseudoModule orig;
        orig.n = 2;
        orig.elems = {{FracIdeal{a1, Int(1)}, {one, zero}},
                      {FracIdeal{a2, Int(1)}, {zero, one}}};
        PseudoModule img;
        img.n = 2;
        img.elems = {{cand.c1, {cand.f1[0], cand.f1[1]}},
                     {cand.c2, {cand.f2[0], cand.f2[1]}}};
        return lattices_equal(orig, img, k);
    };

    if (a1.is_unit()) {
        w.f1 = {one, zero};
        w.f2 = {zero, one};
        w.lattices_match = verify(w);
        return w;
    }
    if (a2.is_unit()) {
        w.f1 = {zero, one};
        w.f2 = {one, zero};
        w.lattices_match = verify(w);
        return w;
    }

    FracIdeal inv1 = frac_inv({a1, Int(1)}, k);
    FracIdeal inv2 = frac_inv({a2, Int(1)}, k);
    auto u = frac_basis(inv1);
    auto v = frac_basis(inv2);

    for (const AlgInt& ael : small_elements(a1, k, 4)) {
        FracIdeal j1 = normalize(frac_mul({principal_ideal(ael, k), Int(1)}, inv1, k));
        if (!j1.is_integral())
            throw InternalError("a*A1^-1 not integral");
        for (const AlgInt& bel : small_elements(a2, k, 4)) {
            FracIdeal j2 = normalize(frac_mul({principal_ideal(bel, k), Int(1)}, inv2, k));
            if (!j2.is_integral())
                throw InternalError("b*A2^-1 not integral");
            if (!ideal_add(j1.num, j2.num, k).is_unit())
                continue;
            KNum ak{Rat(ael.a), Rat(ael.b)};
            KNum bk{Rat(bel.a), Rat(bel.b)};
            std::vector<KNum> combo = {k.mul(ak, u[0]), k.mul(ak, u[1]),
                                       k.mul(bk, v[0]), k.mul(bk, v[1])};
            std::vector<Int> z = represent_one(combo);
            KNum alpha = k.add(k.mul(KNum{Rat(z[0]), Rat(0)}, u[0]),
                               k.mul(KNum{Rat(z[1]), Rat(0)}, u[1]));
            KNum beta = k.add(k.mul(KNum{Rat(z[2]), Rat(0)}, v[0]),
                              k.mul(KNum{Rat(z[3]), Rat(0)}, v[1]));
            // a*alpha + b*beta = 1 with alpha in A1^-1, beta in A2^-1
            w.f1 = {ak, bk};
            w.f2 = {k.neg(beta), alpha};
            w.lattices_match = verify(w);
            return w;
        }
    }
    throw SearchExhausted("no coprime pair found for the Lemma 5 construction");
}

} // namespace steinitz
