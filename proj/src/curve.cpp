#include "steinitz/curve.hpp"

#include <functional>
#include <sstream>

namespace steinitz {

std::string CurvePoint::str() const {
    if (infinity)
        return "O";
    return "(" + x.str() + "," + y.str() + ")";
}

WeierstrassCurve::WeierstrassCurve(TowerField t, TowerElem a2, TowerElem a4, TowerElem a6)
    : t_(std::move(t)), a2_(t_.canon(std::move(a2))), a4_(t_.canon(std::move(a4))),
      a6_(t_.canon(std::move(a6))) {
    if (!a2_.in_f() || !a4_.in_f() || !a6_.in_f())
        throw ValidationFailed("curve coefficients must lie in F");
    // disc(x^3 + b x^2 + c x + d) = 18bcd - 4b^3 d + b^2 c^2 - 4c^3 - 27d^2
    const TowerElem &b = a2_, &c = a4_, &d = a6_;
    auto m = [&](const TowerElem& u, const TowerElem& v) { return t_.mul(u, v); };
    TowerElem b2 = m(b, b);
    TowerElem disc =
        t_.sub(t_.sub(t_.add(m(m(t_.from_int(18), b), m(c, d)),
                             m(b2, m(c, c))),
                      t_.add(m(m(t_.from_int(4), m(b2, b)), d),
                             m(t_.from_int(4), m(c, m(c, c))))),
               m(t_.from_int(27), m(d, d)));
    if (disc.is_zero())
        throw ValidationFailed("singular curve: discriminant vanishes");
}

TowerElem WeierstrassCurve::rhs(const TowerElem& x) const {
    TowerElem x2 = t_.mul(x, x);
    TowerElem v = t_.mul(x2, t_.add(x, a2_));
    return t_.add(t_.add(v, t_.mul(a4_, x)), a6_);
}

bool WeierstrassCurve::on_curve(const CurvePoint& p) const {
    if (p.infinity)
        return true;
    return t_.mul(p.y, p.y) == rhs(p.x);
}

CurvePoint WeierstrassCurve::negate(const CurvePoint& p) const {
    if (p.infinity)
        return p;
    return CurvePoint::affine(p.x, t_.neg(p.y));
}

CurvePoint WeierstrassCurve::add(const CurvePoint& p, const CurvePoint& q) const {
    if (!on_curve(p) || !on_curve(q))
        throw NotOnCurve("point addition requires points on the curve");
    if (p.infinity)
        return q;
    if (q.infinity)
        return p;
    TowerElem lam;
    if (p.x == q.x) {
        if (p.y == t_.neg(q.y))
            return CurvePoint::infinite();
        // tangent: (3x^2 + 2 a2 x + a4) / (2y)
        TowerElem num = t_.add(t_.add(t_.mul(t_.from_int(3), t_.mul(p.x, p.x)),
                                      t_.mul(t_.from_int(2), t_.mul(a2_, p.x))),
                               a4_);
        lam = t_.mul(num, t_.inv(t_.mul(t_.from_int(2), p.y)));
    } else {
        lam = t_.mul(t_.sub(q.y, p.y), t_.inv(t_.sub(q.x, p.x)));
    }
    TowerElem x3 = t_.sub(t_.sub(t_.sub(t_.mul(lam, lam), a2_), p.x), q.x);
    TowerElem y3 = t_.neg(t_.add(p.y, t_.mul(lam, t_.sub(x3, p.x))));
    return CurvePoint::affine(x3, y3);
}

CurvePoint WeierstrassCurve::scalar_mul(long n, const CurvePoint& p) const {
    if (n < 0)
        return scalar_mul(-n, negate(p));
    CurvePoint acc = CurvePoint::infinite();
    CurvePoint base = p;
    while (n) {
        if (n & 1)
            acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

CurvePoint WeierstrassCurve::galois_sigma(const CurvePoint& p) const {
    if (p.infinity)
        return p;
    return CurvePoint::affine(t_.galois(p.x), t_.galois(p.y));
}

CurvePoint twist_iso(const WeierstrassCurve& e, const CurvePoint& p) {
    if (p.infinity)
        return p;
    const TowerField& t = e.tower();
    if (!p.x.in_f() || !p.y.in_f())
        throw NotOnTwist("twist points carry F-rational coordinates");
    // -D y^2 = f(x)
    TowerElem lhs = t.mul(t.from_int(-1), t.mul(tower(Rat(t.D())), t.mul(p.y, p.y)));
    if (!(lhs == e.rhs(p.x)))
        throw NotOnTwist("point does not satisfy -D y^2 = f(x)");
    return CurvePoint::affine(p.x, t.mul_sqrt_md(p.y));
}

bool in_i(const CurvePoint& p) {
    if (p.infinity)
        return true;
    return p.x.in_f() && p.y.in_sqrt_md_f();
}

TowerElem eval_poly(const TowerField& t, const FPoly& p, const TowerElem& x) {
    TowerElem acc;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = t.add(t.mul(acc, x), p[i]);
    return t.canon(acc);
}

CurvePoint apply_cm(const WeierstrassCurve& e, const CMMapData& maps, const CurvePoint& p) {
    if (p.infinity)
        return p;
    const TowerField& t = e.tower();
    TowerElem aden = eval_poly(t, maps.a_den, p.x);
    TowerElem bden = eval_poly(t, maps.b_den, p.x);
    if (aden.is_zero() || bden.is_zero())
        throw PoleEncountered("CM map evaluated at a pole");
    TowerElem ax = t.mul(eval_poly(t, maps.a_num, p.x), t.inv(aden));
    TowerElem bx = t.mul(eval_poly(t, maps.b_num, p.x), t.inv(bden));
    TowerElem ny = t.mul(t.mul_sqrt_md(p.y), bx);
    return CurvePoint::affine(ax, ny);
}

CMMapCheck validate_cm_maps(const WeierstrassCurve& e, const CMMapData& maps,
                            const std::vector<CurvePoint>& samples) {
    CMMapCheck out;
    const TowerField& t = e.tower();
    long dlong = static_cast<long>(t.D().get_si());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const CurvePoint& p = samples[i];
        if (!e.on_curve(p))
            throw NotOnCurve("sample point " + std::to_string(i) + " is off the curve");
        CurvePoint img = apply_cm(e, maps, p);
        if (!e.on_curve(img)) {
            out.on_curve = false;
            out.failures.push_back("(i) image off curve at sample " + std::to_string(i));
        }
        CurvePoint twice = apply_cm(e, maps, img);
        if (!(twice == e.scalar_mul(dlong, e.negate(p)))) {
            out.square_is_minus_d = false;
            out.failures.push_back("(ii) [sqrt(-D)]^2 != [-D] at sample " + std::to_string(i));
        }
        CurvePoint lhs = e.galois_sigma(img);
        CurvePoint rhs = e.negate(apply_cm(e, maps, e.galois_sigma(p)));
        if (!(lhs == rhs)) {
            out.semilinear = false;
            out.failures.push_back("(iii) semilinearity fails at sample " + std::to_string(i));
        }
    }
    return out;
}

namespace {

/// Search integer coefficients k with |k_i| <= bound and sum k_i B_i = target.
std::optional<std::vector<long>> match_combination(const WeierstrassCurve& e,
                                                   const std::vector<CurvePoint>& basis,
                                                   const CurvePoint& target,
                                                   unsigned bound) {
    const long b = static_cast<long>(bound);
    std::vector<std::vector<CurvePoint>> multiples(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        multiples[i].resize(2 * bound + 1);
        for (long k2 = -b; k2 <= b; ++k2)
            multiples[i][static_cast<std::size_t>(k2 + b)] = e.scalar_mul(k2, basis[i]);
    }
    std::vector<long> coeff(basis.size(), 0);
    std::optional<std::vector<long>> found;
    std::function<void(std::size_t, const CurvePoint&)> rec =
        [&](std::size_t i, const CurvePoint& acc) {
            if (found)
                return;
            if (i == basis.size()) {
                if (acc == target)
                    found = coeff;
                return;
            }
            for (long k2 = -b; k2 <= b && !found; ++k2) {
                coeff[i] = k2;
                rec(i + 1, e.add(acc, multiples[i][static_cast<std::size_t>(k2 + b)]));
            }
            coeff[i] = 0;
        };
    rec(0, CurvePoint::infinite());
    return found;
}

} // namespace

ExtractedLattice lattice_extract(const WeierstrassCurve& e,
                                 const std::vector<CurvePoint>& basis_plus,
                                 const std::vector<CurvePoint>& basis_minus,
                                 const CMMapData& maps, unsigned bound,
                                 unsigned torsion_bound) {
    std::vector<CurvePoint> basis;
    for (const auto& p : basis_plus) {
        if (p.infinity || !p.x.in_f() || !p.y.in_f())
            throw ValidationFailed("basis_plus points must be affine with F-rational coordinates");
        basis.push_back(p);
    }
    for (const auto& p : basis_minus) {
        if (p.infinity || !in_i(p))
            throw ValidationFailed("basis_minus points must be affine members of I");
        basis.push_back(p);
    }
    for (const auto& p : basis) {
        if (!e.on_curve(p))
            throw NotOnCurve("basis point off the curve");
        for (unsigned n = 1; n <= torsion_bound; ++n)
            if (e.scalar_mul(static_cast<long>(n), p).infinity)
                throw ValidationFailed("basis point is torsion of order " + std::to_string(n));
    }

    const std::size_t m = basis.size();
    ExtractedLattice out{ZMat(m, m), ZMat(m, m)};
    for (std::size_t j = 0; j < m; ++j) {
        CurvePoint cm_img = apply_cm(e, maps, basis[j]);
        auto combo = match_combination(e, basis, cm_img, bound);
        if (!combo)
            throw SearchExhausted("no combination within bound " + std::to_string(bound) +
                                  " matches the CM image of basis point " + std::to_string(j));
        for (std::size_t i = 0; i < m; ++i)
            out.s.at(i, j) = (*combo)[i];
        CurvePoint sg = e.galois_sigma(basis[j]);
        auto combo2 = match_combination(e, basis, sg, bound);
        if (!combo2)
            throw SearchExhausted("no combination within bound " + std::to_string(bound) +
                                  " matches the Galois image of basis point " + std::to_string(j));
        for (std::size_t i = 0; i < m; ++i)
            out.sigma.at(i, j) = (*combo2)[i];
    }
    return out;
}

} // namespace steinitz
