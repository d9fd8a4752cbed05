#pragma once

#include <optional>
#include <vector>

#include "steinitz/tower.hpp"
#include "steinitz/zmat.hpp"

namespace steinitz {

/// Affine or infinite point.
struct CurvePoint {
    bool infinity = true;
    TowerElem x, y;
    static CurvePoint infinite() { return {}; }
    static CurvePoint affine(TowerElem px, TowerElem py) {
        return {false, std::move(px), std::move(py)};
    }
    bool operator==(const CurvePoint& o) const {
        if (infinity || o.infinity)
            return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    std::string str() const;
};

/// y^2 = x^3 + a2 x^2 + a4 x + a6 with coefficients in F.
class WeierstrassCurve {
public:
    WeierstrassCurve(TowerField t, TowerElem a2, TowerElem a4, TowerElem a6);

    const TowerField& tower() const { return t_; }
    const TowerElem& a2() const { return a2_; }
    const TowerElem& a4() const { return a4_; }
    const TowerElem& a6() const { return a6_; }

    TowerElem rhs(const TowerElem& x) const; // x^3 + a2 x^2 + a4 x + a6
    bool on_curve(const CurvePoint& p) const;
    CurvePoint negate(const CurvePoint& p) const;
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const; // throws NotOnCurve
    CurvePoint scalar_mul(long n, const CurvePoint& p) const;
    /// Galois conjugation over F applied to both coordinates.
    CurvePoint galois_sigma(const CurvePoint& p) const;

private:
    TowerField t_;
    TowerElem a2_, a4_, a6_;
};

/// Map (x, y) on E_D: -D y^2 = f(x) with x, y in F to (x, sqrt(-D) y) on E.
CurvePoint twist_iso(const WeierstrassCurve& e, const CurvePoint& p); // throws NotOnTwist

/// Membership in I = { (x, sqrt(-D) y) : x, y in F } (plus the infinite point).
bool in_i(const CurvePoint& p);

/// Polynomial over F, constant coefficient first.
using FPoly = std::vector<TowerElem>;

/// The rational maps of [sqrt(-D)]: (x, y) -> (a(x), y sqrt(-D) b(x)).
struct CMMapData {
    FPoly a_num, a_den, b_num, b_den;
};

TowerElem eval_poly(const TowerField& t, const FPoly& p, const TowerElem& x);

/// Throws PoleEncountered at zeros of the denominators.
CurvePoint apply_cm(const WeierstrassCurve& e, const CMMapData& maps, const CurvePoint& p);

struct CMMapCheck {
    bool on_curve = true;     // (i) images stay on E
    bool square_is_minus_d = true; // (ii) applying twice = [-D]
    bool semilinear = true;   // (iii) sigma . cm = -(cm . sigma)
    std::vector<std::string> failures;
    bool ok() const { return on_curve && square_is_minus_d && semilinear; }
};

CMMapCheck validate_cm_maps(const WeierstrassCurve& e, const CMMapData& maps,
                            const std::vector<CurvePoint>& samples);

/// Express the CM and Galois images of the given basis points as integer
/// combinations of the basis by bounded exhaustive search, assembling the
/// sigma and S matrices of the underlying lattice.  Throws SearchExhausted
/// when no combination within the bound matches, and precondition errors for
/// bad bases.
struct ExtractedLattice {
    ZMat sigma;
    ZMat s;
};
ExtractedLattice lattice_extract(const WeierstrassCurve& e,
                                 const std::vector<CurvePoint>& basis_plus,
                                 const std::vector<CurvePoint>& basis_minus,
                                 const CMMapData& maps, unsigned bound,
                                 unsigned torsion_bound = 24);

} // namespace steinitz
