#pragma once

#include <array>
#include <string>

#include "steinitz/numeric.hpp"

namespace steinitz {

/// Element of H = Q(sqrt(d), sqrt(-D)) on the basis
/// (1, sqrt(d), sqrt(-D), sqrt(-d*D)).  For d = 1 the sqrt(d) components are
/// folded into the rational ones at construction, keeping the algebra a
/// field.
struct TowerElem {
    std::array<Rat, 4> c{};
    bool operator==(const TowerElem& o) const { return c == o.c; }
    bool is_zero() const;
    bool in_f() const { return c[2] == 0 && c[3] == 0; }          // in Q(sqrt d)
    bool in_sqrt_md_f() const { return c[0] == 0 && c[1] == 0; } // in sqrt(-D)*Q(sqrt d)
    std::string str() const;
};

TowerElem tower(Rat c0, Rat c1 = Rat(0), Rat c2 = Rat(0), Rat c3 = Rat(0));

/// The tower H/F/Q: F = Q(sqrt d) (d = 1 meaning F = Q) and H = F(sqrt(-D)).
class TowerField {
public:
    TowerField(const Int& d, const Int& dd); // throws NotSquarefree

    const Int& d() const { return d_; }
    const Int& D() const { return dd_; }
    bool rational_base() const { return d_ == 1; }

    TowerElem canon(TowerElem x) const; // fold sqrt(1) = 1 when d = 1
    TowerElem add(const TowerElem& x, const TowerElem& y) const;
    TowerElem sub(const TowerElem& x, const TowerElem& y) const;
    TowerElem neg(const TowerElem& x) const;
    TowerElem mul(const TowerElem& x, const TowerElem& y) const;
    TowerElem inv(const TowerElem& x) const; // throws DivisionByZero
    TowerElem from_int(long v) const;
    /// Multiplication by sqrt(-D).
    TowerElem mul_sqrt_md(const TowerElem& x) const;
    /// The nontrivial element of Gal(H/F): negate the sqrt(-D) and
    /// sqrt(-d*D) components.
    TowerElem galois(const TowerElem& x) const { return canon({{x.c[0], x.c[1], -x.c[2], -x.c[3]}}); }

private:
    Int d_, dd_;
};

} // namespace steinitz
