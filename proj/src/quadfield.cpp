#include "steinitz/quadfield.hpp"

#include <sstream>

namespace steinitz {

std::string KNum::str() const {
    std::ostringstream os;
    os << a.get_str();
    if (b != 0)
        os << (b > 0 ? "+" : "") << b.get_str() << "w";
    return os.str();
}

QuadField::QuadField(const Int& d) : d_(d) {
    if (d < 1)
        throw NotSquarefree("D must be a positive integer, got " + to_string(d));
    if (!is_squarefree(d))
        throw NotSquarefree("D = " + to_string(d) + " is not squarefree");
    if (mod_floor(d, 4) == 3) {
        mode_ = BasisMode::HalfIntegral;
        disc_ = -d;
    } else {
        mode_ = BasisMode::Plain;
        disc_ = -4 * d;
    }
}

KNum QuadField::mul(const KNum& x, const KNum& y) const {
    // (a1 + b1 w)(a2 + b2 w) with w^2 = tr(w)*w - N(w)
    Rat cross = x.a * y.b + x.b * y.a;
    Rat ww = x.b * y.b;
    Rat t(omega_trace()), n(omega_norm());
    return {x.a * y.a - ww * n, cross + ww * t};
}

KNum QuadField::conj(const KNum& x) const {
    if (half())
        return {x.a + x.b, -x.b};
    return {x.a, -x.b};
}

Rat QuadField::norm(const KNum& x) const {
    Rat t(omega_trace()), n(omega_norm());
    return x.a * x.a + x.a * x.b * t + x.b * x.b * n;
}

KNum QuadField::inv(const KNum& x) const {
    if (x.is_zero())
        throw DivisionByZero("inverse of zero in K");
    Rat n = norm(x);
    KNum c = conj(x);
    return {c.a / n, c.b / n};
}

AlgInt QuadField::mul(const AlgInt& x, const AlgInt& y) const {
    Int cross = x.a * y.b + x.b * y.a;
    Int ww = x.b * y.b;
    return {x.a * y.a - ww * omega_norm(), cross + ww * omega_trace()};
}

AlgInt QuadField::conj(const AlgInt& x) const {
    if (half())
        return {x.a + x.b, -x.b};
    return {x.a, -x.b};
}

Int QuadField::norm(const AlgInt& x) const {
    return x.a * x.a + x.a * x.b * omega_trace() + x.b * x.b * omega_norm();
}

AlgInt QuadField::mul_omega(const AlgInt& x) const {
    // w * (a + b w) = -N(w) b + (a + tr(w) b) w
    return {-omega_norm() * x.b, x.a + omega_trace() * x.b};
}

KNum QuadField::sqrt_minus_d() const {
    if (half())
        return {Rat(-1), Rat(2)};
    return {Rat(0), Rat(1)};
}

DegreeCheck degree_check(const Int& f_rad, const Int& d) {
    if (f_rad < 1 || !is_squarefree(f_rad))
        throw NotSquarefree("real field radicand must be squarefree and positive");
    if (d < 1 || !is_squarefree(d))
        throw NotSquarefree("D must be squarefree and positive");
    std::ostringstream os;
    os << "Q(sqrt(" << f_rad.get_str() << ")) embeds into the reals, where every "
       << "square is nonnegative; -" << d.get_str()
       << " < 0 is therefore not a square and [H:F] = 2";
    return {true, os.str()};
}

} // namespace steinitz
