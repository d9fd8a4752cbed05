#pragma once

#include <string>
#include <vector>

#include "steinitz/numeric.hpp"

namespace steinitz {

enum class BasisMode {
    Plain,        // omega = sqrt(-D), for D = 1, 2 mod 4
    HalfIntegral, // omega = (1 + sqrt(-D))/2, for D = 3 mod 4
};

/// Element of O_K written as a + b*omega on the fixed integral basis (1, omega).
struct AlgInt {
    Int a, b;
    AlgInt() : a(0), b(0) {}
    AlgInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    bool operator==(const AlgInt& o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return a == 0 && b == 0; }
};

/// Element of K = Q(sqrt(-D)), rational coordinates on (1, omega).
struct KNum {
    Rat a, b;
    KNum() = default;
    KNum(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    KNum(const AlgInt& x) : a(x.a), b(x.b) {}
    bool operator==(const KNum& o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }
    std::string str() const;
};

/// The imaginary quadratic field K = Q(sqrt(-D)) with its ring of integers
/// Z[omega].  D must be squarefree and positive; the discriminant is -D when
/// D = 3 mod 4 and -4D otherwise.
class QuadField {
public:
    explicit QuadField(const Int& d); // throws NotSquarefree

    const Int& D() const { return d_; }
    const Int& disc() const { return disc_; }
    BasisMode mode() const { return mode_; }
    bool half() const { return mode_ == BasisMode::HalfIntegral; }

    Int omega_trace() const { return half() ? 1 : 0; }
    Int omega_norm() const { return half() ? (d_ + 1) / 4 : d_; }

    KNum add(const KNum& x, const KNum& y) const { return {x.a + y.a, x.b + y.b}; }
    KNum sub(const KNum& x, const KNum& y) const { return {x.a - y.a, x.b - y.b}; }
    KNum neg(const KNum& x) const { return {-x.a, -x.b}; }
    KNum mul(const KNum& x, const KNum& y) const;
    KNum conj(const KNum& x) const;
    KNum inv(const KNum& x) const; // throws DivisionByZero
    Rat norm(const KNum& x) const;
    Rat trace(const KNum& x) const { return 2 * x.a + x.b * Rat(omega_trace()); }

    AlgInt mul(const AlgInt& x, const AlgInt& y) const;
    AlgInt conj(const AlgInt& x) const;
    Int norm(const AlgInt& x) const;
    /// The element omega * x, staying integral.
    AlgInt mul_omega(const AlgInt& x) const;

    /// sqrt(-D) as a K-number: omega in plain mode, 2*omega - 1 otherwise.
    KNum sqrt_minus_d() const;

    bool operator==(const QuadField& o) const { return d_ == o.d_; }

private:
    Int d_;
    Int disc_;
    BasisMode mode_;
};

/// Lemma 1 sanity check: the real quadratic field Q(sqrt(f_rad)) (f_rad = 1
/// meaning Q) contains no square root of -D, so adjoining it is a genuine
/// quadratic step.  The check degenerates to constant truth because squares
/// are nonnegative under a real embedding; the reason string records that.
struct DegreeCheck {
    bool holds;
    std::string reason;
};
DegreeCheck degree_check(const Int& f_rad, const Int& d);

} // namespace steinitz
