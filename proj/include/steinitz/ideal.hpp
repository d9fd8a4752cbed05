#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steinitz/quadfield.hpp"
#include "steinitz/zmat.hpp"

namespace steinitz {

/// Integral ideal of O_K in upper-triangular Hermite form: Z-basis columns
/// a*1 and b + c*omega, with a,c > 0 and 0 <= b < a.  Equality of ideals is
/// equality of the three entries.
struct IdealHNF {
    Int a, b, c;
    IdealHNF() : a(1), b(0), c(1) {}
    IdealHNF(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
    bool operator==(const IdealHNF& o) const { return a == o.a && b == o.b && c == o.c; }
    bool is_unit() const { return a == 1 && b == 0 && c == 1; }
    AlgInt gen1() const { return {a, Int(0)}; }
    AlgInt gen2() const { return {b, c}; }
    ZMat matrix() const;
    std::string str() const;
};

Int ideal_norm(const IdealHNF& A);

IdealHNF unit_ideal();
/// Principal ideal (x).
IdealHNF principal_ideal(const AlgInt& x, const QuadField& k);

/// HNF of the O_K-module generated by the given elements.  Throws ZeroIdeal
/// when all generators vanish.
IdealHNF ideal_from_generators(std::span<const AlgInt> gens, const QuadField& k);
IdealHNF ideal_from_generators(std::initializer_list<AlgInt> gens, const QuadField& k);

IdealHNF ideal_mul(const IdealHNF& A, const IdealHNF& B, const QuadField& k);
IdealHNF ideal_add(const IdealHNF& A, const IdealHNF& B, const QuadField& k);
IdealHNF ideal_conj(const IdealHNF& A, const QuadField& k);
IdealHNF ideal_pow(const IdealHNF& A, unsigned e, const QuadField& k);

bool ideal_contains(const IdealHNF& A, const AlgInt& x);
/// The whole Z-span is stable under multiplication by omega.
bool ideal_is_ok_stable(const IdealHNF& A, const QuadField& k);

enum class SplitType { Split, Inert, Ramified };

struct PrimeSplit {
    SplitType type;
    IdealHNF p1;                // prime above q (equals (q) when inert)
    std::optional<IdealHNF> p2; // conjugate prime when split
};

/// Splitting of the rational prime q, decided by the Kronecker symbol
/// (disc | q) and realised by factoring the minimal polynomial of omega.
PrimeSplit prime_above(const Int& q, const QuadField& k); // throws NotPrime

/// Primitive positive definite binary quadratic form a x^2 + b x y + c y^2.
struct QForm {
    Int a, b, c;
    bool operator==(const QForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QForm& o) const;
    Int disc() const { return b * b - 4 * a * c; }
    std::string str() const;
};

QForm reduce_form(QForm f);
QForm principal_form(const Int& disc);
/// Dirichlet composition followed by reduction.
QForm compose_forms(const QForm& f, const QForm& g);

struct ClassGroup {
    QuadField field;
    std::vector<QForm> reps; // all reduced forms of disc(field), sorted
    std::size_t principal_index;
    std::size_t h() const { return reps.size(); }
    std::size_t index_of(const QForm& reduced) const; // throws InternalError if absent
};

/// Exhaustive reduced-form enumeration for disc < 0.
ClassGroup class_group(const QuadField& k);

/// Reduced norm form of an ideal on its HNF Z-basis.
QForm form_of_ideal(const IdealHNF& A, const QuadField& k);
/// Ideal Z a + Z(omega - r) attached to a form of the field discriminant.
IdealHNF ideal_of_form(const QForm& f, const QuadField& k);

std::size_t ideal_class_of(const IdealHNF& A, const ClassGroup& cg);
bool is_principal(const IdealHNF& A, const ClassGroup& cg);
/// Class of A^t (t = 0 gives the principal class).
std::size_t class_pow(const IdealHNF& A, unsigned t, const ClassGroup& cg);

} // namespace steinitz
