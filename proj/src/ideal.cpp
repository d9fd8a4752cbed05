#include "steinitz/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace steinitz {

ZMat IdealHNF::matrix() const {
    ZMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 1) = c;
    return m;
}

std::string IdealHNF::str() const {
    std::ostringstream os;
    os << "[[" << a.get_str() << "," << b.get_str() << "],[0," << c.get_str() << "]]";
    return os.str();
}

Int ideal_norm(const IdealHNF& A) { return A.a * A.c; }

IdealHNF unit_ideal() { return {}; }

IdealHNF principal_ideal(const AlgInt& x, const QuadField& k) {
    return ideal_from_generators({x}, k);
}

static IdealHNF hnf_from_zgens(const ZMat& gens) {
    HnfResult r = hnf(gens);
    if (r.rank < 2)
        throw ZeroIdeal("generators span a rank-deficient module");
    return {r.h.at(0, 0), r.h.at(0, 1), r.h.at(1, 1)};
}

IdealHNF ideal_from_generators(std::span<const AlgInt> gens, const QuadField& k) {
    ZMat m(2, 2 * gens.size());
    std::size_t j = 0;
    bool nonzero = false;
    for (const AlgInt& g : gens) {
        if (!g.is_zero())
            nonzero = true;
        AlgInt wg = k.mul_omega(g);
        m.at(0, j) = g.a;
        m.at(1, j) = g.b;
        m.at(0, j + 1) = wg.a;
        m.at(1, j + 1) = wg.b;
        j += 2;
    }
    if (!nonzero)
        throw ZeroIdeal("all ideal generators are zero");
    return hnf_from_zgens(m);
}

IdealHNF ideal_from_generators(std::initializer_list<AlgInt> gens, const QuadField& k) {
    return ideal_from_generators(std::span<const AlgInt>(gens.begin(), gens.size()), k);
}

IdealHNF ideal_mul(const IdealHNF& A, const IdealHNF& B, const QuadField& k) {
    std::vector<AlgInt> prods;
    const AlgInt ga[2] = {A.gen1(), A.gen2()};
    const AlgInt gb[2] = {B.gen1(), B.gen2()};
    for (const auto& x : ga)
        for (const auto& y : gb)
            prods.push_back(k.mul(x, y));
    return ideal_from_generators(std::span<const AlgInt>(prods), k);
}

IdealHNF ideal_add(const IdealHNF& A, const IdealHNF& B, const QuadField& k) {
    AlgInt gens[4] = {A.gen1(), A.gen2(), B.gen1(), B.gen2()};
    return ideal_from_generators(std::span<const AlgInt>(gens, 4), k);
}

IdealHNF ideal_conj(const IdealHNF& A, const QuadField& k) {
    AlgInt gens[2] = {k.conj(A.gen1()), k.conj(A.gen2())};
    return ideal_from_generators(std::span<const AlgInt>(gens, 2), k);
}

IdealHNF ideal_pow(const IdealHNF& A, unsigned e, const QuadField& k) {
    IdealHNF r = unit_ideal();
    for (unsigned i = 0; i < e; ++i)
        r = ideal_mul(r, A, k);
    return r;
}

bool ideal_contains(const IdealHNF& A, const AlgInt& x) {
    // x = s*(a) + t*(b + c w): t = x.b / c, then s = (x.a - t b)/a
    if (mod_floor(x.b, A.c) != 0)
        return false;
    Int t = x.b / A.c;
    return mod_floor(x.a - t * A.b, A.a) == 0;
}

bool ideal_is_ok_stable(const IdealHNF& A, const QuadField& k) {
    return ideal_contains(A, k.mul_omega(A.gen1())) &&
           ideal_contains(A, k.mul_omega(A.gen2()));
}

PrimeSplit prime_above(const Int& q, const QuadField& k) {
    if (q < 2 || !is_prime(q))
        throw NotPrime("q = " + to_string(q) + " is not a rational prime");
    int sym = kronecker(k.disc(), q);
    // roots of x^2 - tr(w) x + N(w) mod q
    std::vector<Int> roots;
    for (Int r = 0; r < q; ++r) {
        Int v = mod_floor(r * r - k.omega_trace() * r + k.omega_norm(), q);
        if (v == 0)
            roots.push_back(r);
    }
    if (roots.empty()) {
        if (sym != -1)
            throw InternalError("prime_above: symbol/root disagreement");
        IdealHNF p(q, Int(0), q);
        return {SplitType::Inert, p, std::nullopt};
    }
    if (roots.size() == 1) {
        if (sym != 0)
            throw InternalError("prime_above: symbol/root disagreement");
        IdealHNF p = ideal_from_generators({AlgInt(q, Int(0)), AlgInt(-roots[0], Int(1))}, k);
        return {SplitType::Ramified, p, std::nullopt};
    }
    if (sym != 1)
        throw InternalError("prime_above: symbol/root disagreement");
    IdealHNF p1 = ideal_from_generators({AlgInt(q, Int(0)), AlgInt(-roots[0], Int(1))}, k);
    IdealHNF p2 = ideal_from_generators({AlgInt(q, Int(0)), AlgInt(-roots[1], Int(1))}, k);
    return {SplitType::Split, p1, p2};
}

bool QForm::operator<(const QForm& o) const {
    if (a != o.a)
        return a < o.a;
    if (b != o.b)
        return b < o.b;
    return c < o.c;
}

std::string QForm::str() const {
    std::ostringstream os;
    os << "(" << a.get_str() << "," << b.get_str() << "," << c.get_str() << ")";
    return os.str();
}

QForm reduce_form(QForm f) {
    Int disc = f.disc();
    while (true) {
        // normalize b into (-a, a]
        Int shifted = f.b + f.a;
        Int r = mod_floor(shifted, 2 * f.a); // in [0, 2a)
        f.b = r - f.a;
        if (f.b == -f.a)
            f.b = f.a;
        f.c = (f.b * f.b - disc) / (4 * f.a);
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
        } else {
            break;
        }
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    if (f.b == -f.a) // |b| = a keeps the positive representative
        f.b = f.a;
    return f;
}

QForm principal_form(const Int& disc) {
    if (mod_floor(disc, 4) == 0)
        return {Int(1), Int(0), -disc / 4};
    return {Int(1), Int(1), (1 - disc) / 4};
}

QForm compose_forms(const QForm& f, const QForm& g) {
    Int disc = f.disc();
    if (disc != g.disc())
        throw InternalError("compose_forms: discriminant mismatch");
    // Shanks composition on (a, b) pairs
    Int d1, v, w;
    mpz_gcdext(d1.get_mpz_t(), v.get_mpz_t(), w.get_mpz_t(), f.a.get_mpz_t(),
               g.a.get_mpz_t());
    Int a3 = f.a * g.a;
    Int b3 = v * f.a * (g.b - f.b);
    if (d1 != 1) {
        Int s = (f.b + g.b) / 2;
        Int d, v2, w2;
        mpz_gcdext(d.get_mpz_t(), v2.get_mpz_t(), w2.get_mpz_t(), d1.get_mpz_t(),
                   s.get_mpz_t());
        b3 = exact_div(b3 * v2 + w2 * (disc - f.b * f.b) / 2, d);
        a3 = exact_div(a3, d * d);
    }
    Int B = mod_floor(f.b + b3, 2 * a3);
    Int C = exact_div(B * B - disc, 4 * a3);
    return reduce_form({a3, B, C});
}

ClassGroup class_group(const QuadField& k) {
    const Int disc = k.disc();
    const Int absd = -disc;
    std::vector<QForm> reps;
    Int b = (mod_floor(disc, 2) == 0) ? 0 : 1;
    for (; 3 * b * b <= absd; b += 2) {
        Int m4 = b * b + absd;
        if (mod_floor(m4, 4) != 0)
            continue;
        Int m = m4 / 4;
        for (Int a = (b > 0 ? b : Int(1)); a * a <= m; ++a) {
            if (mod_floor(m, a) != 0)
                continue;
            Int c = m / a;
            if (a < b)
                continue;
            QForm f{a, b, c};
            reps.push_back(f);
            if (b > 0 && b < a && a < c)
                reps.push_back({a, -b, c});
        }
    }
    std::sort(reps.begin(), reps.end());
    ClassGroup cg{k, std::move(reps), 0};
    cg.principal_index = cg.index_of(principal_form(disc));
    return cg;
}

std::size_t ClassGroup::index_of(const QForm& reduced) const {
    auto it = std::lower_bound(reps.begin(), reps.end(), reduced);
    if (it == reps.end() || !(*it == reduced))
        throw InternalError("class group representative not found for " + reduced.str());
    return static_cast<std::size_t>(it - reps.begin());
}

QForm form_of_ideal(const IdealHNF& A, const QuadField& k) {
    // norm form N(x * a + y * (b + c w)) / N(A)
    Int n = ideal_norm(A);
    AlgInt g2 = A.gen2();
    Int qa = exact_div(A.a * A.a, n);
    Int qb = exact_div(A.a * (2 * A.b + A.c * k.omega_trace()), n);
    Int qc = exact_div(k.norm(g2), n);
    QForm f{qa, qb, qc};
    if (f.disc() != k.disc())
        throw InternalError("norm form has wrong discriminant for " + A.str());
    return reduce_form(f);
}

IdealHNF ideal_of_form(const QForm& f, const QuadField& k) {
    // use the conjugate form's root so the section form -> ideal -> form is
    // the identity on classes (the naive choice lands in the inverse class)
    Int r = k.half() ? Int((1 - f.b) / 2) : Int(-f.b / 2);
    return ideal_from_generators({AlgInt(f.a, Int(0)), AlgInt(-r, Int(1))}, k);
}

std::size_t ideal_class_of(const IdealHNF& A, const ClassGroup& cg) {
    return cg.index_of(form_of_ideal(A, cg.field));
}

bool is_principal(const IdealHNF& A, const ClassGroup& cg) {
    return ideal_class_of(A, cg) == cg.principal_index;
}

std::size_t class_pow(const IdealHNF& A, unsigned t, const ClassGroup& cg) {
    IdealHNF r = unit_ideal();
    for (unsigned i = 0; i < t; ++i)
        r = ideal_mul(r, A, cg.field);
    return ideal_class_of(r, cg);
}

} // namespace steinitz
