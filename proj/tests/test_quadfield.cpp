#include <doctest.h>

#include "steinitz/quadfield.hpp"
#include "steinitz/synthetic.hpp"

using namespace steinitz;

namespace {

Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

KNum kn(long a, long b, long den = 1) { return {rat(a, den), rat(b, den)}; }

KNum random_knum(synthetic::Rng& rng) {
    return {rat(rng.pick(-9, 9), rng.pick(1, 4)), rat(rng.pick(-9, 9), rng.pick(1, 4))};
}

} // namespace

TEST_SUITE("quadfield") {

TEST_CASE("field construction fixes disc and basis mode") {
    QuadField k10(Int(10));
    CHECK(k10.disc() == -40);
    CHECK(k10.mode() == BasisMode::Plain);

    QuadField k3(Int(3));
    CHECK(k3.disc() == -3);
    CHECK(k3.mode() == BasisMode::HalfIntegral);

    CHECK_THROWS_AS(QuadField(Int(12)), NotSquarefree);
    CHECK_THROWS_AS(QuadField(Int(0)), NotSquarefree);
    CHECK_THROWS_AS(QuadField(Int(-5)), NotSquarefree);
}

TEST_CASE("norms match the closed forms") {
    QuadField k10(Int(10));
    CHECK(k10.norm(kn(0, 1)) == Rat(10)); // sqrt(-10)
    CHECK(k10.norm(kn(3, 1)) == Rat(19)); // 3 + sqrt(-10)

    QuadField k3(Int(3));
    CHECK(k3.norm(kn(0, 1)) == Rat(1)); // omega = (1+sqrt(-3))/2
}

TEST_CASE("conjugation in the half-integral basis") {
    QuadField k3(Int(3));
    KNum omega = kn(0, 1);
    CHECK(k3.conj(omega) == kn(1, -1)); // conj(w) = 1 - w
    // omega^2 = omega - (1+D)/4, also as an AlgInt identity
    CHECK(k3.mul(omega, omega) == kn(-1, 1));
    for (long d : {3L, 7L, 11L, 23L}) {
        QuadField k((Int(d)));
        AlgInt w{Int(0), Int(1)};
        AlgInt w2 = k.mul(w, w);
        CHECK(w2 == AlgInt{Int(-(1 + d) / 4), Int(1)});
    }
}

TEST_CASE("field axioms on random elements") {
    synthetic::Rng rng(7);
    for (long d : {1L, 2L, 3L, 5L, 10L, 163L}) {
        QuadField k((Int(d)));
        for (int i = 0; i < 40; ++i) {
            KNum x = random_knum(rng), y = random_knum(rng);
            CHECK(k.conj(k.conj(x)) == x);
            CHECK(k.norm(k.mul(x, y)) == k.norm(x) * k.norm(y));
            CHECK(k.conj(k.mul(x, y)) == k.mul(k.conj(x), k.conj(y)));
            CHECK(k.conj(k.add(x, y)) == k.add(k.conj(x), k.conj(y)));
            CHECK(k.norm(x) >= 0);
            CHECK((k.norm(x) == 0) == x.is_zero());
            if (!x.is_zero())
                CHECK(k.mul(x, k.inv(x)) == kn(1, 0));
        }
        CHECK_THROWS_AS(k.inv(KNum{}), DivisionByZero);
    }
}

TEST_CASE("sqrt(-D) squares to -D in both modes") {
    for (long d : {2L, 3L, 5L, 7L, 10L, 11L}) {
        QuadField k((Int(d)));
        KNum s = k.sqrt_minus_d();
        CHECK(k.mul(s, s) == KNum{Rat(-d), Rat(0)});
        CHECK(k.conj(s) == k.neg(s));
    }
}

TEST_CASE("degree check degenerates to constant truth with a reason") {
    CHECK(degree_check(Int(5), Int(10)).holds);
    CHECK(degree_check(Int(1), Int(3)).holds);
    CHECK(degree_check(Int(5), Int(5)).holds);
    CHECK_FALSE(degree_check(Int(5), Int(7)).reason.empty());
    CHECK_THROWS_AS(degree_check(Int(4), Int(10)), NotSquarefree);
}

} // TEST_SUITE
