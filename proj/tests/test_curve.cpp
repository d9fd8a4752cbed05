#include <doctest.h>

#include "steinitz/curve.hpp"

using namespace steinitz;

namespace {

TowerElem te(long c0, long c1 = 0, long c2 = 0, long c3 = 0) {
    return tower(Rat(c0), Rat(c1), Rat(c2), Rat(c3));
}

TowerElem ter(const char* c0, const char* c1 = "0", const char* c2 = "0",
              const char* c3 = "0") {
    auto r = [](const char* s) {
        Rat v;
        v.set_str(s, 10);
        v.canonicalize();
        return v;
    };
    return tower(r(c0), r(c1), r(c2), r(c3));
}

// DM tower Q(sqrt5, sqrt(-10))
const TowerField kDmTower{Int(5), Int(10)};

WeierstrassCurve dm1_curve() {
    return WeierstrassCurve(kDmTower, te(6, 6), te(0), te(7, -3));
}

CurvePoint dm1_seed() {
    return CurvePoint::affine(ter("59/2", "27/2"), ter("267", "118"));
}

WeierstrassCurve gauss_curve() {
    return WeierstrassCurve(TowerField{Int(1), Int(1)}, te(0), te(-36), te(0));
}

CMMapData gauss_maps() {
    // [i](x, y) = (-x, i y)
    CMMapData m;
    m.a_num = {te(0), te(-1)};
    m.a_den = {te(1)};
    m.b_num = {te(1)};
    m.b_den = {te(1)};
    return m;
}

} // namespace

TEST_SUITE("curve_kernel") {

TEST_CASE("tower arithmetic basics") {
    TowerField t(Int(5), Int(10));
    TowerElem r5 = te(0, 1);
    CHECK(t.mul(r5, r5) == te(5));
    TowerElem i10 = te(0, 0, 1);
    CHECK(t.mul(i10, i10) == te(-10));
    CHECK(t.mul(r5, i10) == te(0, 0, 0, 1)); // sqrt(-50) slot
    TowerElem x = te(3, -2, 1, 4);
    CHECK(t.mul(x, t.inv(x)) == te(1));
    CHECK_THROWS_AS(t.inv(te(0)), DivisionByZero);
    CHECK(t.galois(t.galois(x)) == x);
    CHECK(t.mul_sqrt_md(te(1)) == te(0, 0, 1));
}

TEST_CASE("degenerate tower d = 1 folds and stays a field") {
    TowerField t(Int(1), Int(1)); // Q(i)
    TowerElem x = t.canon(tower(Rat(1), Rat(2), Rat(3), Rat(4)));
    CHECK(x == te(3, 0, 7, 0));
    TowerElem i = te(0, 0, 1);
    CHECK(t.mul(i, i) == te(-1));
    CHECK(t.mul(x, t.inv(x)) == te(1));
}

TEST_CASE("torsion identities on y^2 = x^3 + 1 over Q") {
    WeierstrassCurve e(TowerField{Int(1), Int(3)}, te(0), te(0), te(1));
    CurvePoint p = CurvePoint::affine(te(0), te(1));
    REQUIRE(e.on_curve(p));
    CHECK(e.scalar_mul(2, p) == CurvePoint::affine(te(0), te(-1)));
    CHECK(e.scalar_mul(3, p).infinity);
    CHECK(e.add(p, CurvePoint::infinite()) == p);
    CHECK(e.add(p, e.negate(p)).infinity);
}

TEST_CASE("singular curves are rejected") {
    TowerField t(Int(1), Int(3));
    CHECK_THROWS_AS(WeierstrassCurve(t, te(0), te(0), te(0)), ValidationFailed);
    CHECK_THROWS_AS(WeierstrassCurve(t, te(0), te(-3), te(2)), ValidationFailed);
    // coefficients must lie in F
    CHECK_THROWS_AS(WeierstrassCurve(kDmTower, te(0, 0, 1), te(0), te(1)),
                    ValidationFailed);
}

TEST_CASE("the DM1 seed is on the curve and non-torsion") {
    WeierstrassCurve e = dm1_curve();
    CurvePoint p = dm1_seed();
    REQUIRE(e.on_curve(p));
    CurvePoint acc = p;
    for (int n = 2; n <= 24; ++n) {
        acc = e.add(acc, p);
        CHECK_FALSE(acc.infinity);
    }
}

TEST_CASE("doubling the DM1 seed matches the independently computed value") {
    WeierstrassCurve e = dm1_curve();
    CurvePoint twice = e.scalar_mul(2, dm1_seed());
    CHECK(twice.x == ter("261342383/22284488", "-4670085/22284488"));
    CHECK(twice.y == ter("659066697339/37192810472", "371252232887/18596405236"));
}

TEST_CASE("galois action fixes F-points and negates I-points") {
    WeierstrassCurve e = dm1_curve();
    CurvePoint p = dm1_seed();
    CHECK(e.galois_sigma(p) == p);

    // mordell17: y^2 = x^3 + 17 over the same tower
    WeierstrassCurve m17(kDmTower, te(0), te(0), te(17));
    CurvePoint pm = CurvePoint::affine(te(-2), te(3));
    CurvePoint tm = CurvePoint::affine(te(-3), te(0, 0, 1));
    REQUIRE(m17.on_curve(pm));
    REQUIRE(m17.on_curve(tm));
    CHECK(in_i(tm));
    CHECK_FALSE(in_i(pm));
    CHECK(in_i(CurvePoint::infinite()));
    CHECK(m17.galois_sigma(tm) == m17.negate(tm));
    CHECK(m17.galois_sigma(m17.galois_sigma(tm)) == tm);
}

TEST_CASE("lemma 4 decomposition on a general H-point") {
    WeierstrassCurve m17(kDmTower, te(0), te(0), te(17));
    CurvePoint pm = CurvePoint::affine(te(-2), te(3));
    CurvePoint tm = CurvePoint::affine(te(-3), te(0, 0, 1));
    CurvePoint q = m17.add(pm, tm);
    // independently computed: Q = (4 - 6 sqrt(-10), 39 + 24 sqrt(-10))
    CHECK(q.x == te(4, 0, -6));
    CHECK(q.y == te(39, 0, 24));
    CurvePoint sq = m17.galois_sigma(q);
    CurvePoint u = m17.add(q, sq);
    CurvePoint v = m17.add(q, m17.negate(sq));
    CHECK(m17.galois_sigma(u) == u);
    CHECK(in_i(v));
    CHECK(m17.add(u, v) == m17.scalar_mul(2, q));
    CHECK(u == m17.scalar_mul(2, pm));
    CHECK(v == m17.scalar_mul(2, tm));
    CHECK(u == CurvePoint::affine(te(8), te(-23)));
    CHECK(v == CurvePoint::affine(ter("-489/40"), ter("0", "0", "-10763/800")));
}

TEST_CASE("twist isomorphism maps the twist onto I") {
    WeierstrassCurve m17(kDmTower, te(0), te(0), te(17));
    // (-3, 1) satisfies -10 y^2 = f(x)
    CurvePoint twist_pt = CurvePoint::affine(te(-3), te(1));
    CurvePoint img = twist_iso(m17, twist_pt);
    CHECK(img == CurvePoint::affine(te(-3), te(0, 0, 1)));
    CHECK(m17.on_curve(img));
    CHECK(in_i(img));
    CHECK_THROWS_AS(twist_iso(m17, CurvePoint::affine(te(-2), te(3))), NotOnTwist);
}

TEST_CASE("CM maps of y^2 = x^3 - 36x over Q(i) validate") {
    WeierstrassCurve e = gauss_curve();
    CurvePoint p0 = CurvePoint::affine(te(-3), te(9));
    CurvePoint q0 = CurvePoint::affine(te(3), te(0, 0, 9));
    REQUIRE(e.on_curve(p0));
    REQUIRE(e.on_curve(q0));
    CMMapData maps = gauss_maps();
    CHECK(apply_cm(e, maps, p0) == q0);
    CHECK(apply_cm(e, maps, q0) == e.negate(p0));
    CHECK(apply_cm(e, maps, CurvePoint::infinite()).infinity);

    std::vector<CurvePoint> samples;
    for (long n = 1; n <= 6; ++n)
        samples.push_back(e.scalar_mul(n, p0));
    CMMapCheck chk = validate_cm_maps(e, maps, samples);
    CHECK(chk.ok());
}

TEST_CASE("corrupted b(x) fails the squaring identity") {
    WeierstrassCurve e = gauss_curve();
    CMMapData maps = gauss_maps();
    maps.b_num = {te(2)}; // wrong scale
    std::vector<CurvePoint> samples = {CurvePoint::affine(te(-3), te(9))};
    CMMapCheck chk = validate_cm_maps(e, maps, samples);
    CHECK_FALSE(chk.ok());
    bool named = false;
    for (const auto& f : chk.failures)
        named = named || f.find("(ii)") != std::string::npos;
    CHECK(named);
}

TEST_CASE("lattice extraction round trip on the Gauss curve") {
    WeierstrassCurve e = gauss_curve();
    CurvePoint p0 = CurvePoint::affine(te(-3), te(9));
    CurvePoint q0 = CurvePoint::affine(te(3), te(0, 0, 9));
    ExtractedLattice ex = lattice_extract(e, {p0}, {q0}, gauss_maps(), 2);
    ZMat sigma(2, 2), s(2, 2);
    sigma.at(0, 0) = 1;
    sigma.at(1, 1) = -1;
    s.at(0, 1) = -1;
    s.at(1, 0) = 1;
    CHECK(ex.sigma == sigma);
    CHECK(ex.s == s);

    CHECK_THROWS_AS(lattice_extract(e, {p0}, {q0}, gauss_maps(), 0), SearchExhausted);
    // swapped bases violate the preconditions
    CHECK_THROWS_AS(lattice_extract(e, {q0}, {p0}, gauss_maps(), 2), ValidationFailed);
    // torsion points are rejected
    WeierstrassCurve j0(TowerField{Int(1), Int(1)}, te(0), te(0), te(1));
    CHECK_THROWS_AS(
        lattice_extract(j0, {CurvePoint::affine(te(0), te(1))}, {}, gauss_maps(), 2),
        ValidationFailed);
}

TEST_CASE("exhaustive group law on the torsion of y^2 = x^3 + 1") {
    WeierstrassCurve e(TowerField{Int(1), Int(3)}, te(0), te(0), te(1));
    // E(Q) = Z/6 = {O, (2,3), (0,1), (-1,0), (0,-1), (2,-3)}
    std::vector<CurvePoint> pts = {
        CurvePoint::infinite(),
        CurvePoint::affine(te(2), te(3)),
        CurvePoint::affine(te(0), te(1)),
        CurvePoint::affine(te(-1), te(0)),
        CurvePoint::affine(te(0), te(-1)),
        CurvePoint::affine(te(2), te(-3)),
    };
    for (std::size_t i = 1; i < 6; ++i)
        CHECK(e.scalar_mul(static_cast<long>(i), pts[1]) == pts[i]);
    CHECK(e.scalar_mul(6, pts[1]).infinity);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            CHECK(e.add(a, b) == e.add(b, a));
            for (const auto& c : pts)
                CHECK(e.add(e.add(a, b), c) == e.add(a, e.add(b, c)));
        }
    for (const auto& a : pts) {
        CHECK(e.add(a, CurvePoint::infinite()) == a);
        CHECK(e.add(a, e.negate(a)).infinity);
    }
}

TEST_CASE("twist_iso is injective into I") {
    WeierstrassCurve m17(kDmTower, te(0), te(0), te(17));
    CurvePoint t1 = twist_iso(m17, CurvePoint::affine(te(-3), te(1)));
    CurvePoint t2 = twist_iso(m17, CurvePoint::affine(te(-3), te(-1)));
    CHECK_FALSE(t1 == t2);
    CHECK(in_i(t1));
    CHECK(in_i(t2));
    CHECK(t2 == m17.negate(t1));
}

TEST_CASE("group law properties on derived DM1 samples") {
    WeierstrassCurve e = dm1_curve();
    CurvePoint p = dm1_seed();
    std::vector<CurvePoint> pts;
    CurvePoint acc = CurvePoint::infinite();
    for (int n = 1; n <= 6; ++n) {
        acc = e.add(acc, p);
        pts.push_back(acc);
        pts.push_back(e.negate(acc));
    }
    for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
        const CurvePoint &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
        CHECK(e.add(a, b) == e.add(b, a));
        CHECK(e.add(e.add(a, b), c) == e.add(a, e.add(b, c)));
    }
    for (long n = 2; n <= 3; ++n)
        for (long m = 2; m <= 3; ++m)
            CHECK(e.scalar_mul(n, e.scalar_mul(m, p)) == e.scalar_mul(n * m, p));
}

} // TEST_SUITE
