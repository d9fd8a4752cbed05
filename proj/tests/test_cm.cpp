#include <doctest.h>

#include "steinitz/cm_lattice.hpp"
#include "steinitz/synthetic.hpp"

using namespace steinitz;

namespace {

ZMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    ZMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

CMLattice ok_lattice_d10() {
    return CMLattice(QuadField(Int(10)), from_rows({{1, 0}, {0, -1}}),
                     from_rows({{0, -10}, {1, 0}}));
}

CMLattice p_lattice_d10() {
    // P = (2, sqrt(-10)) on the basis (2, omega)
    return CMLattice(QuadField(Int(10)), from_rows({{1, 0}, {0, -1}}),
                     from_rows({{0, -5}, {2, 0}}));
}

CMLattice q_lattice_d10() {
    // Q = (5, sqrt(-10)) on the basis (5, omega)
    return CMLattice(QuadField(Int(10)), from_rows({{1, 0}, {0, -1}}),
                     from_rows({{0, -2}, {5, 0}}));
}

} // namespace

TEST_SUITE("cm_structure") {

TEST_CASE("validation accepts the O_K lattice and pins the failure names") {
    CMValidation v = validate_cm(ok_lattice_d10());
    CHECK(v.ok());
    CHECK(v.l == 1);

    // S^2 = -9 instead of -10
    CMLattice bad(QuadField(Int(10)), from_rows({{1, 0}, {0, -1}}),
                  from_rows({{0, -9}, {1, 0}}));
    CMValidation vb = validate_cm(bad);
    CHECK_FALSE(vb.ok());
    bool has_cm_square = false;
    for (const auto& f : vb.failures())
        has_cm_square = has_cm_square || f == "CMSquare";
    CHECK(has_cm_square);

    // sigma = identity forces S = 0 by semilinearity
    CMLattice bad2(QuadField(Int(10)), ZMat::identity(2), from_rows({{0, -10}, {1, 0}}));
    CMValidation vb2 = validate_cm(bad2);
    CHECK_FALSE(vb2.ok());
    bool has_semi = false;
    for (const auto& f : vb2.failures())
        has_semi = has_semi || f == "Semilinearity";
    CHECK(has_semi);
}

TEST_CASE("synthetic construction matches the hand-built matrices") {
    QuadField k(Int(10));
    CMLattice m = synthetic::cm_from_module(k, 0, unit_ideal());
    CHECK(m.sigma() == from_rows({{1, 0}, {0, -1}}));
    CHECK(m.S() == from_rows({{0, -10}, {1, 0}}));

    CMLattice mp = synthetic::cm_from_module(k, 0, IdealHNF(Int(2), Int(0), Int(1)));
    CHECK(mp.S() == from_rows({{0, -5}, {2, 0}}));
}

TEST_CASE("ok_span_fixed on the O_K and P lattices") {
    ZMat l = ok_span_fixed(ok_lattice_d10());
    CHECK(det_abs(l) == 1); // whole lattice

    ZMat lp = ok_span_fixed(p_lattice_d10());
    CHECK(det_abs(lp) == 2); // index 2 inside P
}

TEST_CASE("lemma 3 on hand-computed lattices") {
    Lemma3Report r = lemma3_check(ok_lattice_d10());
    CHECK(r.idx1 == 1);
    CHECK(r.idx2 == 10);
    CHECK(r.holds);

    r = lemma3_check(p_lattice_d10());
    CHECK(r.idx1 == 2);
    CHECK(r.idx2 == 5);
    CHECK(r.holds);

    // O_K lattice for D = 3 (half-integral): sigma(w) = 1 - w
    CMLattice m3(QuadField(Int(3)), from_rows({{1, 1}, {0, -1}}),
                 from_rows({{-1, -2}, {2, 1}}));
    r = lemma3_check(m3);
    CHECK(r.idx1 * r.idx2 == 3);
    CHECK(r.holds);
}

TEST_CASE("theorem 3 for half-integral fields") {
    CMLattice m3(QuadField(Int(3)), from_rows({{1, 1}, {0, -1}}),
                 from_rows({{-1, -2}, {2, 1}}));
    Theorem3Report r = theorem3_check(m3);
    CHECK(r.h1 == 1);
    CHECK(r.sum_equals_whole);
    CHECK(r.holds);

    CHECK_THROWS_AS(theorem3_check(ok_lattice_d10()), ModeMismatch);

    synthetic::Rng rng(31);
    for (long d : {3L, 7L, 11L, 23L}) {
        ClassGroup cg = class_group(QuadField(Int(d)));
        for (int i = 0; i < 10; ++i) {
            synthetic::SyntheticCM sc = synthetic::random_cm(cg, 3, rng);
            Theorem3Report rr = theorem3_check(sc.lattice);
            CHECK(rr.holds);
        }
    }
}

TEST_CASE("theorem 4 pipeline returns the principal class") {
    QuadField k3(Int(3));
    ClassGroup cg3 = class_group(k3);
    CMLattice m3 = synthetic::cm_from_module(k3, 0, unit_ideal());
    PipelineReport rep = theorem4_pipeline(m3, cg3);
    CHECK(rep.index_lm == 3);
    CHECK(rep.t == 1);
    CHECK(rep.steinitz_principal);
    CHECK(rep.cross_checked);

    CHECK_THROWS_AS(theorem4_pipeline(ok_lattice_d10(), cg3), NotPrime);

    synthetic::Rng rng(32);
    for (long d : {3L, 7L, 23L}) {
        ClassGroup cg = class_group(QuadField(Int(d)));
        for (int i = 0; i < 8; ++i) {
            synthetic::SyntheticCM sc = synthetic::random_cm(cg, 3, rng);
            PipelineReport r = theorem4_pipeline(sc.lattice, cg);
            CHECK(r.steinitz_principal);
            CHECK(r.cross_checked);
        }
    }
}

TEST_CASE("theorem 5 pipeline, O_K and P lattices over Q(sqrt(-5))") {
    QuadField k5(Int(5));
    ClassGroup cg5 = class_group(k5);

    CMLattice ok5 = synthetic::cm_from_module(k5, 0, unit_ideal());
    PipelineReport rep = theorem5_pipeline(ok5, cg5);
    CHECK(rep.index_lm == 20);
    CHECK(rep.t == 2);
    CHECK(rep.r == 1);
    CHECK(rep.h1 == 2);
    CHECK(rep.steinitz_principal);
    CHECK(rep.cross_checked);

    IdealHNF p5(Int(2), Int(1), Int(1)); // (2, 1 + sqrt(-5))
    CMLattice mp = synthetic::cm_from_module(k5, 0, p5);
    rep = theorem5_pipeline(mp, cg5);
    CHECK(rep.index_lm == 10);
    CHECK(rep.t == 1);
    CHECK(rep.h1 == 1);
    CHECK_FALSE(rep.steinitz_principal);
    CHECK(cg5.reps[rep.steinitz_index] == QForm{Int(2), Int(2), Int(3)});
    CHECK(rep.cross_checked);

    // O_K + P: t odd again
    CMLattice sum = synthetic::cm_from_module(k5, 1, p5);
    rep = theorem5_pipeline(sum, cg5);
    CHECK(rep.t % 2 == 1);
    CHECK_FALSE(rep.steinitz_principal);
    CHECK(rep.cross_checked);

    CHECK_THROWS_AS(theorem5_pipeline(ok_lattice_d10(), cg5), NotPrime);
}

TEST_CASE("theorem 5 randomized ground truth") {
    synthetic::Rng rng(33);
    for (long d : {5L, 13L}) {
        ClassGroup cg = class_group(QuadField(Int(d)));
        for (int i = 0; i < 8; ++i) {
            synthetic::SyntheticCM sc = synthetic::random_cm(cg, 3, rng);
            PipelineReport r = theorem5_pipeline(sc.lattice, cg);
            CHECK(r.cross_checked);
            CHECK(r.steinitz_index == sc.true_class);
            CHECK(r.t == sc.l + static_cast<unsigned>(mpz_sizeinbase(r.h1.get_mpz_t(), 2)) - 1);
        }
    }
}

TEST_CASE("dm invariant triples reproduce the published classes") {
    ClassGroup cg = class_group(QuadField(Int(10)));
    DmInvariantReport r1 = dm_from_invariants(1, Int(2), Int(1), cg);
    CHECK(r1.quantity == 4);
    CHECK(r1.e == 2);
    CHECK(r1.principal);

    DmInvariantReport r2 = dm_from_invariants(1, Int(2), Int(2), cg);
    CHECK(r2.quantity == 8);
    CHECK(r2.e == 3);
    CHECK_FALSE(r2.principal);
    CHECK(cg.reps[r2.class_index] == QForm{Int(2), Int(0), Int(5)});

    DmInvariantReport r3 = dm_from_invariants(2, Int(2), Int(1), cg);
    CHECK(r3.e == 3);
    CHECK_FALSE(r3.principal);
}

TEST_CASE("dm pipeline agrees with the decomposition on O_K and P lattices") {
    ClassGroup cg = class_group(QuadField(Int(10)));
    PipelineReport r = dm_pipeline(ok_lattice_d10(), cg);
    CHECK(r.index_lm == 40);
    CHECK(r.steinitz_principal);
    CHECK(r.cross_checked);

    r = dm_pipeline(p_lattice_d10(), cg);
    CHECK(r.index_lm == 20);
    CHECK_FALSE(r.steinitz_principal);
    CHECK(r.cross_checked);
}

TEST_CASE("dm parity criterion disagrees with the decomposition on the Q lattice") {
    // For the sigma-stable ideal Q = (5, sqrt(-10)) the 5-part of
    // (I_f : sqrt(-10) E(F)_f) is odd and the parity shortcut misses the
    // class; the pipeline reports the disagreement instead of hiding it.
    ClassGroup cg = class_group(QuadField(Int(10)));
    PipelineReport r = dm_pipeline(q_lattice_d10(), cg);
    CHECK(r.index_lm == 8);
    CHECK(r.idx_anti == 5);
    CHECK(r.steinitz_principal);   // parity rule says principal
    CHECK_FALSE(r.cross_checked);  // decomposition says [P]
}

TEST_CASE("lemma 3 and theorem 1 hold on random valid lattices") {
    synthetic::Rng rng(34);
    for (long d : {3L, 5L, 7L, 10L, 11L, 13L}) {
        ClassGroup cg = class_group(QuadField(Int(d)));
        for (int i = 0; i < 8; ++i) {
            synthetic::SyntheticCM sc = synthetic::random_cm(cg, 3, rng);
            CHECK(lemma3_check(sc.lattice).holds);
            InvolutionLattice inv(sc.lattice.sigma());
            CHECK(verify_theorem1(inv).holds);
            ZMat dec = ZMat::hcat(fixed_sublattice(inv), anti_fixed_sublattice(inv));
            CHECK(integral_coords(dec, ZMat::identity(inv.rank()).scaled(2)).has_value());
        }
    }
}

TEST_CASE("pipeline outputs are invariant under change of basis") {
    synthetic::Rng rng(35);
    ClassGroup cg5 = class_group(QuadField(Int(5)));
    CMLattice base = synthetic::cm_from_module(cg5.field, 1, IdealHNF(Int(2), Int(1), Int(1)));
    PipelineReport r0 = theorem5_pipeline(base, cg5);
    for (int i = 0; i < 5; ++i) {
        synthetic::Unimodular u = synthetic::random_unimodular(base.rank(), rng);
        PipelineReport r = theorem5_pipeline(synthetic::conjugated(base, u), cg5);
        CHECK(r.index_lm == r0.index_lm);
        CHECK(r.t == r0.t);
        CHECK(r.h1 == r0.h1);
        CHECK(r.steinitz_index == r0.steinitz_index);
        CHECK(r.cross_checked);
    }
}

} // TEST_SUITE
