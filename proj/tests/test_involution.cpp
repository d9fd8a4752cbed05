#include <doctest.h>

#include "steinitz/involution.hpp"
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

} // namespace

TEST_SUITE("involution_lattices") {

TEST_CASE("constructor rejects non-involutions") {
    CHECK_THROWS_AS(InvolutionLattice(from_rows({{2, 0}, {0, 1}})), ValidationFailed);
    CHECK_THROWS_AS(InvolutionLattice(from_rows({{1, 0}})), ValidationFailed);
}

TEST_CASE("eigen-sublattices of the basic involutions") {
    InvolutionLattice id(from_rows({{1, 0}, {0, 1}}));
    CHECK(fixed_sublattice(id).cols() == 2);
    CHECK(anti_fixed_sublattice(id).cols() == 0);

    InvolutionLattice neg(from_rows({{-1, 0}, {0, -1}}));
    CHECK(fixed_sublattice(neg).cols() == 0);
    CHECK(anti_fixed_sublattice(neg).cols() == 2);

    InvolutionLattice swap(from_rows({{0, 1}, {1, 0}}));
    ZMat p = fixed_sublattice(swap);
    REQUIRE(p.cols() == 1);
    CHECK(p.at(0, 0) == p.at(1, 0));
    ZMat q = anti_fixed_sublattice(swap);
    REQUIRE(q.cols() == 1);
    CHECK(q.at(0, 0) == -q.at(1, 0));
}

TEST_CASE("h1 orders of the basic involutions") {
    CHECK(h1_order(InvolutionLattice(ZMat::identity(3))) == 1);
    ZMat neg1(1, 1);
    neg1.at(0, 0) = -1;
    CHECK(h1_order(InvolutionLattice(neg1)) == 2);
    CHECK(h1_order(InvolutionLattice(from_rows({{0, 1}, {1, 0}}))) == 1);
}

TEST_CASE("decomposition indices") {
    CHECK(decomposition_index(InvolutionLattice(from_rows({{0, 1}, {1, 0}}))) == 2);
    CHECK(decomposition_index(InvolutionLattice(ZMat::identity(2))) == 1);
    ZMat neg = -ZMat::identity(2);
    CHECK(decomposition_index(InvolutionLattice(neg)) == 1);
}

TEST_CASE("theorem 1 on hand-checked lattices") {
    Theorem1Report r = verify_theorem1(InvolutionLattice(from_rows({{0, 1}, {1, 0}})));
    CHECK(r.index == 2);
    CHECK(r.h1 == 1);
    CHECK(r.rank_minus == 1);
    CHECK(r.holds);

    ZMat neg1(1, 1);
    neg1.at(0, 0) = -1;
    r = verify_theorem1(InvolutionLattice(neg1));
    CHECK(r.index == 1);
    CHECK(r.h1 == 2);
    CHECK(r.holds);

    // O_K of Q(sqrt(-10)) with conjugation: sigma = diag(1, -1)
    r = verify_theorem1(InvolutionLattice(from_rows({{1, 0}, {0, -1}})));
    CHECK(r.index == 1);
    CHECK(r.h1 == 2);
    CHECK(r.rank_minus == 1);
    CHECK(r.holds);
}

TEST_CASE("sublattice indices") {
    CHECK(sublattice_index(ZMat::identity(2), ZMat::identity(2).scaled(2)) == 4);
    ZMat a = from_rows({{1}, {1}});
    ZMat b = from_rows({{3}, {3}});
    CHECK(sublattice_index(a, b) == 3);
    CHECK_THROWS_AS(sublattice_index(b, a), NotSublattice);
}

TEST_CASE("theorem 1 holds on random conjugated block involutions") {
    synthetic::Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        InvolutionLattice m = synthetic::random_involution(8, rng);
        Theorem1Report r = verify_theorem1(m);
        CHECK(r.holds);
        // conjugation invariance of h1
        synthetic::Unimodular u = synthetic::random_unimodular(m.rank(), rng);
        CHECK(h1_order(InvolutionLattice(u.u * m.sigma() * u.uinv)) == r.h1);
        // 2 Z^m inside the decomposition
        ZMat dec = ZMat::hcat(fixed_sublattice(m), anti_fixed_sublattice(m));
        CHECK(integral_coords(dec, ZMat::identity(m.rank()).scaled(2)).has_value());
        // index divides 2^rank_minus
        Int pow2 = 1;
        pow2 <<= r.rank_minus;
        CHECK(mod_floor(pow2, r.index) == 0);
    }
}

} // TEST_SUITE
