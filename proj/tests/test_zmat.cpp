#include <doctest.h>

#include "steinitz/zmat.hpp"

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

TEST_SUITE("zmat") {

TEST_CASE("hnf of a 2x4 generator matrix is the upper triangular ideal form") {
    // Z-span of {2, 2w, w, -10} for D = 10: expect [[2,0],[0,1]]
    ZMat g = from_rows({{2, 0, 0, -10}, {0, 2, 1, 0}});
    HnfResult r = hnf(g);
    CHECK(r.rank == 2);
    CHECK(r.h == from_rows({{2, 0}, {0, 1}}));
}

TEST_CASE("hnf normalizes the off-diagonal entry") {
    ZMat g = from_rows({{5, 7}, {0, 1}});
    HnfResult r = hnf(g);
    CHECK(r.h == from_rows({{5, 2}, {0, 1}}));
}

TEST_CASE("hnf transform reproduces the echelon columns") {
    ZMat g = from_rows({{4, 6, 1}, {2, 2, 0}, {0, 8, 3}});
    HnfResult r = hnf(g, true);
    ZMat prod = g * r.u;
    for (std::size_t k = 0; k < r.rank; ++k)
        for (std::size_t i = 0; i < g.rows(); ++i)
            CHECK(prod.at(i, g.cols() - r.rank + k) == r.h.at(i, k));
    // leading columns of the transform are a kernel basis
    for (std::size_t k = 0; k + r.rank < g.cols(); ++k)
        for (std::size_t i = 0; i < g.rows(); ++i)
            CHECK(prod.at(i, k) == 0);
}

TEST_CASE("kernel is saturated") {
    // kernel of [1 1] is spanned by (1,-1), not (2,-2)
    ZMat a = from_rows({{1, 1}});
    ZMat k = kernel(a);
    REQUIRE(k.cols() == 1);
    CHECK(abs(k.at(0, 0)) == 1);
    CHECK(k.at(0, 0) + k.at(1, 0) == 0);
}

TEST_CASE("det_abs via pivots") {
    CHECK(det_abs(from_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(det_abs(from_rows({{1, 1}, {1, -1}})) == 2);
    CHECK(det_abs(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("solve_rational and integral coordinates") {
    ZMat a = from_rows({{2, 1}, {0, 3}});
    ZMat b = from_rows({{4}, {6}});
    auto x = solve_rational(a, b);
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0) == Rat(1));
    CHECK(x->at(1, 0) == Rat(2));

    auto c = integral_coords(a, from_rows({{1}, {0}}));
    CHECK_FALSE(c.has_value()); // (1,0) = 1/2 * col0
}

TEST_CASE("lattice_index counts covolume ratios") {
    ZMat z2 = ZMat::identity(2);
    CHECK(lattice_index(z2, z2.scaled(2)) == 4);
    CHECK(lattice_index(from_rows({{1, 1}, {1, -1}}), from_rows({{2, 2}, {2, -2}})) == 4);
    CHECK_THROWS_AS(lattice_index(z2, from_rows({{1}, {1}})), InfiniteIndex);
}

TEST_CASE("same_lattice identifies equal spans") {
    ZMat a = from_rows({{2, 1}, {0, 1}});
    ZMat b = from_rows({{1, -1}, {1, 1}}); // also det 2, contains (2,0) and (1,1)
    CHECK(same_lattice(a, ZMat::hcat(a, a)));
    CHECK(same_lattice(a, b));
    CHECK_FALSE(same_lattice(a, from_rows({{1, 0}, {0, 3}})));
}

} // TEST_SUITE
