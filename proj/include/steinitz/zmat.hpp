#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/numeric.hpp"

namespace steinitz {

/// Dense integer matrix, row-major.  Columns usually play the role of
/// lattice generators.
class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static ZMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ZMat operator*(const ZMat& o) const;
    ZMat operator+(const ZMat& o) const;
    ZMat operator-(const ZMat& o) const;
    ZMat operator-() const;
    bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    ZMat scaled(const Int& k) const;
    ZMat transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Columns [first, first+count) as a new matrix.
    ZMat col_slice(std::size_t first, std::size_t count) const;
    std::vector<Int> col(std::size_t j) const;

    /// Horizontal concatenation [a | b].
    static ZMat hcat(const ZMat& a, const ZMat& b);

    void swap_cols(std::size_t i, std::size_t j);
    /// col j += k * col i
    void addmul_col(std::size_t j, std::size_t i, const Int& k);
    void negate_col(std::size_t j);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Column-style Hermite normal form with pivot rows processed bottom-up,
/// so a full-rank 2x2 generator matrix comes out as [[a,b],[0,c]] with
/// a,c > 0 and 0 <= b < a.  h holds the nonzero echelon columns ordered by
/// ascending pivot row; u (optional) is unimodular with a*u = [zeros | h].
struct HnfResult {
    ZMat h;
    ZMat u;
    std::vector<std::size_t> pivot_rows;
    std::size_t rank = 0;
    bool has_transform = false;
};

HnfResult hnf(const ZMat& a, bool with_transform = false);

/// Basis (columns) of { x : a*x = 0 } over the integers; saturated by
/// construction.
ZMat kernel(const ZMat& a);

std::size_t rank(const ZMat& a);

/// |det| of a square full-rank matrix via HNF pivots; 0 if rank-deficient.
Int det_abs(const ZMat& a);

/// Rational matrix, used only for coordinate solves.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    explicit QMat(const ZMat& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_integral() const;
    ZMat to_zmat() const; // throws InternalError if non-integral

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Solve a*x = b over the rationals (a need not be square; least solution in
/// column-space sense is not attempted: returns nullopt when inconsistent or
/// when a has deficient column rank).
std::optional<QMat> solve_rational(const QMat& a, const QMat& b);
std::optional<QMat> solve_rational(const ZMat& a, const ZMat& b);

/// Coordinates of the columns of b in the column basis a, when integral.
std::optional<ZMat> integral_coords(const ZMat& basis, const ZMat& vectors);

/// Index (span_Z(basis) : span_Z(sub)) for full-rank sublattices.  Throws
/// NotSublattice when sub is not inside the span, InfiniteIndex when ranks
/// drop.
Int lattice_index(const ZMat& basis, const ZMat& sub);

/// HNF basis of the lattice spanned by the columns.
ZMat lattice_basis(const ZMat& gens);

/// Equality of the column spans as lattices.
bool same_lattice(const ZMat& a, const ZMat& b);

} // namespace steinitz
