#include "steinitz/zmat.hpp"

#include <algorithm>
#include <sstream>

namespace steinitz {

ZMat ZMat::identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_)
        throw InternalError("ZMat::mul shape mismatch");
    ZMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

ZMat ZMat::operator+(const ZMat& o) const {
    ZMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] + o.a_[i];
    return r;
}

ZMat ZMat::operator-(const ZMat& o) const {
    ZMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] - o.a_[i];
    return r;
}

ZMat ZMat::operator-() const {
    ZMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = -a_[i];
    return r;
}

ZMat ZMat::scaled(const Int& k) const {
    ZMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] * k;
    return r;
}

ZMat ZMat::transpose() const {
    ZMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool ZMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

bool ZMat::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

ZMat ZMat::col_slice(std::size_t first, std::size_t count) const {
    ZMat r(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j)
            r.at(i, j) = at(i, first + j);
    return r;
}

std::vector<Int> ZMat::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

ZMat ZMat::hcat(const ZMat& a, const ZMat& b) {
    if (a.rows() != b.rows())
        throw InternalError("ZMat::hcat shape mismatch");
    ZMat r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

void ZMat::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap(at(r, i), at(r, j));
}

void ZMat::addmul_col(std::size_t j, std::size_t i, const Int& k) {
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, j) += k * at(r, i);
}

void ZMat::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, j) = -at(r, j);
}

std::string ZMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

HnfResult hnf(const ZMat& a, bool with_transform) {
    HnfResult res;
    res.has_transform = with_transform;
    const std::size_t m = a.rows(), n = a.cols();
    ZMat w = a;
    ZMat u = ZMat::identity(n);
    std::size_t limit = n; // columns [0, limit) still active
    std::vector<std::size_t> pivots_desc;

    auto apply = [&](auto&& op) {
        op(w);
        if (with_transform)
            op(u);
    };

    for (std::size_t rr = m; rr-- > 0;) {
        // eliminate row rr across active columns until at most one nonzero
        while (true) {
            std::size_t best = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (w.at(rr, j) != 0 &&
                    (best == limit ||
                     mpz_cmpabs(w.at(rr, j).get_mpz_t(), w.at(rr, best).get_mpz_t()) < 0))
                    best = j;
            }
            if (best == limit)
                break; // row is zero on active columns
            bool others = false;
            for (std::size_t j = 0; j < limit; ++j) {
                if (j == best || w.at(rr, j) == 0)
                    continue;
                Int q = floordiv(w.at(rr, j), w.at(rr, best));
                apply([&](ZMat& t) { t.addmul_col(j, best, -q); });
                if (w.at(rr, j) != 0)
                    others = true;
            }
            if (!others) {
                if (w.at(rr, best) < 0)
                    apply([&](ZMat& t) { t.negate_col(best); });
                apply([&](ZMat& t) { t.swap_cols(best, limit - 1); });
                --limit;
                pivots_desc.push_back(rr);
                break;
            }
        }
    }

    res.rank = n - limit;
    // columns [limit, n) hold the echelon basis with pivot rows ascending
    res.pivot_rows.assign(pivots_desc.rbegin(), pivots_desc.rend());

    // reduce entries right of each pivot, deepest pivot first
    for (std::size_t k = res.rank; k-- > 0;) {
        std::size_t pc = limit + k;
        std::size_t pr = res.pivot_rows[k];
        const Int& piv = w.at(pr, pc);
        for (std::size_t j = pc + 1; j < n; ++j) {
            Int q = floordiv(w.at(pr, j), piv);
            apply([&](ZMat& t) { t.addmul_col(j, pc, -q); });
        }
    }

    res.h = w.col_slice(limit, res.rank);
    if (with_transform)
        res.u = u;
    return res;
}

ZMat kernel(const ZMat& a) {
    HnfResult r = hnf(a, true);
    std::size_t k = a.cols() - r.rank;
    return r.u.col_slice(0, k);
}

std::size_t rank(const ZMat& a) { return hnf(a).rank; }

Int det_abs(const ZMat& a) {
    if (a.rows() != a.cols())
        throw InternalError("det_abs: square matrix required");
    HnfResult r = hnf(a);
    if (r.rank != a.rows())
        return 0;
    Int d = 1;
    for (std::size_t k = 0; k < r.rank; ++k)
        d *= r.h.at(r.pivot_rows[k], k);
    return d;
}

QMat::QMat(const ZMat& m) : rows_(m.rows()), cols_(m.cols()), a_(m.rows() * m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            at(i, j) = Rat(m.at(i, j));
}

bool QMat::is_integral() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const Rat& v) { return v.get_den() == 1; });
}

ZMat QMat::to_zmat() const {
    if (!is_integral())
        throw InternalError("QMat::to_zmat: non-integral entry");
    ZMat r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j).get_num();
    return r;
}

std::optional<QMat> solve_rational(const QMat& a, const QMat& b) {
    const std::size_t m = a.rows(), n = a.cols(), k = b.cols();
    QMat w = a, rhs = b;
    std::vector<std::size_t> pivot_col_of_row(m, n);
    std::size_t row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = m;
        for (std::size_t i = row; i < m; ++i)
            if (w.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == m)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            std::swap(w.at(row, j), w.at(piv, j));
        for (std::size_t j = 0; j < k; ++j)
            std::swap(rhs.at(row, j), rhs.at(piv, j));
        Rat p = w.at(row, col);
        for (std::size_t j = 0; j < n; ++j)
            w.at(row, j) /= p;
        for (std::size_t j = 0; j < k; ++j)
            rhs.at(row, j) /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || w.at(i, col) == 0)
                continue;
            Rat f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j)
                w.at(i, j) -= f * w.at(row, j);
            for (std::size_t j = 0; j < k; ++j)
                rhs.at(i, j) -= f * rhs.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    if (pivot_cols.size() < n)
        return std::nullopt; // deficient column rank: no unique solution
    // consistency for rows beyond rank
    for (std::size_t i = row; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (rhs.at(i, j) != 0)
                return std::nullopt;
    QMat x(n, k);
    for (std::size_t r2 = 0; r2 < n; ++r2)
        for (std::size_t j = 0; j < k; ++j)
            x.at(r2, j) = rhs.at(r2, j);
    return x;
}

std::optional<QMat> solve_rational(const ZMat& a, const ZMat& b) {
    return solve_rational(QMat(a), QMat(b));
}

std::optional<ZMat> integral_coords(const ZMat& basis, const ZMat& vectors) {
    auto x = solve_rational(basis, vectors);
    if (!x || !x->is_integral())
        return std::nullopt;
    return x->to_zmat();
}

Int lattice_index(const ZMat& basis, const ZMat& sub) {
    auto x = integral_coords(basis, sub);
    if (!x)
        throw NotSublattice("columns are not in the integral span of the basis");
    HnfResult r = hnf(*x);
    if (r.rank != basis.cols())
        throw InfiniteIndex("sublattice has deficient rank");
    Int d = 1;
    for (std::size_t k = 0; k < r.rank; ++k)
        d *= r.h.at(r.pivot_rows[k], k);
    return d;
}

ZMat lattice_basis(const ZMat& gens) { return hnf(gens).h; }

bool same_lattice(const ZMat& a, const ZMat& b) {
    return lattice_basis(a) == lattice_basis(b);
}

} // namespace steinitz
