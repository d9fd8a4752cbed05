#include "steinitz/tower.hpp"

#include <sstream>

namespace steinitz {

bool TowerElem::is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
}

std::string TowerElem::str() const {
    std::ostringstream os;
    os << "[" << c[0].get_str() << "," << c[1].get_str() << "," << c[2].get_str()
       << "," << c[3].get_str() << "]";
    return os.str();
}

TowerElem tower(Rat c0, Rat c1, Rat c2, Rat c3) {
    return TowerElem{{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}};
}

TowerField::TowerField(const Int& d, const Int& dd) : d_(d), dd_(dd) {
    if (d < 1 || !is_squarefree(d))
        throw NotSquarefree("tower radicand d must be squarefree and positive");
    if (dd < 1 || !is_squarefree(dd))
        throw NotSquarefree("tower radicand D must be squarefree and positive");
}

TowerElem TowerField::canon(TowerElem x) const {
    if (d_ == 1) {
        x.c[0] += x.c[1];
        x.c[1] = 0;
        x.c[2] += x.c[3];
        x.c[3] = 0;
    }
    return x;
}

TowerElem TowerField::add(const TowerElem& x, const TowerElem& y) const {
    return {{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]}};
}

TowerElem TowerField::sub(const TowerElem& x, const TowerElem& y) const {
    return {{x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]}};
}

TowerElem TowerField::neg(const TowerElem& x) const {
    return {{-x.c[0], -x.c[1], -x.c[2], -x.c[3]}};
}

TowerElem TowerField::mul(const TowerElem& x, const TowerElem& y) const {
    Rat d(d_), e(dd_), de(d_ * dd_);
    TowerElem r;
    r.c[0] = x.c[0] * y.c[0] + d * x.c[1] * y.c[1] - e * x.c[2] * y.c[2] -
             de * x.c[3] * y.c[3];
    r.c[1] = x.c[0] * y.c[1] + x.c[1] * y.c[0] - e * (x.c[2] * y.c[3] + x.c[3] * y.c[2]);
    r.c[2] = x.c[0] * y.c[2] + x.c[2] * y.c[0] + d * (x.c[1] * y.c[3] + x.c[3] * y.c[1]);
    r.c[3] = x.c[0] * y.c[3] + x.c[3] * y.c[0] + x.c[1] * y.c[2] + x.c[2] * y.c[1];
    return canon(r);
}

TowerElem TowerField::inv(const TowerElem& x) const {
    if (x.is_zero())
        throw DivisionByZero("inverse of zero in the tower field");
    // solve x*z = 1 on the active basis components
    std::array<std::size_t, 4> idx{};
    std::size_t n = 0;
    if (d_ == 1) {
        idx = {0, 2, 0, 0};
        n = 2;
    } else {
        idx = {0, 1, 2, 3};
        n = 4;
    }
    // columns: x * basis_j
    std::array<TowerElem, 4> cols;
    for (std::size_t j = 0; j < n; ++j) {
        TowerElem b;
        b.c[idx[j]] = 1;
        cols[j] = mul(x, b);
    }
    // gaussian elimination on the n x n system
    std::array<std::array<Rat, 5>, 4> m{};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = cols[j].c[idx[i]];
        m[i][n] = (i == 0) ? Rat(1) : Rat(0);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == n)
            throw InternalError("tower inverse: singular multiplication matrix");
        std::swap(m[col], m[piv]);
        Rat p = m[col][col];
        for (std::size_t j = 0; j <= n; ++j)
            m[col][j] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            Rat f = m[i][col];
            for (std::size_t j = 0; j <= n; ++j)
                m[i][j] -= f * m[col][j];
        }
    }
    TowerElem z;
    for (std::size_t i = 0; i < n; ++i)
        z.c[idx[i]] = m[i][n];
    return z;
}

TowerElem TowerField::from_int(long v) const { return tower(Rat(v)); }

TowerElem TowerField::mul_sqrt_md(const TowerElem& x) const {
    // sqrt(-D) * (c0 + c1 r + c2 s + c3 rs) with r = sqrt(d), s = sqrt(-D)
    Rat e(dd_);
    return canon({{-e * x.c[2], -e * x.c[3], x.c[0], x.c[1]}});
}

} // namespace steinitz
