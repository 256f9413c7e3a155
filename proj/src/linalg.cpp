#include "nodelift/linalg.hpp"
#include "nodelift/error.hpp"

namespace nodelift {

Echelon rref(Matrix m, const Ring& field, std::size_t cols)
{
    if (!field.is_field())
        throw Error(ErrorCode::InvalidArgument, "row reduction needs a field, got " + field.describe());
    Echelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c].is_zero())
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[row], m[piv]);
        Scalar inv = m[row][c].inverse();
        for (auto& v : m[row])
            v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero())
                continue;
            Scalar f = m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] -= f * m[row][j];
        }
        out.pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m, const Ring& field, std::size_t cols) { return rref(m, field, cols).rank(); }

Matrix nullspace(const Matrix& m, const Ring& field, std::size_t cols)
{
    Echelon e = rref(m, field, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(cols, Scalar::zero(field));
        v[free] = Scalar::one(field);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    if (basis.empty())
        return basis;
    return rref(std::move(basis), field, cols).rows;
}

} // namespace nodelift
