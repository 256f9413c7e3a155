#include "nodelift/singscan/tjurina.hpp"
#include "nodelift/error.hpp"
#include "nodelift/linalg.hpp"

#include <map>

namespace nodelift::singscan {

namespace {

struct MonomialIndex {
    std::vector<Monomial> list;
    std::map<std::vector<std::uint32_t>, std::size_t> where;
};

MonomialIndex monomials_below(std::size_t n, std::uint32_t d)
{
    MonomialIndex idx;
    for (std::uint32_t k = 0; k < d; ++k)
        for (auto& m : monomials_of_degree(n, k)) {
            idx.where.emplace(m.exps, idx.list.size());
            idx.list.push_back(std::move(m));
        }
    return idx;
}

} // namespace

TjurinaResult tjurina_dimension(const MultiPoly& f, std::uint32_t d)
{
    const Ring& ring = f.ring();
    if (!ring.is_field())
        throw Error(ErrorCode::InvalidArgument, "Tjurina algebra needs coefficients in a field, got " + ring.describe());
    if (d == 0)
        throw Error(ErrorCode::InvalidArgument, "degree bound must be positive");
    if (!f.coefficient(Monomial(f.nvars())).is_zero())
        throw Error(ErrorCode::InvalidArgument, "polynomial does not vanish at the origin");

    const std::size_t n = f.nvars();
    MonomialIndex idx = monomials_below(n, d);
    const std::size_t cols = idx.list.size();

    std::vector<MultiPoly> gens{f};
    for (auto& g : partial_derivatives(f))
        gens.push_back(std::move(g));

    Matrix rows;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        for (const auto& m : idx.list) {
            Vector row(cols, Scalar::zero(ring));
            bool any = false;
            for (const auto& [gm, c] : g.terms()) {
                std::vector<std::uint32_t> e(n);
                std::uint64_t deg = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    e[i] = gm.exps[i] + m.exps[i];
                    deg += e[i];
                }
                if (deg >= d)
                    continue;
                row[idx.where.at(e)] = c;
                any = true;
            }
            if (any)
                rows.push_back(std::move(row));
        }
    }

    Echelon ech = rref(rows, ring, cols);
    TjurinaResult r;
    r.degree_bound = d;
    r.truncated_dimension = cols - ech.rows.size();

    // m^(d-1) inside the ideal mod m^d means m^(d-1) lies in the ideal (Nakayama).
    r.stabilized = true;
    for (std::size_t j = 0; j < cols && r.stabilized; ++j) {
        if (idx.list[j].degree() != d - 1)
            continue;
        Vector v(cols, Scalar::zero(ring));
        v[j] = Scalar::one(ring);
        for (std::size_t i = 0; i < ech.rows.size(); ++i) {
            const Scalar a = v[ech.pivots[i]];
            if (a.is_zero())
                continue;
            for (std::size_t c = 0; c < cols; ++c)
                if (!ech.rows[i][c].is_zero())
                    v[c] = v[c] - a * ech.rows[i][c];
        }
        for (const auto& x : v)
            if (!x.is_zero()) {
                r.stabilized = false;
                break;
            }
    }
    return r;
}

TjurinaResult tjurina_number(const MultiPoly& f, std::uint32_t max_degree)
{
    TjurinaResult last;
    for (std::uint32_t d = 2; d <= max_degree; ++d) {
        last = tjurina_dimension(f, d);
        if (last.stabilized)
            return last;
    }
    return last;
}

MultiPoly translate_to_origin(const MultiPoly& f, std::span<const Scalar> point)
{
    if (point.size() != f.nvars())
        throw Error(ErrorCode::InvalidArgument, "point dimension does not match the polynomial");
    std::map<std::string, MultiPoly> shift;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        shift.emplace(f.vars()[i], MultiPoly::variable(f.vars(), f.ring(), i) + MultiPoly::constant(f.vars(), point[i]));
    return substitute(f, shift);
}

} // namespace nodelift::singscan
