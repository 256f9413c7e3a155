#include "nodelift/singscan/scan.hpp"
#include "nodelift/error.hpp"
#include "nodelift/parallel.hpp"
#include "nodelift/simd/modeval.hpp"

#include <algorithm>
#include <map>

namespace nodelift::singscan {

std::string to_string(NodeClass c)
{
    switch (c) {
    case NodeClass::Node: return "node";
    case NodeClass::Degenerate: return "degenerate";
    case NodeClass::NotApplicable: return "na";
    }
    return "na";
}

NodeClass node_class_from_string(const std::string& s)
{
    if (s == "node")
        return NodeClass::Node;
    if (s == "degenerate")
        return NodeClass::Degenerate;
    if (s == "na")
        return NodeClass::NotApplicable;
    throw Error(ErrorCode::BadInput, "unknown classification '" + s + "'");
}

AffineChart AffineChart::over(const Ring& ring) const
{
    AffineChart c{variables, {}, provenance};
    for (const auto& e : equations)
        c.equations.push_back(e.map_coefficients(ring));
    return c;
}

namespace {

constexpr std::size_t kBatch = 4096;

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t guard)
{
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > guard / base)
            throw Error(ErrorCode::SizeGuard, std::to_string(base) + "^" + std::to_string(exp) +
                                                  " points exceed the guard of " + std::to_string(guard));
        v *= base;
    }
    return v;
}

// Block sizes for projective enumeration: points whose pivot is coordinate i
// number p^(n-i).
struct ProjectiveIndexer {
    std::uint64_t p;
    unsigned n;
    std::vector<std::uint64_t> block_start; // size n+2

    ProjectiveIndexer(std::uint64_t prime, unsigned dim, std::uint64_t guard) : p(prime), n(dim)
    {
        block_start.push_back(0);
        for (unsigned i = 0; i <= n; ++i)
            block_start.push_back(block_start.back() + checked_power(p, n - i, guard));
        if (block_start.back() > guard)
            throw Error(ErrorCode::SizeGuard, "projective space too large for the guard");
    }

    std::uint64_t total() const { return block_start.back(); }

    void fill(std::uint64_t idx, std::uint32_t* out) const
    {
        unsigned piv = 0;
        while (idx >= block_start[piv + 1])
            ++piv;
        std::uint64_t r = idx - block_start[piv];
        for (unsigned i = 0; i < piv; ++i)
            out[i] = 0;
        out[piv] = 1;
        for (unsigned i = n; i > piv; --i) {
            out[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
    }
};

struct AffineIndexer {
    std::uint64_t m;
    std::size_t n;
    std::uint64_t total_;

    std::uint64_t total() const { return total_; }
    void fill(std::uint64_t idx, std::uint32_t* out) const
    {
        for (std::size_t i = n; i-- > 0;) {
            out[i] = static_cast<std::uint32_t>(idx % m);
            idx /= m;
        }
    }
};

void require_prime_field(const Ring& r)
{
    if (!r.is_prime_field())
        throw Error(ErrorCode::RingMismatch, "scans run over F_p, got " + r.describe());
}

Vector to_scalars(const std::vector<std::uint64_t>& pt, const Ring& ring)
{
    Vector v;
    v.reserve(pt.size());
    for (auto x : pt)
        v.push_back(Scalar::from_int(ring, x));
    return v;
}

} // namespace

/// Indices of points in [0, total) at which every program vanishes. Programs are
/// applied in order, each to the survivors of the previous ones.
template <class Indexer>
std::vector<std::uint64_t> common_zeros(const Indexer& ix, std::size_t nvars,
                                        const std::vector<simd::ModularProgram>& progs, unsigned jobs)
{
    std::vector<std::vector<std::uint64_t>> found(std::max(1u, jobs));
    parallel_ranges(ix.total(), jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        std::vector<std::uint32_t> coords(nvars * kBatch), point(nvars), vals(kBatch);
        std::vector<std::uint64_t> ids(kBatch);
        for (std::uint64_t base = begin; base < end; base += kBatch) {
            std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, end - base));
            for (std::size_t j = 0; j < count; ++j)
                ids[j] = base + j;
            for (const auto& prog : progs) {
                if (count == 0)
                    break;
                for (std::size_t j = 0; j < count; ++j) {
                    ix.fill(ids[j], point.data());
                    for (std::size_t i = 0; i < nvars; ++i)
                        coords[i * count + j] = point[i];
                }
                simd::evaluate_batch(prog, coords, count, vals);
                std::size_t kept = 0;
                for (std::size_t j = 0; j < count; ++j)
                    if (vals[j] == 0)
                        ids[kept++] = ids[j];
                count = kept;
            }
            found[w].insert(found[w].end(), ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(count));
        }
    });
    std::vector<std::uint64_t> all;
    for (auto& f : found)
        all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<ProjPoint> enumerate_projective_points(std::uint64_t p, unsigned n, std::uint64_t guard)
{
    Ring ring = Ring::prime_field(p);
    ProjectiveIndexer ix(p, n, guard);
    std::vector<ProjPoint> out;
    out.reserve(ix.total());
    std::vector<std::uint32_t> buf(n + 1);
    for (std::uint64_t i = 0; i < ix.total(); ++i) {
        ix.fill(i, buf.data());
        Vector v;
        for (auto x : buf)
            v.push_back(Scalar::from_int(ring, x));
        out.emplace_back(std::move(v));
    }
    return out;
}

std::size_t hessian_rank(const MultiPoly& f, const Vector& point)
{
    const std::size_t n = f.nvars();
    Matrix h(n, Vector(n, Scalar::zero(f.ring())));
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly di = f.derivative(i);
        for (std::size_t j = i; j < n; ++j) {
            Scalar v = di.derivative(j).evaluate(point);
            h[i][j] = v;
            h[j][i] = v;
        }
    }
    return rank(h, f.ring(), n);
}

std::size_t jacobian_rank(const std::vector<MultiPoly>& eqs, const Vector& point)
{
    if (eqs.empty())
        return 0;
    const std::size_t n = eqs.front().nvars();
    Matrix j;
    for (const auto& e : eqs) {
        Vector row;
        for (std::size_t i = 0; i < n; ++i)
            row.push_back(e.derivative(i).evaluate(point));
        j.push_back(std::move(row));
    }
    return rank(j, eqs.front().ring(), n);
}

std::vector<SingularPointRecord> singular_locus_hypersurface(const MultiPoly& f, const ScanOptions& opts)
{
    const Ring& ring = f.ring();
    require_prime_field(ring);
    if (f.is_zero() || !f.is_homogeneous())
        throw Error(ErrorCode::InvalidArgument, "projective scan needs a nonzero homogeneous polynomial");
    if (f.nvars() < 2)
        throw Error(ErrorCode::InvalidArgument, "projective scan needs at least two variables");
    const std::size_t nv = f.nvars();
    ProjectiveIndexer ix(ring.p(), static_cast<unsigned>(nv - 1), opts.guard);

    std::vector<simd::ModularProgram> progs{simd::ModularProgram(f)};
    for (const auto& d : partial_derivatives(f))
        progs.emplace_back(d);
    auto hits = common_zeros(ix, nv, progs, opts.jobs);

    std::vector<SingularPointRecord> out;
    std::vector<std::uint32_t> buf(nv);
    for (auto idx : hits) {
        ix.fill(idx, buf.data());
        SingularPointRecord rec;
        rec.point.assign(buf.begin(), buf.end());
        rec.projective = true;
        rec.jacobian_rank = 0;
        // Dehomogenize at the pivot coordinate.
        std::size_t piv = 0;
        while (buf[piv] == 0)
            ++piv;
        std::vector<std::string> local_vars;
        std::map<std::string, MultiPoly> assign;
        for (std::size_t i = 0; i < nv; ++i)
            if (i != piv)
                local_vars.push_back(f.vars()[i]);
        assign[f.vars()[piv]] = MultiPoly::constant(local_vars, Scalar::one(ring));
        MultiPoly g = substitute(f, assign);
        Vector local;
        for (std::size_t i = 0; i < nv; ++i)
            if (i != piv)
                local.push_back(Scalar::from_int(ring, buf[i]));
        rec.hessian_rank = hessian_rank(g, local);
        if (ring.p() == 2)
            rec.classification = NodeClass::NotApplicable;
        else
            rec.classification = rec.hessian_rank == nv - 1 ? NodeClass::Node : NodeClass::Degenerate;
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<SingularPointRecord> singular_locus_chart(const AffineChart& chart, const ScanOptions& opts)
{
    if (chart.equations.empty())
        return {};
    if (chart.equations.size() > chart.variables.size())
        throw Error(ErrorCode::InvalidArgument, "chart has more equations than variables");
    const Ring& ring = chart.equations.front().ring();
    require_prime_field(ring);
    for (const auto& e : chart.equations)
        if (e.vars() != chart.variables || !(e.ring() == ring))
            throw Error(ErrorCode::InvalidArgument, "chart equations must share the chart's variables and ring");
    const std::size_t nv = chart.variables.size();
    AffineIndexer ix{ring.p(), nv, checked_power(ring.p(), static_cast<unsigned>(nv), opts.guard)};

    const std::size_t codim = chart.equations.size();
    std::vector<std::vector<MultiPoly>> jac;
    for (const auto& e : chart.equations)
        jac.push_back(partial_derivatives(e));

    std::vector<simd::ModularProgram> progs;
    for (const auto& e : chart.equations)
        progs.emplace_back(e);
    if (codim == 1) // singular points of a hypersurface also kill every partial
        for (const auto& d : jac.front())
            progs.emplace_back(d);
    auto hits = common_zeros(ix, nv, progs, opts.jobs);

    std::vector<SingularPointRecord> out;
    std::vector<std::uint32_t> buf(nv);
    for (auto idx : hits) {
        ix.fill(idx, buf.data());
        std::vector<std::uint64_t> pt(buf.begin(), buf.end());
        Vector sp = to_scalars(pt, ring);
        Matrix jm;
        for (const auto& row : jac) {
            Vector r;
            for (const auto& d : row)
                r.push_back(d.evaluate(sp));
            jm.push_back(std::move(r));
        }
        std::size_t jr = rank(jm, ring, nv);
        if (jr >= codim)
            continue;
        SingularPointRecord rec;
        rec.point = std::move(pt);
        rec.jacobian_rank = jr;
        if (codim == 1) {
            rec.hessian_rank = hessian_rank(chart.equations.front(), sp);
            if (ring.p() != 2)
                rec.classification = rec.hessian_rank == nv ? NodeClass::Node : NodeClass::Degenerate;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> common_zeros_affine(const std::vector<MultiPoly>& polys,
                                                           const ScanOptions& opts)
{
    if (polys.empty())
        throw Error(ErrorCode::InvalidArgument, "no polynomials to scan");
    const Ring& ring = polys.front().ring();
    if (ring.kind() != RingKind::Modular)
        throw Error(ErrorCode::RingMismatch, "affine scans run over Z/p^k, got " + ring.describe());
    const std::size_t nv = polys.front().nvars();
    for (const auto& f : polys)
        if (f.vars() != polys.front().vars() || !(f.ring() == ring))
            throw Error(ErrorCode::InvalidArgument, "scanned polynomials must share variables and ring");
    const std::uint64_t m = ring.modulus().value;
    AffineIndexer ix{m, nv, checked_power(m, static_cast<unsigned>(nv), opts.guard)};
    std::vector<simd::ModularProgram> progs;
    for (const auto& f : polys)
        progs.emplace_back(f);
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint32_t> buf(nv);
    for (auto idx : common_zeros(ix, nv, progs, opts.jobs)) {
        ix.fill(idx, buf.data());
        out.emplace_back(buf.begin(), buf.end());
    }
    return out;
}

} // namespace nodelift::singscan
