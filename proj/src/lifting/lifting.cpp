#include "nodelift/lifting/lifting.hpp"
#include "nodelift/arith/numtheory.hpp"
#include "nodelift/error.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nodelift::lifting {

std::string to_string(RootStatus s)
{
    switch (s) {
    case RootStatus::SimpleLift: return "simple-lift";
    case RootStatus::NonReducedFiber: return "non-reduced-fiber";
    case RootStatus::Obstructed: return "obstructed";
    }
    return "?";
}

RootStatus root_status_from_string(const std::string& s)
{
    if (s == "simple-lift")
        return RootStatus::SimpleLift;
    if (s == "non-reduced-fiber")
        return RootStatus::NonReducedFiber;
    if (s == "obstructed")
        return RootStatus::Obstructed;
    throw Error(ErrorCode::BadInput, "unknown root annotation '" + s + "'");
}

IntPoly int_poly(const MultiPoly& f)
{
    if (f.nvars() != 1)
        throw Error(ErrorCode::InvalidArgument, "expected a univariate polynomial, got " + f.to_string());
    if (f.ring().kind() != RingKind::Rational)
        throw Error(ErrorCode::InvalidArgument, "expected integer coefficients");
    if (f.is_zero())
        throw Error(ErrorCode::InvalidArgument, "the zero polynomial has every element as a root");
    IntPoly out(static_cast<std::size_t>(f.total_degree()) + 1, 0);
    for (const auto& [m, c] : f.terms()) {
        const Rational& q = c.as<Rational>();
        if (!q.is_integer())
            throw Error(ErrorCode::InvalidArgument, "expected integer coefficients, got " + q.to_string());
        out[m.exps[0]] = q.num();
    }
    return out;
}

const BaseRoot& LiftReport::base_of(const Scalar& root) const
{
    std::uint64_t r = 0;
    if (root.holds<ModularScalar>())
        r = root.as<ModularScalar>().residue() % ring.p();
    else
        r = root.as<DualScalar>().coeffs().front();
    for (const auto& b : base_roots)
        if (b.residue == r)
            return b;
    throw std::logic_error("root without a base root");
}

namespace {

std::vector<std::uint64_t> reduce_poly(const IntPoly& f, std::uint64_t m)
{
    std::vector<std::uint64_t> out;
    for (const auto& c : f)
        out.push_back(mod_u64(c, m));
    return out;
}

std::uint64_t horner(const std::vector<std::uint64_t>& f, std::uint64_t x, std::uint64_t m)
{
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;)
        acc = (mul_mod(acc, x, m) + f[i]) % m;
    return acc;
}

std::vector<std::uint64_t> derivative(const std::vector<std::uint64_t>& f, std::uint64_t m)
{
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(mul_mod(f[i], i % m, m));
    return d;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k, std::uint64_t guard)
{
    std::uint64_t v = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (v > guard / p)
            throw Error(ErrorCode::SizeGuard, std::to_string(p) + "^" + std::to_string(k) + " exceeds the guard of " +
                                                  std::to_string(guard));
        v *= p;
    }
    return v;
}

void validate(std::uint64_t p, unsigned k)
{
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0)
        throw Error(ErrorCode::InvalidArgument, "level must be at least 1");
}

// Exhaustive roots of f in Z/m through the batched evaluator.
std::vector<std::uint64_t> residue_roots(const IntPoly& f, std::uint64_t p, unsigned j)
{
    Ring ring = Ring::modular(p, j);
    MultiPoly g({"x"}, ring);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0)
            g.add_term(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)}), Scalar::from_int(ring, f[i]));
    if (g.is_zero()) {
        std::vector<std::uint64_t> all(ring.modulus().value);
        for (std::uint64_t i = 0; i < all.size(); ++i)
            all[i] = i;
        return all;
    }
    singscan::ScanOptions opts;
    opts.guard = ring.modulus().value;
    std::vector<std::uint64_t> out;
    for (const auto& pt : singscan::common_zeros_affine({g}, opts))
        out.push_back(pt.front());
    return out;
}

// level_bases[j-1] holds the roots at level j projected to their residue mod p.
std::vector<BaseRoot> annotate(const std::vector<std::vector<std::uint64_t>>& level_bases,
                               const std::vector<std::uint64_t>& fprime_mod_p_zero)
{
    std::vector<BaseRoot> out;
    const unsigned k = static_cast<unsigned>(level_bases.size());
    std::vector<std::uint64_t> base = level_bases.front();
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (auto r : base) {
        BaseRoot b;
        b.residue = r;
        bool multiple = std::binary_search(fprime_mod_p_zero.begin(), fprime_mod_p_zero.end(), r);
        b.status = multiple ? RootStatus::NonReducedFiber : RootStatus::SimpleLift;
        for (unsigned j = 1; j <= k; ++j) {
            const auto& lv = level_bases[j - 1];
            if (!std::binary_search(lv.begin(), lv.end(), r)) {
                b.status = RootStatus::Obstructed;
                b.obstructed_at = j;
                break;
            }
        }
        b.lifts = static_cast<std::size_t>(std::count(level_bases.back().begin(), level_bases.back().end(), r));
        out.push_back(b);
    }
    return out;
}

} // namespace

std::uint64_t hensel_lift(const IntPoly& f, std::uint64_t p, unsigned k, std::uint64_t r)
{
    validate(p, k);
    const std::uint64_t m = checked_pow(p, k, UINT32_MAX);
    auto fm = reduce_poly(f, m);
    auto dm = derivative(fm, m);
    if (horner(dm, r % p, p) == 0)
        throw Error(ErrorCode::InvalidArgument, "root " + std::to_string(r) + " is not simple mod " + std::to_string(p));
    std::uint64_t x = r % p;
    for (unsigned i = 0; i < k; ++i) {
        std::uint64_t fx = horner(fm, x, m);
        if (fx == 0)
            break;
        std::uint64_t inv = inv_mod(horner(dm, x, m), m);
        x = (x + m - mul_mod(fx, inv, m)) % m;
    }
    return x;
}

LiftReport roots_mod_prime_power(const IntPoly& f, std::uint64_t p, unsigned k, std::uint64_t guard)
{
    validate(p, k);
    checked_pow(p, k, guard);
    LiftReport rep;
    rep.ring = Ring::modular(p, k);

    std::vector<std::vector<std::uint64_t>> level_bases;
    std::vector<std::uint64_t> top;
    for (unsigned j = 1; j <= k; ++j) {
        auto roots = residue_roots(f, p, j);
        rep.roots_per_level.push_back(roots.size());
        std::vector<std::uint64_t> bases;
        for (auto r : roots)
            bases.push_back(r % p);
        std::sort(bases.begin(), bases.end());
        level_bases.push_back(std::move(bases));
        if (j == k)
            top = std::move(roots);
    }
    auto fp = reduce_poly(f, p);
    auto dp = derivative(fp, p);
    std::vector<std::uint64_t> multiple;
    for (auto r : level_bases.front())
        if (horner(dp, r, p) == 0)
            multiple.push_back(r);
    multiple.erase(std::unique(multiple.begin(), multiple.end()), multiple.end());
    rep.base_roots = annotate(level_bases, multiple);

    for (const auto& b : rep.base_roots) {
        if (b.status != RootStatus::SimpleLift)
            continue;
        std::uint64_t lifted = hensel_lift(f, p, k, b.residue);
        if (b.lifts != 1 || !std::binary_search(top.begin(), top.end(), lifted))
            throw std::logic_error("Hensel lift of " + std::to_string(b.residue) + " disagrees with exhaustive search");
    }
    rep.hensel_checked = true;

    Modulus mod(p, k);
    for (auto r : top)
        rep.roots.emplace_back(ModularScalar(r, mod));
    return rep;
}

namespace {

// Truncated product in F_p[e]/e^k.
void dual_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::uint64_t p,
              std::vector<std::uint64_t>& out)
{
    const std::size_t k = a.size();
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < k; ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
}

bool dual_root(const std::vector<std::uint64_t>& fp, const std::vector<std::uint64_t>& x, std::uint64_t p,
               std::vector<std::uint64_t>& acc, std::vector<std::uint64_t>& tmp)
{
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = fp.size(); i-- > 0;) {
        dual_mul(acc, x, p, tmp);
        tmp[0] = (tmp[0] + fp[i]) % p;
        acc.swap(tmp);
    }
    return std::all_of(acc.begin(), acc.end(), [](std::uint64_t c) { return c == 0; });
}

std::vector<std::vector<std::uint64_t>> dual_roots(const std::vector<std::uint64_t>& fp, std::uint64_t p, unsigned k)
{
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i)
        total *= p;
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> x(k), acc(k), tmp(k);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (unsigned i = k; i-- > 0;) {
            x[i] = r % p;
            r /= p;
        }
        if (dual_root(fp, x, p, acc, tmp))
            out.push_back(x);
    }
    return out;
}

} // namespace

LiftReport roots_dual_numbers(const IntPoly& f, std::uint64_t p, unsigned k, std::uint64_t guard)
{
    validate(p, k);
    checked_pow(p, k, guard);
    auto fp = reduce_poly(f, p);
    LiftReport rep;
    rep.ring = Ring::dual(p, k);

    std::vector<std::vector<std::uint64_t>> level_bases;
    std::vector<std::vector<std::uint64_t>> top;
    for (unsigned j = 1; j <= k; ++j) {
        auto roots = dual_roots(fp, p, j);
        rep.roots_per_level.push_back(roots.size());
        std::vector<std::uint64_t> bases;
        for (const auto& r : roots)
            bases.push_back(r.front());
        std::sort(bases.begin(), bases.end());
        level_bases.push_back(std::move(bases));
        if (j == k)
            top = std::move(roots);
    }
    auto dp = derivative(fp, p);
    std::vector<std::uint64_t> multiple;
    for (auto r : level_bases.front())
        if (horner(dp, r, p) == 0)
            multiple.push_back(r);
    multiple.erase(std::unique(multiple.begin(), multiple.end()), multiple.end());
    rep.base_roots = annotate(level_bases, multiple);
    for (auto& r : top)
        rep.roots.emplace_back(DualScalar(r, p, k));
    return rep;
}

std::vector<std::vector<std::uint64_t>> singular_section_detect(const MultiPoly& f, std::uint64_t p, unsigned k,
                                                                const singscan::ScanOptions& opts)
{
    validate(p, k);
    Modulus mod(p, k);
    MultiPoly g = f;
    if (f.ring().kind() == RingKind::Rational)
        g = reduce_coefficients(f, mod);
    else if (!(f.ring() == Ring::modular(p, k)))
        throw Error(ErrorCode::RingMismatch, "expected rational coefficients or Z/" + std::to_string(mod.value) +
                                                 ", got " + f.ring().describe());
    std::vector<MultiPoly> polys{g};
    for (auto& d : partial_derivatives(g))
        polys.push_back(std::move(d));
    // The zero polynomial vanishes everywhere and contributes no filter.
    std::erase_if(polys, [](const MultiPoly& h) { return h.is_zero(); });
    if (polys.empty())
        polys.push_back(g);
    return singscan::common_zeros_affine(polys, opts);
}

} // namespace nodelift::lifting
