#include "properties.hpp"

#include "oracles.hpp"

#include "nodelift/arith/numtheory.hpp"
#include "nodelift/error.hpp"
#include "nodelift/fiberprod/fiberprod.hpp"
#include "nodelift/lifting/lifting.hpp"
#include "nodelift/poly/parser.hpp"
#include "nodelift/projective.hpp"
#include "nodelift/simd/dispatch.hpp"
#include "nodelift/simd/modeval.hpp"
#include "nodelift/singscan/scan.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace props {

using namespace nodelift;

namespace {

const std::vector<std::string> kVars = {"x", "y", "z", "t"};

long long uniform(std::mt19937_64& rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Rational random_rational(std::mt19937_64& rng, long long bound = 1000)
{
    return Rational(BigInt(uniform(rng, -bound, bound)), BigInt(uniform(rng, 1, bound)));
}

std::uint64_t random_odd_prime(std::mt19937_64& rng, std::uint64_t below)
{
    for (;;) {
        auto p = static_cast<std::uint64_t>(uniform(rng, 3, static_cast<long long>(below)));
        if (oracle::is_prime(p))
            return p;
    }
}

std::vector<std::uint64_t> residues(const std::vector<fiberprod::Residue>& rs)
{
    std::vector<std::uint64_t> out;
    for (const auto& r : rs)
        out.push_back(r.infinite ? ~0ull : r.value);
    return out;
}

MultiPoly random_poly(std::mt19937_64& rng, const Ring& ring, int max_terms, int max_exp, long long coeff)
{
    MultiPoly f(kVars, ring);
    int terms = static_cast<int>(uniform(rng, 0, max_terms));
    for (int i = 0; i < terms; ++i) {
        Monomial m(kVars.size());
        for (auto& e : m.exps)
            e = static_cast<std::uint32_t>(uniform(rng, 0, max_exp));
        f.add_term(m, Scalar::from_int(ring, uniform(rng, -coeff, coeff)));
    }
    return f;
}

std::vector<std::string> point_key(const Vector& v)
{
    ProjPoint p(v);
    std::vector<std::string> out;
    for (const auto& c : p.coords())
        out.push_back(c.to_string());
    return out;
}

} // namespace

Outcome hensel_agreement(std::size_t cases, std::uint64_t seed)
{
    Outcome o{"hensel fast path vs brute force"};
    std::mt19937_64 rng(seed);
    const std::uint64_t primes[] = {3, 5, 7, 11};
    for (std::size_t c = 0; c < cases; ++c) {
        std::uint64_t p = primes[uniform(rng, 0, 3)];
        auto k = static_cast<unsigned>(uniform(rng, 1, 4));
        int deg = static_cast<int>(uniform(rng, 1, 4));
        std::vector<long long> co(deg + 1);
        for (auto& x : co)
            x = uniform(rng, -20, 20);
        if (co.back() == 0)
            co.back() = 1;
        lifting::IntPoly f(co.begin(), co.end());
        ++o.cases;
        std::string tag = "p=" + std::to_string(p) + " k=" + std::to_string(k) + " case " + std::to_string(c);
        try {
            auto rep = lifting::roots_mod_prime_power(f, p, k);
            std::vector<std::uint64_t> got;
            for (const auto& r : rep.roots)
                got.push_back(r.as<ModularScalar>().residue());
            auto want = oracle::roots_mod(co, p, k);
            if (got != want) {
                o.fail("root sets differ, " + tag);
                continue;
            }
            for (auto r0 : oracle::roots_mod(co, p, 1)) {
                long long d = 0, pw = 1;
                for (std::size_t i = 1; i < co.size(); ++i) {
                    d += static_cast<long long>(i) * co[i] * pw;
                    pw = pw * static_cast<long long>(r0) % static_cast<long long>(p);
                    d %= static_cast<long long>(p);
                }
                if (d % static_cast<long long>(p) == 0)
                    continue;
                std::uint64_t lifted = lifting::hensel_lift(f, p, k, r0);
                std::size_t above = static_cast<std::size_t>(
                    std::count_if(want.begin(), want.end(), [&](std::uint64_t w) { return w % p == r0; }));
                if (above != 1 || std::find(want.begin(), want.end(), lifted) == want.end())
                    o.fail("Newton lift of " + std::to_string(r0) + " is not the unique root above it, " + tag);
            }
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what() + ", " + tag);
        }
    }
    return o;
}

Outcome reduction_homomorphism(std::size_t cases, std::uint64_t seed)
{
    Outcome o{"reduction is a ring homomorphism"};
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        std::uint64_t p = random_odd_prime(rng, 100);
        auto k = static_cast<unsigned>(uniform(rng, 1, 3));
        Modulus m(p, k);
        Rational x = random_rational(rng), y = random_rational(rng);
        if (x.den() % p == 0 || y.den() % p == 0)
            continue;
        ++o.cases;
        auto rx = reduce_rational(x, m), ry = reduce_rational(y, m);
        if (reduce_rational(x + y, m) != rx + ry)
            o.fail("sum: " + x.to_string() + " + " + y.to_string() + " mod " + std::to_string(m.value));
        if (reduce_rational(x * y, m) != rx * ry)
            o.fail("product: " + x.to_string() + " * " + y.to_string() + " mod " + std::to_string(m.value));
        if (reduce_rational(-x, m) != -rx)
            o.fail("negation: " + x.to_string());
    }
    return o;
}

Outcome galois_symmetry(std::size_t cases, std::uint64_t seed)
{
    Outcome o{"Galois symmetry of reductions"};
    std::mt19937_64 rng(seed);
    const long long ds[] = {2, 3, 5, 6, 7, 10, 13};
    for (std::size_t c = 0; c < cases; ++c) {
        long long d = ds[uniform(rng, 0, 6)];
        QuadSurd s(random_rational(rng, 60), random_rational(rng, 60), d);
        if (s.is_rational())
            continue;
        auto x = fiberprod::Position::surd(s);
        std::uint64_t p = random_odd_prime(rng, 200);
        ++o.cases;
        auto a = residues(fiberprod::reduce_position(x, p));
        auto b = residues(fiberprod::reduce_position(x.conjugate(), p));
        if (a != b)
            o.fail("reductions of " + x.to_string() + " and its conjugate differ mod " + std::to_string(p));
        if (c % 10 != 0)
            continue;
        auto mu = fiberprod::Position::surd(QuadSurd(random_rational(rng, 30), random_rational(rng, 30), d));
        if (mu == x)
            continue;
        try {
            auto r1 = fiberprod::coincidence_primes(x, mu, 10000);
            auto r2 = fiberprod::coincidence_primes(x.conjugate(), mu.conjugate(), 10000);
            std::vector<std::uint64_t> p1, p2;
            for (const auto& r : r1.primes)
                p1.push_back(r.p);
            for (const auto& r : r2.primes)
                p2.push_back(r.p);
            if (p1 != p2)
                o.fail("coincidence primes change under conjugation for " + x.to_string() + ", " + mu.to_string());
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
    }
    return o;
}

Outcome parser_roundtrip(std::size_t cases, std::uint64_t seed)
{
    Outcome o{"parser round trip"};
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        Ring ring = c % 4 == 3 ? Ring::prime_field(7) : Ring::rationals();
        MultiPoly f = random_poly(rng, ring, 8, 4, 60);
        ++o.cases;
        std::string text = f.to_string();
        try {
            MultiPoly g = parse_poly(text, kVars, ring);
            if (!(g == f) || g.to_string() != text)
                o.fail("round trip changed " + text);
        } catch (const std::exception& e) {
            o.fail("cannot reparse '" + text + "': " + e.what());
        }
    }
    return o;
}

Outcome gl4_covariance(std::size_t cases, std::uint64_t seed)
{
    Outcome o{"GL4 covariance of singular loci"};
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        std::uint64_t p = c % 2 ? 3 : 5;
        Ring r = Ring::prime_field(p);
        // Clebsch has a node mod 5; the Cayley cubic has four nodes.
        MultiPoly f = p == 5 ? parse_poly("x^3+y^3+z^3+t^3-(x+y+z+t)^3", kVars, r)
                             : parse_poly("x*y*z+y*z*t+z*t*x+t*x*y", kVars, r);
        Matrix m;
        for (;;) {
            m.assign(4, Vector(4, Scalar::zero(r)));
            for (auto& row : m)
                for (auto& e : row)
                    e = Scalar::from_int(r, uniform(rng, 0, static_cast<long long>(p) - 1));
            if (rank(m, r, 4) == 4)
                break;
        }
        std::map<std::string, MultiPoly> sub;
        for (std::size_t i = 0; i < 4; ++i) {
            MultiPoly lin(kVars, r);
            for (std::size_t j = 0; j < 4; ++j)
                lin += MultiPoly::variable(kVars, r, j).scaled(m[i][j]);
            sub[kVars[i]] = lin;
        }
        MultiPoly g = substitute(f, sub);
        ++o.cases;
        auto base = singscan::singular_locus_hypersurface(f);
        auto moved = singscan::singular_locus_hypersurface(g);
        std::map<std::vector<std::string>, std::size_t> want, got;
        for (const auto& rec : base) {
            Vector v;
            for (auto x : rec.point)
                v.push_back(Scalar::from_int(r, x));
            want[point_key(v)] = rec.hessian_rank;
        }
        for (const auto& rec : moved) {
            Vector v(4, Scalar::zero(r));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    v[i] += m[i][j] * Scalar::from_int(r, rec.point[j]);
            got[point_key(v)] = rec.hessian_rank;
        }
        if (want != got || want.empty())
            o.fail("singular locus not covariant at p=" + std::to_string(p) + ", case " + std::to_string(c));
    }
    return o;
}

Outcome ring_axioms(std::size_t cases, std::uint64_t seed)
{
    Outcome o{"ring axioms"};
    std::mt19937_64 rng(seed);
    std::vector<Ring> rings = {Ring::rationals(), Ring::modular(3, 3), Ring::modular(7, 2), Ring::dual(5, 3),
                               Ring::quadratic(5)};
    auto sample = [&](const Ring& r) -> Scalar {
        switch (r.kind()) {
        case RingKind::Rational:
            return Scalar(random_rational(rng));
        case RingKind::Modular:
            return Scalar::from_int(r, uniform(rng, -1000, 1000));
        case RingKind::Dual: {
            std::vector<std::uint64_t> cs(r.k());
            for (auto& x : cs)
                x = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long long>(r.p()) - 1));
            return Scalar(DualScalar(cs, r.p(), r.k()));
        }
        case RingKind::Quadratic:
            return Scalar(QuadSurd(random_rational(rng, 50), random_rational(rng, 50), r.d()));
        }
        return {};
    };
    for (const auto& r : rings) {
        for (std::size_t c = 0; c < cases; ++c) {
            Scalar a = sample(r), b = sample(r), d = sample(r);
            ++o.cases;
            if (!((a + b) + d == a + (b + d)) || !((a * b) * d == a * (b * d)) || !(a * (b + d) == a * b + a * d) ||
                !(a + b == b + a) || !(a * b == b * a) || !(a - a == Scalar::zero(r)))
                o.fail("axiom violated in " + r.describe() + " for " + a.to_string() + ", " + b.to_string() + ", " +
                       d.to_string());
            if (r.kind() == RingKind::Quadratic &&
                !(quad_norm(a.as<QuadSurd>() * b.as<QuadSurd>()) == quad_norm(a.as<QuadSurd>()) * quad_norm(b.as<QuadSurd>())))
                o.fail("norm not multiplicative for " + a.to_string() + ", " + b.to_string());
        }
    }
    return o;
}

Outcome simd_equivalence(std::size_t cases, std::uint64_t seed)
{
    Outcome o{"AVX2 and scalar evaluation agree"};
    std::mt19937_64 rng(seed);
    bool avx2 = simd::detected_isa() == simd::Isa::Avx2;
    const std::pair<std::uint64_t, unsigned> mods[] = {{3, 1}, {5, 2}, {7, 3}, {3, 8}, {11, 4}, {8191, 2}};
    for (std::size_t c = 0; c < cases; ++c) {
        auto [p, k] = mods[uniform(rng, 0, 5)];
        Ring r = Ring::modular(p, k);
        MultiPoly f = random_poly(rng, r, 12, 5, 1'000'000);
        simd::ModularProgram prog(f);
        auto count = static_cast<std::size_t>(uniform(rng, 1, 67));
        std::vector<std::uint32_t> coords(4 * count);
        for (auto& x : coords)
            x = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<long long>(prog.modulus()) - 1));
        std::vector<std::uint32_t> a(count), b(count);
        simd::detail::evaluate_batch_scalar(prog, coords, count, a);
        ++o.cases;
        // Direct evaluation as a third opinion.
        for (std::size_t j = 0; j < count; ++j) {
            std::vector<Scalar> pt;
            for (std::size_t i = 0; i < 4; ++i)
                pt.push_back(Scalar::from_int(r, coords[i * count + j]));
            if (f.evaluate(pt).as<ModularScalar>().residue() != a[j]) {
                o.fail("scalar kernel disagrees with direct evaluation");
                break;
            }
        }
#if defined(__x86_64__)
        if (avx2) {
            simd::detail::evaluate_batch_avx2(prog, coords, count, b);
            if (a != b)
                o.fail("AVX2 kernel disagrees with the scalar kernel mod " + std::to_string(prog.modulus()));
        }
#else
        (void)avx2;
        (void)b;
#endif
    }
    return o;
}

} // namespace props
