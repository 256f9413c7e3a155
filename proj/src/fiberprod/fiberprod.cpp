#include "nodelift/fiberprod/fiberprod.hpp"
#include "nodelift/arith/modular.hpp"
#include "nodelift/arith/numtheory.hpp"
#include "nodelift/error.hpp"
#include "nodelift/parallel.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace nodelift::fiberprod {

Position Position::rational(Rational q)
{
    Position p;
    p.kind_ = Kind::Rational;
    p.q_ = std::move(q);
    return p;
}

Position Position::surd(QuadSurd x)
{
    if (x.is_rational())
        return rational(x.a());
    Position p;
    p.kind_ = Kind::Surd;
    p.s_ = std::move(x);
    return p;
}

Position Position::infinity()
{
    Position p;
    p.kind_ = Kind::Infinity;
    return p;
}

Position Position::parse(const std::string& text)
{
    static const std::regex surd_re(R"(^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\s*(\d+)\s*$)");
    static const std::regex rational_re(R"(^\s*[+-]?\d+(?:/\d+)?\s*$)");
    if (text == "inf" || text == "infinity" || text == "∞")
        return infinity();
    std::smatch m;
    if (std::regex_match(text, rational_re))
        return rational(Rational::parse(text));
    if (std::regex_match(text, m, surd_re)) {
        Rational b = Rational::parse(m[3].str());
        if (m[2].str() == "-")
            b = -b;
        return surd(QuadSurd(Rational::parse(m[1].str()), b, std::stoll(m[4].str())));
    }
    throw Error(ErrorCode::SyntaxError, "cannot read position '" + text + "'");
}

Position Position::conjugate() const { return kind_ == Kind::Surd ? surd(s_.conjugate()) : *this; }

std::string Position::to_string() const
{
    switch (kind_) {
    case Kind::Rational: return q_.to_string();
    case Kind::Surd: return s_.to_string();
    case Kind::Infinity: return "inf";
    }
    return "?";
}

bool operator==(const Position& a, const Position& b)
{
    if (a.kind_ != b.kind_)
        return false;
    switch (a.kind_) {
    case Position::Kind::Rational: return a.q_ == b.q_;
    case Position::Kind::Surd: return a.s_ == b.s_;
    case Position::Kind::Infinity: return true;
    }
    return false;
}

std::string Residue::to_string() const { return infinite ? "inf" : std::to_string(value); }

namespace {

BigInt pmod(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    return r < 0 ? r + m : r;
}

BigInt big_inv(const BigInt& a, const BigInt& m)
{
    BigInt g = m, x = 0, x1 = 1, r = pmod(a, m);
    while (r != 0) {
        BigInt q = g / r;
        BigInt t = g - q * r;
        g = r;
        r = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1)
        throw Error(ErrorCode::NotInvertible, "no inverse modulo " + to_string(m));
    return pmod(x, m);
}

unsigned valuation(BigInt n, std::uint64_t p)
{
    unsigned v = 0;
    n = big_abs(n);
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Residue reduce_rational_position(const Rational& q, std::uint64_t p)
{
    if (q.den() % p == 0)
        return Residue::inf();
    return {false, mod_u64(pmod(q.num(), p) * big_inv(q.den(), p), p)};
}

// Square root of d in Z/p^n lifted from s mod p (p odd, p not dividing d).
BigInt lift_sqrt(std::int64_t d, std::uint64_t s, std::uint64_t p, unsigned n)
{
    BigInt m = 1;
    for (unsigned i = 0; i < n; ++i)
        m *= p;
    BigInt x = s;
    for (unsigned i = 0; i < n; ++i)
        x = pmod(x - (x * x - d) * big_inv(2 * x, m), m);
    return x;
}

std::vector<Residue> reduce_surd(const QuadSurd& x, std::uint64_t p)
{
    const std::int64_t d = x.d();
    if (d % static_cast<std::int64_t>(p) == 0) {
        // Ramified: sqrt d maps to 0 and has half the valuation of p.
        if (x.a().den() % p == 0 || x.b().den() % p == 0)
            return {Residue::inf()};
        return {reduce_rational_position(x.a(), p)};
    }
    auto roots = sqrt_mod_prime(mod_u64(BigInt(d), p), p);
    BigInt D = big_lcm(x.a().den(), x.b().den());
    BigInt A = x.a().num() * (D / x.a().den());
    BigInt B = x.b().num() * (D / x.b().den());
    unsigned e = valuation(D, p);
    BigInt pe = 1;
    for (unsigned i = 0; i < e; ++i)
        pe *= p;
    BigInt m = pe * p;
    std::vector<Residue> out;
    for (auto s0 : roots) {
        BigInt s = lift_sqrt(d, s0, p, e + 1);
        BigInt num = pmod(A + B * s, m);
        if (num % pe != 0) {
            out.push_back(Residue::inf());
            continue;
        }
        BigInt unit = D / pe;
        out.push_back({false, mod_u64(pmod((num / pe) * big_inv(unit, p), p), p)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void require_odd_prime(std::uint64_t p)
{
    if (p == 2 || !is_prime(p))
        throw Error(ErrorCode::NotPrime, "positions reduce modulo odd primes only, got " + std::to_string(p));
}

void add_prime_factors(const BigInt& n, std::uint64_t bound, std::set<std::uint64_t>& out, BigInt* unfactored)
{
    if (n == 0)
        return;
    FactorList f = factor_integer(n, std::max<std::uint64_t>(bound, 2));
    for (const auto& [q, e] : f.factors)
        out.insert(static_cast<std::uint64_t>(q));
    if (unfactored)
        *unfactored *= f.cofactor;
}

BigInt denominator_of(const Position& x)
{
    switch (x.kind()) {
    case Position::Kind::Rational: return x.value().den();
    case Position::Kind::Surd: return big_lcm(x.surd_value().a().den(), x.surd_value().b().den());
    case Position::Kind::Infinity: return 1;
    }
    return 1;
}

QuadSurd as_surd(const Position& x, std::int64_t d)
{
    if (x.kind() == Position::Kind::Surd)
        return x.surd_value();
    return QuadSurd(x.value(), Rational(0), d);
}

} // namespace

std::vector<Residue> reduce_position(const Position& x, std::uint64_t p)
{
    require_odd_prime(p);
    switch (x.kind()) {
    case Position::Kind::Infinity: return {Residue::inf()};
    case Position::Kind::Rational: return {reduce_rational_position(x.value(), p)};
    case Position::Kind::Surd: return reduce_surd(x.surd_value(), p);
    }
    return {};
}

std::vector<Residue> common_residues(const Position& lambda, const Position& mu, std::uint64_t p)
{
    auto a = reduce_position(lambda, p);
    auto b = reduce_position(mu, p);
    std::vector<Residue> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::uint64_t> CoincidenceReport::admissible_primes() const
{
    std::vector<std::uint64_t> out;
    for (const auto& r : primes)
        if (r.admissible())
            out.push_back(r.p);
    return out;
}

CoincidenceReport coincidence_primes(const Position& lambda, const Position& mu, std::uint64_t bound)
{
    if (lambda == mu)
        throw Error(ErrorCode::EqualPositions, "positions coincide: " + lambda.to_string());
    if (bound < 2)
        throw Error(ErrorCode::InvalidArgument, "bound must be at least 2");
    CoincidenceReport rep;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.bound = bound;

    std::set<std::uint64_t> candidates;
    if (!lambda.is_infinity() && !mu.is_infinity()) {
        std::int64_t d = lambda.kind() == Position::Kind::Surd ? lambda.surd_value().d()
                         : mu.kind() == Position::Kind::Surd ? mu.surd_value().d()
                                                             : 5;
        if (lambda.kind() == Position::Kind::Surd && mu.kind() == Position::Kind::Surd &&
            lambda.surd_value().d() != mu.surd_value().d())
            throw Error(ErrorCode::InvalidArgument, "positions live in different quadratic fields");
        QuadSurd delta = as_surd(lambda, d) - as_surd(mu, d);
        add_prime_factors(quad_norm(delta).num(), bound, candidates, &rep.unfactored);
    }
    add_prime_factors(denominator_of(lambda), bound, candidates, nullptr);
    add_prime_factors(denominator_of(mu), bound, candidates, nullptr);
    if (lambda.kind() == Position::Kind::Surd)
        add_prime_factors(BigInt(lambda.surd_value().d()), bound, candidates, nullptr);
    if (mu.kind() == Position::Kind::Surd)
        add_prime_factors(BigInt(mu.surd_value().d()), bound, candidates, nullptr);

    for (auto p : candidates) {
        if (p == 2 || p > bound)
            continue;
        auto common = common_residues(lambda, mu, p);
        if (common.empty())
            continue;
        CoincidenceResult r;
        r.p = p;
        r.residues = common;
        for (const auto& c : common) {
            r.at_infinity = r.at_infinity || c.infinite;
            r.residue_zero_or_one = r.residue_zero_or_one || (!c.infinite && c.value <= 1);
        }
        rep.primes.push_back(std::move(r));
    }
    return rep;
}

std::optional<Position> BeauvilleSurface::fourth_position() const
{
    std::optional<Position> out;
    for (const auto& f : fibers) {
        const Position& x = f.position;
        bool fixed = x.is_infinity() || (x.kind() == Position::Kind::Rational &&
                                         (x.value() == Rational(0) || x.value() == Rational(1)));
        if (!fixed)
            out = x;
    }
    if (!out && fibers.size() == 4)
        out = fibers.back().position;
    return out;
}

std::vector<std::string> BeauvilleSurface::issues() const
{
    std::vector<std::string> out;
    if (fibers.size() != 4)
        out.push_back("expected four singular fibres, found " + std::to_string(fibers.size()));
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        if (fibers[i].n < 1)
            out.push_back("fibre " + std::to_string(i + 1) + " has type I_0");
        for (std::size_t j = i + 1; j < fibers.size(); ++j)
            if (fibers[i].position == fibers[j].position)
                out.push_back("fibres " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " share the position " + fibers[i].position.to_string());
    }
    return out;
}

std::vector<Position> Catalogue::positions() const
{
    std::vector<Position> out;
    auto add = [&](const Position& x) {
        if (std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(x);
    };
    for (const auto& s : surfaces)
        if (auto x = s.fourth_position())
            add(*x);
    for (const auto& b : extra_positions)
        add(b.position);
    return out;
}

std::vector<std::uint64_t> PrimeTable::admissible_union() const
{
    std::set<std::uint64_t> s;
    for (const auto& row : rows)
        for (auto p : row.report.admissible_primes())
            s.insert(p);
    return {s.begin(), s.end()};
}

std::vector<std::uint64_t> PrimeTable::all_union() const
{
    std::set<std::uint64_t> s;
    for (const auto& row : rows)
        for (const auto& r : row.report.primes)
            s.insert(r.p);
    return {s.begin(), s.end()};
}

PrimeTable build_prime_table(const Catalogue& catalogue, std::uint64_t bound, unsigned jobs)
{
    auto pos = catalogue.positions();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            pairs.emplace_back(i, j);
    PrimeTable table;
    table.bound = bound;
    table.rows.resize(pairs.size());
    parallel_ranges(pairs.size(), jobs, [&](std::uint64_t b, std::uint64_t e, unsigned) {
        for (std::uint64_t k = b; k < e; ++k) {
            const auto& [i, j] = pairs[k];
            table.rows[k] = {pos[i], pos[j], coincidence_primes(pos[i], pos[j], bound)};
        }
    });
    return table;
}

} // namespace nodelift::fiberprod
