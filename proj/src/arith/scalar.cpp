#include "nodelift/arith/scalar.hpp"
#include "nodelift/error.hpp"

namespace nodelift {

namespace {

template <class... Fs> struct overloaded : Fs... { using Fs::operator()...; };
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

} // namespace

Scalar Scalar::from_int(const Ring& r, const BigInt& v)
{
    switch (r.kind()) {
    case RingKind::Rational: return Scalar(Rational(v));
    case RingKind::Modular: return Scalar(ModularScalar::from_int(v, r.modulus()));
    case RingKind::Dual: return Scalar(DualScalar::from_int(v, r.p(), r.k()));
    case RingKind::Quadratic: return Scalar(QuadSurd(Rational(v), Rational(0), r.d()));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ring");
}

Scalar Scalar::from_rational(const Ring& r, const Rational& q)
{
    return convert(Scalar(q), r);
}

Ring Scalar::ring() const
{
    return std::visit(overloaded{
                          [](const Rational&) { return Ring::rationals(); },
                          [](const ModularScalar& m) { return Ring::modular(m.modulus().p, m.modulus().k); },
                          [](const DualScalar& d) { return Ring::dual(d.p(), d.k()); },
                          [](const QuadSurd& q) { return Ring::quadratic(q.d()); },
                      },
                      v_);
}

bool Scalar::is_zero() const
{
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const
{
    return std::visit(overloaded{
                          [](const Rational& q) { return q == Rational(1); },
                          [](const ModularScalar& m) { return m.residue() == 1 % m.modulus().value; },
                          [](const DualScalar& d) {
                              auto c = d.coeffs();
                              if (c[0] != 1 % d.p())
                                  return false;
                              for (std::size_t i = 1; i < c.size(); ++i)
                                  if (c[i])
                                      return false;
                              return true;
                          },
                          [](const QuadSurd& q) { return q.a() == Rational(1) && q.b().is_zero(); },
                      },
                      v_);
}

bool Scalar::is_unit() const
{
    return std::visit(overloaded{
                          [](const Rational& q) { return !q.is_zero(); },
                          [](const ModularScalar& m) { return m.is_unit(); },
                          [](const DualScalar& d) { return d.is_unit(); },
                          [](const QuadSurd& q) { return !q.is_zero(); },
                      },
                      v_);
}

void Scalar::require_same_ring(const Scalar& o) const
{
    if (v_.index() != o.v_.index() || !(ring() == o.ring()))
        throw Error(ErrorCode::RingMismatch, "cannot combine " + ring().describe() + " and " + o.ring().describe());
}

Scalar Scalar::operator-() const
{
    return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same_ring(o);
    std::visit([&](auto& x) { x += std::get<std::decay_t<decltype(x)>>(o.v_); }, v_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same_ring(o);
    std::visit([&](auto& x) { x -= std::get<std::decay_t<decltype(x)>>(o.v_); }, v_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same_ring(o);
    std::visit([&](auto& x) { x *= std::get<std::decay_t<decltype(x)>>(o.v_); }, v_);
    return *this;
}

Scalar Scalar::inverse() const
{
    return std::visit([](const auto& x) { return Scalar(x.inverse()); }, v_);
}

Scalar Scalar::pow(std::uint64_t e) const
{
    Scalar base = *this;
    Scalar acc = Scalar::one(ring());
    while (e) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return acc;
}

std::string Scalar::to_string() const
{
    return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

bool Scalar::canonical_less(const Scalar& a, const Scalar& b)
{
    if (a.v_.index() != b.v_.index())
        return a.v_.index() < b.v_.index();
    return std::visit(overloaded{
                          [&](const Rational& x) { return x < b.as<Rational>(); },
                          [&](const ModularScalar& x) { return x.residue() < b.as<ModularScalar>().residue(); },
                          [&](const DualScalar& x) { return x.coeffs() < b.as<DualScalar>().coeffs(); },
                          [&](const QuadSurd& x) {
                              const auto& y = b.as<QuadSurd>();
                              if (!(x.a() == y.a()))
                                  return x.a() < y.a();
                              return x.b() < y.b();
                          },
                      },
                      a.v_);
}

Scalar convert(const Scalar& s, const Ring& target)
{
    const Ring src = s.ring();
    if (src == target)
        return s;
    auto mismatch = [&] {
        return Error(ErrorCode::RingMismatch, "no conversion from " + src.describe() + " to " + target.describe());
    };
    if (src.kind() == RingKind::Rational) {
        const auto& q = s.as<Rational>();
        switch (target.kind()) {
        case RingKind::Rational: return s;
        case RingKind::Modular: return Scalar(reduce_rational(q, target.modulus()));
        case RingKind::Dual: {
            auto r = reduce_rational(q, Modulus(target.p(), 1));
            return Scalar(DualScalar({r.residue()}, target.p(), target.k()));
        }
        case RingKind::Quadratic: return Scalar(QuadSurd(q, Rational(0), target.d()));
        }
    }
    if (src.kind() == RingKind::Modular) {
        const auto& m = s.as<ModularScalar>();
        if (target.kind() == RingKind::Modular && target.p() == src.p() && target.k() <= src.k())
            return Scalar(ModularScalar(m.residue(), target.modulus()));
        if (target.kind() == RingKind::Dual && target.p() == src.p() && src.k() == 1)
            return Scalar(DualScalar({m.residue()}, target.p(), target.k()));
        throw mismatch();
    }
    if (src.kind() == RingKind::Dual && target.kind() == RingKind::Dual && target.p() == src.p() &&
        target.k() <= src.k())
        return Scalar(s.as<DualScalar>().truncate(target.k()));
    throw mismatch();
}

} // namespace nodelift
