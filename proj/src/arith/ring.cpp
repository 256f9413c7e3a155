#include "nodelift/arith/ring.hpp"
#include "nodelift/arith/numtheory.hpp"
#include "nodelift/arith/quadsurd.hpp"
#include "nodelift/error.hpp"

namespace nodelift {

Ring Ring::rationals() { return Ring{}; }

Ring Ring::modular(std::uint64_t p, unsigned k)
{
    Modulus m(p, k); // validates
    Ring r;
    r.kind_ = RingKind::Modular;
    r.p_ = p;
    r.k_ = k;
    return r;
}

Ring Ring::dual(std::uint64_t p, unsigned k)
{
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0)
        throw Error(ErrorCode::InvalidArgument, "dual number order must be >= 1");
    Ring r;
    r.kind_ = RingKind::Dual;
    r.p_ = p;
    r.k_ = k;
    return r;
}

Ring Ring::quadratic(std::int64_t d)
{
    if (d <= 1 || !is_squarefree(d))
        throw Error(ErrorCode::InvalidArgument, "Q(sqrt d) needs d > 1 square-free");
    Ring r;
    r.kind_ = RingKind::Quadratic;
    r.d_ = d;
    return r;
}

Modulus Ring::modulus() const
{
    if (kind_ == RingKind::Modular)
        return Modulus(p_, k_);
    if (kind_ == RingKind::Dual)
        return Modulus(p_, 1);
    throw Error(ErrorCode::RingMismatch, describe() + " has no modulus");
}

bool Ring::is_field() const noexcept
{
    switch (kind_) {
    case RingKind::Rational:
    case RingKind::Quadratic: return true;
    case RingKind::Modular: return k_ == 1;
    case RingKind::Dual: return k_ == 1;
    }
    return false;
}

std::uint64_t Ring::characteristic() const noexcept
{
    switch (kind_) {
    case RingKind::Modular: {
        std::uint64_t v = 1;
        for (unsigned i = 0; i < k_; ++i)
            v *= p_;
        return v;
    }
    case RingKind::Dual: return p_;
    default: return 0;
    }
}

std::string Ring::describe() const
{
    switch (kind_) {
    case RingKind::Rational: return "QQ";
    case RingKind::Modular: return "Z/" + std::to_string(characteristic());
    case RingKind::Dual: return "F_" + std::to_string(p_) + "[e]/e^" + std::to_string(k_);
    case RingKind::Quadratic: return "Q(sqrt" + std::to_string(d_) + ")";
    }
    return "?";
}

} // namespace nodelift
