#include "nodelift/arith/quadsurd.hpp"
#include "nodelift/error.hpp"

namespace nodelift {

bool is_squarefree(std::int64_t d)
{
    if (d <= 0)
        return false;
    for (std::int64_t q = 2; q * q <= d; ++q)
        if (d % (q * q) == 0)
            return false;
    return true;
}

QuadSurd::QuadSurd(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d)
{
    if (d_ <= 1 || !is_squarefree(d_))
        throw Error(ErrorCode::InvalidArgument, "sqrt(" + std::to_string(d) + ") needs d > 1 square-free");
}

void QuadSurd::check_compatible(const QuadSurd& o) const
{
    if (d_ != o.d_)
        throw Error(ErrorCode::RingMismatch, "quadratic fields differ");
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o)
{
    check_compatible(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o)
{
    check_compatible(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o)
{
    check_compatible(o);
    Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadSurd QuadSurd::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Rational n = quad_norm(*this).inverse();
    return {a_ * n, -b_ * n, d_};
}

std::string QuadSurd::to_string() const
{
    if (b_.is_zero())
        return a_.to_string();
    std::string s;
    if (!a_.is_zero())
        s = a_.to_string() + (b_ < Rational(0) ? "-" : "+");
    else if (b_ < Rational(0))
        s = "-";
    Rational ab = b_ < Rational(0) ? -b_ : b_;
    if (!(ab == Rational(1)))
        s += ab.to_string() + "*";
    s += "sqrt" + std::to_string(d_);
    return s;
}

Rational quad_norm(const QuadSurd& x) { return x.a() * x.a() - Rational(x.d()) * x.b() * x.b(); }

} // namespace nodelift
