#include "nodelift/arith/rational.hpp"
#include "nodelift/error.hpp"

namespace nodelift {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0)
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    normalize();
}

void Rational::normalize()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = big_gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const
{
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

Rational Rational::inverse() const
{
    if (num_ == 0)
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(den_, num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    BigInt l = a.num_ * b.den_;
    BigInt r = b.num_ * a.den_;
    if (l < r)
        return std::strong_ordering::less;
    if (l > r)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_bigint(text));
    return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

} // namespace nodelift
