#include "nodelift/arith/dual.hpp"
#include "nodelift/error.hpp"

namespace nodelift {

DualScalar::DualScalar(std::vector<std::uint64_t> coeffs, std::uint64_t p, unsigned k)
    : c_(std::move(coeffs)), p_(p)
{
    if (k == 0)
        throw Error(ErrorCode::InvalidArgument, "dual number order must be >= 1");
    c_.resize(k, 0);
    for (auto& c : c_)
        c %= p_;
}

DualScalar DualScalar::from_int(const BigInt& v, std::uint64_t p, unsigned k)
{
    std::vector<std::uint64_t> c(k, 0);
    c[0] = mod_u64(v, p);
    return DualScalar(std::move(c), p, k);
}

bool DualScalar::is_zero() const noexcept
{
    for (auto c : c_)
        if (c != 0)
            return false;
    return true;
}

void DualScalar::check_compatible(const DualScalar& o) const
{
    if (p_ != o.p_ || c_.size() != o.c_.size())
        throw Error(ErrorCode::RingMismatch, "dual number rings differ");
}

DualScalar DualScalar::operator-() const
{
    DualScalar r = *this;
    for (auto& c : r.c_)
        c = c == 0 ? 0 : p_ - c;
    return r;
}

DualScalar& DualScalar::operator+=(const DualScalar& o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = (c_[i] + o.c_[i]) % p_;
    return *this;
}

DualScalar& DualScalar::operator-=(const DualScalar& o) { return *this += -o; }

DualScalar& DualScalar::operator*=(const DualScalar& o)
{
    check_compatible(o);
    const std::size_t k = c_.size();
    std::vector<std::uint64_t> r(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < k; ++j)
            r[i + j] = (r[i + j] + mul_mod(c_[i], o.c_[j], p_)) % p_;
    }
    c_ = std::move(r);
    return *this;
}

DualScalar DualScalar::inverse() const
{
    if (!is_unit())
        throw Error(ErrorCode::NotInvertible, to_string() + " is not a unit");
    // Solve (sum c_i e^i)(sum x_j e^j) = 1 degree by degree.
    const std::size_t k = c_.size();
    std::vector<std::uint64_t> x(k, 0);
    std::uint64_t inv0 = inv_mod(c_[0], p_);
    x[0] = inv0;
    for (std::size_t n = 1; n < k; ++n) {
        std::uint64_t acc = 0;
        for (std::size_t i = 1; i <= n; ++i)
            acc = (acc + mul_mod(c_[i], x[n - i], p_)) % p_;
        x[n] = mul_mod(acc == 0 ? 0 : p_ - acc, inv0, p_);
    }
    return DualScalar(std::move(x), p_, static_cast<unsigned>(k));
}

DualScalar DualScalar::truncate(unsigned new_k) const
{
    if (new_k > c_.size())
        throw Error(ErrorCode::RingMismatch, "cannot truncate to a larger order");
    return DualScalar(std::vector<std::uint64_t>(c_.begin(), c_.begin() + new_k), p_, new_k);
}

std::string DualScalar::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0) {
            out += std::to_string(c_[i]);
            continue;
        }
        if (c_[i] != 1)
            out += std::to_string(c_[i]);
        out += "e";
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace nodelift
