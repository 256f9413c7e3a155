#pragma once

#include "nodelift/arith/rational.hpp"

#include <cstdint>
#include <string>

namespace nodelift {

bool is_squarefree(std::int64_t d);

/// a + b sqrt(d) with d square-free, d > 1.
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(Rational a, Rational b, std::int64_t d);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    std::int64_t d() const noexcept { return d_; }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const noexcept { return b_.is_zero(); }

    QuadSurd operator-() const { return {-a_, -b_, d_}; }
    QuadSurd& operator+=(const QuadSurd& o);
    QuadSurd& operator-=(const QuadSurd& o);
    QuadSurd& operator*=(const QuadSurd& o);
    friend QuadSurd operator+(QuadSurd x, const QuadSurd& y) { return x += y; }
    friend QuadSurd operator-(QuadSurd x, const QuadSurd& y) { return x -= y; }
    friend QuadSurd operator*(QuadSurd x, const QuadSurd& y) { return x *= y; }
    friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    QuadSurd conjugate() const { return {a_, -b_, d_}; }
    QuadSurd inverse() const;

    std::string to_string() const;

private:
    void check_compatible(const QuadSurd& o) const;

    Rational a_;
    Rational b_;
    std::int64_t d_ = 5;
};

/// a^2 - d b^2.
Rational quad_norm(const QuadSurd& x);

} // namespace nodelift
