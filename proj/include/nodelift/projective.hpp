#pragma once

#include "nodelift/arith/scalar.hpp"
#include "nodelift/linalg.hpp"

#include <string>
#include <vector>

namespace nodelift {

/// Point of projective space over a field, scaled so its first nonzero coordinate is 1.
class ProjPoint {
public:
    ProjPoint() = default;
    /// Normalizes; InvalidArgument if all coordinates are zero.
    explicit ProjPoint(Vector coords);

    const Vector& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Ring ring() const { return coords_.front().ring(); }
    /// Index of the first nonzero coordinate.
    std::size_t pivot() const;

    std::string to_string() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);

private:
    Vector coords_;
};

bool lexicographic_less(const Vector& a, const Vector& b);
bool lexicographic_less(const Matrix& a, const Matrix& b);

} // namespace nodelift
