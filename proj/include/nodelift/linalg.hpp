#pragma once

#include "nodelift/arith/scalar.hpp"

#include <cstddef>
#include <vector>

namespace nodelift {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form over a field. Zero rows are dropped.
struct Echelon {
    Matrix rows;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m, const Ring& field, std::size_t cols);
std::size_t rank(const Matrix& m, const Ring& field, std::size_t cols);
/// Basis of {v : m v = 0}, returned in reduced row echelon form.
Matrix nullspace(const Matrix& m, const Ring& field, std::size_t cols);

} // namespace nodelift
