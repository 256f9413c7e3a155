#pragma once

#include "nodelift/poly/multipoly.hpp"

#include <cstdint>
#include <optional>

namespace nodelift::singscan {

struct TjurinaResult {
    /// dim k[x]/(f, df/dx_1, ..., df/dx_n, m^d).
    std::size_t truncated_dimension = 0;
    std::uint32_t degree_bound = 0;
    /// m^(d-1) already lies in the ideal, so the truncated dimension is the Tjurina number.
    bool stabilized = false;
};

/// Local Tjurina algebra at the origin truncated at m^d. f must vanish at the
/// origin and have coefficients in a field.
TjurinaResult tjurina_dimension(const MultiPoly& f, std::uint32_t degree_bound);

/// Tries d = 2, 3, ..., max_degree; returns the first stabilized result, or the
/// last (unstabilized) one.
TjurinaResult tjurina_number(const MultiPoly& f, std::uint32_t max_degree);

/// Moves the point to the origin: f(x + point).
MultiPoly translate_to_origin(const MultiPoly& f, std::span<const Scalar> point);

} // namespace nodelift::singscan
