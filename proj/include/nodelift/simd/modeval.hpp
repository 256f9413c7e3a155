#pragma once

#include "nodelift/poly/multipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nodelift::simd {

/// Largest modulus the double-precision AVX2 path handles exactly (products < 2^52).
inline constexpr std::uint64_t kAvx2ModulusLimit = std::uint64_t{1} << 26;

/// A polynomial over Z/m flattened for batched evaluation at many points.
class ModularProgram {
public:
    /// f must be over Z/p^k with p^k < 2^32.
    explicit ModularProgram(const MultiPoly& f);

    std::uint32_t modulus() const noexcept { return modulus_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t nterms() const noexcept { return coeffs_.size(); }
    std::uint32_t max_exponent() const noexcept { return max_exp_; }

    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
    /// nterms x nvars, row-major.
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

private:
    std::uint32_t modulus_ = 1;
    std::size_t nvars_ = 0;
    std::uint32_t max_exp_ = 0;
    std::vector<std::uint32_t> coeffs_;
    std::vector<std::uint32_t> exps_;
};

/// Structure-of-arrays batch: coordinate i of point j is coords[i * count + j].
/// Residues must lie in [0, modulus). out.size() >= count.
void evaluate_batch(const ModularProgram& prog, std::span<const std::uint32_t> coords, std::size_t count,
                    std::span<std::uint32_t> out);

namespace detail {
void evaluate_batch_scalar(const ModularProgram& prog, std::span<const std::uint32_t> coords, std::size_t count,
                           std::span<std::uint32_t> out);
#if defined(__x86_64__) || defined(_M_X64)
void evaluate_batch_avx2(const ModularProgram& prog, std::span<const std::uint32_t> coords, std::size_t count,
                         std::span<std::uint32_t> out);
#endif
} // namespace detail

} // namespace nodelift::simd
