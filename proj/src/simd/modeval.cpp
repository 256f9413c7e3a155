#include "nodelift/simd/modeval.hpp"
#include "nodelift/error.hpp"
#include "nodelift/simd/dispatch.hpp"

namespace nodelift::simd {

ModularProgram::ModularProgram(const MultiPoly& f) : nvars_(f.nvars())
{
    const Ring& r = f.ring();
    if (r.kind() != RingKind::Modular)
        throw Error(ErrorCode::RingMismatch, "batched evaluation needs a Z/p^k polynomial, got " + r.describe());
    std::uint64_t m = r.characteristic();
    if (m >= (std::uint64_t{1} << 32))
        throw Error(ErrorCode::InvalidArgument, "modulus too large for batched evaluation");
    modulus_ = static_cast<std::uint32_t>(m);
    for (const auto& [mono, c] : f.terms()) {
        coeffs_.push_back(static_cast<std::uint32_t>(c.as<ModularScalar>().residue()));
        for (auto e : mono.exps) {
            exps_.push_back(e);
            max_exp_ = std::max(max_exp_, e);
        }
    }
}

void evaluate_batch(const ModularProgram& prog, std::span<const std::uint32_t> coords, std::size_t count,
                    std::span<std::uint32_t> out)
{
    if (coords.size() < prog.nvars() * count || out.size() < count)
        throw Error(ErrorCode::InvalidArgument, "batch buffers too small");
#if defined(__x86_64__) || defined(_M_X64)
    if (active_isa() == Isa::Avx2 && prog.modulus() < kAvx2ModulusLimit) {
        detail::evaluate_batch_avx2(prog, coords, count, out);
        return;
    }
#endif
    detail::evaluate_batch_scalar(prog, coords, count, out);
}

namespace detail {

void evaluate_batch_scalar(const ModularProgram& prog, std::span<const std::uint32_t> coords, std::size_t count,
                           std::span<std::uint32_t> out)
{
    const std::uint64_t m = prog.modulus();
    const std::size_t nv = prog.nvars();
    const auto& coeffs = prog.coeffs();
    const auto& exps = prog.exponents();
    for (std::size_t j = 0; j < count; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            std::uint64_t term = coeffs[t];
            for (std::size_t i = 0; i < nv && term != 0; ++i) {
                std::uint64_t x = coords[i * count + j];
                for (std::uint32_t e = exps[t * nv + i]; e > 0; --e)
                    term = term * x % m;
            }
            acc += term;
            if (acc >= m)
                acc -= m;
        }
        out[j] = static_cast<std::uint32_t>(acc);
    }
}

} // namespace detail

} // namespace nodelift::simd
