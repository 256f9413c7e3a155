// Compiled with -mavx2; only reached through evaluate_batch() after a CPU check.
#include "nodelift/simd/modeval.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <vector>

namespace nodelift::simd::detail {

namespace {

// a*b mod m for residues in [0, m), m < 2^26: the product is exact in a double and
// the floor quotient is off by at most one, fixed by the two conditional corrections.
inline __m256d mulmod_pd(__m256d a, __m256d b, __m256d m, __m256d inv_m)
{
    __m256d prod = _mm256_mul_pd(a, b);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, inv_m));
    __m256d r = _mm256_sub_pd(prod, _mm256_mul_pd(q, m));
    __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_add_pd(r, _mm256_and_pd(neg, m));
    __m256d over = _mm256_cmp_pd(r, m, _CMP_GE_OQ);
    return _mm256_sub_pd(r, _mm256_and_pd(over, m));
}

inline __m256d addmod_pd(__m256d a, __m256d b, __m256d m)
{
    __m256d s = _mm256_add_pd(a, b);
    __m256d over = _mm256_cmp_pd(s, m, _CMP_GE_OQ);
    return _mm256_sub_pd(s, _mm256_and_pd(over, m));
}

struct alignas(32) Lane4 {
    __m256d v;
};

inline __m256d load4(const std::uint32_t* p)
{
    return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

} // namespace

void evaluate_batch_avx2(const ModularProgram& prog, std::span<const std::uint32_t> coords, std::size_t count,
                         std::span<std::uint32_t> out)
{
    const std::size_t nv = prog.nvars();
    const auto& coeffs = prog.coeffs();
    const auto& exps = prog.exponents();
    const std::size_t stride = prog.max_exponent() + 1;
    const __m256d m = _mm256_set1_pd(static_cast<double>(prog.modulus()));
    const __m256d inv_m = _mm256_set1_pd(1.0 / static_cast<double>(prog.modulus()));
    const __m256d one = _mm256_set1_pd(prog.modulus() == 1 ? 0.0 : 1.0);

    std::vector<Lane4> coeff_v(coeffs.size());
    for (std::size_t t = 0; t < coeffs.size(); ++t)
        coeff_v[t].v = _mm256_set1_pd(static_cast<double>(coeffs[t]));

    // powers[i * stride + e] = x_i^e for the current block of four points
    std::vector<Lane4> powers(nv * stride);

    const std::size_t blocks = count / 4;
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t j = b * 4;
        for (std::size_t i = 0; i < nv; ++i) {
            __m256d x = load4(coords.data() + i * count + j);
            Lane4* pw = powers.data() + i * stride;
            pw[0].v = one;
            for (std::size_t e = 1; e < stride; ++e)
                pw[e].v = mulmod_pd(pw[e - 1].v, x, m, inv_m);
        }
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            __m256d term = coeff_v[t].v;
            const std::uint32_t* te = exps.data() + t * nv;
            for (std::size_t i = 0; i < nv; ++i)
                if (te[i])
                    term = mulmod_pd(term, powers[i * stride + te[i]].v, m, inv_m);
            acc = addmod_pd(acc, term, m);
        }
        __m128i r = _mm256_cvtpd_epi32(acc);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + j), r);
    }

    const std::size_t done = blocks * 4;
    if (done == count)
        return;
    // Tail: copy the remaining points into a compact SoA buffer for the scalar kernel.
    const std::size_t rest = count - done;
    std::vector<std::uint32_t> tail(nv * rest);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < rest; ++j)
            tail[i * rest + j] = coords[i * count + done + j];
    evaluate_batch_scalar(prog, tail, rest, out.subspan(done));
}

} // namespace nodelift::simd::detail

#endif
