#include "nodelift/simd/dispatch.hpp"
#include "nodelift/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace nodelift::simd {

namespace {

bool cpu_has_avx2()
{
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa initial_isa()
{
    if (const char* env = std::getenv("NODELIFT_ISA"); env && std::string(env) == "scalar")
        return Isa::Scalar;
    return detected_isa();
}

std::atomic<Isa>& selection()
{
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

} // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "?";
}

Isa detected_isa() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return selection().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa)
{
    if (isa == Isa::Avx2 && !cpu_has_avx2())
        throw Error(ErrorCode::InvalidArgument, "CPU does not support AVX2");
    selection().store(isa, std::memory_order_relaxed);
}

} // namespace nodelift::simd
