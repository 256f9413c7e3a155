#pragma once

#include <string_view>

namespace nodelift::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set the running CPU supports.
Isa detected_isa();

/// Kernel variant used by the dispatching entry points. Starts at detected_isa(),
/// or Scalar when NODELIFT_ISA=scalar is set in the environment.
Isa active_isa();

/// Forces a variant (tests, benchmarking). Throws InvalidArgument if the CPU lacks it.
void set_active_isa(Isa isa);

/// Restores a previous selection on scope exit.
class ScopedIsa {
public:
    explicit ScopedIsa(Isa isa) : saved_(active_isa()) { set_active_isa(isa); }
    ~ScopedIsa() { set_active_isa(saved_); }
    ScopedIsa(const ScopedIsa&) = delete;
    ScopedIsa& operator=(const ScopedIsa&) = delete;

private:
    Isa saved_;
};

} // namespace nodelift::simd
