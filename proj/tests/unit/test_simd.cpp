#include "properties.hpp"

#include "nodelift/poly/parser.hpp"
#include "nodelift/simd/dispatch.hpp"
#include "nodelift/simd/modeval.hpp"

#include <gtest/gtest.h>

using namespace nodelift;

TEST(Simd, RandomProgramsAgree)
{
    auto o = props::simd_equivalence(300, 4);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Simd, ClebschOverAllOfF7)
{
    std::vector<std::string> V = {"x", "y", "z", "t"};
    simd::ModularProgram prog(parse_poly("x^3+y^3+z^3+t^3-(x+y+z+t)^3", V, Ring::prime_field(7)));
    const std::size_t n = 7 * 7 * 7 * 7;
    std::vector<std::uint32_t> coords(4 * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0, q = j; i < 4; ++i, q /= 7)
            coords[i * n + j] = static_cast<std::uint32_t>(q % 7);
    std::vector<std::uint32_t> a(n), b(n);
    simd::detail::evaluate_batch_scalar(prog, coords, n, a);
    {
        simd::ScopedIsa isa(simd::detected_isa());
        simd::evaluate_batch(prog, coords, n, b);
    }
    EXPECT_EQ(a, b);
    std::size_t zeros = std::count(a.begin(), a.end(), 0u);
    EXPECT_GT(zeros, 1u);
}

TEST(Simd, ForcedScalarSelection)
{
    simd::ScopedIsa isa(simd::Isa::Scalar);
    EXPECT_EQ(simd::active_isa(), simd::Isa::Scalar);
    EXPECT_EQ(simd::isa_name(simd::Isa::Scalar), "scalar");
}
