#include "oracles.hpp"
#include "properties.hpp"

#include "nodelift/error.hpp"
#include "nodelift/lifting/lifting.hpp"
#include "nodelift/poly/parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nodelift;
using namespace nodelift::lifting;

namespace {

const std::vector<std::string> V = {"x", "y", "z", "t"};

IntPoly ip(std::initializer_list<long long> c)
{
    IntPoly out;
    for (auto x : c)
        out.emplace_back(x);
    return out;
}

std::vector<std::uint64_t> residues(const LiftReport& r)
{
    std::vector<std::uint64_t> out;
    for (const auto& x : r.roots)
        out.push_back(x.as<ModularScalar>().residue());
    return out;
}

std::vector<std::vector<std::uint64_t>> duals(const LiftReport& r)
{
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& x : r.roots)
        out.push_back(x.as<DualScalar>().coeffs());
    return out;
}

} // namespace

TEST(Roots, GoldenPolynomialModFive)
{
    auto r1 = roots_mod_prime_power(ip({-1, 1, 1}), 5, 1);
    EXPECT_EQ(residues(r1), (std::vector<std::uint64_t>{2}));
    ASSERT_EQ(r1.base_roots.size(), 1u);
    EXPECT_EQ(r1.base_roots[0].status, RootStatus::NonReducedFiber);

    auto r2 = roots_mod_prime_power(ip({-1, 1, 1}), 5, 2);
    EXPECT_TRUE(r2.roots.empty());
    ASSERT_EQ(r2.base_roots.size(), 1u);
    EXPECT_EQ(r2.base_roots[0].residue, 2u);
    EXPECT_EQ(r2.base_roots[0].status, RootStatus::Obstructed);
    EXPECT_EQ(r2.base_roots[0].obstructed_at, 2u);
    EXPECT_TRUE(oracle::roots_mod({-1, 1, 1}, 5, 2).empty());
}

TEST(Roots, SimpleRootsModEleven)
{
    // 36^2 + 36 - 1 = 11^3 and 84^2 + 84 - 1 = 59 * 11^2.
    auto r = roots_mod_prime_power(ip({-1, 1, 1}), 11, 2);
    EXPECT_EQ(residues(r), oracle::roots_mod({-1, 1, 1}, 11, 2));
    EXPECT_EQ(residues(r), (std::vector<std::uint64_t>{36, 84}));
    EXPECT_TRUE(r.hensel_checked);
    EXPECT_EQ(hensel_lift(ip({-1, 1, 1}), 11, 2, 3), 36u);
    EXPECT_EQ(hensel_lift(ip({-1, 1, 1}), 11, 2, 7), 84u);
    for (const auto& b : r.base_roots)
        EXPECT_EQ(b.status, RootStatus::SimpleLift);
}

TEST(Roots, HenselAgreesWithBruteForce)
{
    auto o = props::hensel_agreement(1000, 7);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Roots, ProjectionCompatibility)
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[rng() % 3];
        IntPoly f;
        for (int j = 0; j < 4; ++j)
            f.emplace_back(static_cast<long long>(rng() % 31) - 15);
        for (unsigned k = 2; k <= 4; ++k) {
            auto hi = residues(roots_mod_prime_power(f, p, k));
            auto lo = residues(roots_mod_prime_power(f, p, k - 1));
            std::uint64_t q = 1;
            for (unsigned j = 1; j < k; ++j)
                q *= p;
            for (auto r : hi)
                EXPECT_TRUE(std::binary_search(lo.begin(), lo.end(), r % q));
        }
    }
}

TEST(Roots, SizeGuard)
{
    try {
        roots_mod_prime_power(ip({0, 0, 1}), 101, 4, 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeGuard);
    }
}

TEST(DualRoots, GoldenPolynomial)
{
    auto d2 = roots_dual_numbers(ip({-1, 1, 1}), 5, 2);
    ASSERT_EQ(d2.roots.size(), 5u);
    for (std::uint64_t c = 0; c < 5; ++c)
        EXPECT_EQ(duals(d2)[c], (std::vector<std::uint64_t>{2, c}));
    EXPECT_EQ(duals(d2), oracle::roots_dual({-1, 1, 1}, 5, 2));

    auto d3 = roots_dual_numbers(ip({-1, 1, 1}), 5, 3);
    ASSERT_EQ(d3.roots.size(), 5u);
    for (std::uint64_t c = 0; c < 5; ++c)
        EXPECT_EQ(duals(d3)[c], (std::vector<std::uint64_t>{2, 0, c}));
    EXPECT_EQ(duals(d3), oracle::roots_dual({-1, 1, 1}, 5, 3));

    // (x - 2)^2 = 0 in F5[e]/e^4 forces x = 2 + c e^2 + d e^3.
    auto d4 = roots_dual_numbers(ip({-1, 1, 1}), 5, 4);
    EXPECT_EQ(d4.roots.size(), 25u);
    EXPECT_EQ(duals(d4), oracle::roots_dual({-1, 1, 1}, 5, 4));
    for (const auto& r : duals(d4))
        EXPECT_EQ(r[1], 0u);
}

TEST(DualRoots, LinearPolynomial)
{
    for (std::uint64_t p : {3, 5, 7})
        for (unsigned k = 1; k <= 3; ++k) {
            auto r = roots_dual_numbers(ip({-1, 1}), p, k);
            ASSERT_EQ(r.roots.size(), 1u);
            std::vector<std::uint64_t> one(k, 0);
            one[0] = 1;
            EXPECT_EQ(duals(r)[0], one);
        }
}

TEST(DualRoots, CountFormulaAtOrderTwo)
{
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[rng() % 3];
        std::vector<long long> c;
        for (int j = 0; j < 4; ++j)
            c.push_back(static_cast<long long>(rng() % 21) - 10);
        IntPoly f(c.begin(), c.end());
        auto base = oracle::roots_mod(c, p, 1);
        std::size_t simple = 0, multiple = 0;
        for (auto r : base) {
            // derivative at r
            long long d = 0, pw = 1;
            for (std::size_t j = 1; j < c.size(); ++j) {
                d += static_cast<long long>(j) * c[j] * pw;
                pw = pw * static_cast<long long>(r) % static_cast<long long>(p);
            }
            if (((d % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p) == 0)
                ++multiple;
            else
                ++simple;
        }
        bool zero_poly = std::all_of(c.begin(), c.end(), [&](long long v) { return v % static_cast<long long>(p) == 0; });
        if (zero_poly)
            continue;
        auto r = roots_dual_numbers(f, p, 2);
        EXPECT_EQ(r.roots.size(), simple + p * multiple);
        EXPECT_EQ(duals(r), oracle::roots_dual(c, p, 2));
    }
}

TEST(Sections, NodeModels)
{
    auto s0 = singular_section_detect(parse_poly("x*y-z*t", V), 3, 2);
    ASSERT_EQ(s0.size(), 1u);
    EXPECT_EQ(s0[0], (std::vector<std::uint64_t>{0, 0, 0, 0}));
    EXPECT_TRUE(singular_section_detect(parse_poly("x*y-z*t-3", V), 3, 2).empty());
    auto s9 = singular_section_detect(parse_poly("x*y-z*t-9", V), 3, 2);
    ASSERT_EQ(s9.size(), 1u);
    EXPECT_EQ(s9[0], (std::vector<std::uint64_t>{0, 0, 0, 0}));
}

TEST(Sections, AgreeWithBruteForce)
{
    for (long long c : {0, 3, 9, 1}) {
        auto eval = [c](const std::vector<long long>& p) -> std::vector<long long> {
            return {p[0] * p[1] - p[2] * p[3] - c, p[1], p[0], -p[3], -p[2]};
        };
        auto lib = singular_section_detect(parse_poly("x*y-z*t-" + std::to_string(c), V), 3, 2);
        auto ora = oracle::affine_zeros(9, 4, eval);
        std::vector<std::vector<std::uint64_t>> o;
        for (const auto& p : ora)
            o.emplace_back(p.begin(), p.end());
        EXPECT_EQ(lib, o) << c;
    }
    // Clebsch chart t = 1 over Z/25.
    auto f = parse_poly("x^3+y^3+z^3+1-(x+y+z+1)^3", {"x", "y", "z"});
    auto eval = [](const std::vector<long long>& p) -> std::vector<long long> {
        long long s = p[0] + p[1] + p[2] + 1;
        return {p[0] * p[0] * p[0] + p[1] * p[1] * p[1] + p[2] * p[2] * p[2] + 1 - s * s * s,
                3 * p[0] * p[0] - 3 * s * s, 3 * p[1] * p[1] - 3 * s * s, 3 * p[2] * p[2] - 3 * s * s};
    };
    auto lib = singular_section_detect(f, 5, 2);
    EXPECT_TRUE(lib.empty());
    EXPECT_TRUE(oracle::affine_zeros(25, 3, eval).empty());
}
