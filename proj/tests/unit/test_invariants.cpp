#include "nodelift/error.hpp"
#include "nodelift/invariants/invariants.hpp"
#include "nodelift/io/json_io.hpp"

#include <gtest/gtest.h>

using namespace nodelift;
using namespace nodelift::invariants;

namespace {

const std::filesystem::path kData = NODELIFT_DATA_DIR;

LedgerStep points(std::int64_t n) { return {CenterKind::Point, n, 2, ""}; }
LedgerStep curves(std::int64_t n, std::int64_t e = 2) { return {CenterKind::Curve, n, e, ""}; }

} // namespace

TEST(Ledger, Examples)
{
    EXPECT_EQ(euler_blowup_ledger({"ambient", 4, {points(10), curves(40)}}), 104);
    EXPECT_EQ(euler_blowup_ledger({"empty", 4, {}}), 4);
    EXPECT_EQ(euler_blowup_ledger({"branch", 9, {curves(5, 3), curves(10, 2), curves(10, 4), curves(10, 2)}}), 104);
    EXPECT_EQ(9 + 5 * 3 + 5 * 2 * 2 + 10 * 4 + 10 * 2, 104);
}

TEST(Ledger, Composition)
{
    BlowupLedger a{"a", 4, {points(10)}};
    BlowupLedger b{"b", 0, {curves(40)}};
    a.then(b);
    EXPECT_EQ(euler_blowup_ledger(a), 104);
}

TEST(Ledger, BundledFile)
{
    auto lf = io::load_ledgers(io::read_json_file(kData / "ledgers/ledgers.json"));
    ASSERT_FALSE(lf.ledgers.empty());
    for (const auto& l : lf.ledgers) {
        auto it = lf.expected_euler.find(l.label);
        if (it != lf.expected_euler.end())
            EXPECT_EQ(euler_blowup_ledger(l), it->second) << l.label;
    }
    for (const auto& d : lf.double_covers)
        EXPECT_EQ(euler_double_cover(d.base, d.branch), d.expected) << d.label;
    for (const auto& f : lf.fiber_products)
        EXPECT_EQ(euler_fiber_product(f.match), f.expected) << f.label;
    for (const auto& h : lf.hodge_checks)
        EXPECT_EQ(hodge_pair_from_euler(h.e, h.h12).h11, h.h11) << h.label;
}

TEST(Ledger, ArrangementEulerGrowsWithFourfoldPoints)
{
    // Blowing up n fourfold points and the 28 - ... double lines of an octic arrangement.
    auto lf = io::load_ledgers(io::read_json_file(kData / "ledgers/ledgers.json"));
    for (const auto& l : lf.ledgers)
        if (l.label == "86a ambient")
            EXPECT_EQ(euler_blowup_ledger(l), 4 + 10 * 2 + 28 * 2);
}

TEST(DoubleCover, Examples)
{
    EXPECT_EQ(euler_double_cover(104, 104), 104);
    EXPECT_EQ(euler_double_cover(0, 0), 0);
    EXPECT_EQ(euler_double_cover(4, 8), 0);
}

TEST(Hodge, Examples)
{
    EXPECT_EQ(hodge_pair_from_euler(80, 0), (HodgePair{40, 0}));
    EXPECT_EQ(hodge_pair_from_euler(72, 1), (HodgePair{37, 1}));
    EXPECT_EQ(hodge_pair_from_euler(102, 0), (HodgePair{51, 0}));
    EXPECT_EQ(hodge_pair_from_euler(104, 0), (HodgePair{52, 0}));
    EXPECT_EQ(hodge_pair_from_euler(76, 1), (HodgePair{39, 1}));
    EXPECT_EQ(hodge_pair_from_euler(84, 0), (HodgePair{42, 0}));
}

TEST(Hodge, CrossExampleConsistency)
{
    const std::vector<std::array<std::int64_t, 3>> triples = {
        {80, 40, 0}, {72, 37, 1}, {104, 52, 0}, {84, 42, 0}, {102, 51, 0}};
    for (const auto& [e, h11, h12] : triples)
        EXPECT_EQ(e, 2 * (h11 - h12));
}

TEST(Hodge, OddEuler)
{
    try {
        hodge_pair_from_euler(81, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OddEuler);
    }
}

TEST(FiberProduct, Examples)
{
    EXPECT_EQ(euler_fiber_product({{5, 3}, {5, 6}, {1, 6}}), 102);
    EXPECT_EQ(euler_fiber_product({}), 0);
    EXPECT_EQ(euler_fiber_product({{1, 1}}), 2);
}
