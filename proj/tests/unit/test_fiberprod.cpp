#include "oracles.hpp"
#include "properties.hpp"

#include "nodelift/error.hpp"
#include "nodelift/fiberprod/fiberprod.hpp"
#include "nodelift/io/json_io.hpp"

#include <gtest/gtest.h>

using namespace nodelift;
using namespace nodelift::fiberprod;

namespace {

const std::filesystem::path kData = NODELIFT_DATA_DIR;

std::vector<std::string> strings(const std::vector<Residue>& rs)
{
    std::vector<std::string> out;
    for (const auto& r : rs)
        out.push_back(r.to_string());
    return out;
}

std::vector<std::uint64_t> primes_of(const CoincidenceReport& r)
{
    std::vector<std::uint64_t> out;
    for (const auto& c : r.primes)
        out.push_back(c.p);
    return out;
}

oracle::Position to_oracle(const Position& x)
{
    oracle::Position o;
    if (x.is_infinity()) {
        o.infinite = true;
        return o;
    }
    if (x.kind() == Position::Kind::Surd) {
        o.a = oracle::Q(x.surd_value().a().num(), x.surd_value().a().den());
        o.b = oracle::Q(x.surd_value().b().num(), x.surd_value().b().den());
        o.d = x.surd_value().d();
    } else {
        o.a = oracle::Q(x.value().num(), x.value().den());
    }
    return o;
}

const char* kGolden = "-123/2+55/2*sqrt5";

} // namespace

TEST(ReducePosition, Examples)
{
    auto g = Position::parse(kGolden);
    EXPECT_EQ(strings(reduce_position(g, 29)), (std::vector<std::string>{"9", "13"}));
    EXPECT_EQ(strings(reduce_position(Position::parse("8/9"), 73)), (std::vector<std::string>{"9"}));
    auto inf = reduce_position(Position::parse("8/9"), 3);
    ASSERT_EQ(inf.size(), 1u);
    EXPECT_TRUE(inf[0].infinite);
}

TEST(ReducePosition, AgreesWithOracle)
{
    for (const char* s : {kGolden, "8/9", "9", "-8", "-1", "1", "2", "1/2", "-1/2+1/2*sqrt5", "inf"}) {
        auto x = Position::parse(s);
        for (auto p : oracle::primes_up_to(200)) {
            if (p == 2)
                continue;
            std::set<std::string> lib;
            for (const auto& r : reduce_position(x, p))
                lib.insert(r.to_string());
            EXPECT_EQ(lib, oracle::reductions(to_oracle(x), p)) << s << " mod " << p;
        }
    }
}

TEST(Coincidence, Examples)
{
    auto g = Position::parse(kGolden);
    auto a = coincidence_primes(g, Position::parse("8/9"), 100000);
    EXPECT_EQ(primes_of(a), (std::vector<std::uint64_t>{9001}));
    EXPECT_TRUE(a.complete());
    EXPECT_EQ(a.admissible_primes(), (std::vector<std::uint64_t>{9001}));

    EXPECT_EQ(primes_of(coincidence_primes(g, Position::parse("9"), 1000)), (std::vector<std::uint64_t>{29, 41}));

    auto c = coincidence_primes(Position::parse("8/9"), Position::parse("1/2"), 100);
    ASSERT_EQ(primes_of(c), (std::vector<std::uint64_t>{7}));
    EXPECT_EQ(strings(c.primes[0].residues), (std::vector<std::string>{"4"}));

    auto d = coincidence_primes(Position::parse("-1"), Position::parse("2"), 10);
    ASSERT_EQ(primes_of(d), (std::vector<std::uint64_t>{3}));
    EXPECT_EQ(strings(d.primes[0].residues), (std::vector<std::string>{"2"}));
    EXPECT_TRUE(d.primes[0].admissible());

    EXPECT_EQ(primes_of(coincidence_primes(Position::parse("9"), Position::parse("-8"), 20)),
              (std::vector<std::uint64_t>{17}));
}

TEST(Coincidence, EqualPositions)
{
    try {
        coincidence_primes(Position::parse("1/2"), Position::parse("2/4"), 100);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EqualPositions);
    }
}

TEST(Coincidence, BruteForceOracleUpToOneThousand)
{
    const std::vector<const char*> pos = {kGolden, "8/9", "9", "-8", "-1", "2", "1/2", "-1/2+1/2*sqrt5", "inf", "3/7"};
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j) {
            auto x = Position::parse(pos[i]), y = Position::parse(pos[j]);
            auto rep = coincidence_primes(x, y, 1000);
            std::set<std::uint64_t> lib;
            for (const auto& c : rep.primes)
                if (c.p <= 1000)
                    lib.insert(c.p);
            std::set<std::uint64_t> ora;
            for (auto p : oracle::primes_up_to(1000)) {
                if (p == 2)
                    continue;
                if (oracle::positions_meet(to_oracle(x), to_oracle(y), p))
                    ora.insert(p);
            }
            EXPECT_EQ(lib, ora) << pos[i] << " vs " << pos[j];
        }
}

TEST(Coincidence, GaloisSymmetry)
{
    auto o = props::galois_symmetry(500, 17);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Coincidence, ReductionHomomorphism)
{
    auto o = props::reduction_homomorphism(1000, 18);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(PrimeTable, BundledCatalogue)
{
    auto cat = io::load_catalogue(io::read_json_file(kData / "tables/beauville.json"));
    auto t = build_prime_table(cat, 100000);
    const std::vector<std::uint64_t> expected = {3, 5, 7, 11, 17, 29, 41, 73, 251, 919, 9001};
    auto all = t.all_union();
    for (auto p : expected)
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), p)) << p;
    EXPECT_EQ(all, expected);
    for (const auto& row : t.rows)
        EXPECT_TRUE(row.report.complete());
}

TEST(PrimeTable, ParallelMatchesSerial)
{
    auto cat = io::load_catalogue(io::read_json_file(kData / "tables/beauville.json"));
    EXPECT_EQ(io::dump(io::prime_table_to_json(build_prime_table(cat, 100000, 1))),
              io::dump(io::prime_table_to_json(build_prime_table(cat, 100000, 4))));
}

TEST(PrimeTable, SingleSurfaceGivesEmptyTable)
{
    Catalogue cat;
    BeauvilleSurface s;
    s.label = "one";
    s.fibers = {{Position::infinity(), 1}, {Position::parse("0"), 1}, {Position::parse("1"), 1},
                {Position::parse("9"), 1}};
    cat.surfaces.push_back(s);
    EXPECT_TRUE(build_prime_table(cat, 1000).rows.empty());
}

TEST(Catalogue, IssuesAreReported)
{
    auto cat = io::load_catalogue(io::read_json_file(kData / "tables/beauville.json"));
    std::size_t flagged = 0;
    for (const auto& s : cat.surfaces)
        flagged += !s.issues().empty();
    EXPECT_GE(flagged, 1u);
}
