#include "oracles.hpp"

#include "nodelift/arrangement/arrangement.hpp"
#include "nodelift/arrangement/incidence_table.hpp"
#include "nodelift/error.hpp"
#include "nodelift/io/json_io.hpp"
#include "nodelift/poly/parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nodelift;
using namespace nodelift::arrangement;

namespace {

const std::filesystem::path kData = NODELIFT_DATA_DIR;
const std::vector<std::string> V = {"x", "y", "z", "t"};

std::vector<MultiPoly> planes_of(std::initializer_list<const char*> texts, const Ring& r = Ring::rationals())
{
    std::vector<MultiPoly> out;
    for (auto s : texts)
        out.push_back(parse_poly(s, V, r));
    return out;
}

std::vector<std::vector<long long>> integer_rows(const std::vector<MultiPoly>& planes)
{
    std::vector<std::vector<long long>> out;
    for (const auto& f : planes) {
        std::vector<long long> row;
        for (const auto& b : primitive_integer_vector(linear_coefficients(f)))
            row.push_back(static_cast<long long>(b));
        out.push_back(row);
    }
    return out;
}

std::size_t oracle_count(const std::vector<std::vector<long long>>& planes, std::uint64_t p, std::size_t q)
{
    std::size_t n = 0;
    for (const auto& [pt, c] : oracle::multiple_points(planes, p))
        n += c == q;
    return n;
}

io::ArrangementInput family(const std::string& instance)
{
    return io::load_arrangement(io::read_json_file(kData / "arrangements/family-5.2.json"), instance);
}

ProjPoint rational_point(std::initializer_list<long long> xs)
{
    Vector v;
    for (auto x : xs)
        v.push_back(Scalar(Rational(x)));
    return ProjPoint(v);
}

} // namespace

TEST(Incidence, Arrangement86a)
{
    auto a = io::load_arrangement(io::read_json_file(kData / "arrangements/arrangement-86a.json"));
    PlaneArrangement arr(a.planes);
    auto rep = incidence_analysis(arr);
    EXPECT_EQ(rep.lines_with_multiplicity(2), 28u);
    EXPECT_EQ(rep.lines.size(), 28u);
    EXPECT_EQ(rep.points_with_q(4), 10u);
    for (const auto& p : rep.points)
        if (p.q() == 4) {
            EXPECT_EQ(p.r, 0u);
            EXPECT_EQ(p.type(), "p_4^0");
        }
    auto rows = integer_rows(a.planes);
    EXPECT_EQ(oracle_count(rows, 0, 4), 10u);
    EXPECT_EQ(oracle_count(rows, 0, 3), rep.points_with_q(3));
    EXPECT_EQ(oracle::lines_of_multiplicity(rows, 0, 2), 28u);

    auto mod3 = incidence_analysis(arr.reduce(3));
    EXPECT_EQ(mod3.points_with_q(4), 11u);
    EXPECT_EQ(oracle_count(rows, 3, 4), 11u);
}

TEST(Incidence, ParallelMatchesSerial)
{
    auto a = io::load_arrangement(io::read_json_file(kData / "arrangements/arrangement-86a.json"));
    PlaneArrangement arr(a.planes);
    auto s = incidence_analysis(arr, 1);
    auto p = incidence_analysis(arr, 4);
    ASSERT_EQ(s.points.size(), p.points.size());
    for (std::size_t i = 0; i < s.points.size(); ++i)
        EXPECT_EQ(s.points[i].point, p.points[i].point);
    EXPECT_EQ(io::dump(io::incidence_report_to_json(s, "a")), io::dump(io::incidence_report_to_json(p, "a")));
}

TEST(Reduction, Arrangement86a)
{
    auto a = io::load_arrangement(io::read_json_file(kData / "arrangements/arrangement-86a.json"));
    PlaneArrangement arr(a.planes);
    auto d3 = compare_reduction(arr, 3);
    auto gained = d3.gained_points(4);
    ASSERT_EQ(gained.size(), 1u);
    EXPECT_EQ(gained[0], reduce_point(rational_point({-1, -1, -1, 1}), 3));
    EXPECT_FALSE(d3.empty());
    EXPECT_TRUE(compare_reduction(arr, 7).empty());
}

TEST(Reduction, GoodPrimesGiveEmptyDiff)
{
    auto a = io::load_arrangement(io::read_json_file(kData / "arrangements/arrangement-86a.json"));
    PlaneArrangement arr(a.planes);
    for (std::uint64_t p : {11, 13, 17, 19, 23})
        EXPECT_TRUE(compare_reduction(arr, p).empty()) << p;
}

TEST(Reduction, PlaneCollapse)
{
    PlaneArrangement arr(planes_of({"x", "y", "z", "t", "x+3*y"}));
    try {
        compare_reduction(arr, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PlaneCollapse);
    }
}

TEST(Arrangement, DegenerateInput)
{
    try {
        PlaneArrangement arr(planes_of({"x", "y", "2*x"}));
        incidence_analysis(arr);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateArrangement);
    }
}

TEST(Family, GenericInstancesMatchTheClaims)
{
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"general", 7}, {"sum-minus-one", 8}, {"product-equals-sum", 8}, {"both-F5", 9}, {"both-golden", 9}};
    for (const auto& [inst, want] : cases) {
        auto a = family(inst);
        auto n = incidence_analysis(PlaneArrangement(a.planes)).points_with_q(4);
        EXPECT_EQ(n, want) << inst;
    }
}

TEST(Family, CountsAgreeWithOracleOverQ)
{
    auto j = io::read_json_file(kData / "arrangements/family-5.2.json");
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"1", "1"}, {"1", "-2"}, {"2", "3"}, {"2", "-3"}, {"3", "3/2"}, {"5", "7"}, {"-4", "3"}}) {
        auto in = io::load_arrangement(j, {}, {{"A", a}, {"B", b}});
        auto rep = incidence_analysis(PlaneArrangement(in.planes));
        auto rows = integer_rows(in.planes);
        EXPECT_EQ(rep.points_with_q(4), oracle_count(rows, 0, 4)) << a << "," << b;
        EXPECT_EQ(rep.points_with_q(3), oracle_count(rows, 0, 3)) << a << "," << b;
    }
}

TEST(Family, LiteralUnitParametersAreNonGeneric)
{
    // A = 1 puts (1,1,-1,1) on x+y+Az-At, so the pair (1,1) is not a general member.
    auto j = io::read_json_file(kData / "arrangements/family-5.2.json");
    auto in = io::load_arrangement(j, "listed-1-1");
    auto rep = incidence_analysis(PlaneArrangement(in.planes));
    EXPECT_EQ(rep.points_with_q(4), 10u);
    EXPECT_EQ(rep.points_with_q(4), oracle_count(integer_rows(in.planes), 0, 4));
    for (auto c : {rational_point({1, 0, 0, 0}), rational_point({0, 1, 0, 0}), rational_point({0, 0, 1, 0})}) {
        auto* p = rep.find(c);
        ASSERT_NE(p, nullptr);
        EXPECT_EQ(p->q(), 4u);
    }
}

TEST(Family, RandomParametersAgreeWithOracleModP)
{
    std::mt19937_64 rng(5);
    auto j = io::read_json_file(kData / "arrangements/family-5.2.json");
    for (int i = 0; i < 20; ++i) {
        std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11, 13}[rng() % 4];
        std::string a = std::to_string(static_cast<int>(rng() % p) + 1);
        std::string b = std::to_string(static_cast<int>(rng() % p) + 1);
        auto in = io::load_arrangement(j, {}, {{"A", a}, {"B", b}});
        auto rows = integer_rows(in.planes);
        try {
            auto red = PlaneArrangement(in.planes).reduce(p);
            EXPECT_EQ(incidence_analysis(red).points_with_q(4), oracle_count(rows, p, 4)) << a << "," << b << " p=" << p;
        } catch (const Error& e) {
            EXPECT_TRUE(e.code() == ErrorCode::PlaneCollapse || e.code() == ErrorCode::DegenerateArrangement);
        }
    }
}

TEST(Forms, Examples)
{
    ProjLine l(linear_coefficients(parse_poly("x+y", V)), linear_coefficients(parse_poly("z+t", V)));
    auto one = forms_vanishing_on_lines(1, {l}, Ring::rationals());
    EXPECT_EQ(one.dimension(), 2u);
    auto forms = one.forms(V);
    Matrix rows = one.basis;
    for (const char* g : {"x+y", "z+t"}) {
        Vector v;
        auto f = parse_poly(g, V);
        for (const auto& m : one.monomials)
            v.push_back(f.coefficient(m));
        rows.push_back(v);
    }
    EXPECT_EQ(rank(rows, Ring::rationals(), one.monomials.size()), 2u);

    EXPECT_EQ(forms_vanishing_on_lines(3, {}, Ring::rationals()).dimension(), 20u);
}

TEST(Forms, CubicsThroughClebschLines)
{
    auto t = io::load_incidence_table(io::read_json_file(kData / "tables/clebsch-incidence.json"));
    std::vector<ProjLine> lines;
    std::vector<std::array<oracle::QVec, 2>> olines;
    auto qv = [](const Vector& v) {
        oracle::QVec out;
        for (const auto& s : v)
            out.emplace_back(s.as<Rational>().num(), s.as<Rational>().den());
        return out;
    };
    for (const auto& l : t.lines) {
        if (l.name[0] == 'n')
            continue;
        auto a = linear_coefficients(l.equations[0]), b = linear_coefficients(l.equations[1]);
        lines.emplace_back(a, b);
        olines.push_back({qv(a), qv(b)});
    }
    ASSERT_EQ(lines.size(), 10u);
    auto space = forms_vanishing_on_lines(3, lines, Ring::rationals());
    EXPECT_EQ(space.dimension(), oracle::cubic_forms_on_lines(olines));
    ASSERT_EQ(space.dimension(), 1u);
    auto clebsch = parse_poly("x^3+y^3+z^3+t^3-(x+y+z+t)^3", V);
    Matrix rows = space.basis;
    Vector cv;
    for (const auto& m : space.monomials)
        cv.push_back(clebsch.coefficient(m));
    rows.push_back(cv);
    EXPECT_EQ(rank(rows, Ring::rationals(), space.monomials.size()), 1u);
}

TEST(IncidenceTable, ClebschTableViolations)
{
    auto t = io::load_incidence_table(io::read_json_file(kData / "tables/clebsch-incidence.json"));
    auto v = verify_incidence_table(t);
    std::set<std::pair<std::string, std::string>> cells;
    std::size_t duplicates = 0;
    for (const auto& x : v) {
        cells.insert({x.row, x.entry});
        duplicates += x.kind == ViolationKind::DuplicateEntry;
    }
    EXPECT_EQ(duplicates, 1u);
    EXPECT_TRUE(cells.count({"n4", "B2"}));
    EXPECT_TRUE(cells.count({"l5", "B3"}) || cells.count({"B3", "l3"}));
    for (const auto& x : v) {
        EXPECT_NE(x.table, "surface_contains_lines");
        EXPECT_NE(x.table, "surface_contains_points");
    }
}

TEST(IncidenceTable, TrivialCases)
{
    IncidenceTable t;
    t.variables = V;
    t.points.push_back({"P", rational_point({0, 1, 0, 0}).coords()});
    t.lines.push_back({"L", planes_of({"x", "z"})});
    t.line_contains_points.push_back({"L", {"P"}});
    EXPECT_TRUE(verify_incidence_table(t).empty());

    IncidenceTable bad;
    bad.variables = V;
    bad.points.push_back({"P", rational_point({1, 0, 0, 0}).coords()});
    bad.lines.push_back({"L", planes_of({"x", "z"})});
    bad.line_contains_points.push_back({"L", {"P"}});
    auto v = verify_incidence_table(bad);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, ViolationKind::NotIncident);
}
