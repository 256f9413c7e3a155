#include "oracles.hpp"
#include "properties.hpp"

#include "nodelift/error.hpp"
#include "nodelift/io/json_io.hpp"
#include "nodelift/poly/parser.hpp"
#include "nodelift/singscan/blowup.hpp"
#include "nodelift/singscan/scan.hpp"
#include "nodelift/singscan/tjurina.hpp"

#include <gtest/gtest.h>

using namespace nodelift;
using namespace nodelift::singscan;

namespace {

const std::filesystem::path kData = NODELIFT_DATA_DIR;
const std::vector<std::string> V = {"x", "y", "z", "t"};

MultiPoly P(const std::string& s, const Ring& r = Ring::rationals()) { return parse_poly(s, V, r); }

std::vector<std::vector<std::uint64_t>> points_of(const std::vector<SingularPointRecord>& recs)
{
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& r : recs)
        out.push_back(r.point);
    return out;
}

std::vector<std::vector<std::uint64_t>> as_u64(const std::vector<std::vector<long long>>& pts)
{
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& p : pts)
        out.emplace_back(p.begin(), p.end());
    return out;
}

long long clebsch_i(const std::vector<long long>& p)
{
    long long s = p[0] + p[1] + p[2] + p[3];
    return p[0] * p[0] * p[0] + p[1] * p[1] * p[1] + p[2] * p[2] * p[2] + p[3] * p[3] * p[3] - s * s * s;
}

std::vector<long long> clebsch_system(const std::vector<long long>& p)
{
    long long s = p[0] + p[1] + p[2] + p[3];
    std::vector<long long> out = {clebsch_i(p)};
    for (int i = 0; i < 4; ++i)
        out.push_back(3 * p[i] * p[i] - 3 * s * s);
    return out;
}

} // namespace

TEST(ProjectivePoints, Counts)
{
    EXPECT_EQ(enumerate_projective_points(5, 3).size(), 156u);
    EXPECT_EQ(enumerate_projective_points(3, 3).size(), 40u);
    auto p1 = enumerate_projective_points(2, 1);
    ASSERT_EQ(p1.size(), 3u);
    try {
        enumerate_projective_points(101, 3, 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeGuard);
    }
}

TEST(Hypersurface, ClebschModFiveAndSeven)
{
    auto c = P("x^3+y^3+z^3+t^3-(x+y+z+t)^3");
    auto s5 = singular_locus_hypersurface(c.map_coefficients(Ring::prime_field(5)));
    ASSERT_EQ(s5.size(), 1u);
    EXPECT_EQ(s5[0].point, (std::vector<std::uint64_t>{1, 1, 1, 1}));
    EXPECT_EQ(s5[0].classification, NodeClass::Node);
    EXPECT_EQ(s5[0].hessian_rank, 3u);
    EXPECT_EQ(points_of(s5), as_u64(oracle::projective_zeros(5, 3, clebsch_system)));

    auto s7 = singular_locus_hypersurface(c.map_coefficients(Ring::prime_field(7)));
    EXPECT_TRUE(s7.empty());
    EXPECT_TRUE(oracle::projective_zeros(7, 3, clebsch_system).empty());
}

TEST(Hypersurface, ClebschAgreesWithOracleAcrossPrimes)
{
    auto c = P("x^3+y^3+z^3+t^3-(x+y+z+t)^3");
    for (std::uint64_t p : {11, 13, 17}) {
        auto s = singular_locus_hypersurface(c.map_coefficients(Ring::prime_field(p)));
        EXPECT_EQ(points_of(s), as_u64(oracle::projective_zeros(p, 3, clebsch_system))) << p;
    }
}

TEST(Hypersurface, SmoothQuadric)
{
    EXPECT_TRUE(singular_locus_hypersurface(P("x^2+y^2+z^2+t^2", Ring::prime_field(7))).empty());
}

TEST(Hypersurface, ParallelMatchesSerial)
{
    auto c = P("x^3+y^3+z^3+t^3-(x+y+z+t)^3", Ring::prime_field(5));
    ScanOptions four;
    four.jobs = 4;
    EXPECT_EQ(singular_locus_hypersurface(c), singular_locus_hypersurface(c, four));
}

TEST(Hypersurface, CharacteristicTwoIsNotClassified)
{
    auto s = singular_locus_hypersurface(P("x*y+z*t", Ring::prime_field(2)));
    for (const auto& r : s)
        EXPECT_EQ(r.classification, NodeClass::NotApplicable);
}

TEST(Hypersurface, Gl4Covariance)
{
    auto o = props::gl4_covariance(50, 6);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Chart, BlowupChartOfThe86aArrangement)
{
    auto chart = io::load_chart(io::read_json_file(kData / "charts/86a-blowup-chart.json"), Ring::rationals());
    auto eval = [](const std::vector<long long>& p) -> std::vector<long long> {
        long long x = p[0], y = p[1], z = p[2], v = p[3];
        return {(v - 1) * z - x * (y + 1) + 3, -(y + 1), -x, v - 1, z};
    };
    auto f3 = singular_locus_chart(chart.over(Ring::prime_field(3)));
    ASSERT_EQ(f3.size(), 1u);
    EXPECT_EQ(f3[0].point, (std::vector<std::uint64_t>{0, 2, 0, 1}));
    EXPECT_EQ(f3[0].classification, NodeClass::Node);
    EXPECT_EQ(f3[0].hessian_rank, 4u);
    EXPECT_EQ(points_of(f3), as_u64(oracle::affine_zeros(3, 4, eval)));
    for (std::uint64_t p : {5, 7}) {
        auto fp = singular_locus_chart(chart.over(Ring::prime_field(p)));
        EXPECT_TRUE(fp.empty());
        EXPECT_EQ(points_of(fp), as_u64(oracle::affine_zeros(p, 4, eval)));
    }
}

TEST(Chart, SmallResolutionChartIsSmooth)
{
    std::vector<std::string> W = {"y", "t", "u"};
    AffineChart c{W, {parse_poly("y-u*t", W, Ring::prime_field(3))}, ""};
    EXPECT_TRUE(singular_locus_chart(c).empty());
}

TEST(Blowup, NodeAlongPlane)
{
    std::vector<std::string> W = {"x", "y", "z", "t"};
    auto f = parse_poly("x*y-z*t", W);
    auto b = blowup_charts({f}, parse_poly("x", W), parse_poly("z", W), {"u", "v"});
    // chart v: x = v z
    ASSERT_EQ(b.v.transforms.size(), 1u);
    const auto& tv = b.v.transforms[0];
    EXPECT_EQ(tv.exceptional_exponent, 1u);
    auto vars_v = tv.strict.vars();
    EXPECT_EQ(tv.strict, parse_poly("v*y-t", vars_v));
    EXPECT_EQ(tv.total, parse_poly("z*(v*y-t)", vars_v));
    // chart u: z = u x
    const auto& tu = b.u.transforms[0];
    EXPECT_EQ(tu.exceptional_exponent, 1u);
    EXPECT_EQ(tu.strict, parse_poly("y-u*t", tu.strict.vars()));
    EXPECT_FALSE(b.u.unit_ideal);
}

TEST(Blowup, CenterContainingTheDivisor)
{
    auto b = blowup_charts({P("x")}, P("x"), P("z"));
    EXPECT_TRUE(b.u.unit_ideal);
    EXPECT_FALSE(b.v.unit_ideal);
}

TEST(Blowup, ProportionalCenter)
{
    try {
        blowup_charts({P("x*y-z*t")}, P("x+y"), P("2*x+2*y"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ProportionalCenter);
    }
}

TEST(Blowup, PipelineReproducesThe86aChart)
{
    std::vector<std::string> W = {"x", "y", "z"};
    std::vector<BlowupStep> steps = {
        {parse_poly("x", W), parse_poly("y", W), {"y", "x"}, true},
        {parse_poly("z", W), parse_poly("x+y+z-3", W), {"v", "w"}, true},
    };
    // Blow-up of the ambient space itself: the chart is cut out by the graph equation.
    auto out = blowup_pipeline({}, steps);
    ASSERT_EQ(out.size(), 2u);
    const auto& chart = out[1].u.chart;
    ASSERT_FALSE(chart.equations.empty());
    auto g = chart.equations.back();
    auto expected = parse_poly("(v-1)*z-x*(y+1)+3", g.vars());
    bool match = g == expected || g == -expected;
    for (const auto& e : chart.equations)
        match = match || e == expected || e == -expected;
    EXPECT_TRUE(match) << g.to_string();
    auto nodes = singular_locus_chart(chart.over(Ring::prime_field(3)));
    ASSERT_EQ(nodes.size(), 1u);
    EXPECT_EQ(nodes[0].classification, NodeClass::Node);
}

TEST(Tjurina, Examples)
{
    auto t = tjurina_dimension(P("x*y-z*t"), 2);
    EXPECT_EQ(t.truncated_dimension, 1u);
    EXPECT_TRUE(t.stabilized);
    EXPECT_EQ(tjurina_number(P("x+y^2+z^3"), 5).truncated_dimension, 0u);
    auto a2 = tjurina_number(P("x^2+y^3+z^2+t^2"), 6);
    EXPECT_TRUE(a2.stabilized);
    EXPECT_EQ(a2.truncated_dimension, 2u);
}

TEST(Tjurina, WeightedHomogeneousAgreesWithMilnorFormula)
{
    // Tjurina and Milnor numbers agree for sums of powers.
    const std::vector<std::vector<unsigned>> exps = {{2, 2, 2, 2}, {2, 3, 2, 2}, {3, 3, 2, 2}, {2, 4, 2, 2},
                                                     {3, 4, 2, 2}, {2, 5, 2, 2}, {3, 3, 3, 2}};
    for (const auto& e : exps) {
        std::string s;
        for (std::size_t i = 0; i < 4; ++i)
            s += (i ? "+" : "") + V[i] + "^" + std::to_string(e[i]);
        auto t = tjurina_number(P(s), 10);
        ASSERT_TRUE(t.stabilized) << s;
        EXPECT_EQ(t.truncated_dimension, oracle::brieskorn_milnor(e)) << s;
    }
}

TEST(Tjurina, StableOnceFinite)
{
    auto f = P("x^2+y^3+z^2+t^2");
    auto t = tjurina_dimension(f, 3);
    ASSERT_TRUE(t.stabilized);
    for (std::uint32_t d = 4; d <= 7; ++d) {
        auto u = tjurina_dimension(f, d);
        EXPECT_TRUE(u.stabilized);
        EXPECT_EQ(u.truncated_dimension, t.truncated_dimension);
    }
}

TEST(Tjurina, UnboundedBelowTheDeterminacyDegree)
{
    EXPECT_FALSE(tjurina_dimension(P("x^2+y^5+z^2+t^2"), 2).stabilized);
}
