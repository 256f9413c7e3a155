#include "nodelift/certify/certify.hpp"

#include "nodelift/error.hpp"
#include "nodelift/poly/parser.hpp"

#include <array>

namespace nodelift::certify {

namespace {

constexpr std::array<Hypothesis, 4> kAll = {Hypothesis::OnlyNodes, Hypothesis::SmoothInCharZero, Hypothesis::Rigid,
                                            Hypothesis::NoSingularSection};

Hypothesis hypothesis_from_label(const std::string& s)
{
    for (auto h : kAll)
        if (label(h) == s)
            return h;
    throw Error(ErrorCode::BadInput, "unknown hypothesis '" + s + "'");
}

// Status of a single report for a hypothesis, with a one-line reason.
std::pair<Status, std::string> judge(Hypothesis h, std::uint64_t p, const io::Json& r)
{
    std::string kind = r.value("kind", "");
    if (kind == "assertion")
        return {Status::Asserted, r.value("claim", "") + " (" + r.value("citation", "") + ")"};
    switch (h) {
    case Hypothesis::OnlyNodes: {
        if (kind != "scan-report")
            break;
        auto s = io::scan_report_from_json(r);
        if (s.ring.p() != p || s.ring.k() != 1)
            return {Status::Failed, "scan is not over F_" + std::to_string(p)};
        if (s.records.empty())
            return {Status::Failed, "no singular point over " + s.ring.describe()};
        for (const auto& rec : s.records)
            if (rec.classification != singscan::NodeClass::Node)
                return {Status::Failed, "non-node singular point over " + s.ring.describe()};
        return {Status::Verified, std::to_string(s.records.size()) + " node(s) over " + s.ring.describe()};
    }
    case Hypothesis::SmoothInCharZero: {
        if (kind == "reduction-diff") {
            auto d = io::diff_summary_from_json(r);
            if (d.p != p)
                return {Status::Failed, "reduction diff is at another prime"};
            if (d.gained_points.empty())
                return {Status::Failed, "no fourfold point appears only mod " + std::to_string(p)};
            return {Status::Verified, std::to_string(d.gained_points.size()) + " fourfold point(s) exist only mod " +
                                          std::to_string(p)};
        }
        if (kind == "scan-report") {
            auto s = io::scan_report_from_json(r);
            if (s.ring.p() == p)
                return {Status::Failed, "scan at the special prime says nothing about characteristic 0"};
            if (!s.records.empty())
                return {Status::Failed, "singular points over " + s.ring.describe()};
            return {Status::Verified, "no singular rational point over " + s.ring.describe()};
        }
        break;
    }
    case Hypothesis::Rigid:
        break;
    case Hypothesis::NoSingularSection: {
        if (kind != "singular-sections")
            break;
        auto s = io::section_report_from_json(r);
        if (s.ring.p() != p || s.ring.k() != 2)
            return {Status::Failed, "sections are not over Z/" + std::to_string(p * p)};
        if (!s.points.empty())
            return {Status::Failed, std::to_string(s.points.size()) + " singular section(s) over " + s.ring.describe()};
        return {Status::Verified, "no singular section of " + s.poly + " over " + s.ring.describe()};
    }
    }
    return {Status::Failed, "report kind '" + kind + "' does not bear on hypothesis " + label(h)};
}

io::Json run_diff(const io::ArrangementInput& a, std::uint64_t p, unsigned jobs)
{
    arrangement::PlaneArrangement arr(a.planes);
    return io::reduction_diff_to_json(arrangement::compare_reduction(arr, p, jobs), a.name);
}

io::Json run_chart_scan(const singscan::AffineChart& chart, std::uint64_t p, unsigned jobs)
{
    Ring r = Ring::prime_field(p);
    singscan::ScanOptions opts;
    opts.jobs = jobs;
    return io::scan_report_to_json(singscan::singular_locus_chart(chart.over(r), opts), r, "chart", chart.provenance);
}

io::Json run_hypersurface_scan(const MultiPoly& f, std::uint64_t p, const std::string& source, unsigned jobs)
{
    Ring r = Ring::prime_field(p);
    singscan::ScanOptions opts;
    opts.jobs = jobs;
    return io::scan_report_to_json(singscan::singular_locus_hypersurface(f.map_coefficients(r), opts), r,
                                   "hypersurface", source);
}

io::Json run_sections(const MultiPoly& f, std::uint64_t p, unsigned jobs)
{
    singscan::ScanOptions opts;
    opts.jobs = jobs;
    return io::section_report_to_json(lifting::singular_section_detect(f, p, 2, opts), Ring::modular(p, 2),
                                      f.to_string());
}

} // namespace

std::string to_string(Hypothesis h)
{
    switch (h) {
    case Hypothesis::OnlyNodes:
        return "special fibre acquires only nodes mod p";
    case Hypothesis::SmoothInCharZero:
        return "nodes absent in characteristic 0";
    case Hypothesis::Rigid:
        return "rigidity (h12 = 0)";
    case Hypothesis::NoSingularSection:
        return "no singular section at level p^2";
    }
    return {};
}

std::string label(Hypothesis h)
{
    return std::string(1, static_cast<char>('a' + static_cast<int>(h)));
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::Verified:
        return "verified-computationally";
    case Status::Asserted:
        return "asserted-from-paper";
    case Status::Failed:
        return "failed";
    }
    return {};
}

EvidenceItem assertion(Hypothesis h, const std::string& claim, const std::string& citation)
{
    return {h, "assertion", io::Json{{"kind", "assertion"}, {"claim", claim}, {"citation", citation}}};
}

EvidenceBundle assemble_certificate(const std::string& identifier, std::uint64_t p,
                                    const std::vector<EvidenceItem>& items)
{
    if (items.empty())
        throw Error(ErrorCode::MissingEvidence, "no evidence supplied for " + identifier);
    EvidenceBundle b;
    b.identifier = identifier;
    b.p = p;
    bool all_good = true;
    for (auto h : kAll) {
        Check c;
        c.hypothesis = h;
        bool any = false;
        bool failed = false;
        bool asserted = false;
        std::string detail;
        for (const auto& it : items) {
            if (it.hypothesis != h)
                continue;
            any = true;
            auto [st, why] = judge(h, p, it.report);
            failed |= st == Status::Failed;
            asserted |= st == Status::Asserted;
            c.sources.push_back(it.source);
            if (!detail.empty())
                detail += "; ";
            detail += why;
        }
        if (!any)
            throw Error(ErrorCode::MissingEvidence, "no evidence for hypothesis (" + label(h) + ") " + to_string(h));
        c.status = failed ? Status::Failed : asserted ? Status::Asserted : Status::Verified;
        c.detail = detail;
        all_good &= !failed;
        b.checks.push_back(c);
    }
    b.verdict = all_good ? "evidence-complete" : "evidence-incomplete";
    return b;
}

io::Json certificate_to_json(const EvidenceBundle& b)
{
    io::Json checks = io::Json::array();
    for (const auto& c : b.checks)
        checks.push_back(io::Json{{"hypothesis", label(c.hypothesis)},
                                  {"statement", to_string(c.hypothesis)},
                                  {"status", to_string(c.status)},
                                  {"sources", c.sources},
                                  {"detail", c.detail}});
    return io::Json{{"kind", "certificate"}, {"identifier", b.identifier}, {"p", b.p}, {"checks", checks},
                    {"verdict", b.verdict}};
}

EvidenceBundle certificate_from_manifest(const std::filesystem::path& manifest)
{
    io::Json m = io::read_json_file(manifest);
    if (!m.contains("identifier") || !m.contains("p") || !m.contains("evidence"))
        throw Error(ErrorCode::BadInput, "manifest needs identifier, p and evidence");
    std::vector<EvidenceItem> items;
    for (const auto& e : m.at("evidence")) {
        Hypothesis h = hypothesis_from_label(e.value("hypothesis", ""));
        if (e.contains("assertion")) {
            items.push_back(assertion(h, e.at("assertion").get<std::string>(), e.value("citation", "")));
            continue;
        }
        std::filesystem::path rp = e.value("report", "");
        if (rp.empty())
            throw Error(ErrorCode::BadInput, "evidence entry has neither report nor assertion");
        if (rp.is_relative())
            rp = manifest.parent_path() / rp;
        if (!std::filesystem::exists(rp))
            throw Error(ErrorCode::MissingEvidence, "report not found: " + rp.string());
        items.push_back({h, rp.string(), io::read_json_file(rp)});
    }
    return assemble_certificate(m.at("identifier").get<std::string>(), m.at("p").get<std::uint64_t>(), items);
}

std::vector<EvidenceItem> pipeline_86a(const std::filesystem::path& data_dir, unsigned jobs)
{
    auto arr = io::load_arrangement(io::read_json_file(data_dir / "arrangements" / "arrangement-86a.json"));
    auto chart_json = io::read_json_file(data_dir / "charts" / "86a-blowup-chart.json");
    auto chart = io::load_chart(chart_json, Ring::rationals());
    std::string chart_file = "charts/86a-blowup-chart.json";
    std::vector<EvidenceItem> items;
    items.push_back({Hypothesis::OnlyNodes, "scan chart --chart " + chart_file + " --prime 3",
                     run_chart_scan(chart, 3, jobs)});
    items.push_back({Hypothesis::SmoothInCharZero, "arrangement compare --input arrangements/arrangement-86a.json --prime 3",
                     run_diff(arr, 3, jobs)});
    items.push_back({Hypothesis::SmoothInCharZero, "scan chart --chart " + chart_file + " --prime 5",
                     run_chart_scan(chart, 5, jobs)});
    items.push_back(assertion(Hypothesis::Rigid, "h11 = 42, h12 = 0 for the resolved double octic",
                              "arrangement 86a, rigidity of the special fibre"));
    items.push_back({Hypothesis::NoSingularSection, "lift section --chart " + chart_file + " --prime 3 --order 2",
                     run_sections(chart.equations.front(), 3, jobs)});
    return items;
}

std::vector<EvidenceItem> pipeline_clebsch(const std::filesystem::path& data_dir, unsigned jobs)
{
    auto arr = io::load_arrangement(io::read_json_file(data_dir / "arrangements" / "clebsch-pentagon.json"));
    const arrangement::NamedSurface* cubic = nullptr;
    for (const auto& s : arr.surfaces)
        if (s.name == "clebsch")
            cubic = &s;
    if (!cubic)
        throw Error(ErrorCode::MissingEvidence, "clebsch-pentagon.json lacks the clebsch surface");
    const MultiPoly& f = cubic->equation;
    std::string src = "scan hypersurface --input arrangements/clebsch-pentagon.json --surface clebsch";
    std::vector<EvidenceItem> items;
    items.push_back({Hypothesis::OnlyNodes, src + " --prime 5", run_hypersurface_scan(f, 5, "clebsch", jobs)});
    items.push_back({Hypothesis::SmoothInCharZero, src + " --prime 7", run_hypersurface_scan(f, 7, "clebsch", jobs)});
    items.push_back(assertion(Hypothesis::Rigid, "the resolved Clebsch double cover has h12 = 0",
                              "Clebsch arrangement, rigidity of X"));
    // Affine chart t = 1 around the node (1,1,1,1).
    std::vector<std::string> xyz(f.vars().begin(), f.vars().end() - 1);
    std::map<std::string, MultiPoly> at_t1;
    for (const auto& v : xyz)
        at_t1[v] = MultiPoly::variable(xyz, f.ring(), v);
    at_t1[f.vars().back()] = MultiPoly::constant(xyz, Scalar::one(f.ring()));
    MultiPoly g = substitute(f, at_t1);
    items.push_back({Hypothesis::NoSingularSection, "lift section --poly \"" + g.to_string() + "\" --vars x,y,z --prime 5 --order 2",
                     run_sections(g, 5, jobs)});
    return items;
}

} // namespace nodelift::certify
