#include "nodelift/io/json_io.hpp"

#include "nodelift/error.hpp"
#include "nodelift/poly/parser.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nodelift::io {

namespace {

[[noreturn]] void bad(const std::string& msg)
{
    throw Error(ErrorCode::BadInput, msg);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string get_string(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_string())
        bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::string opt_string(const Json& j, const char* key)
{
    if (!j.contains(key))
        return {};
    return get_string(j, key);
}

std::int64_t get_int(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        bad(std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

std::uint64_t get_uint(const Json& j, const char* key)
{
    std::int64_t v = get_int(j, key);
    if (v < 0)
        bad(std::string("field '") + key + "' must be non-negative");
    return static_cast<std::uint64_t>(v);
}

bool get_bool(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_boolean())
        bad(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::vector<std::string> string_list(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_array())
        bad(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string())
            bad(std::string("entries of '") + key + "' must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<std::uint64_t> uint_list(const Json& v)
{
    if (!v.is_array())
        bad("expected an array of integers");
    std::vector<std::uint64_t> out;
    for (const auto& e : v) {
        if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0))
            bad("expected a non-negative integer");
        out.push_back(e.get<std::uint64_t>());
    }
    return out;
}

Rational rational_from(const Json& j)
{
    if (j.is_number_integer())
        return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const Error&) {
            bad("not a rational number: " + j.get<std::string>());
        }
    }
    bad("expected a rational number");
}

std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts, const std::vector<std::string>& vars,
                                 const Ring& ring)
{
    std::vector<MultiPoly> out;
    for (const auto& t : texts)
        out.push_back(parse_poly(t, vars, ring));
    return out;
}

Json residues_json(const std::vector<fiberprod::Residue>& rs)
{
    Json a = Json::array();
    for (const auto& r : rs)
        a.push_back(r.to_string());
    return a;
}

Json uints_json(const std::vector<std::uint64_t>& v)
{
    Json a = Json::array();
    for (auto x : v)
        a.push_back(x);
    return a;
}

Json sizes_json(const std::vector<std::size_t>& v)
{
    Json a = Json::array();
    for (auto x : v)
        a.push_back(x);
    return a;
}

Json line_record_json(const arrangement::LineRecord& l)
{
    return Json{{"line", l.line.to_string()}, {"multiplicity", l.multiplicity()}, {"planes", sizes_json(l.planes)}};
}

Json point_record_json(const arrangement::PointRecord& p)
{
    return Json{{"point", point_to_json(p.point.coords())},
                {"planes", sizes_json(p.planes)},
                {"q", p.q()},
                {"r", p.r},
                {"type", p.type()}};
}

Json ledger_step_json(const invariants::LedgerStep& s)
{
    Json j{{"kind", s.kind == invariants::CenterKind::Point ? "point" : "curve"}, {"count", s.count}};
    if (s.kind == invariants::CenterKind::Curve)
        j["curve_euler"] = s.curve_euler;
    if (!s.note.empty())
        j["note"] = s.note;
    return j;
}

} // namespace

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad(path.string() + ": " + e.what());
    }
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Ring ring_from_json(const Json& j)
{
    std::string kind = get_string(j, "kind");
    if (kind == "rational")
        return Ring::rationals();
    if (kind == "prime" || kind == "modular") {
        unsigned k = j.contains("k") ? static_cast<unsigned>(get_uint(j, "k")) : 1;
        return Ring::modular(get_uint(j, "p"), k);
    }
    if (kind == "dual")
        return Ring::dual(get_uint(j, "p"), static_cast<unsigned>(get_uint(j, "k")));
    if (kind == "quadratic")
        return Ring::quadratic(get_int(j, "d"));
    bad("unknown ring kind '" + kind + "'");
}

Json ring_to_json(const Ring& r)
{
    switch (r.kind()) {
    case RingKind::Rational:
        return Json{{"kind", "rational"}};
    case RingKind::Modular:
        return Json{{"kind", "prime"}, {"p", r.p()}, {"k", r.k()}};
    case RingKind::Dual:
        return Json{{"kind", "dual"}, {"p", r.p()}, {"k", r.k()}};
    case RingKind::Quadratic:
        return Json{{"kind", "quadratic"}, {"d", r.d()}};
    }
    bad("unknown ring");
}

Scalar parameter_value(const Json& j, const Ring& ring)
{
    if (j.is_object()) {
        if (ring.kind() != RingKind::Quadratic)
            bad("surd parameter values need a quadratic field");
        return Scalar(QuadSurd(rational_from(field(j, "a")), rational_from(field(j, "b")), ring.d()));
    }
    return Scalar::from_rational(ring, rational_from(j));
}

Json scalar_to_json(const Scalar& s)
{
    if (s.holds<ModularScalar>())
        return s.as<ModularScalar>().residue();
    if (s.holds<DualScalar>())
        return uints_json(s.as<DualScalar>().coeffs());
    return s.to_string();
}

Json point_to_json(const Vector& v)
{
    Json a = Json::array();
    for (const auto& s : v)
        a.push_back(scalar_to_json(s));
    return a;
}

ArrangementInput load_arrangement(const Json& j, const std::string& instance,
                                  const std::map<std::string, std::string>& overrides)
{
    ArrangementInput in;
    in.name = opt_string(j, "name");
    in.field = ring_from_json(field(j, "field"));
    in.variables = string_list(j, "variables");

    std::map<std::string, Json> values;
    if (j.contains("parameters")) {
        const Json& ps = j.at("parameters");
        if (!ps.is_object())
            bad("'parameters' must map names to default values");
        for (const auto& [k, v] : ps.items())
            values[k] = v;
    }
    if (!instance.empty()) {
        if (!j.contains("instances") || !j.at("instances").contains(instance))
            bad("unknown instance '" + instance + "'");
        const Json& inst = j.at("instances").at(instance);
        if (inst.contains("field"))
            in.field = ring_from_json(inst.at("field"));
        if (inst.contains("values")) {
            for (const auto& [k, v] : inst.at("values").items()) {
                if (!values.count(k))
                    bad("instance sets undeclared parameter '" + k + "'");
                values[k] = v;
            }
        }
    }
    for (const auto& [k, v] : overrides) {
        if (!values.count(k))
            bad("unknown parameter '" + k + "'");
        values[k] = v;
    }

    std::vector<std::string> all_vars = in.variables;
    std::map<std::string, MultiPoly> assignment;
    for (const auto& [k, v] : values) {
        all_vars.push_back(k);
        Scalar c = parameter_value(v, in.field);
        assignment[k] = MultiPoly::constant(in.variables, c);
        in.parameters[k] = c.to_string();
    }
    for (const auto& text : string_list(j, "planes")) {
        MultiPoly f = parse_poly(text, all_vars, in.field);
        in.planes.push_back(assignment.empty() ? f : substitute(f, assignment).with_variables(in.variables));
    }
    if (j.contains("surfaces")) {
        for (const auto& s : field(j, "surfaces")) {
            MultiPoly f = parse_poly(get_string(s, "equation"), all_vars, in.field);
            if (!assignment.empty())
                f = substitute(f, assignment).with_variables(in.variables);
            in.surfaces.push_back({get_string(s, "name"), f});
        }
    }
    return in;
}

singscan::AffineChart load_chart(const Json& j, const Ring& ring)
{
    singscan::AffineChart c;
    c.variables = string_list(j, "variables");
    c.equations = parse_all(string_list(j, "equations"), c.variables, ring);
    c.provenance = opt_string(j, "provenance");
    return c;
}

Json chart_to_json(const singscan::AffineChart& c)
{
    Json eq = Json::array();
    for (const auto& e : c.equations)
        eq.push_back(e.to_string());
    return Json{{"variables", c.variables}, {"equations", eq}, {"provenance", c.provenance}};
}

invariants::BlowupLedger ledger_from_json(const Json& j)
{
    invariants::BlowupLedger l;
    l.label = get_string(j, "label");
    l.start = get_int(j, "start");
    for (const auto& s : field(j, "steps")) {
        invariants::LedgerStep st;
        std::string kind = get_string(s, "kind");
        if (kind == "point")
            st.kind = invariants::CenterKind::Point;
        else if (kind == "curve")
            st.kind = invariants::CenterKind::Curve;
        else
            bad("ledger step kind must be 'point' or 'curve'");
        st.count = get_int(s, "count");
        if (s.contains("curve_euler"))
            st.curve_euler = get_int(s, "curve_euler");
        st.note = opt_string(s, "note");
        l.steps.push_back(st);
    }
    return l;
}

Json ledger_to_json(const invariants::BlowupLedger& l)
{
    Json steps = Json::array();
    for (const auto& s : l.steps)
        steps.push_back(ledger_step_json(s));
    return Json{{"label", l.label}, {"start", l.start}, {"steps", steps}};
}

LedgerFile load_ledgers(const Json& j)
{
    LedgerFile f;
    for (const auto& l : field(j, "ledgers")) {
        f.ledgers.push_back(ledger_from_json(l));
        if (l.contains("expected"))
            f.expected_euler[f.ledgers.back().label] = get_int(l, "expected");
    }
    if (j.contains("hodge_checks"))
        for (const auto& h : j.at("hodge_checks"))
            f.hodge_checks.push_back({opt_string(h, "label"), get_int(h, "e"), get_int(h, "h12"), get_int(h, "h11")});
    if (j.contains("double_covers"))
        for (const auto& d : j.at("double_covers"))
            f.double_covers.push_back({opt_string(d, "label"), get_int(d, "base"), get_int(d, "branch"),
                                       get_int(d, "expected")});
    if (j.contains("fiber_products")) {
        for (const auto& d : j.at("fiber_products")) {
            LedgerFile::FiberProduct fp;
            fp.label = opt_string(d, "label");
            for (const auto& pr : field(d, "match")) {
                if (!pr.is_array() || pr.size() != 2)
                    bad("fiber match entries are [m, m'] pairs");
                fp.match.emplace_back(pr[0].get<std::int64_t>(), pr[1].get<std::int64_t>());
            }
            fp.expected = get_int(d, "expected");
            f.fiber_products.push_back(fp);
        }
    }
    return f;
}

fiberprod::Catalogue load_catalogue(const Json& j)
{
    fiberprod::Catalogue c;
    for (const auto& s : field(j, "surfaces")) {
        fiberprod::BeauvilleSurface b;
        b.label = get_string(s, "label");
        b.note = opt_string(s, "note");
        for (const auto& fb : field(s, "fibers"))
            b.fibers.push_back({fiberprod::Position::parse(get_string(fb, "position")),
                                static_cast<unsigned>(get_uint(fb, "n"))});
        c.surfaces.push_back(b);
    }
    if (j.contains("extra_positions"))
        for (const auto& e : j.at("extra_positions"))
            c.extra_positions.push_back({fiberprod::Position::parse(get_string(e, "position")), opt_string(e, "note")});
    return c;
}

arrangement::IncidenceTable load_incidence_table(const Json& j)
{
    arrangement::IncidenceTable t;
    t.variables = string_list(j, "variables");
    Ring q = Ring::rationals();
    for (const auto& p : field(j, "points")) {
        arrangement::NamedPoint np;
        np.name = get_string(p, "name");
        for (const auto& c : field(p, "coords"))
            np.coords.push_back(Scalar(rational_from(c)));
        if (np.coords.size() != t.variables.size())
            bad("point " + np.name + " has the wrong number of coordinates");
        t.points.push_back(np);
    }
    for (const auto& l : field(j, "lines"))
        t.lines.push_back({get_string(l, "name"), parse_all(string_list(l, "equations"), t.variables, q)});
    if (j.contains("surfaces"))
        for (const auto& s : j.at("surfaces"))
            t.surfaces.push_back({get_string(s, "name"), parse_poly(get_string(s, "equation"), t.variables, q)});
    auto rows = [&](const char* key, std::vector<arrangement::TableRow>& out) {
        if (!j.contains(key))
            return;
        for (const auto& r : j.at(key))
            out.push_back({get_string(r, "subject"), string_list(r, "members")});
    };
    rows("line_contains_points", t.line_contains_points);
    rows("point_on_lines", t.point_on_lines);
    rows("surface_contains_lines", t.surface_contains_lines);
    rows("surface_contains_points", t.surface_contains_points);
    return t;
}

Json incidence_report_to_json(const arrangement::IncidenceReport& r, const std::string& name)
{
    Json lines = Json::array();
    std::map<std::string, std::size_t> by_mult;
    for (const auto& l : r.lines) {
        lines.push_back(line_record_json(l));
        ++by_mult[std::to_string(l.multiplicity())];
    }
    Json points = Json::array();
    std::map<std::string, std::size_t> by_type;
    std::map<std::string, std::size_t> by_q;
    for (const auto& p : r.points) {
        points.push_back(point_record_json(p));
        ++by_type[p.type()];
        ++by_q[std::to_string(p.q())];
    }
    return Json{{"kind", "incidence-report"},
                {"name", name},
                {"field", ring_to_json(r.field)},
                {"lines", lines},
                {"points", points},
                {"summary", Json{{"lines_by_multiplicity", by_mult}, {"points_by_q", by_q}, {"points_by_type", by_type}}}};
}

Json reduction_diff_to_json(const arrangement::ReductionDiff& d, const std::string& name)
{
    Json np = Json::array();
    for (const auto& p : d.new_points)
        np.push_back(point_record_json(p));
    Json nl = Json::array();
    for (const auto& l : d.new_lines)
        nl.push_back(line_record_json(l));
    Json pc = Json::array();
    for (const auto& c : d.point_changes)
        pc.push_back(Json{{"point", point_to_json(c.point.coords())},
                          {"old_q", c.old_q},
                          {"new_q", c.new_q},
                          {"old_r", c.old_r},
                          {"new_r", c.new_r}});
    Json lc = Json::array();
    for (const auto& c : d.line_changes)
        lc.push_back(Json{{"line", c.line.to_string()},
                          {"old_multiplicity", c.old_multiplicity},
                          {"new_multiplicity", c.new_multiplicity}});
    Json gained = Json::array();
    for (const auto& g : d.gained_points(4))
        gained.push_back(point_to_json(g.coords()));
    return Json{{"kind", "reduction-diff"},
                {"name", name},
                {"p", d.p},
                {"empty", d.empty()},
                {"new_points", np},
                {"new_lines", nl},
                {"vanished_planes", sizes_json(d.vanished_planes)},
                {"point_changes", pc},
                {"line_changes", lc},
                {"gained_fourfold_points", gained}};
}

Json violations_to_json(const std::vector<arrangement::Violation>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(Json{{"table", x.table},
                         {"row", x.row},
                         {"entry", x.entry},
                         {"violation", arrangement::to_string(x.kind)},
                         {"detail", x.detail}});
    return Json{{"kind", "incidence-check"}, {"violations", a}, {"count", v.size()}};
}

Json form_space_to_json(const arrangement::FormSpace& f, const std::vector<std::string>& vars)
{
    Json forms = Json::array();
    for (const auto& g : f.forms(vars))
        forms.push_back(g.to_string());
    return Json{{"kind", "form-space"}, {"degree", f.degree}, {"dimension", f.dimension()}, {"basis", forms}};
}

Json scan_report_to_json(const std::vector<singscan::SingularPointRecord>& recs, const Ring& ring,
                         const std::string& mode, const std::string& source)
{
    Json pts = Json::array();
    for (const auto& r : recs)
        pts.push_back(Json{{"point", uints_json(r.point)},
                           {"projective", r.projective},
                           {"jacobian_rank", r.jacobian_rank},
                           {"hessian_rank", r.hessian_rank},
                           {"class", singscan::to_string(r.classification)}});
    return Json{{"kind", "scan-report"}, {"ring", ring_to_json(ring)}, {"mode", mode}, {"source", source},
                {"points", pts}, {"count", recs.size()}};
}

ScanReport scan_report_from_json(const Json& j)
{
    if (get_string(j, "kind") != "scan-report")
        bad("not a scan report");
    ScanReport r;
    r.ring = ring_from_json(field(j, "ring"));
    r.mode = get_string(j, "mode");
    r.source = get_string(j, "source");
    for (const auto& p : field(j, "points")) {
        singscan::SingularPointRecord rec;
        rec.point = uint_list(field(p, "point"));
        rec.projective = get_bool(p, "projective");
        rec.jacobian_rank = get_uint(p, "jacobian_rank");
        rec.hessian_rank = get_uint(p, "hessian_rank");
        try {
            rec.classification = singscan::node_class_from_string(get_string(p, "class"));
        } catch (const Error&) {
            bad("unknown point class");
        }
        r.records.push_back(rec);
    }
    if (get_uint(j, "count") != r.records.size())
        bad("scan report count does not match its points");
    return r;
}

Json blowup_to_json(const singscan::BlowupCharts& b)
{
    auto one = [](const char* name, const singscan::BlowupChart& c) {
        Json tr = Json::array();
        for (const auto& t : c.transforms)
            tr.push_back(Json{{"total", t.total.to_string()},
                              {"strict", t.strict.to_string()},
                              {"exceptional_exponent", t.exceptional_exponent}});
        Json j = chart_to_json(c.chart);
        j["name"] = name;
        j["new_variable"] = c.new_variable;
        j["graph_presentation"] = c.graph_presentation;
        j["unit_ideal"] = c.unit_ideal;
        j["transforms"] = tr;
        return j;
    };
    return Json{{"kind", "blowup-charts"}, {"charts", Json::array({one("u", b.u), one("v", b.v)})}};
}

Json tjurina_to_json(const singscan::TjurinaResult& t, const std::string& poly)
{
    return Json{{"kind", "tjurina"},
                {"poly", poly},
                {"degree_bound", t.degree_bound},
                {"truncated_dimension", t.truncated_dimension},
                {"stabilized", t.stabilized}};
}

Json lift_report_to_json(const lifting::LiftReport& r, const std::string& poly)
{
    Json roots = Json::array();
    Json text = Json::array();
    for (const auto& x : r.roots) {
        if (x.holds<DualScalar>())
            roots.push_back(uints_json(x.as<DualScalar>().coeffs()));
        else
            roots.push_back(Json::array({x.as<ModularScalar>().residue()}));
        text.push_back(x.to_string());
    }
    Json base = Json::array();
    for (const auto& b : r.base_roots) {
        Json e{{"residue", b.residue}, {"status", lifting::to_string(b.status)}, {"lifts", b.lifts}};
        if (b.status == lifting::RootStatus::Obstructed)
            e["obstructed_at"] = b.obstructed_at;
        base.push_back(e);
    }
    return Json{{"kind", "lift-report"},
                {"poly", poly},
                {"ring", ring_to_json(r.ring)},
                {"roots", roots},
                {"roots_text", text},
                {"base_roots", base},
                {"roots_per_level", sizes_json(r.roots_per_level)},
                {"hensel_checked", r.hensel_checked}};
}

Json section_report_to_json(const std::vector<std::vector<std::uint64_t>>& pts, const Ring& ring,
                            const std::string& poly)
{
    Json a = Json::array();
    for (const auto& p : pts)
        a.push_back(uints_json(p));
    return Json{{"kind", "singular-sections"}, {"ring", ring_to_json(ring)}, {"poly", poly}, {"points", a},
                {"count", pts.size()}};
}

SectionReport section_report_from_json(const Json& j)
{
    if (get_string(j, "kind") != "singular-sections")
        bad("not a singular-section report");
    SectionReport r;
    r.ring = ring_from_json(field(j, "ring"));
    r.poly = get_string(j, "poly");
    for (const auto& p : field(j, "points"))
        r.points.push_back(uint_list(p));
    if (get_uint(j, "count") != r.points.size())
        bad("section report count does not match its points");
    return r;
}

DiffSummary diff_summary_from_json(const Json& j)
{
    if (get_string(j, "kind") != "reduction-diff")
        bad("not a reduction diff");
    DiffSummary d;
    d.name = get_string(j, "name");
    d.p = get_uint(j, "p");
    d.empty = get_bool(j, "empty");
    for (const auto& g : field(j, "gained_fourfold_points"))
        d.gained_points.push_back(g.dump());
    return d;
}

Json coincidence_to_json(const fiberprod::CoincidenceReport& r)
{
    Json primes = Json::array();
    for (const auto& c : r.primes)
        primes.push_back(Json{{"p", c.p},
                              {"residues", residues_json(c.residues)},
                              {"admissible", c.admissible()},
                              {"residue_zero_or_one", c.residue_zero_or_one},
                              {"at_infinity", c.at_infinity}});
    std::ostringstream unf;
    unf << r.unfactored;
    return Json{{"kind", "coincidence-primes"},
                {"lambda", r.lambda.to_string()},
                {"mu", r.mu.to_string()},
                {"bound", r.bound},
                {"complete", r.complete()},
                {"unfactored", unf.str()},
                {"primes", primes},
                {"admissible_primes", uints_json(r.admissible_primes())}};
}

Json reduce_position_to_json(const fiberprod::Position& x, std::uint64_t p, const std::vector<fiberprod::Residue>& r)
{
    return Json{{"kind", "position-reduction"}, {"position", x.to_string()}, {"p", p}, {"residues", residues_json(r)}};
}

Json prime_table_to_json(const fiberprod::PrimeTable& t)
{
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json c = coincidence_to_json(row.report);
        c.erase("kind");
        c.erase("bound");
        rows.push_back(c);
    }
    return Json{{"kind", "prime-table"},
                {"bound", t.bound},
                {"rows", rows},
                {"admissible_union", uints_json(t.admissible_union())},
                {"all_union", uints_json(t.all_union())}};
}

Json canonical_report(const Json& j)
{
    static const std::map<std::string, std::vector<const char*>> required = {
        {"incidence-report", {"name", "field", "lines", "points", "summary"}},
        {"reduction-diff", {"name", "p", "empty", "new_points", "point_changes", "gained_fourfold_points"}},
        {"incidence-check", {"violations", "count"}},
        {"form-space", {"degree", "dimension", "basis"}},
        {"blowup-charts", {"charts"}},
        {"tjurina", {"poly", "degree_bound", "truncated_dimension", "stabilized"}},
        {"lift-report", {"poly", "ring", "roots", "base_roots", "roots_per_level"}},
        {"coincidence-primes", {"lambda", "mu", "bound", "primes"}},
        {"position-reduction", {"position", "p", "residues"}},
        {"prime-table", {"bound", "rows", "admissible_union", "all_union"}},
        {"prime-union", {"bound", "admissible_union", "all_union"}},
        {"euler-ledgers", {"ledgers"}},
        {"euler-ledger", {"ledger", "euler"}},
        {"double-cover", {"base", "branch", "euler"}},
        {"fiber-product", {"match", "euler"}},
        {"hodge", {"e", "h12", "h11"}},
        {"certificate", {"identifier", "checks", "verdict"}},
    };
    std::string kind = get_string(j, "kind");
    if (kind == "scan-report") {
        ScanReport r = scan_report_from_json(j);
        return scan_report_to_json(r.records, r.ring, r.mode, r.source);
    }
    if (kind == "singular-sections") {
        SectionReport r = section_report_from_json(j);
        return section_report_to_json(r.points, r.ring, r.poly);
    }
    if (kind == "euler-ledger") {
        auto l = ledger_from_json(field(j, "ledger"));
        if (euler_blowup_ledger(l) != get_int(j, "euler"))
            bad("ledger total does not match its steps");
        return Json{{"kind", kind}, {"ledger", ledger_to_json(l)}, {"euler", euler_blowup_ledger(l)}};
    }
    auto it = required.find(kind);
    if (it == required.end())
        bad("unknown report kind '" + kind + "'");
    for (const char* key : it->second)
        field(j, key);
    if (j.contains("ring"))
        ring_from_json(j.at("ring"));
    if (j.contains("field"))
        ring_from_json(j.at("field"));
    return j;
}

namespace {

bool is_flat(const Json& j)
{
    if (j.is_primitive())
        return true;
    if (j.is_array()) {
        for (const auto& e : j)
            if (!is_flat(e))
                return false;
        return true;
    }
    for (const auto& [k, v] : j.items())
        if (!is_flat(v))
            return false;
    return true;
}

std::string inline_text(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_primitive())
        return j.dump();
    std::string out;
    if (j.is_array()) {
        out = "[";
        for (std::size_t i = 0; i < j.size(); ++i)
            out += (i ? ", " : "") + inline_text(j[i]);
        return out + "]";
    }
    bool first = true;
    for (const auto& [k, v] : j.items()) {
        out += (first ? "" : ", ") + k + ": " + inline_text(v);
        first = false;
    }
    return "{" + out + "}";
}

void render(const Json& j, const std::string& pad, std::string& out)
{
    for (const auto& [k, v] : j.items()) {
        if (k == "kind" && pad.empty())
            continue;
        bool rows = v.is_array() && !v.empty() && v.front().is_object();
        if (is_flat(v) && !rows) {
            out += pad + k + ": " + inline_text(v) + "\n";
            continue;
        }
        out += pad + k + ":\n";
        if (v.is_array()) {
            for (const auto& e : v) {
                if (!e.is_object()) {
                    out += pad + "  - " + inline_text(e) + "\n";
                } else {
                    std::string sub;
                    render(e, pad + "    ", sub);
                    out += pad + "  - " + sub.substr(pad.size() + 4);
                }
            }
        } else {
            render(v, pad + "  ", out);
        }
    }
}

} // namespace

std::string render_text(const Json& report)
{
    std::string out;
    if (report.is_object() && report.contains("kind"))
        out += inline_text(report.at("kind")) + "\n";
    if (report.is_object())
        render(report, "", out);
    else
        out += inline_text(report) + "\n";
    return out;
}

} // namespace nodelift::io
