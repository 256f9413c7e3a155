#include "nodelift/certify/certify.hpp"
#include "nodelift/error.hpp"
#include "nodelift/io/json_io.hpp"
#include "nodelift/poly/parser.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifndef NODELIFT_DATA_DIR
#define NODELIFT_DATA_DIR "data"
#endif

using namespace nodelift;
namespace fs = std::filesystem;
using io::Json;

namespace {

// Missing or conflicting flags that CLI11 cannot express on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "text";
    std::string output;
    unsigned jobs = 1;
    std::uint64_t guard = singscan::kDefaultGuard;
    std::string data = NODELIFT_DATA_DIR;
};

std::vector<std::string> split(const std::string& s, char sep = ',')
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        auto b = cur.find_first_not_of(' ');
        auto e = cur.find_last_not_of(' ');
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    return out;
}

// Looks for a file as given, then under the bundled data directory.
fs::path resolve(const Globals& g, const std::string& name, const std::string& sub, const std::string& prefix = {})
{
    std::vector<fs::path> tries = {name, fs::path(g.data) / name, fs::path(g.data) / sub / name,
                                   fs::path(g.data) / sub / (name + ".json"),
                                   fs::path(g.data) / sub / (prefix + name), fs::path(g.data) / sub / (prefix + name + ".json")};
    for (const auto& p : tries)
        if (fs::is_regular_file(p))
            return p;
    throw Error(ErrorCode::BadInput, "cannot find input '" + name + "'");
}

void emit(const Globals& g, const Json& report)
{
    std::string text = g.format == "json" ? io::dump(report) : io::render_text(report);
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output);
    if (!out)
        throw Error(ErrorCode::BadInput, "cannot write " + g.output);
    out << text;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& params)
{
    std::map<std::string, std::string> out;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw UsageError("--param expects NAME=VALUE, got '" + p + "'");
        out[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return out;
}

Ring ring_for_prime(std::uint64_t p, unsigned k = 1)
{
    return p == 0 ? Ring::rationals() : Ring::modular(p, k);
}

singscan::ScanOptions scan_opts(const Globals& g)
{
    singscan::ScanOptions o;
    o.jobs = g.jobs;
    o.guard = g.guard;
    return o;
}

void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw UsageError(msg);
}

} // namespace

int main(int argc, char** argv)
{
    Globals g;
    CLI::App app{"Exact computations for nodal Calabi-Yau reductions"};
    app.require_subcommand(1);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", g.output, "Write the report to this file");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--guard", g.guard, "Maximum number of points visited by a scan")->check(CLI::PositiveNumber);
    app.add_option("--data", g.data, "Bundled data directory");

    std::function<void()> action;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // arrangement
    CLI::App* arr = sub(&app, "arrangement", "Plane arrangements in P^3");
    arr->require_subcommand(1);
    std::string arr_input, arr_instance;
    std::vector<std::string> arr_params;
    std::uint64_t arr_prime = 0;
    auto arr_common = [&](CLI::App* s) {
        s->add_option("--input", arr_input, "Arrangement JSON file or bundled name")->required();
        s->add_option("--instance", arr_instance, "Named parameter set from the file");
        s->add_option("--param", arr_params, "Parameter override NAME=VALUE");
    };
    auto load_arr = [&]() {
        return io::load_arrangement(io::read_json_file(resolve(g, arr_input, "arrangements", "arrangement-")),
                                    arr_instance, parse_params(arr_params));
    };
    CLI::App* analyze = sub(arr, "analyze", "Multiple lines and points of the arrangement");
    arr_common(analyze);
    analyze->callback([&] {
        action = [&] {
            auto a = load_arr();
            arrangement::PlaneArrangement pa(a.planes);
            if (arr_prime)
                pa = pa.reduce(arr_prime);
            emit(g, io::incidence_report_to_json(arrangement::incidence_analysis(pa, g.jobs), a.name));
        };
    });
    analyze->add_option("--prime", arr_prime, "Analyze the reduction mod this prime");
    CLI::App* compare = sub(arr, "compare", "Compare with the reduction mod p");
    arr_common(compare);
    compare->add_option("--prime", arr_prime, "Prime")->required();
    compare->callback([&] {
        action = [&] {
            auto a = load_arr();
            arrangement::PlaneArrangement pa(a.planes);
            emit(g, io::reduction_diff_to_json(arrangement::compare_reduction(pa, arr_prime, g.jobs), a.name));
        };
    });
    std::string table_input;
    CLI::App* table = sub(arr, "table", "Verify an incidence table");
    table->add_option("--table", table_input, "Incidence table JSON")->required();
    table->callback([&] {
        action = [&] {
            auto t = io::load_incidence_table(io::read_json_file(resolve(g, table_input, "tables")));
            emit(g, io::violations_to_json(arrangement::verify_incidence_table(t)));
        };
    });
    std::uint32_t forms_degree = 3;
    std::vector<std::string> forms_lines;
    CLI::App* forms = sub(arr, "forms", "Forms of a given degree vanishing on named lines");
    forms->add_option("--table", table_input, "Incidence table JSON holding the lines")->required();
    forms->add_option("--degree", forms_degree, "Degree")->check(CLI::PositiveNumber);
    forms->add_option("--lines", forms_lines, "Line names (default: all)")->delimiter(',');
    forms->callback([&] {
        action = [&] {
            auto t = io::load_incidence_table(io::read_json_file(resolve(g, table_input, "tables")));
            std::vector<arrangement::ProjLine> lines;
            for (const auto& l : t.lines) {
                if (!forms_lines.empty() && std::find(forms_lines.begin(), forms_lines.end(), l.name) == forms_lines.end())
                    continue;
                if (l.equations.size() != 2)
                    throw Error(ErrorCode::BadInput, "line " + l.name + " needs two equations");
                lines.emplace_back(arrangement::linear_coefficients(l.equations[0]),
                                   arrangement::linear_coefficients(l.equations[1]));
            }
            require(!lines.empty(), "--lines selects no line of the table");
            auto fs = arrangement::forms_vanishing_on_lines(forms_degree, lines, Ring::rationals());
            emit(g, io::form_space_to_json(fs, t.variables));
        };
    });

    // scan
    CLI::App* scan = sub(&app, "scan", "Singular points over a prime field");
    scan->require_subcommand(1);
    std::string scan_poly, scan_input, scan_surface, scan_chart;
    std::vector<std::string> scan_vars = {"x", "y", "z", "t"};
    std::vector<std::string> scan_eqs;
    std::uint64_t scan_prime = 0;
    CLI::App* hyp = sub(scan, "hypersurface", "Projective hypersurface scan");
    hyp->add_option("--poly", scan_poly, "Homogeneous polynomial");
    hyp->add_option("--vars", scan_vars, "Variables")->delimiter(',');
    hyp->add_option("--input", scan_input, "Arrangement JSON holding named surfaces");
    hyp->add_option("--surface", scan_surface, "Surface name inside --input");
    hyp->add_option("--prime", scan_prime, "Prime")->required();
    hyp->callback([&] {
        action = [&] {
            MultiPoly f;
            std::string source;
            if (!scan_poly.empty()) {
                require(scan_input.empty(), "--poly and --input are exclusive");
                f = parse_poly(scan_poly, scan_vars);
                source = scan_poly;
            } else {
                require(!scan_input.empty() && !scan_surface.empty(), "need --poly or --input with --surface");
                auto a = io::load_arrangement(io::read_json_file(resolve(g, scan_input, "arrangements")));
                for (const auto& s : a.surfaces)
                    if (s.name == scan_surface)
                        f = s.equation;
                if (f.nvars() == 0)
                    throw Error(ErrorCode::BadInput, "no surface named '" + scan_surface + "'");
                source = scan_surface;
            }
            Ring r = Ring::prime_field(scan_prime);
            auto recs = singscan::singular_locus_hypersurface(f.map_coefficients(r), scan_opts(g));
            emit(g, io::scan_report_to_json(recs, r, "hypersurface", source));
        };
    });
    CLI::App* chart = sub(scan, "chart", "Affine chart scan");
    chart->add_option("--chart", scan_chart, "Chart JSON file or bundled name");
    chart->add_option("--equation", scan_eqs, "Chart equation (repeatable)");
    chart->add_option("--vars", scan_vars, "Variables for --equation")->delimiter(',');
    chart->add_option("--prime", scan_prime, "Prime")->required();
    chart->callback([&] {
        action = [&] {
            singscan::AffineChart c;
            if (!scan_chart.empty()) {
                require(scan_eqs.empty(), "--chart and --equation are exclusive");
                c = io::load_chart(io::read_json_file(resolve(g, scan_chart, "charts")), Ring::rationals());
            } else {
                require(!scan_eqs.empty(), "need --chart or --equation");
                c.variables = scan_vars;
                for (const auto& e : scan_eqs)
                    c.equations.push_back(parse_poly(e, scan_vars));
                c.provenance = "command line";
            }
            Ring r = Ring::prime_field(scan_prime);
            auto recs = singscan::singular_locus_chart(c.over(r), scan_opts(g));
            emit(g, io::scan_report_to_json(recs, r, "chart", c.provenance));
        };
    });

    // blowup
    CLI::App* blowup = sub(&app, "blowup", "Blow-up charts");
    blowup->require_subcommand(1);
    std::vector<std::string> bl_vars = {"x", "y", "z", "t"}, bl_eqs, bl_centers, bl_names, bl_follow;
    std::uint64_t bl_prime = 0;
    CLI::App* charts = sub(blowup, "charts", "Charts of a blow-up along one or more centers");
    charts->add_option("--vars", bl_vars, "Ambient variables")->delimiter(',');
    charts->add_option("--equation", bl_eqs, "Equation to transform (repeatable)");
    charts->add_option("--center", bl_centers, "Center generators 'g1,g2' (repeatable, applied in order)")->required();
    charts->add_option("--names", bl_names, "New variable names 'u,v' per center (repeatable)");
    charts->add_option("--follow", bl_follow, "Chart carried to the next center: u or v (repeatable)");
    charts->add_option("--prime", bl_prime, "Work over F_p instead of Q");
    charts->callback([&] {
        action = [&] {
            Ring r = ring_for_prime(bl_prime);
            std::vector<MultiPoly> eqs;
            for (const auto& e : bl_eqs)
                eqs.push_back(parse_poly(e, bl_vars, r));
            std::vector<singscan::BlowupStep> steps;
            for (std::size_t i = 0; i < bl_centers.size(); ++i) {
                auto gens = split(bl_centers[i]);
                require(gens.size() == 2, "--center expects two generators 'g1,g2'");
                singscan::BlowupStep st{parse_poly(gens[0], bl_vars, r), parse_poly(gens[1], bl_vars, r), {}, true};
                if (i < bl_names.size()) {
                    auto nm = split(bl_names[i]);
                    require(nm.size() == 2, "--names expects 'u,v'");
                    st.names = {nm[0], nm[1]};
                }
                if (i < bl_follow.size()) {
                    require(bl_follow[i] == "u" || bl_follow[i] == "v", "--follow expects u or v");
                    st.follow_u = bl_follow[i] == "u";
                }
                steps.push_back(st);
            }
            auto res = singscan::blowup_pipeline(eqs, steps);
            Json j = io::blowup_to_json(res.back());
            j["steps"] = res.size();
            emit(g, j);
        };
    });

    // lift
    CLI::App* lift = sub(&app, "lift", "Roots and singular sections over truncated rings");
    lift->require_subcommand(1);
    std::string lift_poly, lift_ring = "modular", lift_var = "x", lift_chart;
    std::vector<std::string> lift_vars = {"x", "y", "z", "t"};
    std::uint64_t lift_prime = 0;
    unsigned lift_order = 1;
    CLI::App* roots = sub(lift, "roots", "Roots of a univariate polynomial in Z/p^k or F_p[e]/e^k");
    roots->add_option("--poly", lift_poly, "Polynomial with integer coefficients")->required();
    roots->add_option("--var", lift_var, "Variable name");
    roots->add_option("--prime", lift_prime, "Prime")->required();
    roots->add_option("--order", lift_order, "k")->check(CLI::Range(1u, 64u));
    roots->add_option("--ring", lift_ring, "modular or dual")->check(CLI::IsMember({"modular", "dual"}));
    roots->callback([&] {
        action = [&] {
            auto f = lifting::int_poly(parse_poly(lift_poly, {lift_var}));
            std::uint64_t guard = std::min<std::uint64_t>(g.guard, lifting::kRootGuard);
            auto rep = lift_ring == "dual" ? lifting::roots_dual_numbers(f, lift_prime, lift_order, guard)
                                           : lifting::roots_mod_prime_power(f, lift_prime, lift_order, guard);
            emit(g, io::lift_report_to_json(rep, lift_poly));
        };
    });
    CLI::App* section = sub(lift, "section", "Singular sections over Z/p^k");
    section->add_option("--poly", lift_poly, "Polynomial");
    section->add_option("--vars", lift_vars, "Variables")->delimiter(',');
    section->add_option("--chart", lift_chart, "Chart JSON (first equation is used)");
    section->add_option("--prime", lift_prime, "Prime")->required();
    section->add_option("--order", lift_order, "k")->check(CLI::Range(1u, 16u));
    section->callback([&] {
        action = [&] {
            MultiPoly f;
            if (!lift_chart.empty()) {
                require(lift_poly.empty(), "--poly and --chart are exclusive");
                auto c = io::load_chart(io::read_json_file(resolve(g, lift_chart, "charts")), Ring::rationals());
                require(c.equations.size() == 1, "section analysis needs a hypersurface chart");
                f = c.equations.front();
            } else {
                require(!lift_poly.empty(), "need --poly or --chart");
                f = parse_poly(lift_poly, lift_vars);
            }
            auto pts = lifting::singular_section_detect(f, lift_prime, lift_order, scan_opts(g));
            emit(g, io::section_report_to_json(pts, Ring::modular(lift_prime, lift_order), f.to_string()));
        };
    });

    // tjurina
    std::string tj_poly, tj_point;
    std::vector<std::string> tj_vars = {"x", "y", "z", "t"};
    std::uint64_t tj_prime = 0;
    std::uint32_t tj_degree = 8;
    CLI::App* tj = sub(&app, "tjurina", "Tjurina number at a point");
    tj->add_option("--poly", tj_poly, "Polynomial")->required();
    tj->add_option("--vars", tj_vars, "Variables")->delimiter(',');
    tj->add_option("--point", tj_point, "Integer point 'a,b,...' (default: origin)");
    tj->add_option("--prime", tj_prime, "Work over F_p instead of Q");
    tj->add_option("--max-degree", tj_degree, "Largest truncation degree")->check(CLI::Range(2u, 32u));
    tj->callback([&] {
        action = [&] {
            Ring r = ring_for_prime(tj_prime);
            MultiPoly f = parse_poly(tj_poly, tj_vars, r);
            if (!tj_point.empty()) {
                auto coords = split(tj_point);
                require(coords.size() == tj_vars.size(), "--point needs one coordinate per variable");
                std::vector<Scalar> pt;
                for (const auto& c : coords)
                    pt.push_back(Scalar::from_rational(r, Rational::parse(c)));
                f = singscan::translate_to_origin(f, pt);
            }
            emit(g, io::tjurina_to_json(singscan::tjurina_number(f, tj_degree), tj_poly));
        };
    });

    // euler
    CLI::App* euler = sub(&app, "euler", "Euler number bookkeeping");
    euler->require_subcommand(1);
    std::string led_input = "ledgers", led_label;
    std::int64_t e_base = 0, e_branch = 0, e_val = 0, e_h12 = 0;
    std::vector<std::string> e_match;
    CLI::App* ledger = sub(euler, "ledger", "Sum a blow-up ledger");
    ledger->add_option("--input", led_input, "Ledger JSON file or bundled name");
    ledger->add_option("--label", led_label, "Ledger label (default: all)");
    ledger->callback([&] {
        action = [&] {
            auto lf = io::load_ledgers(io::read_json_file(resolve(g, led_input, "ledgers")));
            Json out = Json::array();
            for (const auto& l : lf.ledgers) {
                if (!led_label.empty() && l.label != led_label)
                    continue;
                out.push_back(Json{{"kind", "euler-ledger"}, {"ledger", io::ledger_to_json(l)},
                                   {"euler", invariants::euler_blowup_ledger(l)}});
            }
            if (out.empty())
                throw Error(ErrorCode::BadInput, "no ledger labelled '" + led_label + "'");
            emit(g, out.size() == 1 ? out[0] : Json{{"kind", "euler-ledgers"}, {"ledgers", out}});
        };
    });
    CLI::App* dc = sub(euler, "doublecover", "Euler number of a double cover");
    dc->add_option("--base", e_base, "e of the base")->required();
    dc->add_option("--branch", e_branch, "e of the branch locus")->required();
    dc->callback([&] {
        action = [&] {
            emit(g, Json{{"kind", "double-cover"}, {"base", e_base}, {"branch", e_branch},
                         {"euler", invariants::euler_double_cover(e_base, e_branch)}});
        };
    });
    CLI::App* fp = sub(euler, "fiberproduct", "Euler number of a fibre product");
    fp->add_option("--match", e_match, "Matched fibre pairs 'm:m2' (comma separated)")->delimiter(',')->required();
    fp->callback([&] {
        action = [&] {
            invariants::FiberMatch m;
            Json mj = Json::array();
            for (const auto& s : e_match) {
                auto parts = split(s, ':');
                require(parts.size() == 2, "--match entries look like 5:3");
                try {
                    m.emplace_back(std::stoll(parts[0]), std::stoll(parts[1]));
                } catch (const std::exception&) {
                    throw UsageError("--match entries look like 5:3, got '" + s + "'");
                }
                mj.push_back(Json::array({m.back().first, m.back().second}));
            }
            emit(g, Json{{"kind", "fiber-product"}, {"match", mj}, {"euler", invariants::euler_fiber_product(m)}});
        };
    });
    CLI::App* hodge = sub(euler, "hodge", "h11 from e and h12");
    hodge->add_option("--e", e_val, "Euler number")->required();
    hodge->add_option("--h12", e_h12, "h12")->required();
    hodge->callback([&] {
        action = [&] {
            auto h = invariants::hodge_pair_from_euler(e_val, e_h12);
            emit(g, Json{{"kind", "hodge"}, {"e", e_val}, {"h12", h.h12}, {"h11", h.h11}});
        };
    });

    // fiberprod
    CLI::App* fprod = sub(&app, "fiberprod", "Coincidences of fibre positions mod p");
    fprod->require_subcommand(1);
    std::string fp_pos, fp_lambda, fp_mu, fp_cat;
    std::uint64_t fp_prime = 0, fp_bound = 100000;
    CLI::App* red = sub(fprod, "reduce", "Reductions of a position mod p");
    red->add_option("--position", fp_pos, "Position such as 8/9, inf or -123/2+55/2*sqrt5")->required();
    red->add_option("--prime", fp_prime, "Odd prime")->required();
    red->callback([&] {
        action = [&] {
            auto x = fiberprod::Position::parse(fp_pos);
            emit(g, io::reduce_position_to_json(x, fp_prime, fiberprod::reduce_position(x, fp_prime)));
        };
    });
    CLI::App* primes = sub(fprod, "primes", "Coincidence primes of a pair or of a catalogue");
    primes->add_option("--lambda", fp_lambda, "First position");
    primes->add_option("--mu", fp_mu, "Second position");
    primes->add_option("--catalogue", fp_cat, "Catalogue JSON file or bundled name");
    primes->add_option("--bound", fp_bound, "Largest prime considered")->check(CLI::Range(3ull, 1'000'000'000ull));
    primes->callback([&] {
        action = [&] {
            if (!fp_cat.empty()) {
                require(fp_lambda.empty() && fp_mu.empty(), "--catalogue excludes --lambda/--mu");
                auto c = io::load_catalogue(io::read_json_file(resolve(g, fp_cat, "tables")));
                auto t = fiberprod::build_prime_table(c, fp_bound, g.jobs);
                emit(g, Json{{"kind", "prime-union"},
                             {"bound", fp_bound},
                             {"admissible_union", t.admissible_union()},
                             {"all_union", t.all_union()}});
                return;
            }
            require(!fp_lambda.empty() && !fp_mu.empty(), "need --catalogue or both --lambda and --mu");
            emit(g, io::coincidence_to_json(fiberprod::coincidence_primes(fiberprod::Position::parse(fp_lambda),
                                                                          fiberprod::Position::parse(fp_mu), fp_bound)));
        };
    });
    CLI::App* ptable = sub(fprod, "table", "Full coincidence table of a catalogue");
    ptable->add_option("--catalogue", fp_cat, "Catalogue JSON file or bundled name")->required();
    ptable->add_option("--bound", fp_bound, "Largest prime considered")->check(CLI::Range(3ull, 1'000'000'000ull));
    ptable->callback([&] {
        action = [&] {
            auto c = io::load_catalogue(io::read_json_file(resolve(g, fp_cat, "tables")));
            Json j = io::prime_table_to_json(fiberprod::build_prime_table(c, fp_bound, g.jobs));
            Json issues = Json::array();
            for (const auto& s : c.surfaces)
                for (const auto& i : s.issues())
                    issues.push_back(s.label + ": " + i);
            j["catalogue_issues"] = issues;
            emit(g, j);
        };
    });

    // certify
    std::string cert_pipeline, cert_evidence;
    CLI::App* cert = sub(&app, "certify", "Assemble the non-liftability evidence checklist");
    cert->add_option("--pipeline", cert_pipeline, "Built-in pipeline")->check(CLI::IsMember({"86a", "clebsch"}));
    cert->add_option("--evidence", cert_evidence, "Evidence manifest JSON");
    cert->callback([&] {
        action = [&] {
            require(cert_pipeline.empty() != cert_evidence.empty(), "need exactly one of --pipeline and --evidence");
            certify::EvidenceBundle b;
            if (cert_pipeline == "86a")
                b = certify::assemble_certificate("arrangement-86a", 3, certify::pipeline_86a(g.data, g.jobs));
            else if (cert_pipeline == "clebsch")
                b = certify::assemble_certificate("clebsch-pentagon", 5, certify::pipeline_clebsch(g.data, g.jobs));
            else
                b = certify::certificate_from_manifest(cert_evidence);
            emit(g, certify::certificate_to_json(b));
        };
    });

    // report
    std::string rep_input;
    CLI::App* report = sub(&app, "report", "Re-read a JSON report and re-emit it canonically");
    report->add_option("--input", rep_input, "Report JSON")->required();
    report->callback([&] { action = [&] { emit(g, io::canonical_report(io::read_json_file(rep_input))); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (action)
            action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
