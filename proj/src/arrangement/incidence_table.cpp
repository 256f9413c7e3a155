#include "nodelift/arrangement/incidence_table.hpp"
#include "nodelift/arrangement/arrangement.hpp"
#include "nodelift/error.hpp"

#include <map>
#include <set>

namespace nodelift::arrangement {

std::string to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::NotIncident:
        return "not-incident";
    case ViolationKind::DuplicateEntry:
        return "duplicate-entry";
    case ViolationKind::UnknownName:
        return "unknown-name";
    }
    return "?";
}

namespace {

bool point_on_line(const NamedPoint& p, const NamedLine& l)
{
    for (const auto& eq : l.equations)
        if (!eq.evaluate(p.coords).is_zero())
            return false;
    return true;
}

// Evaluates at P + tQ for t = 0..deg and at Q.
bool line_on_surface(const NamedLine& l, const MultiPoly& surface)
{
    Matrix forms;
    for (const auto& eq : l.equations)
        forms.push_back(linear_coefficients(eq));
    const Ring& field = surface.ring();
    Matrix span = nullspace(forms, field, kAmbient);
    if (span.size() != 2)
        throw Error(ErrorCode::InvalidArgument, "equations of " + l.name + " do not define a line");
    long long deg = std::max<long long>(surface.total_degree(), 0);
    for (long long t = 0; t <= deg; ++t) {
        Vector pt(kAmbient, Scalar::zero(field));
        for (std::size_t i = 0; i < kAmbient; ++i)
            pt[i] = span[0][i] + Scalar::from_int(field, t) * span[1][i];
        if (!surface.evaluate(pt).is_zero())
            return false;
    }
    return surface.evaluate(span[1]).is_zero();
}

template <class T>
std::map<std::string, const T*> by_name(const std::vector<T>& v)
{
    std::map<std::string, const T*> m;
    for (const auto& x : v)
        m.emplace(x.name, &x);
    return m;
}

template <class Check>
void check_rows(const std::string& table, const std::vector<TableRow>& rows, Check&& check,
                std::vector<Violation>& out)
{
    for (const auto& row : rows) {
        std::set<std::string> seen;
        for (const auto& m : row.members) {
            if (!seen.insert(m).second) {
                out.push_back({table, row.subject, m, ViolationKind::DuplicateEntry, m + " listed twice"});
                continue;
            }
            check(row, m);
        }
    }
}

} // namespace

std::vector<Violation> verify_incidence_table(const IncidenceTable& t)
{
    auto points = by_name(t.points);
    auto lines = by_name(t.lines);
    auto surfaces = by_name(t.surfaces);
    std::vector<Violation> out;

    auto unknown = [&](const std::string& table, const std::string& row, const std::string& name) {
        out.push_back({table, row, name, ViolationKind::UnknownName, "no such name: " + name});
    };

    auto incidence = [&](const std::string& table, const std::string& line_name, const std::string& point_name,
                         const std::string& row, const std::string& entry) {
        auto l = lines.find(line_name);
        auto p = points.find(point_name);
        if (l == lines.end())
            return unknown(table, row, line_name);
        if (p == points.end())
            return unknown(table, row, point_name);
        if (!point_on_line(*p->second, *l->second))
            out.push_back({table, row, entry, ViolationKind::NotIncident,
                           point_name + " does not lie on " + line_name});
    };

    check_rows("line_contains_points", t.line_contains_points,
               [&](const TableRow& r, const std::string& m) { incidence("line_contains_points", r.subject, m, r.subject, m); },
               out);
    check_rows("point_on_lines", t.point_on_lines,
               [&](const TableRow& r, const std::string& m) { incidence("point_on_lines", m, r.subject, r.subject, m); },
               out);
    check_rows("surface_contains_lines", t.surface_contains_lines,
               [&](const TableRow& r, const std::string& m) {
                   auto s = surfaces.find(r.subject);
                   auto l = lines.find(m);
                   if (s == surfaces.end())
                       return unknown("surface_contains_lines", r.subject, r.subject);
                   if (l == lines.end())
                       return unknown("surface_contains_lines", r.subject, m);
                   if (!line_on_surface(*l->second, s->second->equation))
                       out.push_back({"surface_contains_lines", r.subject, m, ViolationKind::NotIncident,
                                      m + " is not contained in " + r.subject});
               },
               out);
    check_rows("surface_contains_points", t.surface_contains_points,
               [&](const TableRow& r, const std::string& m) {
                   auto s = surfaces.find(r.subject);
                   auto p = points.find(m);
                   if (s == surfaces.end())
                       return unknown("surface_contains_points", r.subject, r.subject);
                   if (p == points.end())
                       return unknown("surface_contains_points", r.subject, m);
                   if (!s->second->equation.evaluate(p->second->coords).is_zero())
                       out.push_back({"surface_contains_points", r.subject, m, ViolationKind::NotIncident,
                                      m + " does not lie on " + r.subject});
               },
               out);
    return out;
}

} // namespace nodelift::arrangement
