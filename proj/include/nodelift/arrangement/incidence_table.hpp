#pragma once

#include "nodelift/linalg.hpp"
#include "nodelift/poly/multipoly.hpp"

#include <string>
#include <vector>

namespace nodelift::arrangement {

struct NamedPoint {
    std::string name;
    Vector coords;
};

/// A line given by the linear forms that cut it out.
struct NamedLine {
    std::string name;
    std::vector<MultiPoly> equations;
};

struct NamedSurface {
    std::string name;
    MultiPoly equation;
};

/// One asserted row: `subject` is incident to every entry of `members`.
struct TableRow {
    std::string subject;
    std::vector<std::string> members;
};

struct IncidenceTable {
    std::vector<std::string> variables;
    std::vector<NamedPoint> points;
    std::vector<NamedLine> lines;
    std::vector<NamedSurface> surfaces;
    std::vector<TableRow> line_contains_points;
    std::vector<TableRow> point_on_lines;
    std::vector<TableRow> surface_contains_lines;
    std::vector<TableRow> surface_contains_points;
};

enum class ViolationKind { NotIncident, DuplicateEntry, UnknownName };
std::string to_string(ViolationKind k);

struct Violation {
    std::string table; ///< "line_contains_points", ...
    std::string row;
    std::string entry;
    ViolationKind kind = ViolationKind::NotIncident;
    std::string detail;
};

/// Checks every asserted incidence by exact evaluation. A line lies on a surface
/// when the surface vanishes on two spanning points and the line's restriction
/// is identically zero (checked on deg+1 points of the pencil).
std::vector<Violation> verify_incidence_table(const IncidenceTable& table);

} // namespace nodelift::arrangement
