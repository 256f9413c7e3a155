#pragma once

#include "nodelift/arrangement/arrangement.hpp"
#include "nodelift/arrangement/incidence_table.hpp"
#include "nodelift/fiberprod/fiberprod.hpp"
#include "nodelift/invariants/invariants.hpp"
#include "nodelift/lifting/lifting.hpp"
#include "nodelift/singscan/blowup.hpp"
#include "nodelift/singscan/scan.hpp"
#include "nodelift/singscan/tjurina.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace nodelift::io {

using Json = nlohmann::json;

/// Reads a JSON file; BadInput on I/O or syntax problems.
Json read_json_file(const std::filesystem::path& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

Ring ring_from_json(const Json& j);
Json ring_to_json(const Ring& r);

/// Parameter value: a rational string, or {"a": "...", "b": "..."} for a + b sqrt d.
Scalar parameter_value(const Json& j, const Ring& ring);

struct ArrangementInput {
    std::string name;
    Ring field;
    std::vector<std::string> variables;
    std::vector<MultiPoly> planes;
    std::vector<arrangement::NamedSurface> surfaces;
    std::map<std::string, std::string> parameters; ///< value actually substituted, as text
};

/// Loads an arrangement file. Parameters listed under "parameters" are substituted
/// by their default values, then by "instances"[instance] when given, then by
/// `overrides`; an instance may also replace the field.
ArrangementInput load_arrangement(const Json& j, const std::string& instance = {},
                                  const std::map<std::string, std::string>& overrides = {});

singscan::AffineChart load_chart(const Json& j, const Ring& ring);
Json chart_to_json(const singscan::AffineChart& c);

struct LedgerFile {
    std::vector<invariants::BlowupLedger> ledgers;
    struct HodgeCheck {
        std::string label;
        std::int64_t e = 0;
        std::int64_t h12 = 0;
        std::int64_t h11 = 0;
    };
    struct DoubleCover {
        std::string label;
        std::int64_t base = 0;
        std::int64_t branch = 0;
        std::int64_t expected = 0;
    };
    struct FiberProduct {
        std::string label;
        invariants::FiberMatch match;
        std::int64_t expected = 0;
    };
    std::vector<HodgeCheck> hodge_checks;
    std::vector<DoubleCover> double_covers;
    std::vector<FiberProduct> fiber_products;
    std::map<std::string, std::int64_t> expected_euler; ///< by ledger label
};
LedgerFile load_ledgers(const Json& j);
invariants::BlowupLedger ledger_from_json(const Json& j);
Json ledger_to_json(const invariants::BlowupLedger& l);

fiberprod::Catalogue load_catalogue(const Json& j);
arrangement::IncidenceTable load_incidence_table(const Json& j);

// Reports. Every report carries a "kind" field.
Json incidence_report_to_json(const arrangement::IncidenceReport& r, const std::string& name);
Json reduction_diff_to_json(const arrangement::ReductionDiff& d, const std::string& name);
Json violations_to_json(const std::vector<arrangement::Violation>& v);
Json form_space_to_json(const arrangement::FormSpace& f, const std::vector<std::string>& vars);

Json scalar_to_json(const Scalar& s);
Json point_to_json(const Vector& v);

Json scan_report_to_json(const std::vector<singscan::SingularPointRecord>& recs, const Ring& ring,
                         const std::string& mode, const std::string& source);
struct ScanReport {
    Ring ring;
    std::string mode; ///< "hypersurface" or "chart"
    std::string source;
    std::vector<singscan::SingularPointRecord> records;
};
ScanReport scan_report_from_json(const Json& j);

Json blowup_to_json(const singscan::BlowupCharts& b);
Json tjurina_to_json(const singscan::TjurinaResult& t, const std::string& poly);

Json lift_report_to_json(const lifting::LiftReport& r, const std::string& poly);
Json section_report_to_json(const std::vector<std::vector<std::uint64_t>>& pts, const Ring& ring,
                            const std::string& poly);
struct SectionReport {
    Ring ring;
    std::string poly;
    std::vector<std::vector<std::uint64_t>> points;
};
SectionReport section_report_from_json(const Json& j);

struct DiffSummary {
    std::string name;
    std::uint64_t p = 0;
    std::vector<std::string> gained_points; ///< q >= 4 points new in the reduction
    bool empty = true;
};
DiffSummary diff_summary_from_json(const Json& j);

Json coincidence_to_json(const fiberprod::CoincidenceReport& r);
Json reduce_position_to_json(const fiberprod::Position& x, std::uint64_t p, const std::vector<fiberprod::Residue>& r);
Json prime_table_to_json(const fiberprod::PrimeTable& t);

/// Human-readable rendering of any report: the same fields and numbers as the
/// JSON form, "kind" first, nested objects indented.
std::string render_text(const Json& report);

/// Parses a report, checks its kind and required fields, and returns the
/// canonical form; BadInput on an unknown kind or a malformed document.
Json canonical_report(const Json& j);

} // namespace nodelift::io
