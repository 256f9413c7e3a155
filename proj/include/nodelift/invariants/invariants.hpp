#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nodelift::invariants {

enum class CenterKind { Point, Curve };

/// `count` blow-ups of the same kind; curves carry their Euler number.
struct LedgerStep {
    CenterKind kind = CenterKind::Point;
    std::int64_t count = 1;
    std::int64_t curve_euler = 2;
    std::string note;

    std::int64_t contribution() const;
};

struct BlowupLedger {
    std::string label;
    std::int64_t start = 0;
    std::vector<LedgerStep> steps;

    BlowupLedger& then(const BlowupLedger& other);
};

/// start + sum of contributions: a point adds 2, a curve adds its Euler number.
std::int64_t euler_blowup_ledger(const BlowupLedger& ledger);

/// 2 e(base) - e(branch).
std::int64_t euler_double_cover(std::int64_t e_base, std::int64_t e_branch);

struct HodgePair {
    std::int64_t h11 = 0;
    std::int64_t h12 = 0;
    friend bool operator==(const HodgePair&, const HodgePair&) = default;
};

/// h11 = e/2 + h12. OddEuler for odd e; InvalidArgument for negative h12 or h11.
HodgePair hodge_pair_from_euler(std::int64_t e, std::int64_t h12);

/// Kodaira fibre pairs I_m x I_m' over matched base points.
using FiberMatch = std::vector<std::pair<std::int64_t, std::int64_t>>;

/// 2 * sum m m'. InvalidArgument for a non-positive entry.
std::int64_t euler_fiber_product(const FiberMatch& match);

} // namespace nodelift::invariants
