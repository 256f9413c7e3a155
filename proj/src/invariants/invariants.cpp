#include "nodelift/invariants/invariants.hpp"
#include "nodelift/error.hpp"

namespace nodelift::invariants {

std::int64_t LedgerStep::contribution() const { return count * (kind == CenterKind::Point ? 2 : curve_euler); }

BlowupLedger& BlowupLedger::then(const BlowupLedger& other)
{
    start += other.start;
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
    return *this;
}

std::int64_t euler_blowup_ledger(const BlowupLedger& ledger)
{
    std::int64_t e = ledger.start;
    for (const auto& s : ledger.steps) {
        if (s.count < 0)
            throw Error(ErrorCode::InvalidArgument, "negative step count in ledger " + ledger.label);
        e += s.contribution();
    }
    return e;
}

std::int64_t euler_double_cover(std::int64_t e_base, std::int64_t e_branch) { return 2 * e_base - e_branch; }

HodgePair hodge_pair_from_euler(std::int64_t e, std::int64_t h12)
{
    if (e % 2 != 0)
        throw Error(ErrorCode::OddEuler, "Euler number " + std::to_string(e) + " is odd");
    if (h12 < 0)
        throw Error(ErrorCode::InvalidArgument, "h12 must be non-negative");
    HodgePair h{e / 2 + h12, h12};
    if (h.h11 < 0)
        throw Error(ErrorCode::InvalidArgument, "e/2 + h12 is negative");
    return h;
}

std::int64_t euler_fiber_product(const FiberMatch& match)
{
    std::int64_t s = 0;
    for (const auto& [m, n] : match) {
        if (m < 1 || n < 1)
            throw Error(ErrorCode::InvalidArgument, "fibre types I_m need m >= 1");
        s += m * n;
    }
    return 2 * s;
}

} // namespace nodelift::invariants
