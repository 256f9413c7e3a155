#pragma once

#include "nodelift/singscan/scan.hpp"

#include <string>
#include <vector>

namespace nodelift::singscan {

struct TransformedEquation {
    MultiPoly total;
    MultiPoly strict;
    std::uint32_t exceptional_exponent = 0;
};

struct BlowupChart {
    AffineChart chart; ///< equations are the strict transforms (plus the graph equation, if any)
    std::vector<TransformedEquation> transforms;
    std::string new_variable;
    /// True when the eliminated generator was not a coordinate, so the chart is
    /// presented by adding new_variable * surviving - eliminated = 0.
    bool graph_presentation = false;
    /// Some strict transform is a nonzero constant: the chart is empty.
    bool unit_ideal = false;
};

struct BlowupCharts {
    BlowupChart u; ///< g2 = u * g1; g1 survives
    BlowupChart v; ///< g1 = v * g2; g2 survives
};

struct BlowupNames {
    std::string u = "u";
    std::string v = "v";
};

/// Two affine charts of the blow-up along V(g1, g2). In each chart every input
/// equation is rewritten, the surviving generator is divided out as often as exact
/// division succeeds (when it is a single coordinate), and both transforms are kept.
/// A new variable may reuse the name of the coordinate it replaces.
BlowupCharts blowup_charts(const std::vector<MultiPoly>& equations, const MultiPoly& g1, const MultiPoly& g2,
                           const BlowupNames& names = {}, const std::string& provenance = {});

struct BlowupStep {
    MultiPoly g1; ///< in the ambient coordinates of the first step
    MultiPoly g2;
    BlowupNames names;
    bool follow_u = true; ///< chart in which the next step takes place
};

/// Ordered sequence of blow-ups. Each later center is carried through the earlier
/// charts as a total transform; step i > 0 happens in the followed chart of step
/// i-1, whose equations are the strict transforms (plus any graph equation).
/// Returns the two charts of every step, provenance accumulated along the way.
std::vector<BlowupCharts> blowup_pipeline(const std::vector<MultiPoly>& equations,
                                          const std::vector<BlowupStep>& steps);

/// True when a and b are nonzero scalar multiples of each other (or either is zero).
bool proportional(const MultiPoly& a, const MultiPoly& b);

} // namespace nodelift::singscan
