#include "nodelift/singscan/blowup.hpp"
#include "nodelift/error.hpp"

#include <algorithm>

namespace nodelift::singscan {

bool proportional(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return true;
    if (a.size() != b.size())
        return false;
    const auto& [m0, a0] = *a.terms().begin();
    const auto& [n0, b0] = *b.terms().begin();
    if (!(m0 == n0) || !a0.is_unit() || !b0.is_unit())
        return false;
    // a == (a0/b0) b ?
    return a == b.scaled(a0 * b0.inverse());
}

namespace {

// Index of x_i when g = c * x_i with c a unit; npos otherwise.
std::size_t coordinate_index(const MultiPoly& g)
{
    if (g.size() != 1)
        return std::string::npos;
    const auto& [m, c] = *g.terms().begin();
    if (m.degree() != 1 || !c.is_unit())
        return std::string::npos;
    return static_cast<std::size_t>(std::find(m.exps.begin(), m.exps.end(), 1u) - m.exps.begin());
}

bool uses_variable(const MultiPoly& g, std::size_t i)
{
    return std::any_of(g.terms().begin(), g.terms().end(), [i](const auto& t) { return t.first.exps[i] != 0; });
}

bool nonzero_constant(const MultiPoly& f) { return !f.is_zero() && f.is_constant(); }

BlowupChart make_chart(const std::vector<MultiPoly>& eqs, const MultiPoly& eliminated, const MultiPoly& surviving,
                       const std::string& name, const std::string& provenance)
{
    const auto& vars = eliminated.vars();
    const Ring& ring = eliminated.ring();
    BlowupChart out;
    out.new_variable = name;

    std::size_t xi = coordinate_index(eliminated);
    if (xi != std::string::npos && !uses_variable(surviving, xi)) {
        // Coordinate chart: x_i = c^-1 * s * surviving.
        std::vector<std::string> nvars = vars;
        if (name != vars[xi] && std::find(vars.begin(), vars.end(), name) != vars.end())
            throw Error(ErrorCode::InvalidArgument, "new variable '" + name + "' clashes with an existing one");
        nvars[xi] = name;
        Scalar c = eliminated.terms().begin()->second;
        std::vector<std::string> tmp = vars;
        tmp.push_back("\x01new"); // temporary slot so the old x_i and s can coexist
        MultiPoly s = MultiPoly::variable(tmp, ring, tmp.size() - 1);
        MultiPoly image = (s * surviving.with_variables(tmp)).scaled(c.inverse());
        std::vector<std::string> renamed = tmp;
        renamed[xi] = "\x01old";
        renamed.back() = name;

        std::size_t sj = coordinate_index(surviving);
        for (const auto& e : eqs) {
            MultiPoly total = substitute(e.with_variables(tmp), {{vars[xi], image}});
            TransformedEquation t;
            // Move to the chart's variable list: s takes x_i's slot.
            std::vector<std::string> final_vars = nvars;
            MultiPoly tot(renamed, ring);
            for (const auto& [m, coef] : total.terms())
                tot.add_term(m, coef);
            t.total = tot.with_variables(final_vars);
            t.strict = t.total;
            if (sj != std::string::npos) {
                std::size_t pos = sj;
                t.exceptional_exponent = t.total.is_zero() ? 0 : t.total.variable_valuation(pos);
                if (t.exceptional_exponent) {
                    Monomial mono(final_vars.size());
                    mono.exps[pos] = t.exceptional_exponent;
                    t.strict = t.total.divide_by_monomial(mono);
                }
            }
            out.transforms.push_back(std::move(t));
        }
        out.chart.variables = nvars;
        for (const auto& t : out.transforms) {
            out.unit_ideal = out.unit_ideal || nonzero_constant(t.strict);
            if (!t.strict.is_zero())
                out.chart.equations.push_back(t.strict);
        }
    } else {
        // Graph chart: add s * surviving - eliminated = 0 in one more variable.
        if (std::find(vars.begin(), vars.end(), name) != vars.end())
            throw Error(ErrorCode::InvalidArgument, "new variable '" + name + "' clashes with an existing one");
        std::vector<std::string> nvars = vars;
        nvars.push_back(name);
        out.graph_presentation = true;
        for (const auto& e : eqs) {
            TransformedEquation t;
            t.total = e.with_variables(nvars);
            t.strict = t.total;
            out.transforms.push_back(t);
        }
        out.chart.variables = nvars;
        for (const auto& t : out.transforms) {
            out.unit_ideal = out.unit_ideal || nonzero_constant(t.strict);
            if (!t.strict.is_zero())
                out.chart.equations.push_back(t.strict);
        }
        MultiPoly s = MultiPoly::variable(nvars, ring, nvars.size() - 1);
        out.chart.equations.push_back(s * surviving.with_variables(nvars) - eliminated.with_variables(nvars));
    }
    out.chart.provenance = provenance.empty() ? "blow-up along (" + eliminated.to_string() + ", " +
                                                    surviving.to_string() + "), chart " + name
                                              : provenance;
    return out;
}

} // namespace

BlowupCharts blowup_charts(const std::vector<MultiPoly>& equations, const MultiPoly& g1, const MultiPoly& g2,
                           const BlowupNames& names, const std::string& provenance)
{
    if (g1.vars() != g2.vars() || !(g1.ring() == g2.ring()))
        throw Error(ErrorCode::InvalidArgument, "center generators must share variables and ring");
    for (const auto& e : equations)
        if (e.vars() != g1.vars() || !(e.ring() == g1.ring()))
            throw Error(ErrorCode::InvalidArgument, "equations and center must share variables and ring");
    if (proportional(g1, g2))
        throw Error(ErrorCode::ProportionalCenter, "center generators " + g1.to_string() + " and " + g2.to_string() +
                                                       " are proportional");
    std::string pu = provenance.empty() ? std::string{} : provenance + " [chart " + names.u + "]";
    std::string pv = provenance.empty() ? std::string{} : provenance + " [chart " + names.v + "]";
    return {make_chart(equations, g2, g1, names.u, pu), make_chart(equations, g1, g2, names.v, pv)};
}

std::vector<BlowupCharts> blowup_pipeline(const std::vector<MultiPoly>& equations,
                                          const std::vector<BlowupStep>& steps)
{
    std::vector<BlowupCharts> out;
    std::vector<MultiPoly> eqs = equations;
    std::vector<std::pair<MultiPoly, MultiPoly>> centers;
    for (const auto& st : steps)
        centers.emplace_back(st.g1, st.g2);
    std::string trail;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::vector<MultiPoly> inputs = eqs;
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            inputs.push_back(centers[j].first);
            inputs.push_back(centers[j].second);
        }
        std::string here = "blow-up along (" + centers[i].first.to_string() + ", " + centers[i].second.to_string() + ")";
        std::string prov = trail.empty() ? here : trail + "; " + here;
        BlowupCharts bc = blowup_charts(inputs, centers[i].first, centers[i].second, steps[i].names, prov);
        const BlowupChart& next = steps[i].follow_u ? bc.u : bc.v;
        std::vector<MultiPoly> kept;
        for (std::size_t j = 0; j < eqs.size(); ++j)
            if (!next.transforms[j].strict.is_zero())
                kept.push_back(next.transforms[j].strict);
        if (next.graph_presentation)
            kept.push_back(next.chart.equations.back());
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            std::size_t base = eqs.size() + 2 * (j - i - 1);
            centers[j] = {next.transforms[base].total, next.transforms[base + 1].total};
        }
        // Report only the genuine equations in each chart.
        for (BlowupChart* c : {&bc.u, &bc.v}) {
            c->transforms.resize(eqs.size());
            std::vector<MultiPoly> chart_eqs;
            for (const auto& t : c->transforms)
                if (!t.strict.is_zero())
                    chart_eqs.push_back(t.strict);
            if (c->graph_presentation)
                chart_eqs.push_back(c->chart.equations.back());
            c->chart.equations = chart_eqs;
            c->unit_ideal = false;
            for (const auto& e : chart_eqs)
                c->unit_ideal = c->unit_ideal || (e.is_constant() && !e.is_zero());
        }
        trail = next.chart.provenance;
        eqs = kept;
        out.push_back(std::move(bc));
    }
    return out;
}

} // namespace nodelift::singscan
