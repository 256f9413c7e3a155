#include "nodelift/poly/multipoly.hpp"
#include "nodelift/error.hpp"

#include <algorithm>
#include <numeric>

namespace nodelift {

std::uint64_t Monomial::degree() const
{
    return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i])
            return false;
    return true;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    auto da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    return a.exps > b.exps;
}

MultiPoly::MultiPoly(std::vector<std::string> vars, Ring ring) : vars_(std::move(vars)), ring_(std::move(ring)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Scalar& c)
{
    MultiPoly f(std::move(vars), c.ring());
    f.add_term(Monomial(f.nvars()), c);
    return f;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const Ring& ring, std::size_t index)
{
    MultiPoly f(std::move(vars), ring);
    if (index >= f.nvars())
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    Monomial m(f.nvars());
    m.exps[index] = 1;
    f.add_term(m, Scalar::one(ring));
    return f;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const Ring& ring, const std::string& name)
{
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
    auto idx = static_cast<std::size_t>(it - vars.begin());
    return variable(std::move(vars), ring, idx);
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

long long MultiPoly::total_degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<long long>(terms_.begin()->first.degree());
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    auto d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<std::size_t> MultiPoly::index_of(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

Scalar MultiPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c)
{
    if (m.exps.size() != vars_.size())
        throw Error(ErrorCode::InvalidArgument, "monomial length does not match variable count");
    if (!(c.ring() == ring_))
        throw Error(ErrorCode::RingMismatch, "coefficient in " + c.ring().describe() + ", polynomial over " +
                                                 ring_.describe());
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void MultiPoly::require_compatible(const MultiPoly& o) const
{
    if (!(ring_ == o.ring_))
        throw Error(ErrorCode::RingMismatch, ring_.describe() + " vs " + o.ring_.describe());
    if (vars_ != o.vars_)
        throw Error(ErrorCode::InvalidArgument, "polynomials have different variable lists");
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    require_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    require_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o)
{
    require_compatible(o);
    MultiPoly r(vars_, ring_);
    Monomial prod(vars_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < prod.exps.size(); ++i)
                prod.exps[i] = ma.exps[i] + mb.exps[i];
            r.add_term(prod, ca * cb);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    return a.vars_ == b.vars_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const
{
    MultiPoly r(vars_, ring_);
    for (const auto& [m, v] : terms_)
        r.add_term(m, v * c);
    return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const
{
    MultiPoly acc = constant(vars_, Scalar::one(ring_));
    MultiPoly base = *this;
    while (e) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return acc;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const
{
    if (point.size() != vars_.size())
        throw Error(ErrorCode::InvalidArgument, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                                    std::to_string(vars_.size()));
    for (const auto& v : point)
        if (!(v.ring() == ring_))
            throw Error(ErrorCode::RingMismatch, "point coordinate in " + v.ring().describe() + ", polynomial over " +
                                                     ring_.describe());
    // powers[i][e] = point[i]^e, grown lazily
    std::vector<std::vector<Scalar>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        powers[i].push_back(Scalar::one(ring_));
    Scalar acc = Scalar::zero(ring_);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            auto e = m.exps[i];
            if (e == 0)
                continue;
            auto& pw = powers[i];
            while (pw.size() <= e)
                pw.push_back(pw.back() * point[i]);
            t *= pw[e];
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
    if (var >= vars_.size())
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    MultiPoly r(vars_, ring_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] == 0)
            continue;
        Monomial d = m;
        d.exps[var] -= 1;
        r.add_term(d, c * Scalar::from_int(ring_, m.exps[var]));
    }
    return r;
}

MultiPoly MultiPoly::map_coefficients(const Ring& target) const
{
    MultiPoly r(vars_, target);
    for (const auto& [m, c] : terms_)
        r.add_term(m, convert(c, target));
    return r;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const
{
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) {
            bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first.exps[i] != 0; });
            if (used)
                throw Error(ErrorCode::UnknownVariable, "variable '" + vars_[i] + "' missing from target list");
            where[i] = vars.size();
            continue;
        }
        where[i] = static_cast<std::size_t>(it - vars.begin());
    }
    MultiPoly r(vars, ring_);
    for (const auto& [m, c] : terms_) {
        Monomial n(vars.size());
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i])
                n.exps[where[i]] = m.exps[i];
        r.add_term(n, c);
    }
    return r;
}

MultiPoly MultiPoly::divide_by_monomial(const Monomial& m) const
{
    MultiPoly r(vars_, ring_);
    for (const auto& [t, c] : terms_) {
        if (!m.divides(t))
            throw Error(ErrorCode::InexactDivision, "monomial does not divide " + to_string());
        Monomial q = t;
        for (std::size_t i = 0; i < q.exps.size(); ++i)
            q.exps[i] -= m.exps[i];
        r.add_term(q, c);
    }
    return r;
}

std::uint32_t MultiPoly::variable_valuation(std::size_t var) const
{
    if (terms_.empty())
        return 0;
    std::uint32_t v = UINT32_MAX;
    for (const auto& [m, c] : terms_)
        v = std::min(v, m.exps[var]);
    return v;
}

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars)
{
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += vars[i];
        if (m.exps[i] > 1)
            s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

// Returns (negative, magnitude text); magnitude is empty when it is exactly 1.
std::pair<bool, std::string> coefficient_text(const Scalar& c)
{
    if (c.holds<Rational>()) {
        const auto& q = c.as<Rational>();
        bool neg = q < Rational(0);
        Rational a = neg ? -q : q;
        return {neg, a == Rational(1) ? std::string{} : a.to_string()};
    }
    if (c.holds<ModularScalar>()) {
        auto r = c.as<ModularScalar>().residue();
        return {false, r == 1 ? std::string{} : std::to_string(r)};
    }
    if (c.is_one())
        return {false, {}};
    return {false, "(" + c.to_string() + ")"};
}

} // namespace

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        auto [neg, mag] = coefficient_text(c);
        std::string mono = monomial_text(m, vars_);
        std::string body;
        if (mono.empty())
            body = mag.empty() ? "1" : mag;
        else
            body = mag.empty() ? mono : mag + "*" + mono;
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::vector<MultiPoly> partial_derivatives(const MultiPoly& f)
{
    std::vector<MultiPoly> out;
    out.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i)
        out.push_back(f.derivative(i));
    return out;
}

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& assignment)
{
    if (assignment.empty())
        return f;
    const MultiPoly& ref = assignment.begin()->second;
    const auto& target_vars = ref.vars();
    const Ring& ring = ref.ring();
    if (!(ring == f.ring()))
        throw Error(ErrorCode::RingMismatch, "substitution images over " + ring.describe() + ", polynomial over " +
                                                 f.ring().describe());
    std::vector<MultiPoly> images;
    images.reserve(f.nvars());
    for (const auto& name : f.vars()) {
        auto it = assignment.find(name);
        if (it != assignment.end()) {
            if (it->second.vars() != target_vars || !(it->second.ring() == ring))
                throw Error(ErrorCode::RingMismatch, "substitution images must share variables and ring");
            images.push_back(it->second);
        } else if (std::find(target_vars.begin(), target_vars.end(), name) != target_vars.end()) {
            images.push_back(MultiPoly::variable(target_vars, ring, name));
        } else {
            images.push_back(MultiPoly(target_vars, ring)); // placeholder; only an error if used
            bool used = std::any_of(f.terms().begin(), f.terms().end(), [&](const auto& t) {
                return t.first.exps[images.size() - 1] != 0;
            });
            if (used)
                throw Error(ErrorCode::UnknownVariable, "variable '" + name + "' has no image");
        }
    }
    std::vector<std::vector<MultiPoly>> powers(f.nvars());
    MultiPoly one = MultiPoly::constant(target_vars, Scalar::one(ring));
    MultiPoly result(target_vars, ring);
    for (const auto& [m, c] : f.terms()) {
        MultiPoly t = one.scaled(c);
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            auto e = m.exps[i];
            if (e == 0)
                continue;
            auto& pw = powers[i];
            if (pw.empty())
                pw.push_back(one);
            while (pw.size() <= e)
                pw.push_back(pw.back() * images[i]);
            t *= pw[e];
        }
        result += t;
    }
    return result;
}

MultiPoly reduce_coefficients(const MultiPoly& f, const Modulus& m)
{
    if (f.ring().kind() != RingKind::Rational)
        throw Error(ErrorCode::RingMismatch, "reduce_coefficients expects a polynomial over QQ");
    return f.map_coefficients(Ring::modular(m.p, m.k));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree)
{
    std::vector<Monomial> out;
    Monomial cur(nvars);
    // Recursive fill, first variable gets the largest exponent first -> grlex descending.
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (nvars == 0)
            return;
        if (i + 1 == nvars) {
            cur.exps[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            cur.exps[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

} // namespace nodelift
