#include "nodelift/arrangement/arrangement.hpp"
#include "nodelift/error.hpp"
#include "nodelift/parallel.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

namespace nodelift::arrangement {

namespace {

Scalar dot(const Vector& a, const Vector& b)
{
    Scalar s = Scalar::zero(a.front().ring());
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool dependent(const Vector& a, const Vector& b, const Ring& field) { return rank({a, b}, field, kAmbient) < 2; }

std::string join_vector(const Vector& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].to_string();
    return s;
}

} // namespace

Vector linear_coefficients(const MultiPoly& form)
{
    if (form.nvars() != kAmbient)
        throw Error(ErrorCode::InvalidArgument, "plane must be a form in four variables: " + form.to_string());
    Vector v(kAmbient, Scalar::zero(form.ring()));
    for (const auto& [m, c] : form.terms()) {
        if (m.degree() != 1)
            throw Error(ErrorCode::InvalidArgument, "not a linear form: " + form.to_string());
        for (std::size_t i = 0; i < kAmbient; ++i)
            if (m.exps[i])
                v[i] = c;
    }
    return v;
}

ProjLine::ProjLine(const Vector& a, const Vector& b)
{
    const Ring& field = a.front().ring();
    Echelon e = rref({a, b}, field, kAmbient);
    if (e.rank() != 2)
        throw Error(ErrorCode::PlaneCollapse, "forms (" + join_vector(a) + ") and (" + join_vector(b) +
                                                  ") do not cut out a line");
    dual_ = std::move(e.rows);
    span_ = nullspace(dual_, field, kAmbient);
}

bool ProjLine::contains(const Vector& point) const
{
    return std::all_of(dual_.begin(), dual_.end(), [&](const Vector& row) { return dot(row, point).is_zero(); });
}

bool ProjLine::lies_in(const Vector& plane) const
{
    return std::all_of(span_.begin(), span_.end(), [&](const Vector& pt) { return dot(plane, pt).is_zero(); });
}

std::string ProjLine::to_string() const
{
    return "[" + join_vector(dual_[0]) + " | " + join_vector(dual_[1]) + "]";
}

PlaneArrangement::PlaneArrangement(std::vector<MultiPoly> planes) : planes_(std::move(planes))
{
    if (planes_.empty())
        throw Error(ErrorCode::InvalidArgument, "arrangement has no planes");
    field_ = planes_.front().ring();
    vars_ = planes_.front().vars();
    if (!field_.is_field() || field_.kind() == RingKind::Dual)
        throw Error(ErrorCode::InvalidArgument, "arrangement analysis needs a field, got " + field_.describe());
    for (std::size_t i = 0; i < planes_.size(); ++i) {
        const auto& f = planes_[i];
        if (f.vars() != vars_ || !(f.ring() == field_))
            throw Error(ErrorCode::InvalidArgument, "planes must share variables and field");
        if (f.is_zero())
            throw Error(ErrorCode::InvalidArgument, "plane " + std::to_string(i) + " is the zero form");
        coeffs_.push_back(linear_coefficients(f));
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = i + 1; j < coeffs_.size(); ++j)
            if (dependent(coeffs_[i], coeffs_[j], field_))
                throw Error(ErrorCode::DegenerateArrangement, "planes " + planes_[i].to_string() + " and " +
                                                                  planes_[j].to_string() + " are proportional");
}

std::vector<BigInt> primitive_integer_vector(const Vector& v)
{
    BigInt l = 1;
    for (const auto& c : v) {
        if (!c.holds<Rational>())
            throw Error(ErrorCode::InvalidArgument, "expected rational coordinates");
        l = big_lcm(l, c.as<Rational>().den());
    }
    std::vector<BigInt> out;
    BigInt g = 0;
    for (const auto& c : v) {
        const Rational& q = c.as<Rational>();
        out.push_back(q.num() * (l / q.den()));
        g = big_gcd(g, out.back());
    }
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

PlaneArrangement PlaneArrangement::reduce(std::uint64_t p) const
{
    if (field_.kind() != RingKind::Rational)
        throw Error(ErrorCode::InvalidArgument, "reduction needs a rational arrangement");
    Ring fp = Ring::prime_field(p);
    std::vector<MultiPoly> red;
    for (const auto& row : coeffs_) {
        auto ints = primitive_integer_vector(row);
        MultiPoly f(vars_, fp);
        for (std::size_t i = 0; i < kAmbient; ++i) {
            Monomial m(kAmbient);
            m.exps[i] = 1;
            f.add_term(m, Scalar::from_int(fp, ints[i]));
        }
        red.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < red.size(); ++i)
        for (std::size_t j = i + 1; j < red.size(); ++j)
            if (dependent(linear_coefficients(red[i]), linear_coefficients(red[j]), fp))
                throw Error(ErrorCode::PlaneCollapse, "planes " + planes_[i].to_string() + " and " +
                                                          planes_[j].to_string() + " become proportional mod " +
                                                          std::to_string(p));
    return PlaneArrangement(std::move(red));
}

std::string PointRecord::type() const { return "p_" + std::to_string(q()) + "^" + std::to_string(r); }

std::size_t IncidenceReport::lines_with_multiplicity(std::size_t m) const
{
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [m](const LineRecord& l) { return l.multiplicity() == m; }));
}

std::size_t IncidenceReport::points_with_q(std::size_t q) const
{
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [q](const PointRecord& p) { return p.q() == q; }));
}

const PointRecord* IncidenceReport::find(const ProjPoint& p) const
{
    auto it = std::lower_bound(points.begin(), points.end(), p,
                               [](const PointRecord& a, const ProjPoint& b) { return a.point < b; });
    return it != points.end() && it->point == p ? &*it : nullptr;
}

const LineRecord* IncidenceReport::find(const ProjLine& l) const
{
    auto it = std::lower_bound(lines.begin(), lines.end(), l,
                               [](const LineRecord& a, const ProjLine& b) { return a.line < b; });
    return it != lines.end() && it->line == l ? &*it : nullptr;
}

IncidenceReport incidence_analysis(const PlaneArrangement& arr, unsigned jobs)
{
    const Ring& field = arr.field();
    const Matrix& a = arr.coefficients();
    const std::size_t n = a.size();
    IncidenceReport rep;
    rep.field = field;

    std::set<ProjLine> seen_lines;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ProjLine l(a[i], a[j]);
            if (!seen_lines.insert(l).second)
                continue;
            LineRecord rec{l, {}};
            for (std::size_t k = 0; k < n; ++k)
                if (l.lies_in(a[k]))
                    rec.planes.push_back(k);
            rep.lines.push_back(std::move(rec));
        }
    std::sort(rep.lines.begin(), rep.lines.end(), [](const auto& x, const auto& y) { return x.line < y.line; });

    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                triples.push_back({i, j, k});

    std::mutex mu;
    std::set<ProjPoint> seen_points;
    parallel_ranges(triples.size(), jobs, [&](std::uint64_t b, std::uint64_t e, unsigned) {
        std::set<ProjPoint> local;
        for (std::uint64_t t = b; t < e; ++t) {
            const auto& [i, j, k] = triples[t];
            Matrix ns = nullspace({a[i], a[j], a[k]}, field, kAmbient);
            if (ns.size() == 1)
                local.insert(ProjPoint(ns.front()));
        }
        std::lock_guard lock(mu);
        seen_points.insert(local.begin(), local.end());
    });

    for (const auto& pt : seen_points) {
        PointRecord rec{pt, {}, 0};
        for (std::size_t k = 0; k < n; ++k)
            if (dot(a[k], pt.coords()).is_zero())
                rec.planes.push_back(k);
        for (const auto& l : rep.lines)
            if (l.multiplicity() >= 3 && l.line.contains(pt.coords()))
                ++rec.r;
        rep.points.push_back(std::move(rec));
    }
    return rep;
}

ProjPoint reduce_point(const ProjPoint& pt, std::uint64_t p)
{
    Ring fp = Ring::prime_field(p);
    Vector v;
    for (const auto& x : primitive_integer_vector(pt.coords()))
        v.push_back(Scalar::from_int(fp, x));
    return ProjPoint(std::move(v));
}

bool ReductionDiff::empty() const
{
    return new_points.empty() && new_lines.empty() && vanished_planes.empty() && point_changes.empty() &&
           line_changes.empty();
}

std::vector<ProjPoint> ReductionDiff::gained_points(std::size_t min_q) const
{
    std::vector<ProjPoint> out;
    for (const auto& p : new_points)
        if (p.q() >= min_q)
            out.push_back(p.point);
    for (const auto& c : point_changes)
        if (c.new_q >= min_q && c.old_q < min_q)
            out.push_back(c.point);
    std::sort(out.begin(), out.end());
    return out;
}

ReductionDiff compare_reduction(const PlaneArrangement& arr, std::uint64_t p, unsigned jobs)
{
    PlaneArrangement red = arr.reduce(p);
    IncidenceReport q0 = incidence_analysis(arr, jobs);
    IncidenceReport qp = incidence_analysis(red, jobs);
    const Matrix& rc = red.coefficients();

    ReductionDiff diff;
    diff.p = p;

    std::map<ProjPoint, std::pair<std::size_t, std::size_t>> point_image; // max (q, r) over preimages
    for (const auto& rec : q0.points) {
        auto& slot = point_image[reduce_point(rec.point, p)];
        slot.first = std::max(slot.first, rec.q());
        slot.second = std::max(slot.second, rec.r);
    }
    for (const auto& rec : qp.points) {
        auto it = point_image.find(rec.point);
        if (it == point_image.end())
            diff.new_points.push_back(rec);
        else if (it->second.first != rec.q() || it->second.second != rec.r)
            diff.point_changes.push_back({rec.point, it->second.first, rec.q(), it->second.second, rec.r});
    }

    std::map<ProjLine, std::size_t> line_image;
    for (const auto& rec : q0.lines) {
        ProjLine img(rc[rec.planes[0]], rc[rec.planes[1]]);
        auto& m = line_image[img];
        m = std::max(m, rec.multiplicity());
    }
    for (const auto& rec : qp.lines) {
        auto it = line_image.find(rec.line);
        if (it == line_image.end())
            diff.new_lines.push_back(rec);
        else if (it->second != rec.multiplicity())
            diff.line_changes.push_back({rec.line, it->second, rec.multiplicity()});
    }
    return diff;
}

std::vector<MultiPoly> FormSpace::forms(const std::vector<std::string>& vars) const
{
    std::vector<MultiPoly> out;
    for (const auto& row : basis) {
        MultiPoly f(vars, row.front().ring());
        for (std::size_t j = 0; j < monomials.size(); ++j)
            if (!row[j].is_zero())
                f.add_term(monomials[j], row[j]);
        out.push_back(std::move(f));
    }
    return out;
}

FormSpace forms_vanishing_on_lines(std::uint32_t degree, const std::vector<ProjLine>& lines, const Ring& field)
{
    if (degree == 0)
        throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    FormSpace out;
    out.degree = degree;
    out.monomials = monomials_of_degree(kAmbient, degree);
    const std::size_t cols = out.monomials.size();
    const std::vector<std::string> st{"s", "t"};

    Matrix conditions;
    for (const auto& line : lines) {
        const Vector& P = line.span()[0];
        const Vector& Q = line.span()[1];
        std::vector<MultiPoly> param;
        for (std::size_t i = 0; i < kAmbient; ++i) {
            MultiPoly li(st, field);
            li.add_term(Monomial(std::vector<std::uint32_t>{1, 0}), P[i]);
            li.add_term(Monomial(std::vector<std::uint32_t>{0, 1}), Q[i]);
            param.push_back(std::move(li));
        }
        Matrix block(degree + 1, Vector(cols, Scalar::zero(field)));
        for (std::size_t j = 0; j < cols; ++j) {
            MultiPoly g = MultiPoly::constant(st, Scalar::one(field));
            for (std::size_t i = 0; i < kAmbient; ++i)
                if (out.monomials[j].exps[i])
                    g *= param[i].pow(out.monomials[j].exps[i]);
            for (const auto& [m, c] : g.terms())
                block[m.exps[1]][j] = c;
        }
        for (auto& row : block)
            conditions.push_back(std::move(row));
    }
    out.basis = nullspace(conditions, field, cols);
    return out;
}

} // namespace nodelift::arrangement
