#pragma once

#include "nodelift/linalg.hpp"
#include "nodelift/poly/multipoly.hpp"
#include "nodelift/projective.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nodelift::arrangement {

inline constexpr std::size_t kAmbient = 4;

/// Coefficient vector of a linear form in four variables; InvalidArgument otherwise.
Vector linear_coefficients(const MultiPoly& form);

/// Line of P^3 as the intersection of two planes.
class ProjLine {
public:
    ProjLine() = default;
    /// Rows are two independent linear forms; PlaneCollapse if they are dependent.
    ProjLine(const Vector& a, const Vector& b);

    /// Canonical RREF of the defining forms (2 x 4); authoritative for equality.
    const Matrix& dual() const noexcept { return dual_; }
    /// Canonical RREF of two points spanning the line (2 x 4).
    const Matrix& span() const noexcept { return span_; }

    bool contains(const Vector& point) const;
    /// True when the plane with these coefficients contains the whole line.
    bool lies_in(const Vector& plane) const;

    std::string to_string() const;

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.dual_ == b.dual_; }
    friend bool operator<(const ProjLine& a, const ProjLine& b) { return lexicographic_less(a.dual_, b.dual_); }

private:
    Matrix dual_;
    Matrix span_;
};

class PlaneArrangement {
public:
    /// Linear forms over a field in four common variables. Rejects zero forms
    /// (InvalidArgument), proportional pairs (DegenerateArrangement) and rings
    /// that are not fields.
    explicit PlaneArrangement(std::vector<MultiPoly> planes);

    const Ring& field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::vector<MultiPoly>& planes() const noexcept { return planes_; }
    const Matrix& coefficients() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return planes_.size(); }

    /// Same planes with coefficients reduced mod p. Requires a rational arrangement;
    /// each form is first scaled to a primitive integer vector. PlaneCollapse when
    /// two reductions become proportional.
    PlaneArrangement reduce(std::uint64_t p) const;

private:
    Ring field_;
    std::vector<std::string> vars_;
    std::vector<MultiPoly> planes_;
    Matrix coeffs_;
};

struct LineRecord {
    ProjLine line;
    std::vector<std::size_t> planes; ///< indices of the planes containing the line
    std::size_t multiplicity() const { return planes.size(); }
};

struct PointRecord {
    ProjPoint point;
    std::vector<std::size_t> planes; ///< indices of the planes through the point
    std::size_t r = 0;               ///< lines through the point of multiplicity >= 3
    std::size_t q() const { return planes.size(); }
    /// "p_q^r"
    std::string type() const;
};

struct IncidenceReport {
    Ring field;
    std::vector<LineRecord> lines;   ///< multiplicity >= 2, canonically ordered
    std::vector<PointRecord> points; ///< q >= 3, canonically ordered

    std::size_t lines_with_multiplicity(std::size_t m) const;
    std::size_t points_with_q(std::size_t q) const;
    const PointRecord* find(const ProjPoint& p) const;
    const LineRecord* find(const ProjLine& l) const;
};

IncidenceReport incidence_analysis(const PlaneArrangement& arr, unsigned jobs = 1);

struct PointChange {
    ProjPoint point; ///< in the reduction
    std::size_t old_q = 0;
    std::size_t new_q = 0;
    std::size_t old_r = 0;
    std::size_t new_r = 0;
};

struct LineChange {
    ProjLine line;
    std::size_t old_multiplicity = 0;
    std::size_t new_multiplicity = 0;
};

struct ReductionDiff {
    std::uint64_t p = 0;
    std::vector<PointRecord> new_points; ///< no characteristic-0 point reduces to them
    std::vector<LineRecord> new_lines;
    std::vector<std::size_t> vanished_planes;
    std::vector<PointChange> point_changes;
    std::vector<LineChange> line_changes;

    bool empty() const;
    /// Points of the reduction with q >= min_q that either are new or had q < min_q over Q.
    std::vector<ProjPoint> gained_points(std::size_t min_q) const;
};

/// Compares the arrangement over Q with its reduction mod p.
ReductionDiff compare_reduction(const PlaneArrangement& arr, std::uint64_t p, unsigned jobs = 1);

/// Primitive integer representative of a rational projective vector.
std::vector<BigInt> primitive_integer_vector(const Vector& v);
/// Reduction mod p of a point of P^3(Q).
ProjPoint reduce_point(const ProjPoint& pt, std::uint64_t p);

struct FormSpace {
    std::uint32_t degree = 0;
    std::vector<Monomial> monomials; ///< column order (grlex, largest first)
    Matrix basis;                    ///< RREF rows over the columns
    std::vector<MultiPoly> forms(const std::vector<std::string>& vars) const;
    std::size_t dimension() const { return basis.size(); }
};

/// Degree-d forms in four variables vanishing identically on every line.
FormSpace forms_vanishing_on_lines(std::uint32_t degree, const std::vector<ProjLine>& lines, const Ring& field);

} // namespace nodelift::arrangement
