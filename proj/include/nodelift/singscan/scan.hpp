#pragma once

#include "nodelift/poly/multipoly.hpp"
#include "nodelift/projective.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nodelift::singscan {

inline constexpr std::uint64_t kDefaultGuard = 100'000'000;

struct ScanOptions {
    std::uint64_t guard = kDefaultGuard; ///< maximum number of points visited
    unsigned jobs = 1;
};

enum class NodeClass { Node, Degenerate, NotApplicable };
std::string to_string(NodeClass c);
NodeClass node_class_from_string(const std::string& s);

struct SingularPointRecord {
    std::vector<std::uint64_t> point; ///< residues; projective points are normalized
    bool projective = false;
    std::size_t jacobian_rank = 0;
    std::size_t hessian_rank = 0;
    NodeClass classification = NodeClass::NotApplicable;

    friend bool operator==(const SingularPointRecord&, const SingularPointRecord&) = default;
};

/// Affine complete intersection V(equations) inside A^n with a provenance note.
struct AffineChart {
    std::vector<std::string> variables;
    std::vector<MultiPoly> equations;
    std::string provenance;

    /// Rewrites the equations over another ring (see MultiPoly::map_coefficients).
    AffineChart over(const Ring& ring) const;
};

/// Canonical points of P^n(F_p): first nonzero coordinate 1, ordered by pivot
/// position and then lexicographically. SizeGuard when more than `guard` points.
std::vector<ProjPoint> enumerate_projective_points(std::uint64_t p, unsigned n,
                                                   std::uint64_t guard = kDefaultGuard);

/// Projective points of V(f) over F_p where every partial vanishes, each with the
/// Hessian rank of f dehomogenized at its first nonzero coordinate.
std::vector<SingularPointRecord> singular_locus_hypersurface(const MultiPoly& f, const ScanOptions& opts = {});

/// Affine points of the chart over F_p where all equations vanish and the Jacobian
/// has rank below the number of equations. Hypersurface charts are Hessian-classified.
std::vector<SingularPointRecord> singular_locus_chart(const AffineChart& chart, const ScanOptions& opts = {});

/// Points of (Z/p^k)^n, in lexicographic order, where every polynomial vanishes.
/// All polynomials share one variable list and a Z/p^k coefficient ring.
std::vector<std::vector<std::uint64_t>> common_zeros_affine(const std::vector<MultiPoly>& polys,
                                                           const ScanOptions& opts = {});

/// Rank of the Hessian of f at an affine point over a field.
std::size_t hessian_rank(const MultiPoly& f, const Vector& point);
/// Rank of the Jacobian of `eqs` at an affine point over a field.
std::size_t jacobian_rank(const std::vector<MultiPoly>& eqs, const Vector& point);

} // namespace nodelift::singscan
