#pragma once

#include "nodelift/arith/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nodelift {

struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::uint64_t degree() const;
    bool divides(const Monomial& other) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, largest first: higher total degree, then
/// lexicographically larger exponent vector.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with coefficients in a run-time Ring.
/// Zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Scalar, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(std::vector<std::string> vars, Ring ring);

    static MultiPoly constant(std::vector<std::string> vars, const Scalar& c);
    static MultiPoly variable(std::vector<std::string> vars, const Ring& ring, std::size_t index);
    static MultiPoly variable(std::vector<std::string> vars, const Ring& ring, const std::string& name);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const Ring& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// -1 for the zero polynomial.
    long long total_degree() const;
    bool is_homogeneous() const;
    std::optional<std::size_t> index_of(const std::string& name) const;

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(std::uint32_t e) const;

    /// point.size() == nvars and every entry in ring(); RingMismatch otherwise.
    Scalar evaluate(std::span<const Scalar> point) const;
    MultiPoly derivative(std::size_t var) const;

    /// Rewrites over another ring (see convert()).
    MultiPoly map_coefficients(const Ring& target) const;
    /// Re-expresses over a new variable list; every used variable must appear there.
    MultiPoly with_variables(const std::vector<std::string>& vars) const;

    /// Exact division by a monomial; InexactDivision if some term is not divisible.
    MultiPoly divide_by_monomial(const Monomial& m) const;
    /// Largest e such that vars[var]^e divides every term.
    std::uint32_t variable_valuation(std::size_t var) const;

    /// Canonical text in the polynomial grammar (graded-lex, largest term first).
    std::string to_string() const;

private:
    void require_compatible(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    Ring ring_;
    Terms terms_;
};

std::vector<MultiPoly> partial_derivatives(const MultiPoly& f);

/// Replaces each assigned variable by a polynomial. All images share one variable
/// list and ring; unassigned variables must also exist in that list.
MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& assignment);

/// Termwise reduce_rational into Z/p^k; DenominatorNotInvertible when p divides a denominator.
MultiPoly reduce_coefficients(const MultiPoly& f, const Modulus& m);

/// Monomials of exactly the given degree in n variables, largest first in grlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

} // namespace nodelift
