#pragma once

#include "nodelift/arith/quadsurd.hpp"
#include "nodelift/arith/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nodelift::fiberprod {

/// Base point of P^1 over Q or a real quadratic field.
class Position {
public:
    enum class Kind { Rational, Surd, Infinity };

    Position() = default;
    static Position rational(Rational q);
    /// Collapses to a rational position when b = 0.
    static Position surd(QuadSurd x);
    static Position infinity();
    /// "inf", "8/9", "-2", "-123/2+55/2*sqrt5".
    static Position parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    bool is_infinity() const noexcept { return kind_ == Kind::Infinity; }
    const Rational& value() const { return q_; }
    const QuadSurd& surd_value() const { return s_; }
    /// Galois conjugate; rational positions are fixed.
    Position conjugate() const;

    std::string to_string() const;
    friend bool operator==(const Position& a, const Position& b);

private:
    Kind kind_ = Kind::Rational;
    Rational q_;
    QuadSurd s_;
};

/// Element of F_p or the point at infinity.
struct Residue {
    bool infinite = false;
    std::uint64_t value = 0;

    static Residue inf() { return {true, 0}; }
    std::string to_string() const;
    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue& a, const Residue& b)
    {
        if (a.infinite != b.infinite)
            return a.infinite <=> b.infinite;
        return a.value <=> b.value;
    }
};

/// Images of x under the embeddings of its field into F_p u {inf}; p odd prime.
std::vector<Residue> reduce_position(const Position& x, std::uint64_t p);

struct CoincidenceResult {
    std::uint64_t p = 0;
    std::vector<Residue> residues; ///< common residues, ascending
    bool residue_zero_or_one = false;
    bool at_infinity = false;
    /// None of the common residues is 0, 1 or inf.
    bool admissible() const { return !residue_zero_or_one && !at_infinity; }
};

struct CoincidenceReport {
    Position lambda;
    Position mu;
    std::uint64_t bound = 0;
    std::vector<CoincidenceResult> primes; ///< ascending by p
    /// Part of the norm numerator with no prime factor <= bound (1 when fully factored).
    BigInt unfactored = 1;
    bool complete() const { return unfactored == 1; }
    std::vector<std::uint64_t> admissible_primes() const;
};

/// Odd primes p <= bound at which lambda and mu share a reduction. Candidates come
/// from factoring the numerator of N(lambda - mu) and the denominators; each is
/// confirmed by reduce_position. EqualPositions when lambda = mu.
CoincidenceReport coincidence_primes(const Position& lambda, const Position& mu, std::uint64_t bound);

/// Direct per-prime check: reduce both positions mod p and intersect.
std::vector<Residue> common_residues(const Position& lambda, const Position& mu, std::uint64_t p);

struct Fiber {
    Position position;
    unsigned n = 1; ///< Kodaira type I_n
};

struct BeauvilleSurface {
    std::string label;
    std::vector<Fiber> fibers;
    std::string note;

    /// The fibre not at 0, 1 or inf (the last one when several qualify).
    std::optional<Position> fourth_position() const;
    /// Problems with the fibre data (count, duplicate positions, I_0); empty when valid.
    std::vector<std::string> issues() const;
};

struct BarePosition {
    Position position;
    std::string note;
};

struct Catalogue {
    std::vector<BeauvilleSurface> surfaces;
    std::vector<BarePosition> extra_positions;

    /// Distinct fourth-fibre positions followed by the bare positions, in file order.
    std::vector<Position> positions() const;
};

struct PrimeTableRow {
    Position lambda;
    Position mu;
    CoincidenceReport report;
};

struct PrimeTable {
    std::uint64_t bound = 0;
    std::vector<PrimeTableRow> rows;
    std::vector<std::uint64_t> admissible_union() const;
    std::vector<std::uint64_t> all_union() const;
};

PrimeTable build_prime_table(const Catalogue& catalogue, std::uint64_t bound, unsigned jobs = 1);

} // namespace nodelift::fiberprod
