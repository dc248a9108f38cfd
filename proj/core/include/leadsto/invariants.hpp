#pragma once

#include "leadsto/diagram.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace leadsto {

// ---- Laurent polynomials ---------------------------------------------------

// A Laurent polynomial in one variable A over the integers, kept normalized
// (terms sorted by ascending exponent, zero coefficients dropped).
class LaurentPoly {
public:
    LaurentPoly() = default; // zero
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly monomial(int exp, long long coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    // (exponent, coefficient) pairs, ascending exponents, no zero coeffs.
    const std::vector<std::pair<int, long long>>& terms() const { return terms_; }
    long long coeff(int exp) const;
    int min_exp() const; // require a nonzero polynomial
    int max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    // A -> A^-1.
    LaurentPoly substitute_inverse() const;

    bool operator==(const LaurentPoly&) const = default;
    // Total order (lexicographic on the normalized term list); used to store
    // unordered polynomial pairs canonically.
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    // Human-readable, deterministic: e.g. "-A^-16+A^-12+A^-4", "1", "0".
    std::string to_string() const;

private:
    std::vector<std::pair<int, long long>> terms_;
    void normalize();
};

// ---- Kauffman bracket ------------------------------------------------------

// Thrown when a bracket computation would exceed its crossing budget.
struct BudgetExceeded : std::runtime_error {
    int crossings;
    int budget;
    BudgetExceeded(int crossings_, int budget_)
        : std::runtime_error("bracket budget exceeded: " + std::to_string(crossings_) +
                             " crossings > budget " + std::to_string(budget_)),
          crossings(crossings_), budget(budget_) {}
};

// Memo table for bracket recursion, keyed by canonical PD serialization.
using BracketCache = std::unordered_map<std::string, LaurentPoly>;

// Kauffman bracket of a diagram: <unknot> = 1, a 0-crossing diagram with k
// loops evaluates to delta^(k-1) with delta = -A^2 - A^-2, and a crossing
// resolves as A * <A-smoothing> + A^-1 * <B-smoothing>.  Throws
// BudgetExceeded when the diagram has more than `budget` crossings.  Passing
// a cache lets repeated computations share subresults; without one an
// internal cache is still used within the single call.
LaurentPoly kauffman_bracket(const Diagram& d, int budget = 16,
                             BracketCache* cache = nullptr);

// ---- invariant signature ---------------------------------------------------

// A mirror-insensitive link invariant: the number of components together
// with the writhe-normalized bracket (-A^3)^(-w) * <D>, where w counts only
// the self-crossings of each component (that count is independent of
// component orientations).  Since no chirality convention is fixed for the
// inputs, the polynomial is stored as the unordered pair {p(A), p(A^-1)},
// ordered canonically.
struct InvariantSignature {
    int components = 0;
    LaurentPoly poly_low, poly_high; // the pair {p, p mirrored}, poly_low <= poly_high

    bool operator==(const InvariantSignature&) const = default;
    bool operator<(const InvariantSignature& o) const;
};

InvariantSignature signature_of(const Diagram& d, int budget = 16,
                                BracketCache* cache = nullptr);

// ---- reference targets -----------------------------------------------------

enum class Family { Torus2, Twist };

// Target link: Torus2 m -> the torus link T(2,m), m >= 2; Twist m -> the
// twist knot with m crossings, m >= 3 (m == 3 is the trefoil).
struct FamilyTarget {
    Family family = Family::Torus2;
    int m = 0;
    bool operator==(const FamilyTarget&) const = default;
};

std::string family_name(Family f); // "torus2" / "twist"
std::string target_name(const FamilyTarget& t); // e.g. "torus2(5)"

// The standard diagram of a target (the fixture the signature is computed
// from).
Diagram reference_diagram(const FamilyTarget& t);

// Signature of the target link, computed from its standard diagram once and
// cached for the process lifetime.
const InvariantSignature& reference_signature(const FamilyTarget& t);

} // namespace leadsto
