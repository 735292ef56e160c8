#pragma once

// Motzkin numbers, their even/odd split and the shadow sequence, each
// produced by a recurrence, by expanding a closed-form generating function
// and (for the even counts) by a binomial-Catalan sum.

#include "motzkin/number.hpp"
#include "motzkin/power_series.hpp"
#include "motzkin/sequence.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace motzkin {

/// Raised when a recurrence step that must divide exactly does not.
class InexactDivision : public std::runtime_error {
public:
    InexactDivision(std::size_t n, const std::string& what) : std::runtime_error(what), index_(n) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// m(n) from (n+2) m(n) = (2n+1) m(n-1) + 3(n-1) m(n-2), m(0) = m(1) = 1.
/// An inexact division here is a bug, so it throws std::logic_error.
IntegerSequence motzkin_by_recurrence(std::size_t n_max);

/// s(n) from (n+2) s(n) = (2n+1) s(n-1) - 5(n-1) s(n-2), s(0) = s(1) = 1.
/// Throws InexactDivision if a step does not divide exactly.
IntegerSequence shadow_by_recurrence(std::size_t n_max);

enum class GeneratingFunction { motzkin, even, odd, shadow };

/// Expands M, A, B or S to `order` from its closed form:
///   M = (1 - x - q) / (2x^2)
///   A = (p - q) / (4x^2)
///   B = (2 - 2x - q - p) / (4x^2)
///   S = (-1 + x + p) / (2x^2)
/// with q = sqrt(1 - 2x - 3x^2) and p = sqrt(1 - 2x + 5x^2). The
/// numerators vanish through x^1, so the division is a shift by -2.
/// Throws SeriesError if a coefficient comes out non-integral.
Series expand_closed_form(GeneratingFunction which, std::size_t order);

enum class FunctionalEquation {
    motzkin,  ///< M = 1 + xM + x^2 M^2
    even,     ///< A = 1 + xA + 2x^2 AB
    odd,      ///< B = xB + x^2 A^2 + x^2 B^2
    shadow,   ///< S = 1 + xS - x^2 S^2
};

/// LHS - RHS with the series from expand_closed_form; zero when the equation holds.
Series functional_equation_residual(FunctionalEquation kind, std::size_t order);

Integer catalan(std::size_t n);

Integer binomial(std::size_t n, std::size_t k);

/// sum_{k=0}^{floor(n/4)} C(n, 4k) Cat(2k): the number of even Motzkin paths of length n.
Integer even_count_formula(std::size_t n);

/// (even counts, odd counts) for lengths 0..n_max, read off the A and B expansions.
std::pair<IntegerSequence, IntegerSequence> parity_split_from_closed_forms(std::size_t n_max);

}  // namespace motzkin
