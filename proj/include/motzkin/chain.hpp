#pragma once

// The nine-sequence cluster linking Motzkin numbers to Fibonacci numbers,
// and the two-step pipeline (sign inversion plus series reversion) between
// the Motzkin shadows and the Fibonacci numbers, in either order and
// either direction.

#include "motzkin/power_series.hpp"
#include "motzkin/sequence.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace motzkin {

enum class SequenceId {
    A000045,  ///< Fibonacci numbers
    A001006,  ///< Motzkin numbers
    A007440,  ///< reversion of the Fibonacci g.f.; sign-inverted shadows
    A039834,  ///< signed Fibonacci numbers
    A100223,  ///< shadows with head 1, 0
    A107587,  ///< even Motzkin paths
    A214649,  ///< shadows with head 1, -1
    A343386,  ///< odd Motzkin paths
    A343773,  ///< shadows: even minus odd
};

inline constexpr std::array<SequenceId, 9> kAllSequences = {
    SequenceId::A000045, SequenceId::A001006, SequenceId::A007440, SequenceId::A039834, SequenceId::A100223,
    SequenceId::A107587, SequenceId::A214649, SequenceId::A343386, SequenceId::A343773,
};

std::string_view name(SequenceId id) noexcept;
std::optional<SequenceId> parse_sequence_id(std::string_view text);

/// OEIS offset: index of the first term.
long canonical_offset(SequenceId id) noexcept;

/// First n_terms terms of `id` starting at its canonical offset.
IntegerSequence generate(SequenceId id, std::size_t n_terms);

/// x S(x) truncated at `order`: the shadow g.f. shifted right by one.
Series shifted_shadow_series(std::size_t order);

/// F(x) = x + x^2 + 2x^3 + ... built from F(n) = F(n-1) + F(n-2).
Series fibonacci_series(std::size_t order);

/// Coefficients 1..order of the reversion of x S(x), indexed from 1.
IntegerSequence reverse_shadows(std::size_t order);

enum class ChainRoute { invert_then_reverse, reverse_then_invert };

/// Shadows to Fibonacci: F(1), F(2), ..., n_terms terms, offset 1.
IntegerSequence run_forward(ChainRoute route, std::size_t n_terms);

/// Fibonacci to shadows: s(0), ..., s(n_terms - 1), offset 0.
IntegerSequence run_backward(ChainRoute route, std::size_t n_terms);

/// The route steps on an arbitrary series with zero constant and non-zero
/// linear term. Both directions apply the same two steps.
Series apply_route(ChainRoute route, const Series& f);

}  // namespace motzkin
