#pragma once

// Explicit Motzkin paths over the step alphabet {U, D, H} and exact
// counts of even / odd paths (by number of U steps; zero counts as even).

#include "motzkin/number.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace motzkin {

/// Largest length enumerate_paths accepts. Motzkin(18) is about 4.1e7.
inline constexpr std::size_t kEnumerationCap = 18;

enum class Parity { even, odd };

struct MotzkinPath {
    std::string steps;

    std::size_t length() const noexcept { return steps.size(); }
    std::size_t up_steps() const noexcept;
    Parity parity() const noexcept;

    friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;
};

/// True iff every prefix has #U >= #D and the word ends with #U == #D.
/// Throws std::invalid_argument on a character outside {U, D, H}.
bool is_motzkin_path(std::string_view word);

/// Calls `visit` for every Motzkin path of length n in lexicographic order
/// with D < H < U. The string_view is only valid during the call.
void for_each_path(std::size_t n, const std::function<void(std::string_view)>& visit);

/// All Motzkin paths of length n, lexicographic with D < H < U.
/// Throws std::out_of_range when n > kEnumerationCap.
std::vector<MotzkinPath> enumerate_paths(std::size_t n);

struct ParityCounts {
    Integer even;
    Integer odd;

    Integer total() const { return even + odd; }
    friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

/// Counts by walking every path; same cap as enumerate_paths.
ParityCounts count_by_parity_enum(std::size_t n);

/// Counts by dynamic programming over (height, parity of U steps so far).
ParityCounts count_by_parity_dp(std::size_t n);

/// count_by_parity_dp for every length 0..n_max in one sweep.
std::vector<ParityCounts> count_by_parity_dp_table(std::size_t n_max);

}  // namespace motzkin
