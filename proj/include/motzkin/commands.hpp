#pragma once

// Command implementations behind the motzkin CLI. Each returns its text
// output (without a trailing newline) so it can be tested without a process.

#include "motzkin/bfile.hpp"
#include "motzkin/chain.hpp"
#include "motzkin/paths.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motzkin {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { plain, json, csv, bfile };

std::optional<OutputFormat> parse_format(std::string_view text);

/// plain: "a, b, c"; csv: "index,value" header then rows; bfile: "index value"
/// rows; json: {"id", "offset", "terms"} with terms as decimal strings.
std::string format_sequence(SequenceId id, const IntegerSequence& seq, OutputFormat format);

std::string cmd_gen(SequenceId id, std::size_t n_terms, OutputFormat format);

struct VerifyIdentity {
    std::string_view name;
    std::string_view description;
};

/// The fixed list of identities cmd_verify knows.
std::span<const VerifyIdentity> verify_identities();

struct VerifyReport {
    std::string identity;
    std::size_t order = 0;
    bool passed = false;
    std::optional<long> first_failing_index;
    std::string detail;
};

/// Runs one identity check up to `order`. Throws std::invalid_argument on an
/// unknown identity or order < 1.
VerifyReport cmd_verify(std::string_view identity, std::size_t order);

std::string format_report(const VerifyReport& report);

ComparisonReport cmd_compare(SequenceId id, const std::filesystem::path& bfile, std::size_t n_terms);

/// "even=E odd=O total=T", followed by the path words when `list` is set.
/// The empty path is written as "(empty)".
std::string cmd_paths(std::size_t n, bool list, std::optional<Parity> parity_filter);

/// Splits on whitespace and commas; each token is "p" or "p/q".
std::vector<Rational> parse_coefficients(std::string_view text);

/// Reverse of the series c1 x + c2 x^2 + ...; prints coefficients 1..order.
std::string cmd_reverse(std::span<const Rational> coefficients, std::size_t order);

}  // namespace motzkin
