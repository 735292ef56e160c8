#pragma once

// OEIS b-files: one "index value" pair per line, indices consecutive.

#include "motzkin/chain.hpp"
#include "motzkin/number.hpp"
#include "motzkin/sequence.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace motzkin {

class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct BFile {
    std::vector<std::pair<long, Integer>> entries;

    /// Empty sequence at offset 0 when there are no entries.
    IntegerSequence to_sequence() const;
};

/// Blank lines and lines whose first non-blank character is '#' are skipped.
/// Throws BFileError on a malformed line, a duplicate index or a gap.
BFile parse_bfile(std::istream& in);
BFile parse_bfile(const std::string& text);

/// Reads and parses a file; errors carry the path.
BFile read_bfile(const std::filesystem::path& path);

std::string to_bfile_text(const IntegerSequence& seq);

enum class ComparisonStatus { match, mismatch, short_reference };

struct Mismatch {
    long index;
    Integer expected;  ///< reference (b-file) value
    Integer actual;    ///< generated value
};

struct ComparisonReport {
    SequenceId id;
    std::size_t requested = 0;
    std::size_t compared = 0;
    std::optional<Mismatch> first_mismatch;
    ComparisonStatus status = ComparisonStatus::match;
};

/// Compares the first n_terms generated terms of `id` with the reference,
/// index by index from the canonical offset. The reference must cover the
/// canonical offset.
ComparisonReport compare(SequenceId id, const BFile& reference, std::size_t n_terms);

std::string to_string(ComparisonStatus status);
std::string format_report(const ComparisonReport& report);

}  // namespace motzkin
