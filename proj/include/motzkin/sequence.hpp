#pragma once

#include "motzkin/number.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace motzkin {

/// Integer terms a(offset), a(offset + 1), ... The offset may be negative.
class IntegerSequence {
public:
    IntegerSequence() = default;
    IntegerSequence(long offset, std::vector<Integer> terms) : offset_(offset), terms_(std::move(terms)) {}

    long offset() const noexcept { return offset_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Index of the last stored term; offset() - 1 when empty.
    long last_index() const noexcept { return offset_ + static_cast<long>(terms_.size()) - 1; }

    bool contains(long n) const noexcept { return n >= offset_ && n <= last_index(); }

    const Integer& at(long n) const {
        if (!contains(n)) {
            throw std::out_of_range("sequence index " + std::to_string(n) + " outside [" +
                                    std::to_string(offset_) + ", " + std::to_string(last_index()) + "]");
        }
        return terms_[static_cast<std::size_t>(n - offset_)];
    }

    const std::vector<Integer>& terms() const noexcept { return terms_; }

    friend bool operator==(const IntegerSequence&, const IntegerSequence&) = default;

private:
    long offset_ = 0;
    std::vector<Integer> terms_;
};

}  // namespace motzkin
