#include "motzkin/paths.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace motzkin {

std::size_t MotzkinPath::up_steps() const noexcept {
    return static_cast<std::size_t>(std::count(steps.begin(), steps.end(), 'U'));
}

Parity MotzkinPath::parity() const noexcept { return up_steps() % 2 == 0 ? Parity::even : Parity::odd; }

bool is_motzkin_path(std::string_view word) {
    long height = 0;
    bool valid = true;
    for (const char c : word) {
        switch (c) {
            case 'U': ++height; break;
            case 'D': --height; break;
            case 'H': break;
            default:
                throw std::invalid_argument(std::string("invalid step '") + c + "', expected U, D or H");
        }
        if (height < 0) valid = false;
    }
    return valid && height == 0;
}

namespace {

void extend(std::string& word, std::size_t n, std::size_t height,
            const std::function<void(std::string_view)>& visit) {
    const std::size_t remaining = n - word.size();
    if (remaining == 0) {
        visit(word);
        return;
    }
    // D < H < U; a step is allowed only if the path can still return to the axis.
    if (height > 0) {
        word.push_back('D');
        extend(word, n, height - 1, visit);
        word.pop_back();
    }
    if (height <= remaining - 1) {
        word.push_back('H');
        extend(word, n, height, visit);
        word.pop_back();
    }
    if (height + 1 <= remaining - 1) {
        word.push_back('U');
        extend(word, n, height + 1, visit);
        word.pop_back();
    }
}

void check_cap(std::size_t n) {
    if (n > kEnumerationCap) {
        throw std::out_of_range("path enumeration is capped at length " + std::to_string(kEnumerationCap) +
                                ", got " + std::to_string(n));
    }
}

}  // namespace

void for_each_path(std::size_t n, const std::function<void(std::string_view)>& visit) {
    check_cap(n);
    std::string word;
    word.reserve(n);
    extend(word, n, 0, visit);
}

std::vector<MotzkinPath> enumerate_paths(std::size_t n) {
    std::vector<MotzkinPath> paths;
    for_each_path(n, [&](std::string_view w) { paths.push_back(MotzkinPath{std::string(w)}); });
    return paths;
}

ParityCounts count_by_parity_enum(std::size_t n) {
    unsigned long long even = 0;
    unsigned long long odd = 0;
    for_each_path(n, [&](std::string_view w) {
        const auto ups = std::count(w.begin(), w.end(), 'U');
        (ups % 2 == 0 ? even : odd) += 1;
    });
    return {Integer(static_cast<unsigned long>(even)), Integer(static_cast<unsigned long>(odd))};
}

std::vector<ParityCounts> count_by_parity_dp_table(std::size_t n_max) {
    // ways[h][p]: paths of the current length ending at height h with U-count parity p.
    // Heights above n_max / 2 can never return to the axis in time.
    const std::size_t h_max = n_max / 2 + 1;
    std::vector<std::array<Integer, 2>> ways(h_max + 1);
    std::vector<std::array<Integer, 2>> next(h_max + 1);
    ways[0][0] = 1;

    std::vector<ParityCounts> table;
    table.reserve(n_max + 1);
    table.push_back({ways[0][0], ways[0][1]});
    for (std::size_t len = 1; len <= n_max; ++len) {
        const std::size_t reach = std::min({len, n_max - len, h_max});
        for (std::size_t h = 0; h <= reach; ++h) {
            for (int p = 0; p < 2; ++p) {
                Integer& cell = next[h][p];
                cell = ways[h][p];                           // H
                if (h + 1 <= h_max) cell += ways[h + 1][p];  // D from above
                if (h > 0) cell += ways[h - 1][1 - p];       // U from below flips parity
            }
        }
        for (std::size_t h = reach + 1; h <= h_max; ++h) next[h][0] = next[h][1] = 0;
        std::swap(ways, next);
        table.push_back({ways[0][0], ways[0][1]});
    }
    return table;
}

ParityCounts count_by_parity_dp(std::size_t n) { return count_by_parity_dp_table(n).back(); }

}  // namespace motzkin
