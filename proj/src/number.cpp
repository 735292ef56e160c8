#include "motzkin/number.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace motzkin {

namespace {

bool is_decimal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_decimal(text)) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace motzkin
