#include "motzkin/engine.hpp"

#include <doctest.h>

#include <functional>
#include <string>

using namespace motzkin;

namespace {

std::vector<Integer> coeffs(const Series& f) { return integer_coefficients(f, 0, f.order()); }

std::vector<Integer> I(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Balanced bracket strings of length 2n, counted by brute force.
long count_balanced(int n) {
    long count = 0;
    std::function<void(int, int)> go = [&](int open, int close) {
        if (open == n && close == n) {
            ++count;
            return;
        }
        if (open < n) go(open + 1, close);
        if (close < open) go(open, close + 1);
    };
    go(0, 0);
    return count;
}

}  // namespace

TEST_CASE("Motzkin recurrence") {
    CHECK(motzkin_by_recurrence(13).terms() ==
          I({1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835}));
    CHECK(motzkin_by_recurrence(2).at(2) == 2);
    CHECK(motzkin_by_recurrence(0).terms() == I({1}));
    CHECK(motzkin_by_recurrence(0).offset() == 0);
}

TEST_CASE("shadow recurrence") {
    CHECK(shadow_by_recurrence(13).terms() == I({1, 1, 0, -2, -3, 1, 11, 15, -13, -77, -86, 144, 595, 495}));
    CHECK(shadow_by_recurrence(2).at(2) == 0);
    CHECK(shadow_by_recurrence(3).at(3) == -2);
    CHECK_NOTHROW(shadow_by_recurrence(1000));
    CHECK_NOTHROW(motzkin_by_recurrence(1000));
}

TEST_CASE("closed-form expansions") {
    CHECK(coeffs(expand_closed_form(GeneratingFunction::motzkin, 7)) == I({1, 1, 2, 4, 9, 21, 51, 127}));
    CHECK(coeffs(expand_closed_form(GeneratingFunction::even, 7)) == I({1, 1, 1, 1, 3, 11, 31, 71}));
    CHECK(coeffs(expand_closed_form(GeneratingFunction::odd, 7)) == I({0, 0, 1, 3, 6, 10, 20, 56}));
    CHECK(coeffs(expand_closed_form(GeneratingFunction::shadow, 7)) == I({1, 1, 0, -2, -3, 1, 11, 15}));
    CHECK(expand_closed_form(GeneratingFunction::motzkin, 0).order() == 0);

    SUBCASE("three-way agreement to 200") {
        const Series m = expand_closed_form(GeneratingFunction::motzkin, 200);
        const Series a = expand_closed_form(GeneratingFunction::even, 200);
        const Series b = expand_closed_form(GeneratingFunction::odd, 200);
        const Series s = expand_closed_form(GeneratingFunction::shadow, 200);
        CHECK(coeffs(m) == motzkin_by_recurrence(200).terms());
        CHECK(a + b == m);
        CHECK(coeffs(s) == shadow_by_recurrence(200).terms());
        CHECK(a - b == s);
    }
}

TEST_CASE("functional equations hold exactly") {
    for (const auto kind : {FunctionalEquation::motzkin, FunctionalEquation::even, FunctionalEquation::odd,
                            FunctionalEquation::shadow}) {
        CAPTURE(static_cast<int>(kind));
        const Series r = functional_equation_residual(kind, 50);
        CHECK(r.order() == 50);
        CHECK(r.is_zero());
    }
}

TEST_CASE("Catalan numbers match bracket enumeration") {
    CHECK(catalan(0) == 1);
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(catalan(static_cast<std::size_t>(n)) == count_balanced(n));
    }
    CHECK(catalan(2) == 2);
    CHECK(catalan(4) == 14);
}

TEST_CASE("binomial-Catalan formula for even paths") {
    CHECK(even_count_formula(0) == 1);
    CHECK(even_count_formula(4) == 3);
    CHECK(even_count_formula(5) == 11);
    const Series a = expand_closed_form(GeneratingFunction::even, 200);
    for (std::size_t n = 0; n <= 200; ++n) {
        REQUIRE(Rational(even_count_formula(n)) == a[n]);
    }
}

TEST_CASE("every even count is odd") {
    const auto even = parity_split_from_closed_forms(500).first;
    for (const auto& v : even.terms()) REQUIRE(mpz_odd_p(v.get_mpz_t()));
}

TEST_CASE("parity split") {
    const auto [even, odd] = parity_split_from_closed_forms(7);
    CHECK(even.terms() == I({1, 1, 1, 1, 3, 11, 31, 71}));
    CHECK(odd.terms() == I({0, 0, 1, 3, 6, 10, 20, 56}));
    const auto motzkin = motzkin_by_recurrence(7);
    const auto shadow = shadow_by_recurrence(7);
    for (long n = 0; n <= 7; ++n) {
        CHECK(even.at(n) + odd.at(n) == motzkin.at(n));
        CHECK(even.at(n) - odd.at(n) == shadow.at(n));
    }
}
