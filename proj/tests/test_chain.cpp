#include "motzkin/chain.hpp"
#include "motzkin/engine.hpp"

#include <doctest.h>

using namespace motzkin;

namespace {

std::vector<Integer> I(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("sequence ids") {
    CHECK(parse_sequence_id("A039834") == SequenceId::A039834);
    CHECK_FALSE(parse_sequence_id("A999999").has_value());
    CHECK_FALSE(parse_sequence_id("a039834").has_value());
    for (const auto id : kAllSequences) CHECK(parse_sequence_id(name(id)) == id);
    CHECK(canonical_offset(SequenceId::A007440) == 1);
    CHECK(canonical_offset(SequenceId::A214649) == -1);
    CHECK(canonical_offset(SequenceId::A039834) == -2);
    CHECK(canonical_offset(SequenceId::A000045) == 0);
}

TEST_CASE("generate reproduces the listed prefixes") {
    CHECK(generate(SequenceId::A001006, 14).terms() ==
          I({1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835}));
    CHECK(generate(SequenceId::A107587, 14).terms() ==
          I({1, 1, 1, 1, 3, 11, 31, 71, 155, 379, 1051, 2971, 8053, 21165}));
    CHECK(generate(SequenceId::A343386, 14).terms() ==
          I({0, 0, 1, 3, 6, 10, 20, 56, 168, 456, 1137, 2827, 7458, 20670}));
    CHECK(generate(SequenceId::A343773, 14).terms() ==
          I({1, 1, 0, -2, -3, 1, 11, 15, -13, -77, -86, 144, 595, 495}));
    CHECK(generate(SequenceId::A100223, 16).terms() ==
          I({1, 0, 1, 1, 0, -2, -3, 1, 11, 15, -13, -77, -86, 144, 595, 495}));
    const auto a214649 = generate(SequenceId::A214649, 16);
    CHECK(a214649.offset() == -1);
    CHECK(a214649.terms() == I({1, -1, 1, 1, 0, -2, -3, 1, 11, 15, -13, -77, -86, 144, 595, 495}));
    const auto a007440 = generate(SequenceId::A007440, 14);
    CHECK(a007440.offset() == 1);
    CHECK(a007440.terms() == I({1, -1, 0, 2, -3, -1, 11, -15, -13, 77, -86, -144, 595, -495}));
    const auto a039834 = generate(SequenceId::A039834, 18);
    CHECK(a039834.offset() == -2);
    CHECK(a039834.terms() == I({1, 1, 0, 1, -1, 2, -3, 5, -8, 13, -21, 34, -55, 89, -144, 233, -377, 610}));
    CHECK(generate(SequenceId::A000045, 10).terms() == I({0, 1, 1, 2, 3, 5, 8, 13, 21, 34}));
}

TEST_CASE("generate with a single term") {
    for (const auto id : kAllSequences) {
        const auto s = generate(id, 1);
        CHECK(s.size() == 1);
        CHECK(s.offset() == canonical_offset(id));
    }
    CHECK(generate(SequenceId::A039834, 1).terms() == I({1}));
    CHECK(generate(SequenceId::A214649, 2).terms() == I({1, -1}));
    CHECK_THROWS(generate(SequenceId::A001006, 0));
}

TEST_CASE("cluster consistency over 120 terms") {
    const std::size_t n = 120;
    const auto even = generate(SequenceId::A107587, n);
    const auto odd = generate(SequenceId::A343386, n);
    const auto motzkin = generate(SequenceId::A001006, n);
    const auto shadow = generate(SequenceId::A343773, n);
    const auto a100223 = generate(SequenceId::A100223, n + 2);
    const auto a214649 = generate(SequenceId::A214649, n + 2);
    const auto a007440 = generate(SequenceId::A007440, n + 1);
    for (long i = 0; i < static_cast<long>(n); ++i) {
        REQUIRE(even.at(i) + odd.at(i) == motzkin.at(i));
        REQUIRE(even.at(i) - odd.at(i) == shadow.at(i));
        REQUIRE(shadow.at(i) == a100223.at(i + 2));
        REQUIRE(shadow.at(i) == a214649.at(i + 1));
        REQUIRE(shadow.at(i) == (i % 2 == 0 ? Integer(a007440.at(i + 1)) : Integer(-a007440.at(i + 1))));
    }
}

TEST_CASE("Fibonacci output") {
    const auto fib = generate(SequenceId::A000045, 100);
    CHECK(fib.at(0) == 0);
    CHECK(fib.at(1) == 1);
    for (long n = 2; n < 100; ++n) {
        REQUIRE(fib.at(n) == fib.at(n - 1) + fib.at(n - 2));
        REQUIRE(fib.at(n) >= 0);
    }
}

TEST_CASE("reverse shadows") {
    const auto t = reverse_shadows(16);
    CHECK(t.offset() == 1);
    CHECK(t.terms() == I({1, -1, 2, -3, 5, -8, 13, -21, 34, -55, 89, -144, 233, -377, 610, -987}));
    for (long n = 3; n <= 16; ++n) CHECK(t.at(n) == -t.at(n - 1) + t.at(n - 2));

    const Series xs = shifted_shadow_series(16);
    CHECK(compose(xs, reversion(xs)) == Series::variable(16));
}

TEST_CASE("forward and backward routes") {
    const std::vector<Integer> fib8 = I({1, 1, 2, 3, 5, 8, 13, 21});
    for (const auto route : {ChainRoute::invert_then_reverse, ChainRoute::reverse_then_invert}) {
        const auto forward = run_forward(route, 8);
        CHECK(forward.offset() == 1);
        CHECK(forward.terms() == fib8);
        const auto back = run_backward(route, 14);
        CHECK(back.offset() == 0);
        CHECK(back.terms() == I({1, 1, 0, -2, -3, 1, 11, 15, -13, -77, -86, 144, 595, 495}));
    }
    CHECK(run_forward(ChainRoute::invert_then_reverse, 50) == run_forward(ChainRoute::reverse_then_invert, 50));
    CHECK(run_backward(ChainRoute::invert_then_reverse, 50) == run_backward(ChainRoute::reverse_then_invert, 50));

    // Forward then backward on the series level is the identity.
    const Series xs = shifted_shadow_series(50);
    for (const auto route : {ChainRoute::invert_then_reverse, ChainRoute::reverse_then_invert}) {
        CHECK(apply_route(route, apply_route(route, xs)) == xs);
    }
    CHECK(fibonacci_series(6) == Series::from<long>({0, 1, 1, 2, 3, 5, 8}, 6));
}
