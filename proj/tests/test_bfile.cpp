#include "motzkin/bfile.hpp"

#include <doctest.h>

using namespace motzkin;

TEST_CASE("parse") {
    const BFile f = parse_bfile(std::string("0 1\n1 1\n2 2\n3 4"));
    REQUIRE(f.entries.size() == 4);
    CHECK(f.entries.front().first == 0);
    CHECK(f.to_sequence().terms() == std::vector<Integer>{1, 1, 2, 4});

    CHECK(parse_bfile(std::string("# comment\n\n0 1")).entries.size() == 1);
    CHECK(parse_bfile(std::string("  -2\t 1  \r\n-1   1\n   # indented comment\n0 0\n")).to_sequence().offset() == -2);
    CHECK(parse_bfile(std::string("")).entries.empty());
}

TEST_CASE("values are exact at any size") {
    const std::string big = "-123456789012345678901234567890123456789";
    const BFile f = parse_bfile("7 " + big);
    CHECK(f.entries.front().second.get_str() == big);
}

TEST_CASE("errors carry the line number") {
    const auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_bfile(text);
        } catch (const BFileError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0 1\n2 2") == 2);            // gap at index 1
    CHECK(line_of("0 1\n1 1\n1 2") == 3);       // duplicate
    CHECK(line_of("0 1\n# c\n1 x") == 3);       // malformed value
    CHECK(line_of("0") == 1);                   // missing value
    CHECK(line_of("0 1 2") == 1);               // trailing field
    CHECK(line_of("1.5 3") == 1);               // non-integer index
}

TEST_CASE("compare against a reference") {
    const IntegerSequence motzkin = generate(SequenceId::A001006, 14);
    const BFile ref = parse_bfile(to_bfile_text(motzkin));

    const auto ok = compare(SequenceId::A001006, ref, 14);
    CHECK(ok.status == ComparisonStatus::match);
    CHECK(ok.compared == 14);
    CHECK_FALSE(ok.first_mismatch.has_value());

    const auto shortref = compare(SequenceId::A001006, ref, 1000);
    CHECK(shortref.status == ComparisonStatus::short_reference);
    CHECK(shortref.compared == 14);

    BFile corrupt = ref;
    corrupt.entries[9].second += 1;
    const auto bad = compare(SequenceId::A001006, corrupt, 14);
    CHECK(bad.status == ComparisonStatus::mismatch);
    REQUIRE(bad.first_mismatch.has_value());
    CHECK(bad.first_mismatch->index == 9);
    CHECK(bad.first_mismatch->expected == 836);
    CHECK(bad.first_mismatch->actual == 835);
    CHECK(format_report(bad).find("index 9") != std::string::npos);

    // A reference that starts after the canonical offset cannot be aligned.
    CHECK_THROWS_AS(compare(SequenceId::A039834, ref, 5), std::invalid_argument);
}

TEST_CASE("fixture files") {
    const BFile good = read_bfile(MOTZKIN_TEST_DATA "/b001006.txt");
    CHECK(compare(SequenceId::A001006, good, 14).status == ComparisonStatus::match);

    const auto bad = compare(SequenceId::A107587, read_bfile(MOTZKIN_TEST_DATA "/b107587_corrupt.txt"), 14);
    CHECK(bad.status == ComparisonStatus::mismatch);
    CHECK(bad.first_mismatch->index == 9);

    CHECK_THROWS_WITH_AS(read_bfile(MOTZKIN_TEST_DATA "/b_malformed.txt"), doctest::Contains("line 3"),
                         std::runtime_error);
    CHECK_THROWS_AS(read_bfile(MOTZKIN_TEST_DATA "/missing.txt"), std::runtime_error);
}

TEST_CASE("b-file round trip for every id") {
    for (const auto id : kAllSequences) {
        CAPTURE(name(id));
        const auto seq = generate(id, 40);
        const BFile parsed = parse_bfile(to_bfile_text(seq));
        CHECK(parsed.to_sequence() == seq);
        CHECK(compare(id, parsed, 40).status == ComparisonStatus::match);
    }
}
