#include "motzkin/commands.hpp"

#include "motzkin/engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace motzkin {

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "plain") return OutputFormat::plain;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "bfile") return OutputFormat::bfile;
    return std::nullopt;
}

std::string format_sequence(SequenceId id, const IntegerSequence& seq, OutputFormat format) {
    switch (format) {
        case OutputFormat::plain: {
            std::string out;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i > 0) out += ", ";
                out += seq.terms()[i].get_str();
            }
            return out;
        }
        case OutputFormat::csv: {
            std::string out = "index,value";
            for (std::size_t i = 0; i < seq.size(); ++i) {
                out += '\n' + std::to_string(seq.offset() + static_cast<long>(i)) + ',' + seq.terms()[i].get_str();
            }
            return out;
        }
        case OutputFormat::bfile: return to_bfile_text(seq);
        case OutputFormat::json: {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& t : seq.terms()) terms.push_back(t.get_str());
            nlohmann::json doc = {{"id", std::string(name(id))}, {"offset", seq.offset()}, {"terms", terms}};
            return doc.dump();
        }
    }
    throw std::invalid_argument("unknown output format");
}

std::string cmd_gen(SequenceId id, std::size_t n_terms, OutputFormat format) {
    return format_sequence(id, generate(id, n_terms), format);
}

// ---------------------------------------------------------------------------
// verify

namespace {

constexpr std::array<VerifyIdentity, 15> kIdentities = {{
    {"sum", "even + odd path counts equal the Motzkin numbers"},
    {"shadow-diff", "even - odd path counts equal the shadow recurrence"},
    {"functional-eq-M", "M = 1 + xM + x^2 M^2"},
    {"functional-eq-A", "A = 1 + xA + 2x^2 AB"},
    {"functional-eq-B", "B = xB + x^2 A^2 + x^2 B^2"},
    {"functional-eq-S", "S = 1 + xS - x^2 S^2"},
    {"proposition2", "every even-path count is odd"},
    {"even-formula", "binomial-Catalan sum equals the even-path counts"},
    {"oracle-dp", "path DP counts equal the closed-form coefficients"},
    {"recurrences", "both recurrences divide exactly and match the closed forms"},
    {"inversion", "A343773(n) = (-1)^n A007440(n+1)"},
    {"reversion-roundtrip", "xS(x) composed with its reversion is x; double reversion is identity"},
    {"chain-commute", "both routes give Fibonacci forward and shadows backward"},
    {"fibonacci", "A000045 starts 0, 1 and satisfies F(n) = F(n-1) + F(n-2)"},
    {"cluster-offsets", "A343773(n) = A100223(n+2) = A214649(n+1)"},
}};

VerifyReport pass(std::string_view identity, std::size_t order) {
    return {std::string(identity), order, true, std::nullopt, ""};
}

VerifyReport fail(std::string_view identity, std::size_t order, long index, std::string detail) {
    return {std::string(identity), order, false, index, std::move(detail)};
}

// First index at which two sequences over the same index range differ.
std::optional<long> first_difference(const IntegerSequence& a, const IntegerSequence& b) {
    for (long n = a.offset(); n <= a.last_index(); ++n) {
        if (!b.contains(n) || a.at(n) != b.at(n)) return n;
    }
    return std::nullopt;
}

VerifyReport check_equal(std::string_view identity, std::size_t order, const IntegerSequence& lhs,
                         const IntegerSequence& rhs) {
    if (auto n = first_difference(lhs, rhs)) {
        const std::string l = lhs.contains(*n) ? lhs.at(*n).get_str() : "-";
        const std::string r = rhs.contains(*n) ? rhs.at(*n).get_str() : "-";
        return fail(identity, order, *n, l + " != " + r);
    }
    return pass(identity, order);
}

VerifyReport check_zero(std::string_view identity, std::size_t order, const Series& residual) {
    for (std::size_t k = 0; k <= residual.order(); ++k) {
        if (residual[k] != 0) {
            return fail(identity, order, static_cast<long>(k), "residual coefficient " + to_string(residual[k]));
        }
    }
    return pass(identity, order);
}

IntegerSequence combine(const IntegerSequence& a, const IntegerSequence& b, int sign) {
    std::vector<Integer> terms;
    terms.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        terms.push_back(sign > 0 ? Integer(a.terms()[i] + b.terms()[i]) : Integer(a.terms()[i] - b.terms()[i]));
    }
    return IntegerSequence(a.offset(), std::move(terms));
}

VerifyReport verify_impl(std::string_view id, std::size_t order) {
    if (id == "sum") {
        const auto [even, odd] = parity_split_from_closed_forms(order);
        return check_equal(id, order, combine(even, odd, +1), motzkin_by_recurrence(order));
    }
    if (id == "shadow-diff") {
        const auto [even, odd] = parity_split_from_closed_forms(order);
        return check_equal(id, order, combine(even, odd, -1), shadow_by_recurrence(order));
    }
    if (id == "functional-eq-M") return check_zero(id, order, functional_equation_residual(FunctionalEquation::motzkin, order));
    if (id == "functional-eq-A") return check_zero(id, order, functional_equation_residual(FunctionalEquation::even, order));
    if (id == "functional-eq-B") return check_zero(id, order, functional_equation_residual(FunctionalEquation::odd, order));
    if (id == "functional-eq-S") return check_zero(id, order, functional_equation_residual(FunctionalEquation::shadow, order));
    if (id == "proposition2") {
        const auto even = parity_split_from_closed_forms(order).first;
        for (long n = 0; n <= even.last_index(); ++n) {
            if (mpz_even_p(even.at(n).get_mpz_t())) return fail(id, order, n, "even count " + even.at(n).get_str());
        }
        return pass(id, order);
    }
    if (id == "even-formula") {
        const auto even = parity_split_from_closed_forms(order).first;
        std::vector<Integer> formula;
        for (std::size_t n = 0; n <= order; ++n) formula.push_back(even_count_formula(n));
        return check_equal(id, order, IntegerSequence(0, std::move(formula)), even);
    }
    if (id == "oracle-dp") {
        const auto [even, odd] = parity_split_from_closed_forms(order);
        const auto table = count_by_parity_dp_table(order);
        for (std::size_t n = 0; n <= order; ++n) {
            const long i = static_cast<long>(n);
            if (table[n].even != even.at(i) || table[n].odd != odd.at(i)) {
                return fail(id, order, i, "DP (" + table[n].even.get_str() + ", " + table[n].odd.get_str() +
                                              ") vs closed form (" + even.at(i).get_str() + ", " +
                                              odd.at(i).get_str() + ")");
            }
        }
        return pass(id, order);
    }
    if (id == "recurrences") {
        const Series m = expand_closed_form(GeneratingFunction::motzkin, order);
        const Series s = expand_closed_form(GeneratingFunction::shadow, order);
        IntegerSequence shadow_rec;
        try {
            shadow_rec = shadow_by_recurrence(order);
        } catch (const InexactDivision& e) {
            return fail(id, order, static_cast<long>(e.index()), e.what());
        }
        const auto r1 = check_equal(id, order, motzkin_by_recurrence(order),
                                    IntegerSequence(0, integer_coefficients(m, 0, order)));
        if (!r1.passed) return r1;
        return check_equal(id, order, shadow_rec, IntegerSequence(0, integer_coefficients(s, 0, order)));
    }
    if (id == "inversion") {
        const auto shadow = generate(SequenceId::A343773, order);
        const auto inverted = generate(SequenceId::A007440, order);
        for (long n = 0; n < static_cast<long>(order); ++n) {
            const Integer expected = n % 2 == 0 ? Integer(inverted.at(n + 1)) : Integer(-inverted.at(n + 1));
            if (shadow.at(n) != expected) return fail(id, order, n, shadow.at(n).get_str() + " != " + expected.get_str());
        }
        return pass(id, order);
    }
    if (id == "reversion-roundtrip") {
        const Series f = shifted_shadow_series(order);
        const Series r = reversion(f);
        const auto composed = check_zero(id, order, compose(f, r) - Series::variable(order));
        if (!composed.passed) return composed;
        return check_zero(id, order, reversion(r) - f);
    }
    if (id == "chain-commute") {
        const auto fib = generate(SequenceId::A000045, order + 1);
        const IntegerSequence expected_forward(1, std::vector<Integer>(fib.terms().begin() + 1, fib.terms().end()));
        for (const ChainRoute route : {ChainRoute::invert_then_reverse, ChainRoute::reverse_then_invert}) {
            auto r = check_equal(id, order, run_forward(route, order), expected_forward);
            if (!r.passed) return r;
            r = check_equal(id, order, run_backward(route, order), shadow_by_recurrence(order - 1));
            if (!r.passed) return r;
        }
        return pass(id, order);
    }
    if (id == "fibonacci") {
        const auto fib = generate(SequenceId::A000045, order);
        for (long n = 0; n <= fib.last_index(); ++n) {
            const Integer expected = n < 2 ? Integer(n) : Integer(fib.at(n - 1) + fib.at(n - 2));
            if (fib.at(n) != expected) return fail(id, order, n, fib.at(n).get_str() + " != " + expected.get_str());
        }
        return pass(id, order);
    }
    if (id == "cluster-offsets") {
        const auto shadow = generate(SequenceId::A343773, order);
        const auto a100223 = generate(SequenceId::A100223, order + 2);
        const auto a214649 = generate(SequenceId::A214649, order + 2);
        for (long n = 0; n < static_cast<long>(order); ++n) {
            if (shadow.at(n) != a100223.at(n + 2) || shadow.at(n) != a214649.at(n + 1)) {
                return fail(id, order, n, "cluster terms disagree");
            }
        }
        return pass(id, order);
    }
    throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

}  // namespace

std::span<const VerifyIdentity> verify_identities() { return kIdentities; }

VerifyReport cmd_verify(std::string_view identity, std::size_t order) {
    if (order < 1) throw std::invalid_argument("verify: order must be at least 1");
    return verify_impl(identity, order);
}

std::string format_report(const VerifyReport& report) {
    std::string out = (report.passed ? "PASS " : "FAIL ") + report.identity + " (order " +
                      std::to_string(report.order) + ")";
    if (report.first_failing_index) {
        out += ": first failure at n=" + std::to_string(*report.first_failing_index);
        if (!report.detail.empty()) out += ", " + report.detail;
    }
    return out;
}

// ---------------------------------------------------------------------------

ComparisonReport cmd_compare(SequenceId id, const std::filesystem::path& bfile, std::size_t n_terms) {
    const BFile reference = read_bfile(bfile);
    try {
        return compare(id, reference, n_terms);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(bfile.string() + ": " + e.what());
    }
}

std::string cmd_paths(std::size_t n, bool list, std::optional<Parity> parity_filter) {
    if (!list) {
        const ParityCounts c = count_by_parity_dp(n);
        return "even=" + c.even.get_str() + " odd=" + c.odd.get_str() + " total=" + c.total().get_str();
    }
    unsigned long long even = 0;
    unsigned long long odd = 0;
    std::string words;
    for_each_path(n, [&](std::string_view w) {
        const bool is_even = std::count(w.begin(), w.end(), 'U') % 2 == 0;
        (is_even ? even : odd) += 1;
        if (!parity_filter || (*parity_filter == Parity::even) == is_even) {
            words += '\n';
            words += w.empty() ? std::string_view("(empty)") : w;
        }
    });
    return "even=" + std::to_string(even) + " odd=" + std::to_string(odd) + " total=" + std::to_string(even + odd) +
           words;
}

std::vector<Rational> parse_coefficients(std::string_view text) {
    std::vector<Rational> out;
    std::size_t i = 0;
    const auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        if (j > i) out.push_back(parse_rational(text.substr(i, j - i)));
        i = j;
    }
    return out;
}

std::string cmd_reverse(std::span<const Rational> coefficients, std::size_t order) {
    if (order < 1) throw std::invalid_argument("reverse: order must be at least 1");
    if (coefficients.empty() || coefficients.front() == 0) {
        throw SeriesError(SeriesErrc::zero_linear_term, "reverse: leading (degree-1) coefficient must be non-zero");
    }
    Series f(order);
    for (std::size_t k = 1; k <= order && k <= coefficients.size(); ++k) f[k] = coefficients[k - 1];
    const Series r = reversion(f);
    std::string out;
    for (std::size_t k = 1; k <= order; ++k) {
        if (k > 1) out += ' ';
        out += to_string(r[k]);
    }
    return out;
}

}  // namespace motzkin
