#include "motzkin/chain.hpp"

#include "motzkin/engine.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace motzkin {

namespace {

struct SequenceInfo {
    SequenceId id;
    std::string_view name;
    long offset;
};

constexpr std::array<SequenceInfo, 9> kInfo = {{
    {SequenceId::A000045, "A000045", 0},
    {SequenceId::A001006, "A001006", 0},
    {SequenceId::A007440, "A007440", 1},
    {SequenceId::A039834, "A039834", -2},
    {SequenceId::A100223, "A100223", 0},
    {SequenceId::A107587, "A107587", 0},
    {SequenceId::A214649, "A214649", -1},
    {SequenceId::A343386, "A343386", 0},
    {SequenceId::A343773, "A343773", 0},
}};

const SequenceInfo& info(SequenceId id) {
    for (const auto& entry : kInfo) {
        if (entry.id == id) return entry;
    }
    throw std::invalid_argument("unknown sequence id");
}

// Reversion-backed generators work at n_terms plus a small margin.
constexpr std::size_t kOrderMargin = 2;

// Terms a(offset) .. a(offset + n_terms - 1) given the head values and a
// tail that continues from index offset + head.size().
IntegerSequence with_head(long offset, std::vector<Integer> head, const std::vector<Integer>& tail,
                          std::size_t n_terms) {
    std::vector<Integer> terms = std::move(head);
    terms.insert(terms.end(), tail.begin(), tail.end());
    terms.resize(n_terms);
    return IntegerSequence(offset, std::move(terms));
}

std::vector<Integer> shadows(std::size_t count) {
    return integer_coefficients(expand_closed_form(GeneratingFunction::shadow, count - 1), 0, count - 1);
}

}  // namespace

std::string_view name(SequenceId id) noexcept {
    for (const auto& entry : kInfo) {
        if (entry.id == id) return entry.name;
    }
    return "?";
}

std::optional<SequenceId> parse_sequence_id(std::string_view text) {
    for (const auto& entry : kInfo) {
        if (entry.name == text) return entry.id;
    }
    return std::nullopt;
}

long canonical_offset(SequenceId id) noexcept {
    for (const auto& entry : kInfo) {
        if (entry.id == id) return entry.offset;
    }
    return 0;
}

Series shifted_shadow_series(std::size_t order) {
    if (order == 0) return Series(0);
    return shift(expand_closed_form(GeneratingFunction::shadow, order - 1), 1);
}

Series fibonacci_series(std::size_t order) {
    Series f(order);
    Integer before = 0;
    Integer current = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        f[n] = current;
        Integer following = before + current;
        before = std::move(current);
        current = std::move(following);
    }
    return f;
}

IntegerSequence reverse_shadows(std::size_t order) {
    if (order < 1) throw std::invalid_argument("reverse_shadows: order must be at least 1");
    return IntegerSequence(1, integer_coefficients(reversion(shifted_shadow_series(order)), 1, order));
}

Series apply_route(ChainRoute route, const Series& f) {
    switch (route) {
        case ChainRoute::invert_then_reverse: return reversion(sign_invert(f));
        case ChainRoute::reverse_then_invert: return sign_invert(reversion(f));
    }
    throw std::invalid_argument("unknown chain route");
}

IntegerSequence run_forward(ChainRoute route, std::size_t n_terms) {
    if (n_terms < 1) throw std::invalid_argument("run_forward: n_terms must be at least 1");
    const Series fib = apply_route(route, shifted_shadow_series(n_terms));
    return IntegerSequence(1, integer_coefficients(fib, 1, n_terms));
}

IntegerSequence run_backward(ChainRoute route, std::size_t n_terms) {
    if (n_terms < 1) throw std::invalid_argument("run_backward: n_terms must be at least 1");
    const Series xs = apply_route(route, fibonacci_series(n_terms));
    return IntegerSequence(0, integer_coefficients(xs, 1, n_terms));
}

IntegerSequence generate(SequenceId id, std::size_t n_terms) {
    if (n_terms < 1) throw std::invalid_argument("generate: n_terms must be at least 1");
    const long offset = info(id).offset;
    switch (id) {
        case SequenceId::A001006: return motzkin_by_recurrence(n_terms - 1);
        case SequenceId::A107587: return parity_split_from_closed_forms(n_terms - 1).first;
        case SequenceId::A343386: return parity_split_from_closed_forms(n_terms - 1).second;
        case SequenceId::A343773: return IntegerSequence(0, shadows(n_terms));
        case SequenceId::A100223: return with_head(offset, {Integer(1), Integer(0)}, shadows(n_terms), n_terms);
        case SequenceId::A214649: return with_head(offset, {Integer(1), Integer(-1)}, shadows(n_terms), n_terms);
        case SequenceId::A007440: {
            const Series inverted = sign_invert(shifted_shadow_series(n_terms));
            return IntegerSequence(offset, integer_coefficients(inverted, 1, n_terms));
        }
        case SequenceId::A039834: {
            // Coefficients from x^0 of the reversion, after the x^-2 + x^-1 head.
            const Series rev = reversion(shifted_shadow_series(n_terms + kOrderMargin));
            return with_head(offset, {Integer(1), Integer(1)}, integer_coefficients(rev, 0, rev.order()), n_terms);
        }
        case SequenceId::A000045: {
            const IntegerSequence signed_fib = generate(SequenceId::A039834, n_terms + 2);
            std::vector<Integer> terms;
            terms.reserve(n_terms);
            for (long n = 0; n < static_cast<long>(n_terms); ++n) {
                const Integer& v = signed_fib.at(n);
                terms.push_back(n % 2 == 0 ? Integer(-v) : v);
            }
            return IntegerSequence(0, std::move(terms));
        }
    }
    throw std::invalid_argument("unknown sequence id");
}

}  // namespace motzkin
