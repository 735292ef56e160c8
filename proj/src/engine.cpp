#include "motzkin/engine.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace motzkin {

namespace {

// Three-term recurrence (n+2) a(n) = (2n+1) a(n-1) + c (n-1) a(n-2) with a(0) = a(1) = 1.
// Returns the index of the first inexact step, or 0 if every division was exact.
std::size_t run_three_term(std::size_t n_max, long c, std::vector<Integer>& out) {
    out.clear();
    out.reserve(n_max + 1);
    out.emplace_back(1);
    if (n_max >= 1) out.emplace_back(1);
    Integer prev2 = 1;
    Integer prev1 = 1;
    Integer numer;
    Integer quot;
    for (std::size_t n = 2; n <= n_max; ++n) {
        numer = Integer(static_cast<unsigned long>(2 * n + 1)) * prev1 +
                Integer(c) * Integer(static_cast<unsigned long>(n - 1)) * prev2;
        const Integer denom(static_cast<unsigned long>(n + 2));
        if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t())) {
            return n;
        }
        mpz_divexact(quot.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
        out.push_back(quot);
        prev2 = prev1;
        prev1 = quot;
    }
    return 0;
}

Series sqrt_of_quadratic(long linear, long quadratic, std::size_t order) {
    return sqrt(Series::from<long>({1, linear, quadratic}, order));
}

}  // namespace

IntegerSequence motzkin_by_recurrence(std::size_t n_max) {
    std::vector<Integer> terms;
    if (const std::size_t bad = run_three_term(n_max, 3, terms); bad != 0) {
        throw std::logic_error("Motzkin recurrence: inexact division at n = " + std::to_string(bad));
    }
    return IntegerSequence(0, std::move(terms));
}

IntegerSequence shadow_by_recurrence(std::size_t n_max) {
    std::vector<Integer> terms;
    if (const std::size_t bad = run_three_term(n_max, -5, terms); bad != 0) {
        throw InexactDivision(bad, "shadow recurrence: inexact division at n = " + std::to_string(bad));
    }
    return IntegerSequence(0, std::move(terms));
}

Series expand_closed_form(GeneratingFunction which, std::size_t order) {
    const std::size_t work = order + 2;
    Series numerator(work);
    Rational divisor;
    switch (which) {
        case GeneratingFunction::motzkin: {
            const Series q = sqrt_of_quadratic(-2, -3, work);
            numerator = Series::from<long>({1, -1}, work) - q;
            divisor = 2;
            break;
        }
        case GeneratingFunction::even: {
            numerator = sqrt_of_quadratic(-2, 5, work) - sqrt_of_quadratic(-2, -3, work);
            divisor = 4;
            break;
        }
        case GeneratingFunction::odd: {
            numerator = Series::from<long>({2, -2}, work) - sqrt_of_quadratic(-2, -3, work) -
                        sqrt_of_quadratic(-2, 5, work);
            divisor = 4;
            break;
        }
        case GeneratingFunction::shadow: {
            numerator = Series::from<long>({-1, 1}, work) + sqrt_of_quadratic(-2, 5, work);
            divisor = 2;
            break;
        }
    }
    Series result = scale(shift(numerator, -2), Rational(1) / divisor);
    integer_coefficients(result, 0, result.order());
    return result;
}

Series functional_equation_residual(FunctionalEquation kind, std::size_t order) {
    const Series one = Series::constant(1, order);
    const Series x = Series::variable(order);
    const Series x2 = shift(Series::constant(1, order), 2).truncated(order);
    switch (kind) {
        case FunctionalEquation::motzkin: {
            const Series m = expand_closed_form(GeneratingFunction::motzkin, order);
            return m - (one + x * m + x2 * m * m);
        }
        case FunctionalEquation::even: {
            const Series a = expand_closed_form(GeneratingFunction::even, order);
            const Series b = expand_closed_form(GeneratingFunction::odd, order);
            return a - (one + x * a + Rational(2) * (x2 * a * b));
        }
        case FunctionalEquation::odd: {
            const Series a = expand_closed_form(GeneratingFunction::even, order);
            const Series b = expand_closed_form(GeneratingFunction::odd, order);
            return b - (x * b + x2 * a * a + x2 * b * b);
        }
        case FunctionalEquation::shadow: {
            const Series s = expand_closed_form(GeneratingFunction::shadow, order);
            return s - (one + x * s - x2 * s * s);
        }
    }
    throw std::invalid_argument("unknown functional equation");
}

Integer catalan(std::size_t n) {
    Integer c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        c *= static_cast<unsigned long>(2 * (2 * k - 1));
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return c;
}

Integer binomial(std::size_t n, std::size_t k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Integer even_count_formula(std::size_t n) {
    Integer sum = 0;
    for (std::size_t k = 0; 4 * k <= n; ++k) {
        sum += binomial(n, 4 * k) * catalan(2 * k);
    }
    return sum;
}

std::pair<IntegerSequence, IntegerSequence> parity_split_from_closed_forms(std::size_t n_max) {
    const Series a = expand_closed_form(GeneratingFunction::even, n_max);
    const Series b = expand_closed_form(GeneratingFunction::odd, n_max);
    return {IntegerSequence(0, integer_coefficients(a, 0, n_max)),
            IntegerSequence(0, integer_coefficients(b, 0, n_max))};
}

}  // namespace motzkin
