#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated formal power series over an exact scalar ring.
 *
 * A PowerSeries stores the coefficients of x^0 .. x^order and nothing
 * beyond. Binary operations return a series truncated to the smaller of
 * the two input orders, so a result never claims more precision than its
 * inputs can support.
 *
 * The scalar type needs the field operations (+, -, *, /), comparison
 * with ==, and construction from int. Rational is the default; every
 * operation here is exact.
 */

#include "motzkin/number.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace motzkin {

enum class SeriesErrc {
    constant_term_not_one,
    zero_constant_term,
    nonzero_constant_term,
    zero_linear_term,
    shift_drops_nonzero,
    shift_exceeds_order,
    nonintegral_coefficient,
    empty_coefficients,
};

class SeriesError : public std::domain_error {
public:
    SeriesError(SeriesErrc code, const std::string& what) : std::domain_error(what), code_(code) {}
    SeriesErrc code() const noexcept { return code_; }

private:
    SeriesErrc code_;
};

template <typename Scalar>
class PowerSeries {
public:
    using scalar_type = Scalar;

    /// Zero series truncated at `order`.
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}

    /// Coefficients of x^0 .. x^(n-1); the order is n - 1.
    explicit PowerSeries(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty()) {
            throw SeriesError(SeriesErrc::empty_coefficients, "power series needs at least one coefficient");
        }
    }

    /// Coefficients given as a finite list, zero-padded (or cut) to `order`.
    template <typename T>
    static PowerSeries from(std::initializer_list<T> head, std::size_t order) {
        PowerSeries s(order);
        std::size_t i = 0;
        for (const auto& c : head) {
            if (i > order) break;
            s.coeffs_[i++] = Scalar(c);
        }
        return s;
    }

    static PowerSeries constant(const Scalar& c, std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The formal variable x (zero when order is 0).
    static PowerSeries variable(std::size_t order) {
        PowerSeries s(order);
        if (order >= 1) s.coeffs_[1] = Scalar(1);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Scalar& operator[](std::size_t n) const { return coeffs_.at(n); }
    Scalar& operator[](std::size_t n) { return coeffs_.at(n); }

    std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const {
        if (order > this->order()) {
            throw std::out_of_range("cannot truncate a series to a higher order");
        }
        return PowerSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    /// Same coefficients with zeros appended; the extra terms are not known to be exact.
    PowerSeries padded(std::size_t order) const {
        PowerSeries s(std::max(order, this->order()));
        std::copy(coeffs_.begin(), coeffs_.end(), s.coeffs_.begin());
        return s;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == 0; });
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Scalar> coeffs_;
};

using Series = PowerSeries<Rational>;

// ---------------------------------------------------------------------------
// Ring operations

template <typename S>
PowerSeries<S> add(const PowerSeries<S>& f, const PowerSeries<S>& g) {
    const std::size_t n = std::min(f.order(), g.order());
    PowerSeries<S> r(n);
    for (std::size_t k = 0; k <= n; ++k) r[k] = f[k] + g[k];
    return r;
}

template <typename S>
PowerSeries<S> subtract(const PowerSeries<S>& f, const PowerSeries<S>& g) {
    const std::size_t n = std::min(f.order(), g.order());
    PowerSeries<S> r(n);
    for (std::size_t k = 0; k <= n; ++k) r[k] = f[k] - g[k];
    return r;
}

template <typename S>
PowerSeries<S> scale(const PowerSeries<S>& f, const std::type_identity_t<S>& c) {
    PowerSeries<S> r(f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) r[k] = f[k] * c;
    return r;
}

namespace detail {

// Rational product through integers: clear denominators, convolve, divide once.
inline PowerSeries<Rational> multiply_rational(const PowerSeries<Rational>& f, const PowerSeries<Rational>& g) {
    const std::size_t n = std::min(f.order(), g.order());
    const auto scaled = [n](const PowerSeries<Rational>& s, Integer& common) {
        common = 1;
        for (std::size_t k = 0; k <= n; ++k) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), s[k].get_den_mpz_t());
        std::vector<Integer> out(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_divexact(out[k].get_mpz_t(), common.get_mpz_t(), s[k].get_den_mpz_t());
            out[k] *= s[k].get_num();
        }
        return out;
    };
    Integer df;
    Integer dg;
    const std::vector<Integer> a = scaled(f, df);
    const std::vector<Integer> b = scaled(g, dg);
    std::vector<Integer> acc(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    const Integer den = df * dg;
    PowerSeries<Rational> r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        r[k] = Rational(acc[k], den);
        r[k].canonicalize();
    }
    return r;
}

}  // namespace detail

/// Truncated Cauchy product.
template <typename S>
PowerSeries<S> multiply(const PowerSeries<S>& f, const PowerSeries<S>& g) {
    if constexpr (std::is_same_v<S, Rational>) {
        return detail::multiply_rational(f, g);
    }
    const std::size_t n = std::min(f.order(), g.order());
    PowerSeries<S> r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (g[j] == 0) continue;
            r[i + j] += f[i] * g[j];
        }
    }
    return r;
}

template <typename S>
PowerSeries<S> operator+(const PowerSeries<S>& f, const PowerSeries<S>& g) { return add(f, g); }

template <typename S>
PowerSeries<S> operator-(const PowerSeries<S>& f, const PowerSeries<S>& g) { return subtract(f, g); }

template <typename S>
PowerSeries<S> operator-(const PowerSeries<S>& f) { return scale(f, S(-1)); }

template <typename S>
PowerSeries<S> operator*(const PowerSeries<S>& f, const PowerSeries<S>& g) { return multiply(f, g); }

template <typename S>
PowerSeries<S> operator*(const std::type_identity_t<S>& c, const PowerSeries<S>& f) { return scale(f, c); }

/// Multiplicative inverse 1/f; requires a non-zero constant term.
template <typename S>
PowerSeries<S> reciprocal(const PowerSeries<S>& f) {
    if (f[0] == 0) {
        throw SeriesError(SeriesErrc::zero_constant_term, "reciprocal: constant term is zero");
    }
    const std::size_t n = f.order();
    const S inv0 = S(1) / f[0];
    PowerSeries<S> r(n);
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        S acc(0);
        for (std::size_t i = 1; i <= k; ++i) {
            if (f[i] != 0) acc += f[i] * r[k - i];
        }
        r[k] = -acc * inv0;
    }
    return r;
}

/// Square root on the branch with constant term +1.
///
/// Newton iteration s <- (s + f/s) / 2 seeded at s = 1. Each step doubles
/// the number of correct coefficients, so the working order goes
/// 0, 1, 3, 7, ... until it reaches f.order().
template <typename S>
PowerSeries<S> sqrt(const PowerSeries<S>& f) {
    if (f[0] != 1) {
        throw SeriesError(SeriesErrc::constant_term_not_one, "sqrt: constant term must be 1");
    }
    const std::size_t n = f.order();
    const S half = S(1) / S(2);
    PowerSeries<S> s = PowerSeries<S>::constant(S(1), 0);
    while (s.order() < n) {
        const std::size_t next = std::min(2 * s.order() + 1, n);
        const PowerSeries<S> guess = s.padded(next);
        s = scale(add(guess, multiply(f.truncated(next), reciprocal(guess))), half);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Substitution

/// f(g(x)); g must have zero constant term. Horner evaluation, truncated
/// to min(f.order(), g.order()).
template <typename S>
PowerSeries<S> compose(const PowerSeries<S>& f, const PowerSeries<S>& g) {
    if (g[0] != 0) {
        throw SeriesError(SeriesErrc::nonzero_constant_term, "compose: inner series has non-zero constant term");
    }
    const std::size_t n = std::min(f.order(), g.order());
    const PowerSeries<S> inner = g.truncated(n);
    PowerSeries<S> r = PowerSeries<S>::constant(f[n], n);
    for (std::size_t i = n; i-- > 0;) {
        r = multiply(r, inner);
        r[0] += f[i];
    }
    return r;
}

/// Compositional inverse r of f, i.e. f(r(y)) = y, truncated at f.order().
///
/// Matching coefficients of y^k in f(r(y)) = y gives a triangular system:
/// r_k enters the y^k coefficient only through f_1 * r_k, every other
/// contribution comes from r_1 .. r_{k-1}. We keep the table
/// powers[j][k] = [y^k] r(y)^j and solve for r_k one degree at a time.
template <typename S>
PowerSeries<S> reversion(const PowerSeries<S>& f) {
    if (f[0] != 0) {
        throw SeriesError(SeriesErrc::nonzero_constant_term, "reversion: series has a non-zero free term");
    }
    const std::size_t n = f.order();
    if (n < 1 || f[1] == 0) {
        throw SeriesError(SeriesErrc::zero_linear_term, "reversion: coefficient of x is zero");
    }
    const S lead = f[1];
    std::vector<std::vector<S>> powers(n + 1, std::vector<S>(n + 1, S(0)));
    PowerSeries<S> r(n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 2; j <= k; ++j) {
            S acc(0);
            for (std::size_t i = 1; i + j - 1 <= k; ++i) {
                const S& below = powers[j - 1][k - i];
                if (r[i] != 0 && below != 0) acc += r[i] * below;
            }
            powers[j][k] = acc;
        }
        S rhs(k == 1 ? 1 : 0);
        for (std::size_t j = 2; j <= k; ++j) {
            if (f[j] != 0) rhs -= f[j] * powers[j][k];
        }
        r[k] = rhs / lead;
        powers[1][k] = r[k];
    }
    return r;
}

/// f(-x): coefficient n picks up (-1)^n.
template <typename S>
PowerSeries<S> negate_argument(const PowerSeries<S>& f) {
    PowerSeries<S> r = f;
    for (std::size_t k = 1; k <= r.order(); k += 2) r[k] = -r[k];
    return r;
}

/// -f(-x): coefficient n picks up (-1)^(n+1). The sequence "inversion".
template <typename S>
PowerSeries<S> sign_invert(const PowerSeries<S>& f) {
    return -negate_argument(f);
}

/// Multiplies by x^k. A negative k divides by x^|k| and requires the
/// dropped coefficients to be zero; the order moves with k either way.
template <typename S>
PowerSeries<S> shift(const PowerSeries<S>& f, long k) {
    if (k >= 0) {
        const auto up = static_cast<std::size_t>(k);
        PowerSeries<S> r(f.order() + up);
        for (std::size_t i = 0; i <= f.order(); ++i) r[i + up] = f[i];
        return r;
    }
    const auto down = static_cast<std::size_t>(-k);
    if (down > f.order()) {
        throw SeriesError(SeriesErrc::shift_exceeds_order, "shift: cannot drop more terms than the series holds");
    }
    for (std::size_t i = 0; i < down; ++i) {
        if (f[i] != 0) {
            throw SeriesError(SeriesErrc::shift_drops_nonzero,
                              "shift: coefficient of x^" + std::to_string(i) + " is non-zero");
        }
    }
    PowerSeries<S> r(f.order() - down);
    for (std::size_t i = down; i <= f.order(); ++i) r[i - down] = f[i];
    return r;
}

// ---------------------------------------------------------------------------
// Integer views

/// Coefficients first..last as integers; throws if any is not integral.
inline std::vector<Integer> integer_coefficients(const Series& f, std::size_t first, std::size_t last) {
    std::vector<Integer> out;
    out.reserve(last >= first ? last - first + 1 : 0);
    for (std::size_t k = first; k <= last; ++k) {
        const Rational& c = f[k];
        if (!is_integral(c)) {
            throw SeriesError(SeriesErrc::nonintegral_coefficient,
                              "coefficient of x^" + std::to_string(k) + " is " + to_string(c));
        }
        out.push_back(c.get_num());
    }
    return out;
}

inline Series series_from_integers(std::span<const Integer> values) {
    std::vector<Rational> coeffs(values.begin(), values.end());
    return Series(std::move(coeffs));
}

}  // namespace motzkin
