#pragma once

// Mittag-Leffler machinery over the zero families: Rayleigh-type sums
// sum 1/(x_n^2 - 1), the Shah-Trimble criterion, truncated Hadamard products
// and the power series of the Dini combination.
//
// Every family function has the form z^(nu-k) E(z^2) with E entire of growth
// order 1/2, so with x_n its positive zeros
//
//   z F'(z)/F(z) = (nu - k) - 2 sum_n z^2 / (x_n^2 - z^2),
//
// and evaluating at z = 1 gives the sums in closed form from Bessel values.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "starbessel/errors.hpp"
#include "starbessel/special_fn.hpp"
#include "starbessel/zeros.hpp"

namespace starbessel {

/// Zero of the product f(w) = w prod(1 - w/w_n) that corresponds to a family
/// zero x: the family functions are taken in the variable w = z^2.
inline double product_zero(double family_zero) { return family_zero * family_zero; }

/// sum_n 1/(x_n^2 - 1) over the family zeros, from the logarithmic derivative at 1.
inline double rayleigh_sum_closed_form(const ZeroFamily& family, Order order) {
    family.check_order(order, "rayleigh_sum_closed_form");
    const double nu = order.nu;
    const auto d = bessel_j_derivs(order, 1.0);
    double shift = 0.0;
    double num = 0.0;
    double den = 0.0;
    if (family.kind == ZeroKind::Dini) {
        const auto& c = *family.dini;
        den = c.a() * d[2] + c.b() * d[1] + c.c() * d[0];
        num = c.a() * d[3] + (2.0 * c.a() + c.b()) * d[2] + (c.b() + c.c()) * d[1];
    } else {
        const int k = family.derivative();
        shift = k;
        den = d[k];
        num = d[k + 1];
    }
    if (!(std::abs(den) > 1e-13 * (std::abs(num) + std::abs(den)))) {
        throw pole_error("rayleigh_sum_closed_form: family function vanishes at 1");
    }
    return -0.5 * (shift - nu + num / den);
}

struct ZeroSum {
    double value = 0.0;
    /// Upper bound on the omitted tail sum_{n > N} 1/(x_n^2 - 1).
    double tail_bound = 0.0;
};

/// Direct summation over a zero table. The tail beyond the last zero x_N is
/// bounded by (1/pi) int_{x_N}^inf dx/(x^2 - 1), i.e. zeros spaced pi apart.
inline ZeroSum rayleigh_sum_from_zeros(const ZeroTable& table) {
    ZeroSum out;
    for (double x : table.zeros) {
        if (!(x > 1.0)) {
            throw domain_error("rayleigh_sum_from_zeros: zero inside the unit interval, sum not applicable");
        }
    }
    // smallest terms first
    for (auto it = table.zeros.rbegin(); it != table.zeros.rend(); ++it) {
        out.value += 1.0 / (product_zero(*it) - 1.0);
    }
    if (table.tail_start && !table.zeros.empty()) {
        const double last = table.zeros.back();
        out.tail_bound = std::log((last + 1.0) / (last - 1.0)) / (2.0 * std::numbers::pi);
    }
    return out;
}

/// Closed-form and zero-summed values side by side.
struct RayleighSum {
    ZeroFamily family;
    Order order;
    double value_closed_form = 0.0;
    double value_zero_sum = 0.0;
    double tail_bound = 0.0;
    std::size_t n_terms = 0;
};

inline constexpr std::size_t default_zero_count = 200;

inline RayleighSum rayleigh_sum(const ZeroFamily& family, Order order, std::size_t n_terms = default_zero_count) {
    const auto table = compute_zeros(family, order, n_terms);
    const auto direct = rayleigh_sum_from_zeros(table);
    return {family, order, rayleigh_sum_closed_form(family, order), direct.value, direct.tail_bound, n_terms};
}

/// Outcome of the Shah-Trimble test sum 1/(|w_n| - 1) <= 1.
struct ShahTrimble {
    bool holds = false;
    double sum = 0.0;
    /// 1 - sum; non-negative exactly when the criterion holds.
    double margin = 0.0;
    double zero_sum = 0.0;
    double tail_bound = 0.0;
};

/// Starlikeness of w prod(1 - w/x_n^2) together with close-to-convexity of
/// all its derivatives on the unit disk. Uses the closed form for computed
/// tables and the listed zeros for finite (synthetic) ones.
inline ShahTrimble shah_trimble_holds(const ZeroTable& table) {
    if (table.zeros.empty()) {
        throw domain_error("shah_trimble_holds: empty zero table");
    }
    if (!(product_zero(table.zeros.front()) > 1.0)) {
        throw hypothesis_error("shah_trimble_holds: smallest zero lies in the closed unit disk");
    }
    ShahTrimble out;
    const auto direct = rayleigh_sum_from_zeros(table);
    out.zero_sum = direct.value;
    out.tail_bound = direct.tail_bound;
    out.sum = table.tail_start ? rayleigh_sum_closed_form(table.family, table.order) : direct.value;
    out.margin = 1.0 - out.sum;
    out.holds = out.sum <= 1.0;
    return out;
}

/// Leading factor of the Hadamard product: J^(k) = (z/2)^(nu-k) / (2^k Gamma(nu-k+1)) prod(...)
/// and F = Q(nu) z^nu / (2^nu Gamma(nu+1)) prod(...).
inline complex product_prefactor(const ZeroFamily& family, Order order, complex z) {
    const double nu = order.nu;
    if (family.kind == ZeroKind::Dini) {
        if (z == complex(0.0)) {
            return nu == 0.0 ? complex(family.dini->q(nu)) : complex(0.0);
        }
        return family.dini->q(nu) * std::exp(nu * std::log(z) - nu * std::log(2.0) - log_gamma(nu + 1.0));
    }
    const int k = family.derivative();
    const double p = nu - k;
    if (z == complex(0.0)) {
        if (p > 0.0) {
            return 0.0;
        }
        if (p < 0.0) {
            throw pole_error("product_eval: prefactor unbounded at z = 0");
        }
    }
    const complex power = (z == complex(0.0)) ? complex(1.0) : std::exp(p * std::log(0.5 * z));
    return power / (std::pow(2.0, k) * gamma_fn(nu - k + 1.0));
}

/// Truncated Hadamard product of the family function at z.
///
/// With `tail_correction` the omitted factors are approximated by
/// exp(-z^2 / (pi (x_N + pi/2))), the midpoint estimate of sum_{n>N} 1/x_n^2
/// for zeros spaced pi apart; the raw truncation error decays only like 1/N.
inline complex product_eval(const ZeroFamily& family, Order order, complex z, std::size_t n_terms,
                            bool tail_correction = true) {
    if (n_terms < 1) {
        throw domain_error("product_eval: need at least one factor");
    }
    const auto table = compute_zeros(family, order, n_terms);
    const complex z2 = z * z;
    complex prod = 1.0;
    for (double x : table.zeros) {
        prod *= 1.0 - z2 / product_zero(x);
    }
    if (tail_correction) {
        const double last = table.zeros.back();
        prod *= std::exp(-z2 / (std::numbers::pi * (last + 0.5 * std::numbers::pi)));
    }
    return product_prefactor(family, order, z) * prod;
}

/// Coefficient of z^(2n) in 2^nu Gamma(nu+1) / z^nu * F(z):
/// (-1)^n [(2n+nu)(2n+nu-1) a + (2n+nu) b + c] / (4^n n! (nu+1)_n).
inline double dini_series_coefficient(const DiniCoefficients& coeffs, Order order, int n) {
    const double nu = order.nu;
    detail::check_order(nu, "dini_series_coefficient");
    if (n < 0) {
        throw domain_error("dini_series_coefficient: index must be non-negative");
    }
    const double m = 2.0 * n + nu;
    double value = m * (m - 1.0) * coeffs.a() + m * coeffs.b() + coeffs.c();
    for (int i = 1; i <= n; ++i) {
        value /= -4.0 * i * (nu + i);
    }
    return value;
}

struct GrowthOrder {
    /// Two-scale estimate with the O(n) term of the denominator eliminated.
    double estimate = 0.0;
    /// n log n / D(n) at n = n_max, the defining quotient itself.
    double raw_quotient = 0.0;
};

/// Growth order of the Dini series from its coefficients, with
///   D(n) = n log 4 + log Gamma(n+1) + log Gamma(n+nu+1) - log|(2n+nu)(2n+nu-1)a + (2n+nu)b + c|.
///
/// n log n / D(n) tends to 1/2 only like 1/log n, because D(n) = 2 n log n + beta n + O(log n).
/// Differencing D(n)/n between n_max/2 and n_max removes beta, which gives
/// log 2 / (D(n_max)/n_max - D(n_max/2)/(n_max/2)) with O(log n / n) error.
inline GrowthOrder growth_order_estimate(const DiniCoefficients& coeffs, Order order, int n_max) {
    const double nu = order.nu;
    detail::check_order(nu, "growth_order_estimate");
    if (n_max < 10) {
        throw domain_error("growth_order_estimate: n_max must be at least 10");
    }
    const auto denom = [&](int n) {
        const double m = 2.0 * n + nu;
        const double num = m * (m - 1.0) * coeffs.a() + m * coeffs.b() + coeffs.c();
        return n * std::log(4.0) + log_gamma(n + 1.0) + log_gamma(n + nu + 1.0) - std::log(std::abs(num));
    };
    const int n1 = n_max / 2;
    const double d2 = denom(n_max);
    const double d1 = denom(n1);
    GrowthOrder out;
    out.raw_quotient = n_max * std::log(static_cast<double>(n_max)) / d2;
    out.estimate = std::log(static_cast<double>(n_max) / n1) / (d2 / n_max - d1 / n1);
    return out;
}

} // namespace starbessel
