#pragma once

// Bessel functions of the first kind J_nu and their first four derivatives,
// for real order nu > -1, plus the Gamma function used for normalization.
//
// Near the origin everything goes through the ascending series
//
//   J_nu^(k)(z) = z^(nu-k) / (2^nu Gamma(nu+1)) * S_k(-z^2/4),
//   S_k(w)      = sum_n (2n+nu)_k^falling w^n / (n! (nu+1)_n),
//
// differentiated term by term, so the Bessel ODE and the recurrence
// relations are genuine cross-checks of the implementation. On the positive
// real axis beyond a crossover point the Hankel asymptotic expansion is used
// instead (the alternating series has lost all precision by |z| ~ 30).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "starbessel/errors.hpp"

namespace starbessel {

using complex = std::complex<double>;

/// Real Bessel order nu. Evaluation requires nu > -1; stricter per-operation
/// domains are checked where they apply.
struct Order {
    double nu = 0.0;
};

namespace config {

/// Largest |z| accepted by the ascending series.
inline constexpr double max_radius = 50.0;

inline constexpr int default_max_terms = 200;

/// Series term budget; STARBESSEL_MAX_TERMS overrides the default.
inline int max_series_terms() {
    static const int cap = [] {
        if (const char* env = std::getenv("STARBESSEL_MAX_TERMS")) {
            const int v = std::atoi(env);
            if (v > 0) {
                return v;
            }
        }
        return default_max_terms;
    }();
    return cap;
}

/// Real arguments at or beyond this point use the Hankel expansion.
inline double hankel_crossover(double nu) { return 17.0 + 0.5 * std::max(nu, 0.0); }

} // namespace config

namespace detail {

inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coef{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos partial-fraction sum A_g(x) for Gamma(x + 1).
inline double lanczos_sum(double x) {
    double a = lanczos_coef[0];
    for (std::size_t i = 1; i < lanczos_coef.size(); ++i) {
        a += lanczos_coef[i] / (x + static_cast<double>(i));
    }
    return a;
}

inline void check_order(double nu, const char* where) {
    if (!std::isfinite(nu) || nu <= -1.0) {
        throw domain_error(std::string(where) + ": order must satisfy nu > -1");
    }
}

inline void check_deriv(int k, const char* where) {
    if (k < 0 || k > 4) {
        throw domain_error(std::string(where) + ": derivative order must be in 0..4");
    }
}

// (x)(x-1)...(x-k+1)
template <class R = double>
R falling(R x, int k) {
    R r = 1;
    for (int i = 0; i < k; ++i) {
        r *= x - i;
    }
    return r;
}

// The five entire parts S_0..S_4 evaluated at w = -z^2/4. T is long double on
// the real fast path and std::complex<double> otherwise.
template <class T>
std::array<T, 5> entire_parts(double nu, T w, double abs_z) {
    const int max_terms = config::max_series_terms();
    const int n_min = static_cast<int>(std::ceil(abs_z / 2.0)) + 3;

    using R = decltype(std::abs(w));
    std::array<T, 5> sum{};
    std::array<double, 5> peak{};
    T base = T(1);  // w^n / (n! (nu+1)_n)
    for (int n = 0; n < max_terms; ++n) {
        if (n > 0) {
            base *= w / (static_cast<R>(n) * (static_cast<R>(nu) + n));
        }
        const R m = static_cast<R>(2 * n) + static_cast<R>(nu);
        bool small = n >= n_min;
        for (int k = 0; k < 5; ++k) {
            const T term = base * falling(m, k);
            sum[k] += term;
            const double a = static_cast<double>(std::abs(term));
            peak[k] = std::max(peak[k], a);
            const double s = static_cast<double>(std::abs(sum[k]));
            if (!(a <= 1e-16 * s || a <= 1e-17 * peak[k])) {
                small = false;
            }
        }
        if (small) {
            return sum;
        }
    }
    throw convergence_error("bessel series: no convergence within " +
                            std::to_string(max_terms) + " terms");
}

// Hankel asymptotic expansion of J_nu(x) for large positive x.
inline double hankel_j(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double p = 0.0;
    double q = 0.0;
    double t = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 400; ++k) {
        if (k > 0) {
            const double f = mu - (2.0 * k - 1) * (2.0 * k - 1);
            t *= f / (k * 8.0 * x);
        }
        const double a = std::abs(t);
        if (k > 0 && a > prev && k > nu) {
            break;  // asymptotic series started to diverge
        }
        switch (k % 4) {
        case 0: p += t; break;
        case 1: q += t; break;
        case 2: p -= t; break;
        case 3: q -= t; break;
        }
        if (t == 0.0 || a < 1e-18 * (std::abs(p) + std::abs(q))) {
            break;
        }
        prev = a;
    }
    const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// J, J', J'', J''', J'''' from J_nu and J_{nu+1} via the recurrence and the
// differentiated Bessel equation.
inline std::array<double, 5> derivs_from_pair(double nu, double x, double j, double j1) {
    std::array<double, 5> d{};
    d[0] = j;
    d[1] = (nu / x) * j - j1;
    d[2] = -d[1] / x - (1.0 - nu * nu / (x * x)) * j;
    d[3] = -(3.0 * x * d[2] + (x * x + 1.0 - nu * nu) * d[1] + 2.0 * x * j) / (x * x);
    d[4] = -(5.0 * x * d[3] + (x * x + 4.0 - nu * nu) * d[2] + 4.0 * x * d[1] + 2.0 * j) / (x * x);
    return d;
}

} // namespace detail

/// Gamma function via the Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula below 1/2. Relative error is around 1e-15.
inline double gamma_fn(double x) {
    if (std::isnan(x)) {
        throw domain_error("gamma_fn: NaN argument");
    }
    if (x <= 0.0 && x == std::floor(x)) {
        throw pole_error("gamma_fn: pole at non-positive integer");
    }
    constexpr double pi = std::numbers::pi;
    if (x < 0.5) {
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    const double t = x + detail::lanczos_g + 0.5;
    // split the power so t^(x+1/2) e^-t does not overflow before Gamma does
    const double half = std::pow(t, 0.5 * (x + 0.5));
    return std::sqrt(2.0 * pi) * half * (half * std::exp(-t)) * detail::lanczos_sum(x);
}

/// log Gamma(x) for x > 0.
inline double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw domain_error("log_gamma: argument must be positive");
    }
    if (x < 0.5) {
        return log_gamma(x + 1.0) - std::log(x);
    }
    x -= 1.0;
    const double t = x + detail::lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t +
           std::log(detail::lanczos_sum(x));
}

namespace detail {

// J^(k)(0): only series terms with exponent 2n + nu - k == 0 survive.
inline double derivative_at_origin(double nu, int k) {
    double value = 0.0;
    for (int n = 0; 2 * n <= k + 1; ++n) {
        const double coeff = falling(2.0 * n + nu, k);
        if (coeff == 0.0) {
            continue;
        }
        const double expo = 2.0 * n + nu - k;
        if (expo < 0.0) {
            throw pole_error("bessel_j_deriv: unbounded at z = 0 for this order");
        }
        if (expo == 0.0) {
            value += coeff * std::pow(-0.25, n) /
                     (gamma_fn(n + 1.0) * gamma_fn(n + nu + 1.0) * std::pow(2.0, nu));
        }
    }
    return value;
}

} // namespace detail

/// k-th derivative (k = 0..4) of J_nu at a complex point, principal branch of z^nu.
inline complex bessel_j_deriv(Order order, complex z, int k) {
    const double nu = order.nu;
    detail::check_order(nu, "bessel_j_deriv");
    detail::check_deriv(k, "bessel_j_deriv");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw domain_error("bessel_j_deriv: non-finite argument");
    }
    const double r = std::abs(z);
    if (r > config::max_radius) {
        throw domain_error("bessel_j_deriv: |z| exceeds the series radius limit");
    }
    if (r == 0.0) {
        return complex(detail::derivative_at_origin(nu, k), 0.0);
    }
    const auto parts = detail::entire_parts<complex>(nu, -0.25 * z * z, r);
    const complex prefactor =
        std::exp((nu - k) * std::log(z) - nu * std::log(2.0) - log_gamma(nu + 1.0));
    return prefactor * parts[k];
}

/// J_nu and its first four derivatives at a complex point z != 0 in one series pass.
inline std::array<complex, 5> bessel_j_derivs(Order order, complex z) {
    const double nu = order.nu;
    detail::check_order(nu, "bessel_j_derivs");
    const double r = std::abs(z);
    if (r == 0.0 || r > config::max_radius || !std::isfinite(r)) {
        std::array<complex, 5> d{};
        for (int k = 0; k < 5; ++k) {
            d[k] = bessel_j_deriv(order, z, k);
        }
        return d;
    }
    const auto parts = detail::entire_parts<complex>(nu, -0.25 * z * z, r);
    const complex log_z = std::log(z);
    const double lead = -nu * std::log(2.0) - log_gamma(nu + 1.0);
    std::array<complex, 5> d{};
    for (int k = 0; k < 5; ++k) {
        d[k] = std::exp((nu - k) * log_z + lead) * parts[k];
    }
    return d;
}

inline complex bessel_j(Order order, complex z) { return bessel_j_deriv(order, z, 0); }

/// J_nu and its first four derivatives at a real point x >= 0.
inline std::array<double, 5> bessel_j_derivs(Order order, double x) {
    const double nu = order.nu;
    detail::check_order(nu, "bessel_j");
    if (!std::isfinite(x) || x < 0.0) {
        throw domain_error("bessel_j: real argument must be finite and non-negative");
    }
    std::array<double, 5> d{};
    if (x == 0.0) {
        for (int k = 0; k < 5; ++k) {
            d[k] = bessel_j_deriv(order, complex(0.0), k).real();
        }
        return d;
    }
    if (x >= config::hankel_crossover(nu)) {
        return detail::derivs_from_pair(nu, x, detail::hankel_j(nu, x), detail::hankel_j(nu + 1.0, x));
    }
    const auto parts = detail::entire_parts<long double>(nu, -0.25L * x * x, x);
    const double lead = -nu * std::log(2.0) - log_gamma(nu + 1.0);
    for (int k = 0; k < 5; ++k) {
        d[k] = std::exp((nu - k) * std::log(x) + lead) * static_cast<double>(parts[k]);
    }
    return d;
}

inline double bessel_j_deriv(Order order, double x, int k) {
    detail::check_deriv(k, "bessel_j_deriv");
    return bessel_j_derivs(order, x)[k];
}

inline double bessel_j(Order order, double x) { return bessel_j_derivs(order, x)[0]; }

/// Normalized entire function 2^nu Gamma(nu+1) z^-nu J_nu(z)
/// = sum_n (-z^2/4)^n / (n! (nu+1)_n). Free of branch cuts and of overflow
/// in nu, which makes it the right primitive for large orders and for
/// logarithmic derivatives on the disk.
inline complex bessel_j_scaled(Order order, complex z) {
    detail::check_order(order.nu, "bessel_j_scaled");
    const double r = std::abs(z);
    if (r > config::max_radius) {
        throw domain_error("bessel_j_scaled: |z| exceeds the series radius limit");
    }
    return detail::entire_parts<complex>(order.nu, -0.25 * z * z, r)[0];
}

inline double bessel_j_scaled(Order order, double x) {
    detail::check_order(order.nu, "bessel_j_scaled");
    if (std::abs(x) > config::max_radius) {
        throw domain_error("bessel_j_scaled: |x| exceeds the series radius limit");
    }
    return static_cast<double>(detail::entire_parts<long double>(order.nu, -0.25L * x * x, std::abs(x))[0]);
}

/// J_{nu+1}(1) / J_nu(1).
///
/// The pole test is applied to the normalized value 2^nu Gamma(nu+1) J_nu(1),
/// so large orders (where J_nu(1) itself underflows) remain well defined.
inline double bessel_ratio(Order order) {
    const double nu = order.nu;
    detail::check_order(nu, "bessel_ratio");
    const double s0 = bessel_j_scaled(order, 1.0);
    if (std::abs(s0) < 1e-13) {
        throw pole_error("bessel_ratio: J_nu(1) vanishes at this order");
    }
    const double s1 = bessel_j_scaled(Order{nu + 1.0}, 1.0);
    return s1 / (2.0 * (nu + 1.0) * s0);
}

} // namespace starbessel
