#pragma once

// Critical orders: the unique roots of the six transcendental threshold
// equations, each written as E(nu) = P(nu) J_nu(1) - R(nu) J_{nu+1}(1).
//
//   T1  (1-alpha) nu J_nu(1)                          = J_{nu+1}(1)
//   T2  (1-alpha) J_nu(1)                             = J_{nu+1}(1)
//   TA  (2nu-1) J_nu(1) + (nu-2) J_{nu+1}(1)          = 0
//   TB  (2nu^2-2nu-3) J_nu(1)                         = (nu^2+nu-3) J_{nu+1}(1)
//   TC  (2nu^3-7nu^2+3) J_nu(1) + (nu^3+nu^2+nu-1) J_{nu+1}(1) = 0
//   TD  (2a nu^2-2a nu+2b nu-3a-b+2c) J_nu(1)          = (a nu^2+a nu-b nu-3a+2b+c) J_{nu+1}(1)

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starbessel/errors.hpp"
#include "starbessel/special_fn.hpp"
#include "starbessel/zeros.hpp"

namespace starbessel {

enum class Theorem { T1, T2, TA, TB, TC, TD };

inline std::string theorem_name(Theorem t) {
    switch (t) {
    case Theorem::T1: return "1";
    case Theorem::T2: return "2";
    case Theorem::TA: return "A";
    case Theorem::TB: return "B";
    case Theorem::TC: return "C";
    case Theorem::TD: return "D";
    }
    return "?";
}

/// Which threshold equation to solve, with its parameters.
class TheoremTag {
public:
    static TheoremTag t1(double alpha) { return {Theorem::T1, check_alpha(alpha), std::nullopt}; }
    static TheoremTag t2(double alpha) { return {Theorem::T2, check_alpha(alpha), std::nullopt}; }
    static TheoremTag ta() { return {Theorem::TA, std::nullopt, std::nullopt}; }
    static TheoremTag tb() { return {Theorem::TB, std::nullopt, std::nullopt}; }
    static TheoremTag tc() { return {Theorem::TC, std::nullopt, std::nullopt}; }
    static TheoremTag td(DiniCoefficients c) { return {Theorem::TD, std::nullopt, c}; }

    Theorem theorem() const { return theorem_; }
    const std::optional<double>& alpha() const { return alpha_; }
    const std::optional<DiniCoefficients>& dini() const { return dini_; }

private:
    TheoremTag(Theorem t, std::optional<double> alpha, std::optional<DiniCoefficients> dini)
        : theorem_(t), alpha_(alpha), dini_(std::move(dini)) {}

    static double check_alpha(double alpha) {
        if (!(alpha >= 0.0 && alpha < 1.0)) {
            throw domain_error("TheoremTag: alpha must lie in [0, 1)");
        }
        return alpha;
    }

    Theorem theorem_;
    std::optional<double> alpha_;
    std::optional<DiniCoefficients> dini_;
};

/// The order at which the first positive zero of J_nu equals 1, about -0.7745.
/// Computed once.
inline double unit_first_zero_order() {
    static const double value = first_zero_equation_root(1.0).nu;
    return value;
}

/// Open lower end of the interval on which the theorem's equation has its unique root.
inline double theorem_interval_floor(const TheoremTag& tag) {
    switch (tag.theorem()) {
    case Theorem::T1: return 0.0;
    case Theorem::T2: return unit_first_zero_order();
    case Theorem::TA: return 0.0;
    case Theorem::TB: return 1.0;
    case Theorem::TC: return 2.0;
    case Theorem::TD: return tag.dini()->order_floor();
    }
    return 0.0;
}

/// Coefficients (P, R) in E(nu) = P J_nu(1) - R J_{nu+1}(1).
inline std::pair<double, double> threshold_coefficients(const TheoremTag& tag, double nu) {
    switch (tag.theorem()) {
    case Theorem::T1: return {(1.0 - *tag.alpha()) * nu, 1.0};
    case Theorem::T2: return {1.0 - *tag.alpha(), 1.0};
    case Theorem::TA: return {2.0 * nu - 1.0, -(nu - 2.0)};
    case Theorem::TB: return {2.0 * nu * nu - 2.0 * nu - 3.0, nu * nu + nu - 3.0};
    case Theorem::TC: {
        const double n2 = nu * nu;
        return {2.0 * n2 * nu - 7.0 * n2 + 3.0, -(n2 * nu + n2 + nu - 1.0)};
    }
    case Theorem::TD: {
        const auto& c = *tag.dini();
        const double a = c.a();
        const double b = c.b();
        return {2.0 * a * nu * nu - 2.0 * a * nu + 2.0 * b * nu - 3.0 * a - b + 2.0 * c.c(),
                a * nu * nu + a * nu - b * nu - 3.0 * a + 2.0 * b + c.c()};
    }
    }
    return {0.0, 0.0};
}

inline void check_theorem_order(const TheoremTag& tag, Order order, const char* where) {
    const double floor = theorem_interval_floor(tag);
    if (!(order.nu > floor)) {
        throw domain_error(std::string(where) + ": order outside the interval of theorem " +
                           theorem_name(tag.theorem()));
    }
}

/// E(nu) = LHS - RHS with the Bessel values at 1.
inline double threshold_equation(const TheoremTag& tag, Order order) {
    check_theorem_order(tag, order, "threshold_equation");
    const auto [p, r] = threshold_coefficients(tag, order.nu);
    return p * bessel_j(order, 1.0) - r * bessel_j(Order{order.nu + 1.0}, 1.0);
}

/// 2^nu Gamma(nu+1) E(nu): same roots and signs as E, but computed from the
/// normalized series so it neither underflows nor overflows at large nu.
inline double normalized_threshold_equation(const TheoremTag& tag, Order order) {
    check_theorem_order(tag, order, "normalized_threshold_equation");
    const double nu = order.nu;
    const auto [p, r] = threshold_coefficients(tag, nu);
    return p * bessel_j_scaled(order, 1.0) - r * bessel_j_scaled(Order{nu + 1.0}, 1.0) / (2.0 * (nu + 1.0));
}

struct CriticalOrderResult {
    double nu_star = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    /// Normalized equation 2^nu Gamma(nu+1) E(nu) at nu_star.
    double residual = 0.0;
    TheoremTag tag;
    int iterations = 0;
};

inline constexpr double default_root_tolerance = 1e-12;

/// Root of the theorem's equation by a forward scan from just above the
/// interval floor (step 0.05 for ten units, then doubling) followed by bisection.
inline CriticalOrderResult solve_threshold(const TheoremTag& tag, double tol = default_root_tolerance) {
    if (!(tol > 0.0)) {
        throw domain_error("solve_threshold: tolerance must be positive");
    }
    const auto e = [&](double nu) { return normalized_threshold_equation(tag, Order{nu}); };
    const double start = theorem_interval_floor(tag) + 0.01;

    double lo = start;
    double e_lo = e(lo);
    double hi = lo;
    double e_hi = e_lo;
    double step = 0.05;
    int iterations = 0;
    while ((e_hi < 0.0) == (e_lo < 0.0) && e_hi != 0.0) {
        lo = hi;
        e_lo = e_hi;
        if (hi - start >= 10.0) {
            step *= 2.0;
        }
        hi += step;
        ++iterations;
        if (hi > start + 1e4) {
            throw bracket_error("solve_threshold: no sign change of theorem " + theorem_name(tag.theorem()) +
                                " equation in scan range");
        }
        e_hi = e(hi);
    }
    if (e_hi == 0.0) {
        return {hi, hi, hi, 0.0, tag, iterations};
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double e_mid = e(mid);
        ++iterations;
        if (e_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((e_mid < 0.0) == (e_lo < 0.0)) {
            lo = mid;
            e_lo = e_mid;
        } else {
            hi = mid;
        }
    }
    const double nu_star = 0.5 * (lo + hi);
    return {nu_star, lo, hi, e(nu_star), tag, iterations};
}

struct CurvePoint {
    double alpha = 0.0;
    std::optional<CriticalOrderResult> result;
    std::string error;
};

/// nu_1(alpha) or nu_2(alpha) for each alpha; failures are reported per entry.
inline std::vector<CurvePoint> threshold_curve(Theorem theorem, const std::vector<double>& alphas,
                                               double tol = default_root_tolerance) {
    if (theorem != Theorem::T1 && theorem != Theorem::T2) {
        throw domain_error("threshold_curve: only theorems 1 and 2 carry an alpha");
    }
    std::vector<CurvePoint> out;
    out.reserve(alphas.size());
    for (double alpha : alphas) {
        CurvePoint pt{alpha, std::nullopt, {}};
        try {
            const auto tag = theorem == Theorem::T1 ? TheoremTag::t1(alpha) : TheoremTag::t2(alpha);
            pt.result = solve_threshold(tag, tol);
        } catch (const error& ex) {
            pt.error = ex.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

/// The two side conditions Q + 4a nu + 2a + 2b > 0 and (4 nu + 3) Q > 4a nu + 2a + 2b.
inline std::pair<bool, bool> check_abc_inequalities(const DiniCoefficients& coeffs, Order order) {
    const double nu = order.nu;
    const double q = coeffs.q(nu);
    const double lin = 4.0 * coeffs.a() * nu + 2.0 * coeffs.a() + 2.0 * coeffs.b();
    return {q + lin > 0.0, (4.0 * nu + 3.0) * q > lin};
}

} // namespace starbessel
