#pragma once

// Sampling-based geometric checks on the unit disk. For a normalized function
// h (h(0) = 0, h'(0) = 1) starlikeness of order alpha means
// Re(z h'(z)/h(z)) > alpha on the disk; the quotient is always formed from
// logarithmic-derivative identities, never from fractional powers of J_nu.
//
// Verdicts here are sampling evidence only. The rigorous certificate for the
// derivative families is the Shah-Trimble sum in expansions.hpp.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "starbessel/critical.hpp"
#include "starbessel/errors.hpp"
#include "starbessel/special_fn.hpp"
#include "starbessel/zeros.hpp"

namespace starbessel {

enum class FunctionKind {
    F_NU,  // (2^nu Gamma(nu+1) J_nu(z))^(1/nu)
    G_NU,  // 2^nu Gamma(nu+1) z^(1-nu) J_nu(z)
    HA,    // 2^nu Gamma(nu) z^(3/2 - nu/2) J_nu'(sqrt z)
    HB,    // 2^nu Gamma(nu-1) z^(2 - nu/2) J_nu''(sqrt z)
    HC,    // 2^nu Gamma(nu-2) z^(5/2 - nu/2) J_nu'''(sqrt z)
    HD,    // 2^nu Gamma(nu+1)/Q(nu) z^(1 - nu/2) (a z J'' + b sqrt(z) J' + c J)(sqrt z)
};

inline std::string function_name(FunctionKind k) {
    switch (k) {
    case FunctionKind::F_NU: return "f";
    case FunctionKind::G_NU: return "g";
    case FunctionKind::HA: return "hA";
    case FunctionKind::HB: return "hB";
    case FunctionKind::HC: return "hC";
    case FunctionKind::HD: return "hD";
    }
    return "?";
}

/// One of the normalized functions together with its order.
class NormalizedFunction {
public:
    NormalizedFunction(FunctionKind kind, Order order, std::optional<DiniCoefficients> dini = std::nullopt)
        : kind_(kind), order_(order), dini_(std::move(dini)) {
        const double nu = order.nu;
        const auto require = [&](bool ok, const char* what) {
            if (!ok) {
                throw domain_error("NormalizedFunction " + function_name(kind) + ": " + what);
            }
        };
        switch (kind) {
        case FunctionKind::F_NU: require(nu > 0.0, "needs nu > 0"); break;
        case FunctionKind::G_NU: require(nu > unit_first_zero_order(), "needs j_{nu,1} > 1 (nu > -0.7745...)"); break;
        case FunctionKind::HA: require(nu > 0.0, "needs nu > 0"); break;
        case FunctionKind::HB: require(nu > 1.0, "needs nu > 1"); break;
        case FunctionKind::HC: require(nu > 2.0, "needs nu > 2"); break;
        case FunctionKind::HD:
            require(dini_.has_value(), "needs Dini coefficients");
            ZeroFamily::dini_family(*dini_).check_order(order, "NormalizedFunction");
            break;
        }
        if (kind != FunctionKind::HD && dini_) {
            throw domain_error("NormalizedFunction: Dini coefficients only apply to hD");
        }
    }

    FunctionKind kind() const { return kind_; }
    Order order() const { return order_; }
    const std::optional<DiniCoefficients>& dini() const { return dini_; }

    /// The zero family whose squared zeros are the zeros of the function (HA..HD only).
    std::optional<ZeroFamily> zero_family() const {
        switch (kind_) {
        case FunctionKind::HA: return ZeroFamily::j1();
        case FunctionKind::HB: return ZeroFamily::j2();
        case FunctionKind::HC: return ZeroFamily::j3();
        case FunctionKind::HD: return ZeroFamily::dini_family(*dini_);
        default: return std::nullopt;
        }
    }

private:
    FunctionKind kind_;
    Order order_;
    std::optional<DiniCoefficients> dini_;
};

namespace detail {

inline complex checked_ratio(complex num, complex den) {
    if (!(std::abs(den) > 1e-13 * std::abs(num)) || std::abs(den) == 0.0) {
        throw pole_error("starlike_quotient: denominator vanishes near this point");
    }
    return num / den;
}

} // namespace detail

/// z h'(z) / h(z) for |z| < 1.
inline complex starlike_quotient(const NormalizedFunction& fn, complex z) {
    if (!(std::abs(z) < 1.0)) {
        throw domain_error("starlike_quotient: point must lie in the open unit disk");
    }
    if (z == complex(0.0)) {
        return 1.0;
    }
    const double nu = fn.order().nu;
    switch (fn.kind()) {
    case FunctionKind::F_NU:
    case FunctionKind::G_NU: {
        // z J_{nu+1}(z)/J_nu(z) = z^2/(2(nu+1)) * S_{nu+1}(z)/S_nu(z) with S the normalized series
        const complex s0 = bessel_j_scaled(Order{nu}, z);
        const complex s1 = bessel_j_scaled(Order{nu + 1.0}, z);
        const complex zj = detail::checked_ratio(z * z * s1, 2.0 * (nu + 1.0) * s0);
        return fn.kind() == FunctionKind::F_NU ? 1.0 - zj / nu : 1.0 - zj;
    }
    case FunctionKind::HA:
    case FunctionKind::HB:
    case FunctionKind::HC: {
        const int k = fn.kind() == FunctionKind::HA ? 1 : fn.kind() == FunctionKind::HB ? 2 : 3;
        const complex s = std::sqrt(z);
        const auto d = bessel_j_derivs(fn.order(), s);
        return 1.0 + 0.5 * (k - nu + detail::checked_ratio(s * d[k + 1], d[k]));
    }
    case FunctionKind::HD: {
        const auto& c = *fn.dini();
        const complex s = std::sqrt(z);
        const auto d = bessel_j_derivs(fn.order(), s);
        const complex f = c.a() * s * s * d[2] + c.b() * s * d[1] + c.c() * d[0];
        const complex fp = c.a() * s * s * d[3] + (2.0 * c.a() + c.b()) * s * d[2] + (c.b() + c.c()) * d[1];
        return 1.0 + 0.5 * (detail::checked_ratio(s * fp, f) - nu);
    }
    }
    return 1.0;
}

/// Re(z h'/h) sampled on the circle |z| = r.
struct RadialProfile {
    double r = 0.0;
    std::vector<std::pair<double, double>> samples;  // (theta, value)
    double min_value = 0.0;
    double argmin_theta = 0.0;
};

inline constexpr int default_n_theta = 720;

inline std::vector<double> default_r_grid() { return {0.5, 0.9, 0.99, 0.999, 0.9999}; }

inline RadialProfile min_real_part(const NormalizedFunction& fn, double r, int n_theta = default_n_theta) {
    if (!(r > 0.0 && r < 1.0)) {
        throw domain_error("min_real_part: radius must lie in (0, 1)");
    }
    if (n_theta < 8) {
        throw domain_error("min_real_part: need at least 8 angular samples");
    }
    RadialProfile profile;
    profile.r = r;
    profile.samples.reserve(static_cast<std::size_t>(n_theta));
    profile.min_value = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n_theta; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n_theta;
        const double value = starlike_quotient(fn, std::polar(r, theta)).real();
        profile.samples.emplace_back(theta, value);
        if (value < profile.min_value) {
            profile.min_value = value;
            profile.argmin_theta = theta;
        }
    }
    return profile;
}

enum class VerdictStatus { Supported, Refuted, Inconclusive };

inline std::string verdict_name(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::Supported: return "SUPPORTED";
    case VerdictStatus::Refuted: return "REFUTED";
    case VerdictStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

/// Sampling verdict on starlikeness of order alpha.
struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    double alpha = 0.0;
    double min_value = 0.0;
    /// Location of the smallest sample; a witness when status is Refuted.
    double witness_r = 0.0;
    double witness_theta = 0.0;
};

/// SUPPORTED when every sample is >= alpha - 1e-9, REFUTED when one is below
/// alpha - 1e-6, INCONCLUSIVE in between.
inline VerdictStatus classify_minimum(double min_value, double alpha) {
    if (min_value >= alpha - 1e-9) {
        return VerdictStatus::Supported;
    }
    if (min_value < alpha - 1e-6) {
        return VerdictStatus::Refuted;
    }
    return VerdictStatus::Inconclusive;
}

inline Verdict certify(const NormalizedFunction& fn, double alpha, const std::vector<double>& r_grid = default_r_grid(),
                       int n_theta = default_n_theta) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw domain_error("certify: alpha must lie in [0, 1)");
    }
    if (r_grid.empty()) {
        throw domain_error("certify: empty radius grid");
    }
    Verdict v;
    v.alpha = alpha;
    v.min_value = std::numeric_limits<double>::infinity();
    for (double r : r_grid) {
        const auto profile = min_real_part(fn, r, n_theta);
        if (profile.min_value < v.min_value) {
            v.min_value = profile.min_value;
            v.witness_r = r;
            v.witness_theta = profile.argmin_theta;
        }
    }
    v.status = classify_minimum(v.min_value, alpha);
    return v;
}

struct WConvexity {
    Verdict verdict;
    /// Largest relative gap between 1 + z w''/w' and z g'/g over the spot checks.
    double identity_residual = 0.0;
};

/// Convexity of order alpha of w_nu(z) = 2^nu Gamma(nu+1) int_0^z t^-nu J_nu(t) dt.
///
/// Since 1 + z w''/w' = z g'/g, the verdict is the one for g_nu. The identity
/// itself is spot-checked at 20 pseudo-random points, computing the left side
/// as 1 - nu + z J_nu'(z)/J_nu(z) from the differentiated series.
inline WConvexity w_convexity_check(Order order, double alpha, const std::vector<double>& r_grid = default_r_grid(),
                                    int n_theta = default_n_theta) {
    const NormalizedFunction g(FunctionKind::G_NU, order);
    WConvexity out;
    out.verdict = certify(g, alpha, r_grid, n_theta);

    std::mt19937_64 rng(0x5eedbe55e1ULL);
    std::uniform_real_distribution<double> radius(0.05, 0.95);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 20; ++i) {
        const complex z = std::polar(radius(rng), angle(rng));
        const auto d = bessel_j_derivs(order, z);
        const complex lhs = 1.0 - order.nu + z * d[1] / d[0];
        const complex rhs = starlike_quotient(g, z);
        out.identity_residual = std::max(out.identity_residual, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    return out;
}

} // namespace starbessel
