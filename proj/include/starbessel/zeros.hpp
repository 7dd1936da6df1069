#pragma once

// Positive zeros of J_nu, J_nu', J_nu'', J_nu''' and of the Dini-type
// combination a z^2 J'' + b z J' + c J, bracketed on a uniform grid and
// polished with a safeguarded Newton iteration.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "starbessel/errors.hpp"
#include "starbessel/special_fn.hpp"

namespace starbessel {

/// Coefficients (a, b, c) of F(z) = a z^2 J_nu''(z) + b z J_nu'(z) + c J_nu(z).
///
/// Only the admissible configurations are constructible: c = 0 with b != a,
/// or c > 0 with b > a. Under these the positive zeros of F increase with nu.
class DiniCoefficients {
public:
    DiniCoefficients(double a, double b, double c) : a_(a), b_(b), c_(c) {
        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
            throw domain_error("DiniCoefficients: coefficients must be finite");
        }
        const bool admissible = (c == 0.0 && b != a) || (c > 0.0 && b > a);
        if (!admissible) {
            throw domain_error("DiniCoefficients: need (c = 0 and b != a) or (c > 0 and b > a)");
        }
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }

    /// Q(nu) = a nu (nu - 1) + b nu + c, the leading series coefficient of F.
    double q(double nu) const { return a_ * nu * (nu - 1.0) + b_ * nu + c_; }

    /// Largest real root of Q, if any. Degenerates to the linear case when a = 0.
    std::optional<double> largest_q_root() const {
        if (a_ == 0.0) {
            if (b_ == 0.0) {
                return std::nullopt;
            }
            return -c_ / b_;
        }
        // a nu^2 + (b - a) nu + c
        const double p = b_ - a_;
        const double disc = p * p - 4.0 * a_ * c_;
        if (disc < 0.0) {
            return std::nullopt;
        }
        const double s = std::sqrt(disc);
        return std::max((-p + s) / (2.0 * a_), (-p - s) / (2.0 * a_));
    }

    /// max(0, largest real root of Q): the lower end of the order range on
    /// which the zeros of F are real.
    double order_floor() const { return std::max(0.0, largest_q_root().value_or(0.0)); }

    /// Q(nu) + 4 a nu + 2 a + 2 b, which also equals
    /// a (nu+1)(nu+2) + b (nu+2) + c.
    double bound_denominator(double nu) const { return q(nu) + 4.0 * a_ * nu + 2.0 * a_ + 2.0 * b_; }

    friend bool operator==(const DiniCoefficients&, const DiniCoefficients&) = default;

private:
    double a_;
    double b_;
    double c_;
};

enum class ZeroKind { J, J1, J2, J3, Dini };

/// One function family whose zeros are tabulated: J_nu^(k) for k = 0..3, or
/// a Dini combination.
struct ZeroFamily {
    ZeroKind kind = ZeroKind::J;
    std::optional<DiniCoefficients> dini;

    static ZeroFamily j() { return {ZeroKind::J, std::nullopt}; }
    static ZeroFamily j1() { return {ZeroKind::J1, std::nullopt}; }
    static ZeroFamily j2() { return {ZeroKind::J2, std::nullopt}; }
    static ZeroFamily j3() { return {ZeroKind::J3, std::nullopt}; }
    static ZeroFamily dini_family(DiniCoefficients c) { return {ZeroKind::Dini, c}; }

    /// Derivative order k for the J^(k) families.
    int derivative() const {
        switch (kind) {
        case ZeroKind::J: return 0;
        case ZeroKind::J1: return 1;
        case ZeroKind::J2: return 2;
        case ZeroKind::J3: return 3;
        case ZeroKind::Dini: break;
        }
        throw domain_error("ZeroFamily: Dini family has no single derivative order");
    }

    std::string name() const {
        switch (kind) {
        case ZeroKind::J: return "j";
        case ZeroKind::J1: return "j1";
        case ZeroKind::J2: return "j2";
        case ZeroKind::J3: return "j3";
        case ZeroKind::Dini: return "dini";
        }
        return "?";
    }

    /// Open lower end of the order range on which the zeros are real and
    /// increasing in nu. For Dini the floor itself is allowed unless Q vanishes there.
    double order_floor() const {
        switch (kind) {
        case ZeroKind::J: return -1.0;
        case ZeroKind::J1: return 0.0;
        case ZeroKind::J2: return 1.0;
        case ZeroKind::J3: return 2.0;
        case ZeroKind::Dini: return dini->order_floor();
        }
        return 0.0;
    }

    void check_order(Order order, const char* where) const {
        const double nu = order.nu;
        if (kind == ZeroKind::Dini) {
            if (!dini) {
                throw domain_error(std::string(where) + ": Dini family without coefficients");
            }
            if (!(nu >= order_floor()) || nu <= -1.0) {
                throw domain_error(std::string(where) + ": Dini family needs nu >= max(0, largest root of Q)");
            }
            if (std::abs(dini->q(nu)) < 1e-10) {
                throw domain_error(std::string(where) + ": Q(nu) vanishes, normalization undefined");
            }
            return;
        }
        if (!(nu > order_floor())) {
            throw domain_error(std::string(where) + ": order below the domain of family " + name());
        }
    }
};

/// Value of the family function and its derivative at a real point.
struct FamilyValue {
    double value;
    double slope;
};

inline FamilyValue evaluate_family(const ZeroFamily& family, Order order, double x) {
    const auto d = bessel_j_derivs(order, x);
    if (family.kind == ZeroKind::Dini) {
        const auto& c = *family.dini;
        return {c.a() * x * x * d[2] + c.b() * x * d[1] + c.c() * d[0],
                c.a() * x * x * d[3] + (2.0 * c.a() + c.b()) * x * d[2] + (c.b() + c.c()) * d[1]};
    }
    const int k = family.derivative();
    return {d[k], d[k + 1]};
}

/// Ordered positive zeros of one family at a fixed order.
struct ZeroTable {
    ZeroFamily family;
    Order order;
    std::vector<double> zeros;
    /// Where the unlisted zeros start (last zero + pi). Empty for a finite,
    /// fully listed zero set.
    std::optional<double> tail_start;

    std::size_t count() const { return zeros.size(); }
};

namespace detail {

// Lower bound for the first zero from the first two Taylor coefficients of
// the Hadamard product: prod(1 - z^2/x_n^2) = 1 - z^2 sum 1/x_n^2 + ...,
// hence x_1^2 > 1 / sum 1/x_n^2. For J^(k) this is
// 4 (nu+1) (nu)_k / (nu+2)_k with falling factorials; for Dini it is
// 4 (nu+1) Q / (Q + 4 a nu + 2 a + 2 b).
inline double first_zero_square_bound(const ZeroFamily& family, double nu) {
    if (family.kind == ZeroKind::Dini) {
        const auto& c = *family.dini;
        return 4.0 * (nu + 1.0) * c.q(nu) / c.bound_denominator(nu);
    }
    const int k = family.derivative();
    return 4.0 * (nu + 1.0) * falling(nu, k) / falling(nu + 2.0, k);
}

inline double refine_root(const ZeroFamily& family, Order order, double lo, double hi, double f_lo) {
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const auto [f, df] = evaluate_family(family, order, x);
        if (f == 0.0) {
            return x;
        }
        if ((f < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = f;
        } else {
            hi = x;
        }
        // a converged Newton step may land on a bracket end, so accept it before the bracket test
        if (df != 0.0 && std::abs(f / df) < 1e-12 * std::max(1.0, std::abs(x))) {
            return std::clamp(x - f / df, lo, hi);
        }
        double next = (df != 0.0) ? x - f / df : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double step = std::abs(next - x);
        x = next;
        if (step < 1e-12 * std::max(1.0, std::abs(x)) || hi - lo < 4.0 * std::numeric_limits<double>::epsilon() * hi) {
            return x;
        }
    }
    return x;
}

} // namespace detail

/// Closed-form lower bound on the first positive zero: for J1 (nu > 0)
/// sqrt(4 nu (nu+1)/(nu+2)), for J2 (nu > 1) sqrt(4 nu (nu-1)/(nu+2)), for
/// Dini sqrt(4 (nu+1) Q / (Q + 4 a nu + 2 a + 2 b)). J and J3 are unsupported.
inline double first_zero_lower_bound(const ZeroFamily& family, Order order) {
    const double nu = order.nu;
    switch (family.kind) {
    case ZeroKind::J1:
        if (!(nu > 0.0)) {
            throw domain_error("first_zero_lower_bound: J1 bound needs nu > 0");
        }
        break;
    case ZeroKind::J2:
        if (!(nu > 1.0)) {
            throw domain_error("first_zero_lower_bound: J2 bound needs nu > 1");
        }
        break;
    case ZeroKind::Dini: {
        family.check_order(order, "first_zero_lower_bound");
        const auto& c = *family.dini;
        if (!(c.q(nu) > 0.0) || !(c.bound_denominator(nu) > 0.0)) {
            throw domain_error("first_zero_lower_bound: Dini bound needs Q > 0 and Q + 4a nu + 2a + 2b > 0");
        }
        break;
    }
    case ZeroKind::J:
    case ZeroKind::J3:
        throw domain_error("first_zero_lower_bound: no closed-form bound for family " + family.name());
    }
    return std::sqrt(detail::first_zero_square_bound(family, nu));
}

/// First `count` positive zeros of the family at the given order.
///
/// The grid starts just below the Rayleigh-type lower bound of the first zero
/// and steps by pi/8, which cannot skip a zero since consecutive zeros are
/// roughly pi apart. Each bracket is refined to |dx| < 1e-12 max(1, x).
inline ZeroTable compute_zeros(const ZeroFamily& family, Order order, std::size_t count) {
    family.check_order(order, "compute_zeros");
    const double nu = order.nu;
    ZeroTable table{family, order, {}, std::nullopt};
    if (count == 0) {
        table.tail_start = 0.0;
        return table;
    }
    table.zeros.reserve(count);

    const double bound2 = detail::first_zero_square_bound(family, nu);
    const double start = (bound2 > 0.0 && std::isfinite(bound2)) ? 0.99 * std::sqrt(bound2) : 0.05;
    const double step = std::numbers::pi / 8.0;
    const double estimate = (static_cast<double>(count) + std::max(nu, 0.0) / 2.0 + 1.0) * std::numbers::pi;
    const double limit = 2.0 * estimate + 10.0 * std::numbers::pi;

    double x_prev = start;
    double f_prev = evaluate_family(family, order, x_prev).value;
    for (std::size_t i = 1; table.zeros.size() < count; ++i) {
        const double x = start + static_cast<double>(i) * step;
        if (x > limit) {
            throw bracket_error("compute_zeros: found " + std::to_string(table.zeros.size()) + " of " +
                                std::to_string(count) + " sign changes; enlarge the scan range");
        }
        const double f = evaluate_family(family, order, x).value;
        if (f == 0.0) {
            table.zeros.push_back(x);
        } else if (f_prev != 0.0 && (f < 0.0) != (f_prev < 0.0)) {
            table.zeros.push_back(detail::refine_root(family, order, x_prev, x, f_prev));
        }
        x_prev = x;
        f_prev = f;
    }
    table.tail_start = table.zeros.back() + std::numbers::pi;
    return table;
}

/// The order nu in (-1, 5) at which the first positive zero of J_nu equals
/// `target`, by bisection on the increasing map nu -> j_{nu,1}.
inline Order first_zero_equation_root(double target) {
    if (!(target > 0.0)) {
        throw domain_error("first_zero_equation_root: target must be positive");
    }
    const auto first = [](double nu) { return compute_zeros(ZeroFamily::j(), Order{nu}, 1).zeros.front(); };
    double lo = -1.0 + 1e-6;
    double hi = 5.0;
    if (!(first(lo) < target && target < first(hi))) {
        throw bracket_error("first_zero_equation_root: target outside the range of j_{nu,1} on (-1, 5)");
    }
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (first(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return Order{0.5 * (lo + hi)};
}

} // namespace starbessel
