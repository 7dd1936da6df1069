#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "starbessel/expansions.hpp"
#include "starbessel/geometry.hpp"

namespace sb = starbessel;
using sb::complex;
using sb::FunctionKind;
using sb::NormalizedFunction;
using sb::Order;

namespace {

// z h'/h by central differences of h built directly from its definition (real nu, |z| < 1, z off the cut).
complex numeric_quotient(FunctionKind kind, double nu, complex z) {
    const auto h = [&](complex w) -> complex {
        switch (kind) {
        case FunctionKind::F_NU:
            return std::pow(std::pow(2.0, nu) * std::tgamma(nu + 1.0) * sb::bessel_j(Order{nu}, w), 1.0 / nu);
        case FunctionKind::G_NU:
            return std::pow(2.0, nu) * std::tgamma(nu + 1.0) * std::pow(w, 1.0 - nu) * sb::bessel_j(Order{nu}, w);
        case FunctionKind::HA:
            return std::pow(w, 1.5 - nu / 2.0) * sb::bessel_j_deriv(Order{nu}, std::sqrt(w), 1);
        default:
            return 0.0;
        }
    };
    const double step = 1e-6;
    return z * (h(z + step) - h(z - step)) / (2.0 * step) / h(z);
}

} // namespace

TEST(StarlikeQuotient, MatchesNumericalDerivative) {
    const complex z(0.4, 0.3);
    for (auto kind : {FunctionKind::F_NU, FunctionKind::G_NU, FunctionKind::HA}) {
        const NormalizedFunction fn(kind, Order{1.3});
        EXPECT_LT(std::abs(sb::starlike_quotient(fn, z) - numeric_quotient(kind, 1.3, z)), 1e-7)
            << sb::function_name(kind);
    }
}

TEST(StarlikeQuotient, OneAtOriginAndDomain) {
    const NormalizedFunction fn(FunctionKind::G_NU, Order{0.5});
    EXPECT_EQ(sb::starlike_quotient(fn, complex(0.0)), complex(1.0));
    EXPECT_THROW(sb::starlike_quotient(fn, complex(1.0, 0.0)), sb::domain_error);
    EXPECT_THROW(NormalizedFunction(FunctionKind::F_NU, Order{0.0}), sb::domain_error);
    EXPECT_THROW(NormalizedFunction(FunctionKind::HB, Order{1.0}), sb::domain_error);
    EXPECT_THROW(NormalizedFunction(FunctionKind::HC, Order{2.0}), sb::domain_error);
    EXPECT_THROW(NormalizedFunction(FunctionKind::G_NU, Order{-0.8}), sb::domain_error);
    EXPECT_THROW(NormalizedFunction(FunctionKind::HD, Order{1.0}), sb::domain_error);
    EXPECT_THROW(NormalizedFunction(FunctionKind::HA, Order{1.0}, sb::DiniCoefficients(2.0, 3.0, 1.0)),
                 sb::domain_error);
}

TEST(StarlikeQuotient, HdReducesToHaAndHb) {
    const complex z(-0.3, 0.5);
    const NormalizedFunction ha(FunctionKind::HA, Order{1.4});
    const NormalizedFunction hd_a(FunctionKind::HD, Order{1.4}, sb::DiniCoefficients(0.0, 1.0, 0.0));
    EXPECT_LT(std::abs(sb::starlike_quotient(ha, z) - sb::starlike_quotient(hd_a, z)), 1e-12);
    const NormalizedFunction hb(FunctionKind::HB, Order{2.4});
    const NormalizedFunction hd_b(FunctionKind::HD, Order{2.4}, sb::DiniCoefficients(1.0, 0.0, 0.0));
    EXPECT_LT(std::abs(sb::starlike_quotient(hb, z) - sb::starlike_quotient(hd_b, z)), 1e-12);
}

TEST(RadialProfile, MinimumOnPositiveAxisAndDecreasingInRadius) {
    for (auto kind : {FunctionKind::F_NU, FunctionKind::G_NU, FunctionKind::HA, FunctionKind::HB, FunctionKind::HC}) {
        const NormalizedFunction fn(kind, Order{3.5});
        double prev = std::numeric_limits<double>::infinity();
        for (double r : sb::default_r_grid()) {
            const auto p = sb::min_real_part(fn, r, 360);
            EXPECT_EQ(p.argmin_theta, 0.0) << sb::function_name(kind) << " r=" << r;
            EXPECT_LT(p.min_value, prev);
            prev = p.min_value;
        }
    }
}

TEST(RadialProfile, InvalidArguments) {
    const NormalizedFunction fn(FunctionKind::G_NU, Order{1.0});
    EXPECT_THROW(sb::min_real_part(fn, 1.0), sb::domain_error);
    EXPECT_THROW(sb::min_real_part(fn, 0.5, 4), sb::domain_error);
}

TEST(Certify, SharpAroundEachThreshold) {
    struct Case {
        FunctionKind kind;
        sb::TheoremTag tag;
    };
    for (const auto& c : {Case{FunctionKind::F_NU, sb::TheoremTag::t1(0.0)}, Case{FunctionKind::G_NU, sb::TheoremTag::t2(0.0)},
                          Case{FunctionKind::HA, sb::TheoremTag::ta()}, Case{FunctionKind::HB, sb::TheoremTag::tb()},
                          Case{FunctionKind::HC, sb::TheoremTag::tc()}}) {
        const double nu = sb::solve_threshold(c.tag).nu_star;
        EXPECT_EQ(sb::certify(NormalizedFunction(c.kind, Order{nu + 0.05}), 0.0).status, sb::VerdictStatus::Supported)
            << sb::function_name(c.kind);
        const auto below = sb::certify(NormalizedFunction(c.kind, Order{nu - 0.05}), 0.0);
        EXPECT_EQ(below.status, sb::VerdictStatus::Refuted) << sb::function_name(c.kind);
        EXPECT_EQ(below.witness_theta, 0.0);
    }
}

TEST(Certify, OrderAlphaThresholds) {
    for (double alpha : {0.2, 0.5}) {
        const double nu = sb::solve_threshold(sb::TheoremTag::t2(alpha)).nu_star;
        EXPECT_EQ(sb::certify(NormalizedFunction(FunctionKind::G_NU, Order{nu + 0.05}), alpha).status,
                  sb::VerdictStatus::Supported);
        EXPECT_EQ(sb::certify(NormalizedFunction(FunctionKind::G_NU, Order{nu - 0.05}), alpha).status,
                  sb::VerdictStatus::Refuted);
    }
}

TEST(Certify, ClassificationBands) {
    EXPECT_EQ(sb::classify_minimum(0.3, 0.3), sb::VerdictStatus::Supported);
    EXPECT_EQ(sb::classify_minimum(0.3 - 5e-10, 0.3), sb::VerdictStatus::Supported);
    EXPECT_EQ(sb::classify_minimum(0.3 - 5e-7, 0.3), sb::VerdictStatus::Inconclusive);
    EXPECT_EQ(sb::classify_minimum(0.3 - 2e-6, 0.3), sb::VerdictStatus::Refuted);
    const NormalizedFunction fn(FunctionKind::G_NU, Order{1.0});
    EXPECT_THROW(sb::certify(fn, 1.0), sb::domain_error);
    EXPECT_THROW(sb::certify(fn, 0.0, {}), sb::domain_error);
}

TEST(Certify, AgreesWithShahTrimbleForDiniFunctions) {
    const sb::DiniCoefficients c(2.0, 3.0, 1.0);
    for (double nu : {0.9, 1.05, 1.25, 1.6, 3.0}) {
        const NormalizedFunction fn(FunctionKind::HD, Order{nu}, c);
        const auto verdict = sb::certify(fn, 0.0);
        const auto st = sb::shah_trimble_holds(sb::compute_zeros(*fn.zero_family(), Order{nu}, 200));
        EXPECT_EQ(verdict.status == sb::VerdictStatus::Supported, st.holds) << nu;
    }
}

TEST(WConvexity, IdentityAndVerdict) {
    const double nu_star = sb::solve_threshold(sb::TheoremTag::t2(0.0)).nu_star;
    const auto above = sb::w_convexity_check(Order{nu_star + 0.05}, 0.0);
    EXPECT_EQ(above.verdict.status, sb::VerdictStatus::Supported);
    EXPECT_LT(above.identity_residual, 1e-10);
    const auto below = sb::w_convexity_check(Order{nu_star - 0.05}, 0.0);
    EXPECT_EQ(below.verdict.status, sb::VerdictStatus::Refuted);
    EXPECT_LT(below.identity_residual, 1e-10);
}
