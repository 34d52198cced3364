#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <utility>

#include "fracsolve/error.hpp"
#include "fracsolve/kernels/special_functions.hpp"

namespace {

using namespace fracsolve;

TEST(Gamma, KnownValues) {
    EXPECT_NEAR(gamma_fn(1.0), 1.0, 1e-15);
    EXPECT_NEAR(gamma_fn(0.5), std::sqrt(kPi), 1e-14);
    // mpmath, 30 digits.
    EXPECT_NEAR(gamma_fn(1.25), 0.906402477055477077982671288967, 1e-14);
    EXPECT_NEAR(gamma_fn(0.05) / 19.4700853112555117563367569224, 1.0, 1e-13);
    EXPECT_NEAR(gamma_fn(50.0) / 6.08281864034267560872252163321e+62, 1.0, 1e-13);
}

TEST(Gamma, RelativeErrorAgainstLibm) {
    // tgamma is an independent implementation; sweep the stated accuracy range.
    for (double x = 0.05; x <= 50.0; x += 0.0173) {
        const double ref = std::tgamma(x);
        EXPECT_LE(std::abs(gamma_fn(x) / ref - 1.0), 1e-13) << "x = " << x;
    }
}

TEST(Gamma, ReflectionForNegativeArguments) {
    for (double x : {-0.5, -1.5, -2.25, -7.1}) {
        EXPECT_NEAR(gamma_fn(x) / std::tgamma(x), 1.0, 1e-12) << x;
    }
}

TEST(Gamma, PolesThrow) {
    EXPECT_THROW(gamma_fn(0.0), DomainError);
    EXPECT_THROW(gamma_fn(-1.0), DomainError);
    EXPECT_THROW(gamma_fn(-12.0), DomainError);
}

TEST(LogGamma, MatchesLibm) {
    for (double x : {0.01, 0.3, 1.0, 2.5, 17.0, 140.0, 1000.0}) {
        EXPECT_NEAR(log_gamma_fn(x), std::lgamma(x), 1e-12 * (1.0 + std::abs(std::lgamma(x)))) << x;
    }
    EXPECT_THROW(log_gamma_fn(0.0), DomainError);
}

TEST(Digamma, Identities) {
    EXPECT_NEAR(digamma_fn(1.0), -kEulerGamma, 1e-12);
    EXPECT_NEAR(digamma_fn(2.0), 1.0 - kEulerGamma, 1e-12);
    EXPECT_NEAR(digamma_fn(0.5), -kEulerGamma - 2.0 * std::log(2.0), 1e-12);
}

TEST(Digamma, FrozenReferenceValues) {
    // mpmath.digamma at 30 digits.
    const std::pair<double, double> table[] = {
        {0.05, -20.497844991299869257}, {0.3, -3.5025242222001331249}, {0.77, -1.0360581300985358647},
        {1.5, 0.036489973978576520559}, {3.2, 0.99883889128659964831}, {7.9, 2.0022384875635710357},
        {12.5, 2.4851956512749120482},  {33.0, 3.4812795305349872422}, {50.0, 3.901989673427892197},
    };
    for (auto [x, ref] : table) EXPECT_NEAR(digamma_fn(x), ref, 1e-12) << x;
}

TEST(Digamma, RecurrenceProperty) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.05, 49.0);
    for (int i = 0; i < 500; ++i) {
        const double x = dist(rng);
        EXPECT_NEAR(digamma_fn(x + 1.0), digamma_fn(x) + 1.0 / x, 1e-12) << x;
    }
}

TEST(Digamma, DomainError) {
    EXPECT_THROW(digamma_fn(0.0), DomainError);
    EXPECT_THROW(digamma_fn(-2.5), DomainError);
}

TEST(Omega, Values) {
    for (double t : {0.1, 1.0, 7.5}) EXPECT_NEAR(omega(1.0, t), 1.0, 1e-15);
    EXPECT_NEAR(omega(2.0, 3.0), 3.0, 1e-14);
    EXPECT_NEAR(omega(0.5, 4.0), 0.28209479177387814347, 1e-14);
}

TEST(Omega, SingularOriginThrows) {
    EXPECT_THROW(omega(0.5, 0.0), DomainError);
    EXPECT_THROW(omega(0.5, -1.0), DomainError);
    EXPECT_THROW(omega(0.0, 1.0), DomainError);
}

TEST(MittagLeffler, Values) {
    for (double theta : {0.1, 0.5, 1.0}) EXPECT_EQ(mittag_leffler(theta, 0.0), 1.0);
    EXPECT_NEAR(mittag_leffler(1.0, 1.0), std::exp(1.0), 1e-12);
    // E_{1/2}(z) = exp(z^2) erfc(-z)
    EXPECT_NEAR(mittag_leffler(0.5, 1.0), 5.00898008076228346631, 1e-6);
    EXPECT_NEAR(mittag_leffler(0.5, 1.0), std::exp(1.0) * std::erfc(-1.0), 1e-12);
    EXPECT_NEAR(mittag_leffler(0.5, -2.0), std::exp(4.0) * std::erfc(2.0), 1e-12);
    // mpmath nsum
    EXPECT_NEAR(mittag_leffler(0.7, 2.0), 20.9664331314819563038, 1e-11);
}

TEST(MittagLeffler, ExponentialCase) {
    for (double z : {-3.0, -0.5, 0.25, 4.0, 20.0}) {
        EXPECT_NEAR(mittag_leffler(1.0, z) / std::exp(z), 1.0, 1e-12) << z;
    }
}

TEST(MittagLeffler, InvalidOrderAndOverflow) {
    EXPECT_THROW(mittag_leffler(0.0, 1.0), DomainError);
    EXPECT_THROW(mittag_leffler(1.5, 1.0), DomainError);
    EXPECT_THROW(mittag_leffler(0.1, 50.0), ConvergenceError);
}

}  // namespace
