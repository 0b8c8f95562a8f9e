#include <doctest.h>

#include "helpers.hpp"

using namespace bernstein;
using namespace testing;

TEST_CASE("sinc is exact at integers and matches its definition elsewhere") {
    CHECK(sinc(0.0) == 1.0);
    for (int k = 1; k <= 50; ++k) {
        CHECK(sinc(static_cast<double>(k)) == 0.0);
        CHECK(sinc(-static_cast<double>(k)) == 0.0);
    }
    CHECK(sinc(0.5) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
    CHECK(sinc(1.5) == doctest::Approx(-2.0 / (3.0 * kPi)).epsilon(1e-15));
    CHECK(sinc(1e-8) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sinc(-2.25) == doctest::Approx(std::sin(kPi * -2.25) / (kPi * -2.25)).epsilon(1e-14));
}

TEST_CASE("sinc derivatives agree with finite differences") {
    for (double t : {-3.7, -1.0, -0.3, 0.0, 0.2, 0.49, 0.51, 1.0, 2.5, 17.25}) {
        const double h = 1e-4;
        const double d1 = (sinc(t + h) - sinc(t - h)) / (2 * h);
        const double d2 = (sinc(t + h) - 2 * sinc(t) + sinc(t - h)) / (h * h);
        CHECK(sinc_d1(t) == doctest::Approx(d1).epsilon(1e-7));
        CHECK(sinc_d2(t) == doctest::Approx(d2).epsilon(1e-5));
    }
}

TEST_CASE("closed-form moment kernels") {
    CHECK(moment2_kernel(0) == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-15));
    CHECK(moment2_kernel(1) == -2.0);
    CHECK(moment2_kernel(-2) == 0.5);
    CHECK(moment1_kernel(0) == cplx{0.0, 0.0});
    CHECK(moment1_kernel(1) == cplx{0.0, 1.0});
    CHECK(moment1_kernel(-1) == std::conj(moment1_kernel(1)));
    for (long k = -20; k <= 20; ++k) {
        CHECK(moment1_kernel(-k) == std::conj(moment1_kernel(k)));
        CHECK(moment2_kernel(-k) == moment2_kernel(k));
        for (double d : {0.1, 0.5, 1.0}) CHECK(std::fabs(shift_kernel(k, d)) <= 1.0);
    }
    // non-integer theta kernels continue the integer ones
    CHECK(close(theta_power_kernel(1, 3.0), moment1_kernel(3), 0.0));
    CHECK(close(theta_power_kernel(1, 3.0 + 1e-9), moment1_kernel(3), 1e-8));
    CHECK(close(theta_power_kernel(2, -2.0 + 1e-9), moment2_kernel(-2), 1e-8));
    CHECK(close(theta_power_kernel(2, 1e-9), moment2_kernel(0), 1e-8));
}

TEST_CASE("sinc tail bounds match brute-force sums") {
    for (double d : {0.1, 0.5, 0.9}) {
        for (int p : {0, 4, 64}) {
            double s = 0.0;
            for (long k = p + 1; k < 2000000; ++k) {
                s += sinc(k - d) * sinc(k - d) + sinc(-k - d) * sinc(-k - d);
            }
            CHECK(sinc_tail(p, d) == doctest::Approx(std::sqrt(s)).epsilon(1e-4));
        }
    }
    CHECK(sinc_tail(8, 1.0) == 0.0);
    double s = 0.0;
    for (long k = 11; k < 2000000; ++k) s += 2.0 / (double(k) * double(k));
    CHECK(inverse_tail(10) == doctest::Approx(std::sqrt(s)).epsilon(1e-4));
}

TEST_CASE("symbol commutator with position") {
    // A_delta: [A, x] is translation by delta
    const auto a = OperatorSpec::backward_diff(0.25).symbol().commutator_with_position().simplified();
    REQUIRE(a.terms().size() == 1);
    CHECK(a.terms()[0].alpha == 0.25);
    CHECK(close(a.terms()[0].coef, 1.0, 1e-15));
    // d/dx: [D, x] = 1
    const auto d = OperatorSpec::derivative().symbol().commutator_with_position().simplified();
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms()[0].power == 0);
    CHECK(close(d.terms()[0].coef, 1.0, 0.0));
}
