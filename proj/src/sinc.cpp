#include "bernstein/sinc.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/trigamma.hpp>

namespace bernstein {

namespace {

constexpr double kPi = std::numbers::pi;

// Taylor coefficients of sinc about zero: sinc(t) = sum_j c_j t^{2j},
// c_j = (-1)^j pi^{2j} / (2j+1)!.
constexpr int kSeriesTerms = 24;

double series_d1(double t) {
    double sum = 0.0;
    double c = 1.0;  // c_0
    for (int j = 1; j < kSeriesTerms; ++j) {
        c *= -(kPi * kPi) / ((2.0 * j) * (2.0 * j + 1.0));
        sum += 2.0 * j * c * std::pow(t, 2 * j - 1);
    }
    return sum;
}

double series_d2(double t) {
    double sum = 0.0;
    double c = 1.0;
    for (int j = 1; j < kSeriesTerms; ++j) {
        c *= -(kPi * kPi) / ((2.0 * j) * (2.0 * j + 1.0));
        sum += 2.0 * j * (2.0 * j - 1.0) * c * std::pow(t, 2 * j - 2);
    }
    return sum;
}

}  // namespace

double sin_pi(double t) {
    double r = std::remainder(t, 2.0);  // exact, r in [-1, 1]
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    if (r == 0.0) return 0.0;
    return std::sin(kPi * r);
}

double cos_pi(double t) {
    double r = std::fabs(std::remainder(t, 2.0));
    if (r < 0.25) return std::cos(kPi * r);
    return sin_pi(0.5 - r);
}

double sinc(double t) {
    if (t == 0.0) return 1.0;
    const double at = std::fabs(t);
    if (at < 1e-6) {
        const double x2 = (kPi * t) * (kPi * t);
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return sin_pi(t) / (kPi * t);
}

double sinc_d1(double t) {
    if (std::fabs(t) < 0.5) return series_d1(t);
    return cos_pi(t) / t - sin_pi(t) / (kPi * t * t);
}

double sinc_d2(double t) {
    if (std::fabs(t) < 0.5) return series_d2(t);
    const double s = sin_pi(t);
    const double c = cos_pi(t);
    return -kPi * s / t - 2.0 * c / (t * t) + 2.0 * s / (kPi * t * t * t);
}

double sinc_tail(int padding, double delta) {
    const double s = sin_pi(delta);
    if (s == 0.0) return 0.0;
    const double p = static_cast<double>(padding) + 1.0;
    const double sum = boost::math::trigamma(p - delta) + boost::math::trigamma(p + delta);
    return std::fabs(s) / kPi * std::sqrt(sum);
}

double inverse_tail(int padding) {
    return std::sqrt(2.0 * boost::math::trigamma(static_cast<double>(padding) + 1.0));
}

}  // namespace bernstein
