#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "bernstein/bernstein.hpp"

namespace testing {

using bernstein::CoeffVec;
using bernstein::cplx;

inline constexpr double kPi = 3.14159265358979323846;

/// The two-sample function f(0) = f(1) = 1 used throughout the worked examples.
inline CoeffVec demo() { return CoeffVec(0, {1.0, 1.0}); }

inline bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

inline bool rel_close(cplx a, cplx b, double rel) {
    return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

/// Random admissible vector with dim drawn from [lo, hi].
inline CoeffVec random_admissible(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dim(lo, hi);
    return bernstein::random_coeffs(rng, dim(rng), true);
}

inline cplx random_scalar(std::mt19937_64& rng, double scale = 2.0) {
    std::normal_distribution<double> n(0.0, scale);
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

}  // namespace testing
