#pragma once

#include "bernstein/coeff_vec.hpp"

namespace bernstein {

struct ToleranceConfig {
    double eq_tol = 1e-10;      // closed-form identities
    double oracle_tol = 1e-6;   // relative, quadrature cross-checks
    double ineq_slack = 1e-10;  // permitted negative residual

    /// Throws ParameterError unless every field is strictly positive.
    void validate() const;
};

/// <f, g> = sum_n f(n) conj(g(n)); the sampling map is an isometry under
/// this normalization.
cplx inner(const CoeffVec& f, const CoeffVec& g);
double norm_sq(const CoeffVec& f);
double norm(const CoeffVec& f);

/// Shannon series f(x) = sum_n f(n) sinc(x - n).
cplx evaluate(const CoeffVec& f, double x);

/// <f(. - delta), g> = sum_{n,m} f(n) conj(g(m)) sinc(delta + n - m), delta in (0, 1].
cplx shifted_inner(const CoeffVec& f, const CoeffVec& g, double delta);

/// Same sum for any real delta. Internal helper for compositions of shifts
/// (e.g. 2*delta, -delta) which leave (0, 1].
cplx translation_inner(const CoeffVec& f, const CoeffVec& g, double delta);

/// sum_n (-1)^n f(n) = fcheck(pi).
cplx alternating_sum(const CoeffVec& f);

/// x f(x) is square integrable iff fcheck vanishes at +-pi, which for a
/// finite sample vector is |alternating_sum| = 0. Tested relative to ||f||.
bool is_admissible(const CoeffVec& f, double tol);

/// Throws InadmissibleFunction when !is_admissible(f, tol).
void require_admissible(const CoeffVec& f, double tol);
/// Throws ZeroFunction when f == 0.
void require_nonzero(const CoeffVec& f);

/// fcheck(theta) = sum_n f(n) e^{i n theta}.
cplx fourier_series_value(const CoeffVec& f, double theta);

/// Metadata-only dilation: g(x) = sqrt(R/pi) f(R x / pi), which has band
/// limit R and ||g|| = ||f||. Position spreads scale by pi/R, derivative
/// spreads by R/pi.
struct Dilated {
    CoeffVec samples;
    double band_limit;

    double position_scale() const;    // pi / R
    double frequency_scale() const;   // R / pi
};

Dilated dilate(const CoeffVec& f, double band_limit);

}  // namespace bernstein
