#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bernstein/coeff_vec.hpp"
#include "bernstein/functionals.hpp"

namespace bernstein::oracle {

// Brute-force counterparts of the closed-form kernels. Nothing here goes
// through kernels.hpp or symbol.hpp; the only shared primitive is evaluate().

/// Trapezoid grid on [-X, X].
struct GridSpec {
    double half_width = 0.0;
    double step = 1.0 / 64.0;

    /// X = radius + 64 (rounded up to a whole number of steps), h = 1/64.
    static GridSpec for_pair(const CoeffVec& f, const CoeffVec& g, double delta = 0.0);
    /// Requires X >= radius + 32 and 0 < h <= 1/64.
    void validate(long radius) const;
};

struct GridInner {
    cplx value;
    /// Size of the analytic far-field contribution added beyond [-X, X].
    double tail_estimate = 0.0;
};

/// int f(x - delta) conj(g(x)) dx by trapezoid sums of evaluate() plus the
/// far-field tail from the asymptotic form f(x) = sin(pi x)/pi sum_n (-1)^n f(n)/(x - n).
GridInner dense_grid_inner(const CoeffVec& f, const CoeffVec& g, double delta, const GridSpec& grid);
GridInner dense_grid_inner(const CoeffVec& f, const CoeffVec& g, double delta = 0.0);

/// int |f(x - delta)|^2 dx on the dense grid (the grid itself is not shifted).
double dense_grid_norm_sq(const CoeffVec& f, double delta);

/// (1/2pi) int_{-pi}^{pi} w(theta) dtheta by adaptive Gauss-Kronrod.
cplx circle_integral(const std::function<cplx(double)>& w);

enum class CircleWeight { one, theta, theta_sq, exp_i_delta_theta };

/// (1/2pi) int weight(theta) |fcheck(theta)|^2 dtheta.
cplx circle_quadrature_moment(const CoeffVec& f, CircleWeight weight, double delta = 0.0);

struct KernelCheck {
    std::string kind;  // "shift", "moment1", "moment2"
    long k = 0;
    double delta = 0.0;
    cplx closed_form;
    cplx quadrature;
    double abs_err = 0.0;
    bool pass = false;
};

struct KernelValidationReport {
    std::vector<KernelCheck> entries;
    bool all_pass() const;
    std::vector<KernelCheck> failures() const;
};

/// Fault-injection hook: rewrites a closed-form value before comparison.
using KernelPerturbation = std::function<cplx(const std::string& kind, long k, double delta, cplx value)>;

/// Compares S_k(delta), M1_k, M2_k against quadrature for |k| <= max_lag.
KernelValidationReport validate_kernels(long max_lag, std::span<const double> deltas, double tol = 1e-10,
                                        const KernelPerturbation& perturb = {});

/// sigma_A sigma_B / (|comm| / 2) for the backward or central difference,
/// every ingredient by circle quadrature of fcheck.
double quadrature_ratio(const CoeffVec& f, double delta, DiffMode mode);

}  // namespace bernstein::oracle
