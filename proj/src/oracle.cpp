#include "bernstein/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bernstein/core.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/kernels.hpp"
#include "bernstein/sinc.hpp"

namespace bernstein::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// F(y) = sum_n (-1)^n f(n) / (y - n) and its derivative; f(x) = sin(pi x)/pi F(x).
cplx far_field(const CoeffVec& f, double y) {
    cplx sum{0.0, 0.0};
    for (long n = f.n_min(); n <= f.n_max(); ++n) {
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sgn * f[n] / (y - static_cast<double>(n));
    }
    return sum;
}

cplx far_field_d1(const CoeffVec& f, double y) {
    cplx sum{0.0, 0.0};
    for (long n = f.n_min(); n <= f.n_max(); ++n) {
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        const double d = y - static_cast<double>(n);
        sum -= sgn * f[n] / (d * d);
    }
    return sum;
}

// Contribution of |x| > X to int f(x - df) conj g(x - dg) dx. With
// H(x) = F(x - df) conj G(x - dg) the integrand is
//   [cos(pi (dg - df)) - cos(2 pi x - pi (df + dg))] H(x) / (2 pi^2).
// The smooth part is integrated exactly after x = X/t; the oscillating part
// by two integrations by parts (remainder O(X^-4)).
cplx far_tail(const CoeffVec& f, double df, const CoeffVec& g, double dg, double X) {
    auto H = [&](double x) { return far_field(f, x - df) * std::conj(far_field(g, x - dg)); };
    auto dH = [&](double x) {
        return far_field_d1(f, x - df) * std::conj(far_field(g, x - dg)) +
               far_field(f, x - df) * std::conj(far_field_d1(g, x - dg));
    };
    auto mapped = [&](double t) { return (H(X / t) + H(-X / t)) * (X / (t * t)); };
    using GL = boost::math::quadrature::gauss<double, 40>;
    const double re = GL::integrate([&](double t) { return mapped(t).real(); }, 0.0, 1.0);
    const double im = GL::integrate([&](double t) { return mapped(t).imag(); }, 0.0, 1.0);
    const cplx smooth = cos_pi(dg - df) / (2.0 * kPi * kPi) * cplx{re, im};

    const double w = 2.0 * kPi;
    const double phase = df + dg;
    const cplx right = -sin_pi(2.0 * X - phase) * H(X) / w - cos_pi(2.0 * X - phase) * dH(X) / (w * w);
    const cplx left = sin_pi(-2.0 * X - phase) * H(-X) / w + cos_pi(-2.0 * X - phase) * dH(-X) / (w * w);
    const cplx oscillating = -(right + left) / (2.0 * kPi * kPi);
    return smooth + oscillating;
}

GridInner grid_pair(const CoeffVec& f, double df, const CoeffVec& g, double dg, const GridSpec& grid) {
    const double reach = std::ceil(std::max(std::fabs(df), std::fabs(dg)));
    grid.validate(std::max(f.radius(), g.radius()) + static_cast<long>(reach));
    const long steps = static_cast<long>(std::ceil(2.0 * grid.half_width / grid.step));
    const double h = 2.0 * grid.half_width / static_cast<double>(steps);
    cplx sum{0.0, 0.0};
    for (long j = 0; j <= steps; ++j) {
        const double x = -grid.half_width + h * static_cast<double>(j);
        const cplx v = evaluate(f, x - df) * std::conj(evaluate(g, x - dg));
        sum += (j == 0 || j == steps) ? 0.5 * v : v;
    }
    sum *= h;
    const cplx tail = far_tail(f, df, g, dg, grid.half_width);
    return {sum + tail, std::abs(tail)};
}

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

// Boost's own refinement test is relative to each panel's result, which
// never terminates on integrals that cancel to zero. Refine against an
// absolute target instead.
double refine(const std::function<double(double)>& fn, double a, double b, double abs_tol, int depth) {
    double err = 0.0;
    const double r = GK::integrate(fn, a, b, 0, 0.0, &err);
    if (err <= abs_tol || depth == 0) return r;
    const double m = 0.5 * (a + b);
    return refine(fn, a, m, 0.5 * abs_tol, depth - 1) + refine(fn, m, b, 0.5 * abs_tol, depth - 1);
}

double panel_l1(const std::function<double(double)>& fn, double a, double b) {
    double err = 0.0;
    double l1 = 0.0;
    GK::integrate(fn, a, b, 0, 0.0, &err, &l1);
    return l1;
}

constexpr int kPanels = 8;

double panel_edge(int p) { return -kPi + 2.0 * kPi * p / kPanels; }

double integrate_real(const std::function<double(double)>& fn, double abs_tol) {
    double sum = 0.0;
    for (int p = 0; p < kPanels; ++p) sum += refine(fn, panel_edge(p), panel_edge(p + 1), abs_tol / kPanels, 12);
    return sum;
}

cplx fcheck_derivative(const CoeffVec& f, double theta) {
    cplx sum{0.0, 0.0};
    for (long n = f.n_min(); n <= f.n_max(); ++n) {
        const double nd = static_cast<double>(n);
        sum += cplx{0.0, nd} * f[n] * std::polar(1.0, nd * theta);
    }
    return sum;
}

}  // namespace

GridSpec GridSpec::for_pair(const CoeffVec& f, const CoeffVec& g, double delta) {
    const double radius = static_cast<double>(std::max(f.radius(), g.radius())) + std::ceil(std::fabs(delta));
    return {radius + 64.0, 1.0 / 64.0};
}

void GridSpec::validate(long radius) const {
    if (!(step > 0.0 && step <= 1.0 / 64.0)) throw ParameterError("GridSpec: step must lie in (0, 1/64]");
    if (!(half_width >= static_cast<double>(radius) + 32.0)) {
        throw ParameterError("GridSpec: half width must be at least support radius + 32");
    }
}

GridInner dense_grid_inner(const CoeffVec& f, const CoeffVec& g, double delta, const GridSpec& grid) {
    return grid_pair(f, delta, g, 0.0, grid);
}

GridInner dense_grid_inner(const CoeffVec& f, const CoeffVec& g, double delta) {
    return dense_grid_inner(f, g, delta, GridSpec::for_pair(f, g, delta));
}

double dense_grid_norm_sq(const CoeffVec& f, double delta) {
    return grid_pair(f, delta, f, delta, GridSpec::for_pair(f, f, delta)).value.real();
}

cplx circle_integral(const std::function<cplx(double)>& w) {
    auto re = [&](double t) { return w(t).real(); };
    auto im = [&](double t) { return w(t).imag(); };
    // One tolerance for both parts: a part that is pure roundoff must not be
    // refined against its own size.
    double l1 = 0.0;
    for (int p = 0; p < kPanels; ++p) {
        l1 += panel_l1(re, panel_edge(p), panel_edge(p + 1)) + panel_l1(im, panel_edge(p), panel_edge(p + 1));
    }
    const double abs_tol = std::max(1e-13 * l1, 1e-300);
    return cplx{integrate_real(re, abs_tol), integrate_real(im, abs_tol)} / (2.0 * kPi);
}

cplx circle_quadrature_moment(const CoeffVec& f, CircleWeight weight, double delta) {
    return circle_integral([&](double t) -> cplx {
        const double density = std::norm(fourier_series_value(f, t));
        switch (weight) {
            case CircleWeight::one: return density;
            case CircleWeight::theta: return t * density;
            case CircleWeight::theta_sq: return t * t * density;
            case CircleWeight::exp_i_delta_theta: return std::polar(density, delta * t);
        }
        return 0.0;
    });
}

bool KernelValidationReport::all_pass() const {
    for (const auto& e : entries) {
        if (!e.pass) return false;
    }
    return true;
}

std::vector<KernelCheck> KernelValidationReport::failures() const {
    std::vector<KernelCheck> out;
    for (const auto& e : entries) {
        if (!e.pass) out.push_back(e);
    }
    return out;
}

KernelValidationReport validate_kernels(long max_lag, std::span<const double> deltas, double tol,
                                        const KernelPerturbation& perturb) {
    if (max_lag < 1) throw ParameterError("validate_kernels: max_lag must be >= 1");
    KernelValidationReport report;
    auto record = [&](const std::string& kind, long k, double delta, cplx closed, cplx quad) {
        if (perturb) closed = perturb(kind, k, delta, closed);
        const double err = std::abs(closed - quad);
        report.entries.push_back({kind, k, delta, closed, quad, err, err <= tol});
    };
    for (long k = -max_lag; k <= max_lag; ++k) {
        const double kd = static_cast<double>(k);
        record("moment1", k, 0.0, moment1_kernel(k),
               circle_integral([&](double t) { return t * std::polar(1.0, kd * t); }));
        record("moment2", k, 0.0, moment2_kernel(k),
               circle_integral([&](double t) { return t * t * std::polar(1.0, kd * t); }));
        for (double delta : deltas) {
            record("shift", k, delta, shift_kernel(k, delta),
                   circle_integral([&](double t) { return std::polar(1.0, (kd + delta) * t); }));
        }
    }
    return report;
}

double quadrature_ratio(const CoeffVec& f, double delta, DiffMode mode) {
    auto symbol = [&](double t) -> cplx {
        if (mode == DiffMode::backward) return (1.0 - std::polar(1.0, delta * t)) / delta;
        return cplx{0.0, -std::sin(delta * t) / delta};
    };
    const double nf = circle_quadrature_moment(f, CircleWeight::one).real();
    const cplx tau_a =
        circle_integral([&](double t) { return symbol(t) * std::norm(fourier_series_value(f, t)); }) / nf;
    const double var_a = circle_integral([&](double t) -> cplx {
                             return std::norm(symbol(t) - tau_a) * std::norm(fourier_series_value(f, t));
                         }).real();
    // multiplication by x acts as -i d/dtheta on fcheck
    const cplx tau_b = circle_integral([&](double t) {
                           return cplx{0.0, -1.0} * fcheck_derivative(f, t) *
                                  std::conj(fourier_series_value(f, t));
                       }) / nf;
    const double var_b = circle_integral([&](double t) -> cplx {
                             return std::norm(cplx{0.0, -1.0} * fcheck_derivative(f, t) -
                                              tau_b * fourier_series_value(f, t));
                         }).real();
    const cplx comm = circle_integral([&](double t) -> cplx {
        const double density = std::norm(fourier_series_value(f, t));
        if (mode == DiffMode::backward) return std::polar(density, delta * t);
        return std::cos(delta * t) * density;
    });
    return std::sqrt(var_a) * std::sqrt(var_b) / (0.5 * std::abs(comm));
}

}  // namespace bernstein::oracle
