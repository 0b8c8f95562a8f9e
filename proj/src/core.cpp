#include "bernstein/core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bernstein/errors.hpp"
#include "bernstein/kernels.hpp"
#include "bernstein/sinc.hpp"

namespace bernstein {

void require_delta(double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) {
        std::ostringstream os;
        os << "delta must lie in (0, 1], got " << delta;
        throw ParameterError(os.str());
    }
}

void ToleranceConfig::validate() const {
    if (!(eq_tol > 0.0 && oracle_tol > 0.0 && ineq_slack > 0.0)) {
        throw ParameterError("tolerances must be strictly positive");
    }
}

cplx inner(const CoeffVec& f, const CoeffVec& g) {
    const long lo = std::max(f.n_min(), g.n_min());
    const long hi = std::min(f.n_max(), g.n_max());
    cplx sum{0.0, 0.0};
    for (long n = lo; n <= hi; ++n) sum += f[n] * std::conj(g[n]);
    return sum;
}

double norm_sq(const CoeffVec& f) {
    double sum = 0.0;
    for (const auto& c : f.coeffs()) sum += std::norm(c);
    return sum;
}

double norm(const CoeffVec& f) { return std::sqrt(norm_sq(f)); }

cplx evaluate(const CoeffVec& f, double x) {
    cplx sum{0.0, 0.0};
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double s = sinc(x - static_cast<double>(f.n_min() + static_cast<long>(i)));
        if (s != 0.0) sum += c[i] * s;
    }
    return sum;
}

cplx translation_inner(const CoeffVec& f, const CoeffVec& g, double delta) {
    return kernel_form(f, g, GramKernel::shift(delta));
}

cplx shifted_inner(const CoeffVec& f, const CoeffVec& g, double delta) {
    require_delta(delta);
    return translation_inner(f, g, delta);
}

cplx alternating_sum(const CoeffVec& f) {
    cplx sum{0.0, 0.0};
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const long n = f.n_min() + static_cast<long>(i);
        sum += (n % 2 == 0) ? c[i] : -c[i];
    }
    return sum;
}

bool is_admissible(const CoeffVec& f, double tol) {
    return std::abs(alternating_sum(f)) <= tol * std::max(1.0, norm(f));
}

void require_admissible(const CoeffVec& f, double tol) {
    if (!is_admissible(f, tol)) {
        std::ostringstream os;
        os << "x f(x) is not square integrable (alternating sample sum "
           << std::abs(alternating_sum(f)) << ")";
        throw InadmissibleFunction(os.str());
    }
}

void require_nonzero(const CoeffVec& f) {
    if (f.is_zero()) throw ZeroFunction("the zero function has no expectation or spread");
}

cplx fourier_series_value(const CoeffVec& f, double theta) {
    cplx sum{0.0, 0.0};
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double n = static_cast<double>(f.n_min() + static_cast<long>(i));
        sum += c[i] * std::polar(1.0, n * theta);
    }
    return sum;
}

double Dilated::position_scale() const { return std::numbers::pi / band_limit; }
double Dilated::frequency_scale() const { return band_limit / std::numbers::pi; }

Dilated dilate(const CoeffVec& f, double band_limit) {
    if (!(band_limit > 0.0) || !std::isfinite(band_limit)) {
        throw ParameterError("band limit R must be positive and finite");
    }
    return {f, band_limit};
}

}  // namespace bernstein
