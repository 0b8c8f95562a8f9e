#include "bernstein/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bernstein/sinc.hpp"

namespace bernstein {

namespace {
constexpr double kPi = std::numbers::pi;

double parity(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }
}  // namespace

double shift_kernel(long k, double delta) { return sinc(static_cast<double>(k) + delta); }

cplx moment1_kernel(long k) {
    if (k == 0) return {0.0, 0.0};
    return {0.0, -parity(k) / static_cast<double>(k)};
}

double moment2_kernel(long k) {
    if (k == 0) return kPi * kPi / 3.0;
    const double kd = static_cast<double>(k);
    return 2.0 * parity(k) / (kd * kd);
}

cplx theta_power_kernel(int power, double beta) {
    const bool integral = std::nearbyint(beta) == beta && std::fabs(beta) < 1e15;
    switch (power) {
        case 0:
            return sinc(beta);
        case 1:
            if (integral) return moment1_kernel(static_cast<long>(beta));
            return {0.0, -sinc_d1(beta)};
        case 2:
            if (integral) return moment2_kernel(static_cast<long>(beta));
            return -sinc_d2(beta);
        default:
            throw std::invalid_argument("theta_power_kernel: power must be 0, 1 or 2");
    }
}

cplx GramKernel::operator()(long k) const {
    switch (kind) {
        case KernelKind::shift:
            return shift_kernel(k, delta);
        case KernelKind::moment1:
            return moment1_kernel(k);
        case KernelKind::moment2:
            return moment2_kernel(k);
    }
    return {};
}

std::vector<cplx> cross_correlation(const CoeffVec& f, const CoeffVec& g, long& lag_min) {
    lag_min = f.n_min() - g.n_max();
    const long lag_max = f.n_max() - g.n_min();
    std::vector<cplx> c(static_cast<std::size_t>(lag_max - lag_min + 1));
    const auto fc = f.coeffs();
    const auto gc = g.coeffs();
    for (std::size_t i = 0; i < fc.size(); ++i) {
        const long n = f.n_min() + static_cast<long>(i);
        for (std::size_t j = 0; j < gc.size(); ++j) {
            const long m = g.n_min() + static_cast<long>(j);
            c[static_cast<std::size_t>(n - m - lag_min)] += fc[i] * std::conj(gc[j]);
        }
    }
    return c;
}

cplx kernel_form(const CoeffVec& f, const CoeffVec& g, const GramKernel& kernel) {
    long lag_min = 0;
    const auto c = cross_correlation(f, g, lag_min);
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == cplx{0.0, 0.0}) continue;
        sum += c[i] * kernel(lag_min + static_cast<long>(i));
    }
    return sum;
}

}  // namespace bernstein
