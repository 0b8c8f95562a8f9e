#pragma once

#include <vector>

#include "bernstein/coeff_vec.hpp"

namespace bernstein {

// Toeplitz kernels of the sample Gram matrices. With the circle picture
// fcheck(theta) = sum_n f(n) e^{i n theta}, every kernel is a circle moment
//
//     K(k) = (1/2pi) int_{-pi}^{pi} w(theta) e^{i k theta} dtheta
//
// and sum_{n,m} f(n) conj(g(m)) K(n - m) = (1/2pi) int w fcheck conj(gcheck).

/// S_k(delta) = sinc(k + delta); weight e^{i delta theta} (translation by delta).
double shift_kernel(long k, double delta);
/// M1_k; weight theta. M1_0 = 0, M1_k = -i (-1)^k / k.
cplx moment1_kernel(long k);
/// M2_k; weight theta^2. M2_0 = pi^2/3, M2_k = 2 (-1)^k / k^2.
double moment2_kernel(long k);

/// (1/2pi) int theta^power e^{i beta theta} dtheta for power in {0, 1, 2} and
/// real beta. Integer beta falls back to the tabulated kernels above.
cplx theta_power_kernel(int power, double beta);

enum class KernelKind { shift, moment1, moment2 };

struct GramKernel {
    KernelKind kind = KernelKind::shift;
    double delta = 1.0;  // used by the shift kernel only

    static GramKernel shift(double delta) { return {KernelKind::shift, delta}; }
    static GramKernel moment1() { return {KernelKind::moment1, 0.0}; }
    static GramKernel moment2() { return {KernelKind::moment2, 0.0}; }

    cplx operator()(long k) const;
};

/// Cross-correlation c_k = sum_n f(n) conj(g(n - k)) over every lag with a
/// nonzero contribution. `lag_min` receives the lag of the first entry.
std::vector<cplx> cross_correlation(const CoeffVec& f, const CoeffVec& g, long& lag_min);

/// sum_{n,m} f(n) conj(g(m)) kernel(n - m).
cplx kernel_form(const CoeffVec& f, const CoeffVec& g, const GramKernel& kernel);

}  // namespace bernstein
