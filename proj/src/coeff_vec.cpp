#include "bernstein/coeff_vec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bernstein {

CoeffVec::CoeffVec() : n_min_(0), coeffs_{cplx{0.0, 0.0}} {}

CoeffVec::CoeffVec(long n_min, std::vector<cplx> coeffs) : n_min_(n_min), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("CoeffVec: non-finite coefficient");
        }
    }
    canonicalize();
}

CoeffVec::CoeffVec(long n_min, std::initializer_list<cplx> coeffs)
    : CoeffVec(n_min, std::vector<cplx>(coeffs)) {}

CoeffVec CoeffVec::delta_at(long n, cplx value) { return CoeffVec(n, {value}); }

void CoeffVec::canonicalize() {
    const auto nonzero = [](const cplx& c) { return c != cplx{0.0, 0.0}; };
    const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), nonzero);
    if (first == coeffs_.end()) {
        n_min_ = 0;
        coeffs_.assign(1, cplx{0.0, 0.0});
        return;
    }
    const auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), nonzero).base();
    n_min_ += static_cast<long>(first - coeffs_.begin());
    coeffs_ = std::vector<cplx>(first, last);
}

cplx CoeffVec::operator[](long n) const noexcept {
    if (n < n_min_ || n > n_max()) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

bool CoeffVec::is_zero() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0] == cplx{0.0, 0.0};
}

long CoeffVec::radius() const noexcept { return std::max(std::labs(n_min_), std::labs(n_max())); }

namespace {

CoeffVec combine(const CoeffVec& a, const CoeffVec& b, double sign) {
    const long lo = std::min(a.n_min(), b.n_min());
    const long hi = std::max(a.n_max(), b.n_max());
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (long n = lo; n <= hi; ++n) out[static_cast<std::size_t>(n - lo)] = a[n] + sign * b[n];
    return CoeffVec(lo, std::move(out));
}

}  // namespace

CoeffVec CoeffVec::operator+(const CoeffVec& other) const { return combine(*this, other, 1.0); }
CoeffVec CoeffVec::operator-(const CoeffVec& other) const { return combine(*this, other, -1.0); }

CoeffVec CoeffVec::operator*(cplx scale) const {
    std::vector<cplx> out(coeffs_);
    for (auto& c : out) c *= scale;
    return CoeffVec(n_min_, std::move(out));
}

CoeffVec CoeffVec::shifted(long k) const {
    if (is_zero()) return *this;
    return CoeffVec(n_min_ + k, coeffs_);
}

}  // namespace bernstein
