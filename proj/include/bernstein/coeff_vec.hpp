#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bernstein {

using cplx = std::complex<double>;

/// Integer samples {f(n)}, n in [n_min, n_max], of a function in the
/// Paley-Wiener space of band limit pi. Samples outside the stored range are 0.
///
/// Values are kept canonical: exact-zero edge samples are trimmed, and the
/// zero function is stored as a single 0 at n = 0.
class CoeffVec {
public:
    CoeffVec();
    CoeffVec(long n_min, std::vector<cplx> coeffs);
    CoeffVec(long n_min, std::initializer_list<cplx> coeffs);

    /// A unit sample at index n.
    static CoeffVec delta_at(long n, cplx value = 1.0);

    long n_min() const noexcept { return n_min_; }
    long n_max() const noexcept { return n_min_ + static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// f(n); zero outside the stored range.
    cplx operator[](long n) const noexcept;

    bool is_zero() const noexcept;

    /// Largest |n| over the stored support.
    long radius() const noexcept;

    CoeffVec operator+(const CoeffVec& other) const;
    CoeffVec operator-(const CoeffVec& other) const;
    CoeffVec operator*(cplx scale) const;

    /// g(n) = f(n - k).
    CoeffVec shifted(long k) const;

    friend bool operator==(const CoeffVec&, const CoeffVec&) = default;

private:
    void canonicalize();

    long n_min_ = 0;
    std::vector<cplx> coeffs_;
};

}  // namespace bernstein
