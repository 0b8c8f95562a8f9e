#include "bernstein/random.hpp"

#include "bernstein/errors.hpp"

namespace bernstein {

void project_alternating(std::vector<cplx>& v, long n_min) {
    if (v.empty()) return;
    cplx alt{0.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const bool even = (n_min + static_cast<long>(i)) % 2 == 0;
        alt += even ? v[i] : -v[i];
    }
    const cplx step = alt / static_cast<double>(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const bool even = (n_min + static_cast<long>(i)) % 2 == 0;
        v[i] -= even ? step : -step;
    }
}

CoeffVec random_coeffs(std::mt19937_64& rng, int dim, bool admissible) {
    if (dim < 1) throw ParameterError("random_coeffs: dim must be >= 1");
    if (admissible && dim < 2) throw ParameterError("random_coeffs: an admissible vector needs dim >= 2");
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> v(static_cast<std::size_t>(dim));
    for (auto& c : v) {
        const double re = normal(rng);
        const double im = normal(rng);
        c = {re, im};
    }
    const long n_min = -static_cast<long>((dim - 1) / 2);
    if (admissible) project_alternating(v, n_min);
    return CoeffVec(n_min, std::move(v));
}

}  // namespace bernstein
