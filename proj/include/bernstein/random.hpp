#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bernstein/coeff_vec.hpp"

namespace bernstein {

/// Orthogonal projection of samples starting at n_min onto the hyperplane
/// sum_n (-1)^n v(n) = 0.
void project_alternating(std::vector<cplx>& v, long n_min);

/// Standard-normal complex samples on a support of `dim` points centered at
/// zero (n_min = -(dim-1)/2), projected to admissibility when requested.
CoeffVec random_coeffs(std::mt19937_64& rng, int dim, bool admissible = true);

}  // namespace bernstein
