#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bernstein/coeff_vec.hpp"
#include "bernstein/functionals.hpp"

namespace bernstein {

struct OptimizeConfig {
    int dim = 3;  // odd, support -(dim-1)/2 .. (dim-1)/2
    double delta = 1.0;
    DiffMode mode = DiffMode::backward;
    int max_iters = 400;
    double step0 = 0.1;
    std::uint64_t seed = 0;
    int restarts = 8;

    void validate() const;
};

struct TracePoint {
    int iter = 0;
    double ratio = 0.0;
};

struct OptimizeResult {
    CoeffVec best_f;  // admissible, unit norm
    double ratio = 0.0;  // sigma_A sigma_B / (comm_abs / 2)
    double initial_ratio = 0.0;
    std::vector<TracePoint> trace;  // accepted steps of the winning restart
    bool converged = false;
    int best_restart = 0;
    double oracle_ratio = 0.0;  // best ratio recomputed by circle quadrature
};

/// Uncertainty ratio sigma_A sigma_B / (|comm| / 2) for A = A_delta or
/// C_delta; +inf when the commutator term is below 1e-12.
double uncertainty_ratio(const CoeffVec& f, double delta, DiffMode mode);

/// Projected descent on the unit sphere of the admissible hyperplane with
/// central finite-difference gradients. Restarts are seeded from `seed` and
/// run in parallel; the lowest ratio wins (ties to the lower restart index).
/// An optional warm start runs as one extra restart.
OptimizeResult minimize_ratio(const OptimizeConfig& cfg, const std::optional<CoeffVec>& warm_start = std::nullopt);

struct SharpnessEntry {
    int dim = 0;
    double delta = 0.0;
    double ratio = 0.0;
};

/// Best ratio per (dim, delta), dims-major in input order. For each delta the
/// dims are visited in increasing order and each run is warm-started from the
/// previous optimum, so ratios cannot increase with dim.
std::vector<SharpnessEntry> sharpness_profile(std::span<const int> dims, std::span<const double> deltas,
                                              DiffMode mode, const OptimizeConfig& base = {});

/// Keeps at most `max_points` trace points, always retaining both ends.
std::vector<TracePoint> downsample_trace(const std::vector<TracePoint>& trace, std::size_t max_points = 200);

}  // namespace bernstein
