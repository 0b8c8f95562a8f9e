#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bernstein/coeff_vec.hpp"
#include "bernstein/functionals.hpp"

namespace bernstein {

struct SweepRow {
    double delta = 0.0;
    double sigma_a = 0.0;
    double sigma_b = 0.0;
    double comm_abs = 0.0;
    double residual = 0.0;            // sigma_a sigma_b - comm_abs / 2
    double diff_to_derivative = 0.0;  // ||A_delta f - f'|| (or C_delta)
};

/// Rows ordered by strictly decreasing delta.
struct SweepTable {
    DiffMode mode = DiffMode::backward;
    std::vector<SweepRow> rows;
};

/// delta = 2^-k, k = 0..10.
std::vector<double> default_delta_grid();

/// ||D_delta f - f'|| for D = A_delta or C_delta, expanded through the
/// symbol of D - d/dx.
double difference_derivative_gap(const CoeffVec& f, double delta, DiffMode mode);

/// One row per delta (sorted descending, duplicates removed).
SweepTable delta_sweep(const CoeffVec& f, std::span<const double> deltas, DiffMode mode,
                       const ToleranceConfig& tol = {});

/// The delta -> 0 row: sigma_D in place of sigma_{A_delta} and ||f||^2 as the
/// commutator term.
SweepRow heisenberg_limit_row(const CoeffVec& f, const ToleranceConfig& tol = {});

/// Least-squares slope of log ||D_delta f - f'|| against log delta.
double convergence_rate(const CoeffVec& f, std::span<const double> delta_grid,
                        DiffMode mode = DiffMode::backward, const ToleranceConfig& tol = {});

struct CommutatorLimitRow {
    double delta = 0.0;
    double gap = 0.0;  // |<f(. - delta), f> - ||f||^2|
};

std::vector<CommutatorLimitRow> commutator_limit_check(const CoeffVec& f, std::span<const double> delta_grid);

}  // namespace bernstein
