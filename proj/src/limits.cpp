#include "bernstein/limits.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "bernstein/errors.hpp"
#include "bernstein/parallel.hpp"

namespace bernstein {

std::vector<double> default_delta_grid() {
    std::vector<double> g;
    for (int k = 0; k <= 10; ++k) g.push_back(std::ldexp(1.0, -k));
    return g;
}

double difference_derivative_gap(const CoeffVec& f, double delta, DiffMode mode) {
    const OperatorSpec op =
        mode == DiffMode::backward ? OperatorSpec::backward_diff(delta) : OperatorSpec::central_diff(delta);
    return std::sqrt(symbol_norm_sq(f, op.symbol() - OperatorSpec::derivative().symbol()));
}

SweepTable delta_sweep(const CoeffVec& f, std::span<const double> deltas, DiffMode mode,
                       const ToleranceConfig& tol) {
    if (deltas.empty()) throw ParameterError("delta_sweep: no deltas given");
    require_nonzero(f);
    require_admissible(f, tol.eq_tol);
    std::vector<double> grid(deltas.begin(), deltas.end());
    for (double d : grid) require_delta(d);
    std::sort(grid.begin(), grid.end(), std::greater<>());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    SweepTable table;
    table.mode = mode;
    table.rows = parallel_map(grid.size(), [&](std::size_t i) {
        const double delta = grid[i];
        const InequalityReport r = mode == DiffMode::backward ? check_backward_up(f, delta, {}, {}, tol)
                                                              : check_central_up(f, delta, {}, {}, tol);
        const ChainData& c = *r.chain;
        return SweepRow{delta, c.sigma_a, c.sigma_b, c.comm_abs, c.chain2,
                        difference_derivative_gap(f, delta, mode)};
    });
    return table;
}

SweepRow heisenberg_limit_row(const CoeffVec& f, const ToleranceConfig& tol) {
    const InequalityReport r = check_heisenberg(f, {}, {}, tol);
    const ChainData& c = *r.chain;
    return {0.0, c.sigma_a, c.sigma_b, c.comm_abs, c.chain2, 0.0};
}

double convergence_rate(const CoeffVec& f, std::span<const double> delta_grid, DiffMode mode,
                        const ToleranceConfig& tol) {
    require_nonzero(f);
    require_admissible(f, tol.eq_tol);
    if (delta_grid.size() < 4) throw ParameterError("convergence_rate: grid too short (need >= 4 points)");
    const auto [lo, hi] = std::minmax_element(delta_grid.begin(), delta_grid.end());
    if (*hi < 100.0 * *lo) throw ParameterError("convergence_rate: grid too short (need >= 2 decades)");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t n = 0;
    for (double delta : delta_grid) {
        require_delta(delta);
        const double gap = difference_derivative_gap(f, delta, mode);
        if (!(gap > 0.0)) continue;
        const double x = std::log(delta);
        const double y = std::log(gap);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw ParameterError("convergence_rate: difference quotient is exact on this grid");
    const double nd = static_cast<double>(n);
    return (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
}

std::vector<CommutatorLimitRow> commutator_limit_check(const CoeffVec& f, std::span<const double> delta_grid) {
    require_nonzero(f);
    const double nf = norm_sq(f);
    std::vector<CommutatorLimitRow> rows;
    rows.reserve(delta_grid.size());
    for (double delta : delta_grid) rows.push_back({delta, std::abs(shifted_inner(f, f, delta) - nf)});
    return rows;
}

}  // namespace bernstein
