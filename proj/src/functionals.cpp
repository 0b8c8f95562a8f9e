#include "bernstein/functionals.hpp"

#include <cmath>
#include <numbers>

#include "bernstein/errors.hpp"
#include "bernstein/kernels.hpp"

namespace bernstein {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

// sum_n |n - b|^2 |f(n)|^2
double position_deviation_sq(const CoeffVec& f, cplx b) {
    double sum = 0.0;
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double n = static_cast<double>(f.n_min() + static_cast<long>(i));
        sum += std::norm(n - b) * std::norm(c[i]);
    }
    return sum;
}

cplx position_moment(const CoeffVec& f) {
    double sum = 0.0;
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        sum += static_cast<double>(f.n_min() + static_cast<long>(i)) * std::norm(c[i]);
    }
    return sum;
}

void prepare(const OperatorSpec& op, const CoeffVec& f, double tol) {
    require_nonzero(f);
    if (!op.is_multiplier()) require_admissible(f, tol);
}

ChainData make_chain(double factor_a, double factor_b, double sigma_a, double sigma_b, double comm_abs) {
    ChainData c{factor_a, factor_b, sigma_a, sigma_b, comm_abs, 0.0, 0.0};
    c.chain1 = factor_a * factor_b - sigma_a * sigma_b;
    c.chain2 = sigma_a * sigma_b - 0.5 * comm_abs;
    return c;
}

InequalityReport chain_report(std::string name, const ChainData& chain, InequalityParams params,
                              const ToleranceConfig& tol) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = chain.factor_a * chain.factor_b;
    r.rhs = 0.5 * chain.comm_abs;
    r.residual = r.lhs - r.rhs;
    r.pass = r.residual >= -tol.ineq_slack && chain.chain1 >= -tol.ineq_slack &&
             chain.chain2 >= -tol.ineq_slack;
    r.degenerate_bound = r.rhs < kDegenerateBound;
    r.params = std::move(params);
    r.chain = chain;
    return r;
}

InequalityReport bound_report(std::string name, double lhs, double rhs, InequalityParams params,
                              const ToleranceConfig& tol) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = lhs - rhs;
    r.pass = r.residual >= -tol.ineq_slack;
    r.degenerate_bound = rhs < kDegenerateBound;
    r.params = std::move(params);
    return r;
}

double sqrt_clamped(double x) { return std::sqrt(std::max(0.0, x)); }

// Sample norm of h - a f for sequences h, f, by direct summation.
double sequence_deviation(const CoeffVec& h, const CoeffVec& f, cplx a) {
    double sum = 0.0;
    const long lo = std::min(h.n_min(), f.n_min());
    const long hi = std::max(h.n_max(), f.n_max());
    for (long n = lo; n <= hi; ++n) sum += std::norm(h[n] - a * f[n]);
    return std::sqrt(sum);
}

}  // namespace

double image_norm_sq(const OperatorSpec& op, const CoeffVec& f, double tol) {
    if (op.kind == OpKind::mult_b) {
        require_admissible(f, tol);
        return position_deviation_sq(f, 0.0);
    }
    return symbol_norm_sq(f, op.symbol());
}

cplx expectation(const OperatorSpec& op, const CoeffVec& f, double tol) {
    prepare(op, f, tol);
    const double nf = norm_sq(f);
    if (op.kind == OpKind::mult_b) return position_moment(f) / nf;
    return symbol_form(f, f, op.symbol()) / nf;
}

FunctionalReport variance(const OperatorSpec& op, const CoeffVec& f, double tol) {
    const cplx tau = expectation(op, f, tol);
    const double nf = norm_sq(f);
    const double sigma_sq = image_norm_sq(op, f, tol) - std::norm(tau) * nf;
    return {tau, sqrt_clamped(sigma_sq), nf};
}

double deviation_norm(const OperatorSpec& op, const CoeffVec& f, cplx a, double tol) {
    if (op.kind == OpKind::mult_b) {
        require_admissible(f, tol);
        return std::sqrt(position_deviation_sq(f, a));
    }
    return std::sqrt(symbol_norm_sq(f, op.symbol() - Symbol::constant(a)));
}

cplx commutator_expectation(const OperatorSpec& a, const OperatorSpec& b, const CoeffVec& f, double tol) {
    const bool a_pos = a.kind == OpKind::mult_b;
    const bool b_pos = b.kind == OpKind::mult_b;
    if (a_pos || b_pos) require_admissible(f, tol);
    if (a_pos == b_pos) return {0.0, 0.0};
    if (b_pos) return symbol_form(f, f, a.symbol().commutator_with_position());
    return -symbol_form(f, f, b.symbol().commutator_with_position());
}

std::string to_string(DiffMode mode) { return mode == DiffMode::backward ? "backward" : "central"; }

DiffMode diff_mode_from_string(const std::string& s) {
    if (s == "backward") return DiffMode::backward;
    if (s == "central") return DiffMode::central;
    throw ParameterError("mode must be 'backward' or 'central', got '" + s + "'");
}

double commutator_abs(const CoeffVec& f, double delta, DiffMode mode) {
    const cplx s = shifted_inner(f, f, delta);
    // <f(. + delta), f> = conj <f(. - delta), f> since translations are unitary
    if (mode == DiffMode::backward) return std::abs(s);
    return std::abs(0.5 * (s + std::conj(s)));
}

InequalityReport check_general_pair(const OperatorSpec& op_a, const OperatorSpec& op_b, const CoeffVec& f,
                                    std::optional<cplx> a, std::optional<cplx> b, const ToleranceConfig& tol) {
    prepare(op_a, f, tol.eq_tol);
    prepare(op_b, f, tol.eq_tol);
    const FunctionalReport va = variance(op_a, f, tol.eq_tol);
    const FunctionalReport vb = variance(op_b, f, tol.eq_tol);
    const cplx a_used = a.value_or(va.tau);
    const cplx b_used = b.value_or(vb.tau);
    const ChainData chain = make_chain(deviation_norm(op_a, f, a_used, tol.eq_tol),
                                       deviation_norm(op_b, f, b_used, tol.eq_tol), va.sigma, vb.sigma,
                                       std::abs(commutator_expectation(op_a, op_b, f, tol.eq_tol)));
    InequalityParams params;
    params.a = a_used;
    params.b = b_used;
    params.op_a = op_a.name();
    params.op_b = op_b.name();
    if (op_a.has_delta()) params.delta = op_a.delta;
    else if (op_b.has_delta()) params.delta = op_b.delta;
    return chain_report("general_pair", chain, std::move(params), tol);
}

namespace {

InequalityReport difference_up(const char* name, const OperatorSpec& op, const CoeffVec& f, double delta,
                               DiffMode mode, std::optional<cplx> a, std::optional<cplx> b,
                               const ToleranceConfig& tol) {
    require_nonzero(f);
    require_admissible(f, tol.eq_tol);
    const auto pos = OperatorSpec::mult_b();
    const FunctionalReport va = variance(op, f, tol.eq_tol);
    const FunctionalReport vb = variance(pos, f, tol.eq_tol);
    const cplx a_used = a.value_or(va.tau);
    const cplx b_used = b.value_or(vb.tau);
    const ChainData chain =
        make_chain(deviation_norm(op, f, a_used, tol.eq_tol), deviation_norm(pos, f, b_used, tol.eq_tol),
                   va.sigma, vb.sigma, commutator_abs(f, delta, mode));
    InequalityParams params;
    params.delta = delta;
    params.a = a_used;
    params.b = b_used;
    params.op_a = op.name();
    params.op_b = pos.name();
    return chain_report(name, chain, std::move(params), tol);
}

}  // namespace

InequalityReport check_backward_up(const CoeffVec& f, double delta, std::optional<cplx> a,
                                   std::optional<cplx> b, const ToleranceConfig& tol) {
    return difference_up("backward_up", OperatorSpec::backward_diff(delta), f, delta, DiffMode::backward, a, b,
                         tol);
}

InequalityReport check_central_up(const CoeffVec& f, double delta, std::optional<cplx> a,
                                  std::optional<cplx> b, const ToleranceConfig& tol) {
    return difference_up("central_up", OperatorSpec::central_diff(delta), f, delta, DiffMode::central, a, b,
                         tol);
}

InequalityReport check_breitenberger_sequence(const CoeffVec& f, std::optional<cplx> a,
                                              std::optional<cplx> b, const ToleranceConfig& tol) {
    require_nonzero(f);
    const double nf = norm_sq(f);
    const CoeffVec lagged = f.shifted(1);  // n -> f(n - 1)
    const cplx overlap = inner(lagged, f);
    const cplx a_opt = overlap / nf;
    const cplx b_opt = position_moment(f) / nf;
    const cplx a_used = a.value_or(a_opt);
    const cplx b_used = b.value_or(b_opt);
    const ChainData chain = make_chain(
        sequence_deviation(lagged, f, a_used), std::sqrt(position_deviation_sq(f, b_used)),
        sequence_deviation(lagged, f, a_opt), std::sqrt(position_deviation_sq(f, b_opt)), std::abs(overlap));
    InequalityParams params;
    params.delta = 1.0;
    params.a = a_used;
    params.b = b_used;
    params.op_a = "shift(1)";
    params.op_b = "mult_b";
    return chain_report("breitenberger_sequence", chain, std::move(params), tol);
}

InequalityReport check_heisenberg(const CoeffVec& f, std::optional<cplx> a, std::optional<cplx> b,
                                  const ToleranceConfig& tol) {
    require_nonzero(f);
    require_admissible(f, tol.eq_tol);
    const auto d = OperatorSpec::derivative();
    const auto pos = OperatorSpec::mult_b();
    const FunctionalReport vd = variance(d, f, tol.eq_tol);
    const FunctionalReport vb = variance(pos, f, tol.eq_tol);
    const cplx a_used = a.value_or(vd.tau);
    const cplx b_used = b.value_or(vb.tau);
    // [d/dx, x] = identity
    const ChainData chain = make_chain(deviation_norm(d, f, a_used, tol.eq_tol),
                                       deviation_norm(pos, f, b_used, tol.eq_tol), vd.sigma, vb.sigma, vd.norm_sq_f);
    InequalityParams params;
    params.a = a_used;
    params.b = b_used;
    params.op_a = d.name();
    params.op_b = pos.name();
    return chain_report("heisenberg", chain, std::move(params), tol);
}

InequalityReport check_sine_circle(const CoeffVec& f, std::optional<cplx> a, std::optional<cplx> b,
                                   const ToleranceConfig& tol) {
    require_nonzero(f);
    require_admissible(f, tol.eq_tol);
    const double nf = norm_sq(f);
    // sin(theta) fcheck <-> (f(n-1) - f(n+1)) / 2i, cos(theta) fcheck <-> (f(n-1) + f(n+1)) / 2,
    // d/dtheta fcheck <-> i n f(n).
    const CoeffVec up = f.shifted(1);
    const CoeffVec down = f.shifted(-1);
    const CoeffVec sine = (up - down) * (1.0 / (2.0 * kI));
    const CoeffVec cosine = (up + down) * 0.5;
    std::vector<cplx> dc(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < dc.size(); ++i) dc[i] *= kI * static_cast<double>(f.n_min() + static_cast<long>(i));
    const CoeffVec dtheta(f.n_min(), std::move(dc));

    const cplx a_opt = inner(sine, f) / nf;
    const cplx b_opt = inner(dtheta, f) / nf;
    const cplx a_used = a.value_or(a_opt);
    const cplx b_used = b.value_or(b_opt);
    const ChainData chain = make_chain(sequence_deviation(sine, f, a_used), sequence_deviation(dtheta, f, b_used),
                                       sequence_deviation(sine, f, a_opt), sequence_deviation(dtheta, f, b_opt),
                                       std::abs(inner(cosine, f)));
    InequalityParams params;
    params.delta = 1.0;
    params.a = a_used;
    params.b = b_used;
    params.op_a = "sin(theta)";
    params.op_b = "d/dtheta";
    return chain_report("sine_circle", chain, std::move(params), tol);
}

InequalityReport check_localization(const CoeffVec& f, std::optional<cplx> a, double band_limit,
                                    const ToleranceConfig& tol) {
    require_nonzero(f);
    require_admissible(f, tol.eq_tol);
    const Dilated g = dilate(f, band_limit);
    const double scale = g.position_scale();
    const cplx a_used = a.value_or(scale * position_moment(f) / norm_sq(f));
    const double lhs = scale * std::sqrt(position_deviation_sq(f, a_used / scale));
    const double rhs = norm(f) / (2.0 * band_limit);
    InequalityParams params;
    params.a = a_used;
    params.band_limit = band_limit;
    params.op_a = "mult_b";
    return bound_report("localization", lhs, rhs, std::move(params), tol);
}

InequalityReport check_bernstein(const CoeffVec& f, double band_limit, const ToleranceConfig& tol) {
    require_nonzero(f);
    const Dilated g = dilate(f, band_limit);
    const double derivative_norm = g.frequency_scale() * std::sqrt(kernel_form(f, f, GramKernel::moment2()).real());
    InequalityParams params;
    params.band_limit = band_limit;
    params.op_a = "derivative";
    return bound_report("bernstein", band_limit * norm(f), derivative_norm, std::move(params), tol);
}

}  // namespace bernstein
