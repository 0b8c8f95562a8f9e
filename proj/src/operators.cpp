#include "bernstein/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bernstein/core.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/sinc.hpp"

namespace bernstein {

OperatorSpec OperatorSpec::backward_diff(double delta) {
    require_delta(delta);
    return {OpKind::backward_diff, delta};
}
OperatorSpec OperatorSpec::central_diff(double delta) {
    require_delta(delta);
    return {OpKind::central_diff, delta};
}
OperatorSpec OperatorSpec::backward_adjoint(double delta) {
    require_delta(delta);
    return {OpKind::backward_adjoint, delta};
}
OperatorSpec OperatorSpec::shift(double delta) {
    require_delta(delta);
    return {OpKind::shift, delta};
}

bool OperatorSpec::has_delta() const noexcept {
    return kind == OpKind::backward_diff || kind == OpKind::central_diff ||
           kind == OpKind::backward_adjoint || kind == OpKind::shift;
}

std::string OperatorSpec::name() const {
    std::ostringstream os;
    switch (kind) {
        case OpKind::backward_diff: os << "backward_diff(" << delta << ")"; break;
        case OpKind::central_diff: os << "central_diff(" << delta << ")"; break;
        case OpKind::backward_adjoint: os << "backward_adjoint(" << delta << ")"; break;
        case OpKind::shift: os << "shift(" << delta << ")"; break;
        case OpKind::mult_b: os << "mult_b"; break;
        case OpKind::derivative: os << "derivative"; break;
    }
    return os.str();
}

Symbol OperatorSpec::symbol() const {
    const double inv = has_delta() ? 1.0 / delta : 0.0;
    switch (kind) {
        case OpKind::backward_diff:
            return Symbol::constant(inv) + Symbol::exponential(-inv, delta);
        case OpKind::backward_adjoint:
            return Symbol::constant(inv) + Symbol::exponential(-inv, -delta);
        case OpKind::central_diff:
            return Symbol::exponential(0.5 * inv, -delta) + Symbol::exponential(-0.5 * inv, delta);
        case OpKind::shift:
            return Symbol::exponential(1.0, delta);
        case OpKind::derivative:
            return Symbol::theta(cplx{0.0, -1.0});
        case OpKind::mult_b:
            break;
    }
    throw std::logic_error("multiplication by x has no circle symbol");
}

namespace {

ApplyResult exact_result(CoeffVec v) { return {v, v, 0.0}; }

// f(. - delta) for any real delta.
ApplyResult translate(const CoeffVec& f, double delta, int padding) {
    if (padding < 0) throw ParameterError("padding must be non-negative");
    if (std::nearbyint(delta) == delta) return exact_result(f.shifted(static_cast<long>(delta)));
    const long lo = f.n_min() - padding;
    const long hi = f.n_max() + padding;
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (long n = lo; n <= hi; ++n) {
        out[static_cast<std::size_t>(n - lo)] = evaluate(f, static_cast<double>(n) - delta);
    }
    const double bound =
        norm(f) * std::sqrt(static_cast<double>(f.size())) * sinc_tail(padding, delta);
    return {std::nullopt, CoeffVec(lo, std::move(out)), bound};
}

ApplyResult combine(const ApplyResult& a, cplx wa, const ApplyResult& b, cplx wb) {
    const double bound = std::abs(wa) * a.trunc_bound + std::abs(wb) * b.trunc_bound;
    if (a.exact && b.exact) return exact_result(*a.exact * wa + *b.exact * wb);
    return {std::nullopt, a.best() * wa + b.best() * wb, bound};
}

// (A h)(n) with A evaluated from the sampling series of h.
cplx backward_at(const CoeffVec& h, long n, double delta) {
    return (h[n] - evaluate(h, static_cast<double>(n) - delta)) / delta;
}

cplx central_at(const CoeffVec& h, long n, double delta) {
    const double x = static_cast<double>(n);
    return (evaluate(h, x + delta) - evaluate(h, x - delta)) / (2.0 * delta);
}

}  // namespace

ApplyResult apply_shift(const CoeffVec& f, double delta, int padding) {
    require_delta(delta);
    return translate(f, delta, padding);
}

ApplyResult apply_backward_diff(const CoeffVec& f, double delta, int padding) {
    require_delta(delta);
    return combine(exact_result(f), 1.0 / delta, translate(f, delta, padding), -1.0 / delta);
}

ApplyResult apply_backward_adjoint(const CoeffVec& f, double delta, int padding) {
    require_delta(delta);
    return combine(exact_result(f), 1.0 / delta, translate(f, -delta, padding), -1.0 / delta);
}

ApplyResult apply_central_diff(const CoeffVec& f, double delta, int padding) {
    require_delta(delta);
    const double w = 0.5 / delta;
    return combine(translate(f, -delta, padding), w, translate(f, delta, padding), -w);
}

CoeffVec apply_mult_b(const CoeffVec& f, double tol) {
    require_admissible(f, tol);
    std::vector<cplx> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= static_cast<double>(f.n_min() + static_cast<long>(i));
    }
    return CoeffVec(f.n_min(), std::move(out));
}

ApplyResult apply_derivative(const CoeffVec& f, int padding) {
    if (padding < 0) throw ParameterError("padding must be non-negative");
    if (f.is_zero()) return exact_result(f);
    const long lo = f.n_min() - padding;
    const long hi = f.n_max() + padding;
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (long n = lo; n <= hi; ++n) {
        cplx sum{0.0, 0.0};
        for (long m = f.n_min(); m <= f.n_max(); ++m) {
            const long k = n - m;
            if (k == 0) continue;
            sum += ((k % 2 == 0) ? 1.0 : -1.0) * f[m] / static_cast<double>(k);
        }
        out[static_cast<std::size_t>(n - lo)] = sum;
    }
    const double bound = norm(f) * std::sqrt(static_cast<double>(f.size())) * inverse_tail(padding);
    return {std::nullopt, CoeffVec(lo, std::move(out)), bound};
}

CommutatorResult commutator_backward(const CoeffVec& f, double delta, int padding, double tol) {
    require_delta(delta);
    const CoeffVec bf = apply_mult_b(f, tol);
    ApplyResult image = translate(f, delta, padding);
    double deviation = 0.0;
    for (long n = f.n_min() - padding; n <= f.n_max() + padding; ++n) {
        const cplx lhs = backward_at(bf, n, delta) - static_cast<double>(n) * backward_at(f, n, delta);
        const cplx rhs = evaluate(f, static_cast<double>(n) - delta);
        deviation = std::max(deviation, std::abs(lhs - rhs));
    }
    return {std::move(image), deviation};
}

CommutatorResult commutator_central(const CoeffVec& f, double delta, int padding, double tol) {
    require_delta(delta);
    const CoeffVec bf = apply_mult_b(f, tol);
    ApplyResult image = combine(translate(f, -delta, padding), 0.5, translate(f, delta, padding), 0.5);
    double deviation = 0.0;
    for (long n = f.n_min() - padding; n <= f.n_max() + padding; ++n) {
        const double x = static_cast<double>(n);
        const cplx lhs = central_at(bf, n, delta) - x * central_at(f, n, delta);
        const cplx rhs = 0.5 * (evaluate(f, x + delta) + evaluate(f, x - delta));
        deviation = std::max(deviation, std::abs(lhs - rhs));
    }
    return {std::move(image), deviation};
}

}  // namespace bernstein
