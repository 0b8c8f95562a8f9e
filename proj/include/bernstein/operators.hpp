#pragma once

#include <optional>
#include <string>

#include "bernstein/coeff_vec.hpp"
#include "bernstein/symbol.hpp"

namespace bernstein {

enum class OpKind { backward_diff, central_diff, backward_adjoint, mult_b, derivative, shift };

/// One of the operators acting on band-limited functions. Every kind except
/// mult_b is translation invariant and carries a circle symbol.
struct OperatorSpec {
    OpKind kind = OpKind::mult_b;
    double delta = 0.0;  // only for delta-parameterized kinds

    static OperatorSpec backward_diff(double delta);
    static OperatorSpec central_diff(double delta);
    static OperatorSpec backward_adjoint(double delta);
    static OperatorSpec shift(double delta);
    static OperatorSpec mult_b() { return {OpKind::mult_b, 0.0}; }
    static OperatorSpec derivative() { return {OpKind::derivative, 0.0}; }

    bool has_delta() const noexcept;
    bool is_multiplier() const noexcept { return kind != OpKind::mult_b; }
    std::string name() const;

    /// Throws std::logic_error for mult_b.
    Symbol symbol() const;
};

inline constexpr int kDefaultPadding = 64;

/// Image of an operator on the integer grid. `exact` holds the finite sample
/// vector when one exists; otherwise `resampled` is truncated to the input
/// support widened by the padding, with `trunc_bound` bounding the L2 error.
struct ApplyResult {
    std::optional<CoeffVec> exact;
    CoeffVec resampled;
    double trunc_bound = 0.0;

    const CoeffVec& best() const { return exact ? *exact : resampled; }
};

/// f(. - delta).
ApplyResult apply_shift(const CoeffVec& f, double delta, int padding = kDefaultPadding);
/// (f(z) - f(z - delta)) / delta.
ApplyResult apply_backward_diff(const CoeffVec& f, double delta, int padding = kDefaultPadding);
/// (f(z) - f(z + delta)) / delta.
ApplyResult apply_backward_adjoint(const CoeffVec& f, double delta, int padding = kDefaultPadding);
/// (f(z + delta) - f(z - delta)) / (2 delta).
ApplyResult apply_central_diff(const CoeffVec& f, double delta, int padding = kDefaultPadding);
/// x f(x); samples n f(n). Requires admissibility.
CoeffVec apply_mult_b(const CoeffVec& f, double tol = 1e-10);
/// f' on the grid: f'(n) = sum_{k != 0} (-1)^k f(n - k) / k.
ApplyResult apply_derivative(const CoeffVec& f, int padding = kDefaultPadding);

struct CommutatorResult {
    ApplyResult image;      // closed form of [Op, B] f
    double grid_deviation;  // max over the padded grid of |(Op B - B Op) f - image|
};

/// [A_delta, B] f = f(. - delta), with the grid identity checked against an
/// independent evaluation of A_delta B f - B A_delta f.
CommutatorResult commutator_backward(const CoeffVec& f, double delta, int padding = kDefaultPadding,
                                     double tol = 1e-10);
/// [C_delta, B] f = (f(. + delta) + f(. - delta)) / 2.
CommutatorResult commutator_central(const CoeffVec& f, double delta, int padding = kDefaultPadding,
                                    double tol = 1e-10);

}  // namespace bernstein
