#pragma once

#include <optional>
#include <string>

#include "bernstein/coeff_vec.hpp"
#include "bernstein/core.hpp"
#include "bernstein/operators.hpp"

namespace bernstein {

/// Expectation, spread and norm of one operator on one function.
struct FunctionalReport {
    cplx tau;
    double sigma = 0.0;
    double norm_sq_f = 0.0;
};

/// tau_Op(f) = <Op f, f> / <f, f>. Closed form, no resampling.
cplx expectation(const OperatorSpec& op, const CoeffVec& f, double tol = 1e-10);

/// sigma_Op(f)^2 = ||Op f||^2 - |tau|^2 ||f||^2, clamped at zero.
FunctionalReport variance(const OperatorSpec& op, const CoeffVec& f, double tol = 1e-10);

/// ||(Op - a) f||, expanded directly (not through tau).
double deviation_norm(const OperatorSpec& op, const CoeffVec& f, cplx a, double tol = 1e-10);

/// ||Op f||^2 in closed form.
double image_norm_sq(const OperatorSpec& op, const CoeffVec& f, double tol = 1e-10);

/// <[A, B] f, f>. Translation-invariant operators commute with each other;
/// against multiplication by x the commutator has symbol i m'(theta).
cplx commutator_expectation(const OperatorSpec& a, const OperatorSpec& b, const CoeffVec& f,
                            double tol = 1e-10);

enum class DiffMode { backward, central };

std::string to_string(DiffMode mode);
DiffMode diff_mode_from_string(const std::string& s);

/// |<f(. - delta), f>| (backward) or |<(f(. + delta) + f(. - delta))/2, f>| (central).
double commutator_abs(const CoeffVec& f, double delta, DiffMode mode);

/// The chain ||(A-a)f|| ||(B-b)f|| >= sigma_A sigma_B >= |<[A,B]f,f>| / 2.
struct ChainData {
    double factor_a = 0.0;  // ||(A - a) f||
    double factor_b = 0.0;  // ||(B - b) f||
    double sigma_a = 0.0;
    double sigma_b = 0.0;
    double comm_abs = 0.0;  // |<[A,B] f, f>|
    double chain1 = 0.0;    // factor_a factor_b - sigma_a sigma_b
    double chain2 = 0.0;    // sigma_a sigma_b - comm_abs / 2
};

struct InequalityParams {
    std::optional<double> delta;
    std::optional<cplx> a;
    std::optional<cplx> b;
    std::optional<double> band_limit;
    std::string op_a;
    std::string op_b;
};

/// lhs >= rhs with residual = lhs - rhs. `pass` also requires both chain
/// links to hold when chain data is present.
struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool pass = false;
    bool degenerate_bound = false;  // rhs < 1e-14: the bound carries no information
    InequalityParams params;
    std::optional<ChainData> chain;
};

inline constexpr double kDegenerateBound = 1e-14;

/// Both links of the general chain for a pair of operators; a, b default to
/// the expectations (the tightest choice).
InequalityReport check_general_pair(const OperatorSpec& op_a, const OperatorSpec& op_b, const CoeffVec& f,
                                    std::optional<cplx> a = std::nullopt, std::optional<cplx> b = std::nullopt,
                                    const ToleranceConfig& tol = {});

/// Backward difference A_delta against x: bound |<f(. - delta), f>| / 2.
InequalityReport check_backward_up(const CoeffVec& f, double delta, std::optional<cplx> a = std::nullopt,
                                   std::optional<cplx> b = std::nullopt, const ToleranceConfig& tol = {});

/// Central difference C_delta against x: bound |<(f(.+delta)+f(.-delta))/2, f>| / 2.
InequalityReport check_central_up(const CoeffVec& f, double delta, std::optional<cplx> a = std::nullopt,
                                  std::optional<cplx> b = std::nullopt, const ToleranceConfig& tol = {});

/// Sequence form of the circle inequality for e^{i theta} and d/dtheta:
///   (sum |f(n-1) - a f(n)|^2)^{1/2} (sum |(n - b) f(n)|^2)^{1/2} >= |sum f(n-1) conj f(n)| / 2.
/// Computed by direct summation; no admissibility needed. Agrees with
/// check_backward_up(f, 1, 1 - a, b) factor by factor.
InequalityReport check_breitenberger_sequence(const CoeffVec& f, std::optional<cplx> a = std::nullopt,
                                              std::optional<cplx> b = std::nullopt,
                                              const ToleranceConfig& tol = {});

/// ||(d/dx - a) f|| ||(x - b) f|| >= ||f||^2 / 2.
InequalityReport check_heisenberg(const CoeffVec& f, std::optional<cplx> a = std::nullopt,
                                  std::optional<cplx> b = std::nullopt, const ToleranceConfig& tol = {});

/// ||(sin theta - a) fcheck|| ||(d/dtheta - b) fcheck|| >= |<cos theta fcheck, fcheck>| / 2,
/// evaluated on Fourier coefficients. Agrees with check_central_up(f, 1, -i a, -i b)
/// term by term.
InequalityReport check_sine_circle(const CoeffVec& f, std::optional<cplx> a = std::nullopt,
                                   std::optional<cplx> b = std::nullopt, const ToleranceConfig& tol = {});

/// ||(x - a) g|| >= ||g|| / (2R) for g = dilate(f, R); a in the coordinates of g.
InequalityReport check_localization(const CoeffVec& f, std::optional<cplx> a = std::nullopt,
                                    double band_limit = 3.141592653589793, const ToleranceConfig& tol = {});

/// R ||g|| >= ||g'|| for g = dilate(f, R).
InequalityReport check_bernstein(const CoeffVec& f, double band_limit = 3.141592653589793,
                                 const ToleranceConfig& tol = {});

}  // namespace bernstein
