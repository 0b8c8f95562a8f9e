#pragma once

#include <vector>

#include "bernstein/coeff_vec.hpp"

namespace bernstein {

/// One term coef * theta^power * e^{i alpha theta} of a circle multiplier.
struct SymbolTerm {
    cplx coef;
    double alpha = 0.0;
    int power = 0;
};

/// A multiplier m(theta) acting on fcheck, i.e. a translation-invariant
/// operator on the band-limited space written in the frequency picture.
/// Differences and translations are sums of exponentials, d/dx is -i theta.
///
/// Products are closed as long as the theta power stays <= 2, which covers
/// |m|^2 for every operator in the library.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::vector<SymbolTerm> terms) : terms_(std::move(terms)) {}

    static Symbol constant(cplx c);
    static Symbol exponential(cplx c, double alpha);
    static Symbol theta(cplx c);

    const std::vector<SymbolTerm>& terms() const noexcept { return terms_; }

    Symbol operator+(const Symbol& o) const;
    Symbol operator-(const Symbol& o) const;
    Symbol operator*(const Symbol& o) const;
    Symbol operator*(cplx s) const;

    /// Pointwise complex conjugate of m(theta) for real theta.
    Symbol conj() const;

    /// i m'(theta): the symbol of [Op, B] when Op has symbol m and B is
    /// multiplication by x.
    Symbol commutator_with_position() const;

    cplx operator()(double theta) const;

    /// Merges terms with equal (alpha, power) and drops zero coefficients.
    Symbol simplified() const;

private:
    std::vector<SymbolTerm> terms_;
};

/// sum_{n,m} f(n) conj(g(m)) (1/2pi) int m(theta) e^{i (n-m) theta} dtheta,
/// i.e. <Op f, g> for the operator with symbol m.
cplx symbol_form(const CoeffVec& f, const CoeffVec& g, const Symbol& m);

/// ||Op f||^2 from the expansion of |m|^2.
double symbol_norm_sq(const CoeffVec& f, const Symbol& m);

}  // namespace bernstein
