#include "bernstein/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bernstein/kernels.hpp"

namespace bernstein {

Symbol Symbol::constant(cplx c) { return Symbol({{c, 0.0, 0}}); }
Symbol Symbol::exponential(cplx c, double alpha) { return Symbol({{c, alpha, 0}}); }
Symbol Symbol::theta(cplx c) { return Symbol({{c, 0.0, 1}}); }

Symbol Symbol::operator+(const Symbol& o) const {
    auto t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return Symbol(std::move(t));
}

Symbol Symbol::operator-(const Symbol& o) const { return *this + o * cplx{-1.0, 0.0}; }

Symbol Symbol::operator*(cplx s) const {
    auto t = terms_;
    for (auto& term : t) term.coef *= s;
    return Symbol(std::move(t));
}

Symbol Symbol::operator*(const Symbol& o) const {
    std::vector<SymbolTerm> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            if (a.power + b.power > 2) {
                throw std::domain_error("Symbol: theta power above 2 is not supported");
            }
            t.push_back({a.coef * b.coef, a.alpha + b.alpha, a.power + b.power});
        }
    }
    return Symbol(std::move(t));
}

Symbol Symbol::conj() const {
    auto t = terms_;
    for (auto& term : t) {
        term.coef = std::conj(term.coef);
        term.alpha = -term.alpha;
    }
    return Symbol(std::move(t));
}

Symbol Symbol::commutator_with_position() const {
    // d/dtheta of c theta^p e^{i a theta} = c (p theta^{p-1} + i a theta^p) e^{i a theta}
    std::vector<SymbolTerm> t;
    const cplx i{0.0, 1.0};
    for (const auto& term : terms_) {
        if (term.alpha != 0.0) t.push_back({i * (i * term.alpha) * term.coef, term.alpha, term.power});
        if (term.power > 0) {
            t.push_back({i * static_cast<double>(term.power) * term.coef, term.alpha, term.power - 1});
        }
    }
    return Symbol(std::move(t));
}

cplx Symbol::operator()(double theta) const {
    cplx sum{0.0, 0.0};
    for (const auto& term : terms_) {
        sum += term.coef * std::pow(theta, term.power) * std::polar(1.0, term.alpha * theta);
    }
    return sum;
}

Symbol Symbol::simplified() const {
    std::vector<SymbolTerm> out;
    for (const auto& term : terms_) {
        auto it = std::find_if(out.begin(), out.end(), [&](const SymbolTerm& o) {
            return o.alpha == term.alpha && o.power == term.power;
        });
        if (it == out.end()) {
            out.push_back(term);
        } else {
            it->coef += term.coef;
        }
    }
    std::erase_if(out, [](const SymbolTerm& t) { return t.coef == cplx{0.0, 0.0}; });
    return Symbol(std::move(out));
}

cplx symbol_form(const CoeffVec& f, const CoeffVec& g, const Symbol& m) {
    long lag_min = 0;
    const auto c = cross_correlation(f, g, lag_min);
    cplx sum{0.0, 0.0};
    for (const auto& term : m.terms()) {
        cplx partial{0.0, 0.0};
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == cplx{0.0, 0.0}) continue;
            const double lag = static_cast<double>(lag_min + static_cast<long>(i));
            partial += c[i] * theta_power_kernel(term.power, term.alpha + lag);
        }
        sum += term.coef * partial;
    }
    return sum;
}

double symbol_norm_sq(const CoeffVec& f, const Symbol& m) {
    const Symbol weight = (m * m.conj()).simplified();
    return std::max(0.0, symbol_form(f, f, weight).real());
}

}  // namespace bernstein
