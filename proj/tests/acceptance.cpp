// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bernstein/bernstein.hpp"
#include "bernstein/parallel.hpp"

using namespace bernstein;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Tracks the worst value seen for one quantity and whether it stayed in bounds.
struct Worst {
    const char* label;
    double value;
    bool lower_is_worse;
    int bad = 0;

    void see(double v, bool ok) {
        if (lower_is_worse ? v < value : v > value) value = v;
        if (!ok) ++bad;
    }
    std::string str() const {
        std::ostringstream os;
        os << label << '=' << value;
        if (bad) os << " (" << bad << " bad)";
        return os.str();
    }
};

CoeffVec demo() { return CoeffVec(0, {1.0, 1.0}); }

// Seeded admissible vector with dimension drawn from [lo, hi], one stream per case.
CoeffVec sample(std::uint64_t tag, std::size_t i, int lo, int hi) {
    std::seed_seq seq{tag, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> dim(lo, hi);
    return random_coeffs(rng, dim(rng), true);
}

cplx scalar(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 2.0);
    const double re = n(rng);
    return {re, n(rng)};
}

Outcome chain_inequalities() {
    const std::vector<double> deltas{1.0, 0.5, 0.25, 0.125};
    auto mins = parallel_map(1000, [&](std::size_t i) {
        const auto f = sample(1, i, 3, 33);
        double lo1 = INFINITY, lo2 = INFINITY;
        for (double d : deltas) {
            for (const auto& r : {check_backward_up(f, d), check_central_up(f, d)}) {
                lo1 = std::min(lo1, r.chain->chain1);
                lo2 = std::min(lo2, r.chain->chain2);
            }
        }
        return std::pair{lo1, lo2};
    });
    Worst c1{"min chain1", INFINITY, true}, c2{"min chain2", INFINITY, true};
    for (auto [a, b] : mins) {
        c1.see(a, a >= -1e-10);
        c2.see(b, b >= -1e-10);
    }
    return {c1.bad + c2.bad == 0, "8000 (f, delta, mode) triples, " + c1.str() + ", " + c2.str()};
}

Outcome commutator_identities() {
    auto devs = parallel_map(200, [](std::size_t i) {
        const auto f = sample(2, i, 3, 21);
        double worst = 0.0;
        for (double d : {1.0, 0.5}) {
            worst = std::max(worst, commutator_backward(f, d).grid_deviation / norm(f));
            worst = std::max(worst, commutator_central(f, d).grid_deviation / norm(f));
        }
        return worst;
    });
    Worst w{"max deviation/||f||", 0.0, false};
    for (double d : devs) w.see(d, d <= 1e-9);
    return {w.bad == 0, "200 cases x delta {1, 1/2}, " + w.str()};
}

Outcome circle_dictionary() {
    const cplx minus_i{0.0, -1.0};
    auto gaps = parallel_map(200, [&](std::size_t i) {
        const auto f = sample(3, i, 3, 33);
        std::seed_seq seq{3u, static_cast<unsigned>(i), 1u};
        std::mt19937_64 rng(seq);
        const cplx a = scalar(rng);
        const cplx b = scalar(rng);
        auto factor_gap = [](const InequalityReport& x, const InequalityReport& y) {
            const auto &p = *x.chain, &q = *y.chain;
            return std::max({std::fabs(p.factor_a - q.factor_a), std::fabs(p.factor_b - q.factor_b),
                             std::fabs(p.comm_abs - q.comm_abs), std::fabs(x.lhs - y.lhs), std::fabs(x.rhs - y.rhs),
                             std::fabs(x.residual - y.residual)});
        };
        // defaults (a = tau, b = tau) line up directly; explicit centers map
        // a -> 1 - a on the backward side and a -> -i a on the sine side
        double g = factor_gap(check_backward_up(f, 1.0), check_breitenberger_sequence(f));
        g = std::max(g, factor_gap(check_backward_up(f, 1.0, cplx{1.0} - a, b), check_breitenberger_sequence(f, a, b)));
        g = std::max(g, factor_gap(check_central_up(f, 1.0), check_sine_circle(f)));
        g = std::max(g, factor_gap(check_central_up(f, 1.0, minus_i * a, minus_i * b), check_sine_circle(f, a, b)));
        return g / std::max(1.0, norm_sq(f));
    });
    Worst w{"max term gap", 0.0, false};
    for (double g : gaps) w.see(g, g <= 1e-10);
    return {w.bad == 0, "200 cases, " + w.str()};
}

Outcome heisenberg_limit() {
    std::vector<double> grid;
    for (int k = 1; k <= 8; ++k) grid.push_back(std::ldexp(1.0, -k));
    const std::vector<double> tiny{std::ldexp(1.0, -10)};
    auto rows = parallel_map(21, [&](std::size_t i) {
        const auto f = i == 0 ? demo() : sample(4, i, 3, 21);
        const double gap = commutator_limit_check(f, tiny)[0].gap / norm_sq(f);
        const double slope = convergence_rate(f, grid);
        const auto h = check_heisenberg(f);
        return std::tuple{gap, slope, h.residual};
    });
    Worst gap{"max gap/||f||^2", 0.0, false};
    Worst lo{"min slope", INFINITY, true}, hi{"max slope", -INFINITY, false};
    Worst res{"min Heisenberg residual", INFINITY, true};
    for (auto [g, s, r] : rows) {
        gap.see(g, g <= 0.01);
        lo.see(s, s >= 0.9);
        hi.see(s, s <= 1.1);
        res.see(r, r >= -1e-10);
    }
    return {gap.bad + lo.bad + hi.bad + res.bad == 0,
            "demo + 20 cases, " + gap.str() + ", " + lo.str() + ", " + hi.str() + ", " + res.str()};
}

// Closed forms against circle quadrature; variances here are unnormalized,
// sigma = ||(Op - tau) f||.
Outcome worked_numbers() {
    const auto f = demo();
    const double nf = oracle::circle_quadrature_moment(f, oracle::CircleWeight::one).real();
    auto fc = [&](double t) { return fourier_series_value(f, t); };
    auto quad_sigma = [&](auto apply) {
        const cplx tau = oracle::circle_integral([&](double t) { return apply(t) * std::conj(fc(t)); }) / nf;
        return std::sqrt(oracle::circle_integral([&](double t) -> cplx {
                             return std::norm(apply(t) - tau * fc(t));
                         }).real());
    };
    // x acts as -i d/dtheta on the circle
    auto x_on_circle = [&](double t) {
        cplx d{0.0, 0.0};
        for (long n = f.n_min(); n <= f.n_max(); ++n) d += static_cast<double>(n) * f[n] * std::polar(1.0, n * t);
        return d;
    };
    struct Item {
        const char* name;
        double closed;
        double quad;
        double expect;
        double tol;
    };
    const std::vector<Item> items{
        {"sigma_B", variance(OperatorSpec::mult_b(), f).sigma, quad_sigma(x_on_circle), std::sqrt(0.5), 1e-12},
        {"sigma_A1", variance(OperatorSpec::backward_diff(1.0), f).sigma,
         quad_sigma([&](double t) { return (1.0 - std::polar(1.0, t)) * fc(t); }), std::sqrt(1.5), 1e-12},
        {"<f(.-1),f>", std::real(shifted_inner(f, f, 1.0)),
         oracle::circle_quadrature_moment(f, oracle::CircleWeight::exp_i_delta_theta, 1.0).real(), 1.0, 1e-12},
        {"<f(.-1/2),f>", std::real(shifted_inner(f, f, 0.5)),
         oracle::circle_quadrature_moment(f, oracle::CircleWeight::exp_i_delta_theta, 0.5).real(), 16.0 / (3.0 * kPi),
         1e-10},
        {"||f'||^2", image_norm_sq(OperatorSpec::derivative(), f),
         oracle::circle_quadrature_moment(f, oracle::CircleWeight::theta_sq).real(), 2.0 * kPi * kPi / 3.0 - 4.0,
         1e-10},
        {"sigma_C1", variance(OperatorSpec::central_diff(1.0), f).sigma,
         quad_sigma([&](double t) { return cplx{0.0, -std::sin(t)} * fc(t); }), 1.0, 1e-12},
    };
    bool ok = true;
    std::ostringstream os;
    for (const auto& it : items) {
        const double err = std::max(std::fabs(it.closed - it.expect), std::fabs(it.quad - it.expect));
        if (!(err <= it.tol)) ok = false;
        os << it.name << " err " << err << "; ";
    }
    return {ok, os.str()};
}

Outcome kernel_validation() {
    const std::vector<double> deltas{0.1, 0.25, 0.5, 0.75, 1.0};
    const auto rep = oracle::validate_kernels(32, deltas, 1e-10);
    double worst_kernel = 0.0;
    for (const auto& e : rep.entries) worst_kernel = std::max(worst_kernel, e.abs_err);

    auto rel = parallel_map(500, [](std::size_t i) {
        const auto f = sample(6, i, 2, 33);
        std::seed_seq seq{6u, static_cast<unsigned>(i), 1u};
        std::mt19937_64 rng(seq);
        const double d = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
        const cplx closed = shifted_inner(f, f, d);
        const cplx grid = oracle::dense_grid_inner(f, f, d).value;
        return std::abs(grid - closed) / std::abs(closed);
    });
    Worst w{"max grid rel err", 0.0, false};
    for (double r : rel) w.see(r, r <= 1e-6);
    std::ostringstream os;
    os << rep.entries.size() << " kernel entries, max abs err " << worst_kernel << ", " << rep.failures().size()
       << " failures; 500 grid cases, " << w.str();
    return {rep.all_pass() && w.bad == 0, os.str()};
}

Outcome minimizer_property() {
    const std::vector<std::function<OperatorSpec(double)>> ops{
        [](double d) { return OperatorSpec::backward_diff(d); }, [](double d) { return OperatorSpec::central_diff(d); },
        [](double d) { return OperatorSpec::backward_adjoint(d); }, [](double d) { return OperatorSpec::shift(d); },
        [](double) { return OperatorSpec::derivative(); },          [](double) { return OperatorSpec::mult_b(); }};
    auto rows = parallel_map(1000, [&](std::size_t i) {
        const auto f = sample(7, i, 3, 33);
        std::seed_seq seq{7u, static_cast<unsigned>(i), 1u};
        std::mt19937_64 rng(seq);
        const double d = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
        double slack = INFINITY, eq = 0.0;
        for (const auto& make : ops) {
            const auto op = make(d);
            const auto v = variance(op, f);
            slack = std::min(slack, deviation_norm(op, f, v.tau + scalar(rng)) - v.sigma);
            eq = std::max(eq, std::fabs(deviation_norm(op, f, v.tau) - v.sigma));
        }
        return std::pair{slack, eq};
    });
    Worst s{"min ||(Op-a)f|| - sigma", INFINITY, true}, e{"max |at tau|", 0.0, false};
    for (auto [a, b] : rows) {
        s.see(a, a >= -1e-10);
        e.see(b, b <= 1e-10);
    }
    return {s.bad + e.bad == 0, "1000 (f, a) x 6 operators, " + s.str() + ", " + e.str()};
}

Outcome band_bounds() {
    auto rows = parallel_map(1000, [](std::size_t i) {
        const auto f = sample(8, i, 2, 33);
        const auto b = check_bernstein(f);
        const auto l = check_localization(f);
        return std::pair{b.lhs - b.rhs, l.lhs - l.rhs};
    });
    Worst b{"min pi||f|| - ||f'||", INFINITY, true}, l{"min ||(x-a)f|| - ||f||/2pi", INFINITY, true};
    for (auto [x, y] : rows) {
        b.see(x, x >= -1e-10);
        l.see(y, y >= -1e-10);
    }
    return {b.bad + l.bad == 0, "1000 cases, " + b.str() + ", " + l.str()};
}

Outcome optimizer_soundness() {
    std::ostringstream os;
    bool ok = true;
    for (int dim : {3, 11, 21}) {
        for (double d : {1.0, 0.25}) {
            OptimizeConfig c;
            c.dim = dim;
            c.delta = d;
            c.restarts = 8;
            c.seed = 2024;
            const auto r = minimize_ratio(c);
            const double rel = std::fabs(r.oracle_ratio - r.ratio) / r.ratio;
            if (!(r.ratio >= 1.0 - 1e-9) || !(rel <= 1e-6)) ok = false;
            os << '(' << dim << ',' << d << ")=" << r.ratio << " rel " << rel << "; ";
        }
    }
    return {ok, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"chain inequalities", chain_inequalities},   {"commutator identities", commutator_identities},
        {"circle dictionary at delta=1", circle_dictionary}, {"Heisenberg limit", heisenberg_limit},
        {"worked numbers", worked_numbers},           {"kernel validation", kernel_validation},
        {"minimizer property", minimizer_property},   {"band-limit bounds", band_bounds},
        {"optimizer soundness", optimizer_soundness}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu %s: %s [%s] (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
