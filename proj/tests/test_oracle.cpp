#include <doctest.h>

#include "helpers.hpp"

using namespace bernstein;
using namespace testing;

TEST_CASE("grid bounds") {
    const auto g = oracle::GridSpec::for_pair(demo(), CoeffVec(-3, {1.0}));
    CHECK(g.half_width >= 3.0 + 64.0);
    CHECK(g.step == 1.0 / 64.0);
    CHECK_NOTHROW(g.validate(3));
    CHECK_THROWS_AS((oracle::GridSpec{20.0, 1.0 / 64.0}.validate(0)), ParameterError);
    CHECK_THROWS_AS((oracle::GridSpec{100.0, 0.1}.validate(0)), ParameterError);
}

TEST_CASE("dense grid worked values") {
    const CoeffVec one(0, {1.0});
    CHECK(std::abs(oracle::dense_grid_inner(one, one).value - 1.0) <= 1e-6);
    CHECK(std::abs(oracle::dense_grid_inner(demo(), demo(), 0.5).value - 16.0 / (3.0 * kPi)) <= 1e-6);
    CHECK(std::abs(oracle::dense_grid_inner(one, CoeffVec(1, {1.0}), 1.0).value - 1.0) <= 1e-6);
    CHECK(std::abs(oracle::dense_grid_inner(one, CoeffVec(1, {1.0}), 0.0).value) <= 1e-6);
    CHECK(oracle::dense_grid_inner(one, one).tail_estimate > 0.0);
    CHECK(oracle::dense_grid_norm_sq(demo(), 0.3) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("dense grid agrees with the kernel sums") {
    std::mt19937_64 rng(307);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 60; ++i) {
        const auto f = random_coeffs(rng, 1 + i % 15, false);
        const auto g = random_coeffs(rng, 1 + (i * 7) % 15, false);
        const double d = i % 3 == 0 ? 0.0 : u(rng);
        const cplx closed = d == 0.0 ? inner(f, g) : translation_inner(f, g, d);
        const cplx grid = oracle::dense_grid_inner(f, g, d).value;
        CHECK(std::abs(grid - closed) <= 1e-6 * std::max(1.0, norm(f) * norm(g)));
    }
}

TEST_CASE("circle moments") {
    CHECK(std::abs(oracle::circle_quadrature_moment(demo(), oracle::CircleWeight::one) - 2.0) <= 1e-12);
    CHECK(std::abs(oracle::circle_quadrature_moment(demo(), oracle::CircleWeight::theta_sq) -
                   (2.0 * kPi * kPi / 3.0 - 4.0)) <= 1e-10);
    CHECK(std::abs(oracle::circle_quadrature_moment(CoeffVec(0, {1.0}), oracle::CircleWeight::theta_sq) -
                   kPi * kPi / 3.0) <= 1e-10);
    const CoeffVec sym(-2, {0.5, -1.0, 3.0, -1.0, 0.5});
    CHECK(std::abs(oracle::circle_quadrature_moment(sym, oracle::CircleWeight::theta)) <= 1e-12);
    CHECK(std::abs(oracle::circle_quadrature_moment(demo(), oracle::CircleWeight::exp_i_delta_theta, 1.0) - 1.0) <=
          1e-12);
    CHECK(std::abs(oracle::circle_quadrature_moment(demo(), oracle::CircleWeight::exp_i_delta_theta, 0.5) -
                   16.0 / (3.0 * kPi)) <= 1e-10);
}

TEST_CASE("circle moments match the kernel forms") {
    std::mt19937_64 rng(311);
    for (int i = 0; i < 40; ++i) {
        const auto f = random_coeffs(rng, 1 + i % 20, false);
        const double scale = std::max(1.0, norm_sq(f));
        CHECK(std::abs(oracle::circle_quadrature_moment(f, oracle::CircleWeight::theta_sq) -
                       kernel_form(f, f, GramKernel::moment2())) <= 1e-10 * scale);
        CHECK(std::abs(oracle::circle_quadrature_moment(f, oracle::CircleWeight::exp_i_delta_theta, 0.3) -
                       shifted_inner(f, f, 0.3)) <= 1e-10 * scale);
    }
}

TEST_CASE("kernel validation") {
    const std::vector<double> deltas{0.1, 0.25, 0.5, 0.75, 1.0};
    const auto rep = oracle::validate_kernels(32, deltas);
    CHECK(rep.all_pass());
    CHECK(rep.failures().empty());
    CHECK(rep.entries.size() == 65 * (2 + deltas.size()));
    for (const auto& e : rep.entries) {
        if (e.kind == "moment2" && e.k == 0) CHECK(std::abs(e.closed_form - kPi * kPi / 3.0) <= 1e-15);
        if (e.kind == "moment1" && e.k == 1) CHECK(std::abs(e.quadrature - cplx{0.0, 1.0}) <= 1e-10);
        if (e.kind == "shift" && e.k == 0 && e.delta == 1.0) CHECK(std::abs(e.closed_form) == 0.0);
    }

    const auto broken = oracle::validate_kernels(4, deltas, 1e-10,
                                                 [](const std::string& kind, long k, double, cplx v) {
                                                     return kind == "moment1" && k == 3 ? v + 1e-6 : v;
                                                 });
    CHECK_FALSE(broken.all_pass());
    REQUIRE(broken.failures().size() == 1);
    CHECK(broken.failures()[0].kind == "moment1");
    CHECK(broken.failures()[0].k == 3);
    CHECK_THROWS_AS(oracle::validate_kernels(0, deltas), ParameterError);
}

TEST_CASE("quadrature ratio reproduces the closed-form ratio") {
    std::mt19937_64 rng(313);
    for (int i = 0; i < 30; ++i) {
        const auto f = random_admissible(rng, 3, 21);
        for (auto mode : {DiffMode::backward, DiffMode::central}) {
            for (double d : {1.0, 0.25}) {
                CHECK(oracle::quadrature_ratio(f, d, mode) ==
                      doctest::Approx(uncertainty_ratio(f, d, mode)).epsilon(1e-8));
            }
        }
    }
}
