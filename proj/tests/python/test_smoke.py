import math

import pytest

import bernstein_up as bu


def test_demo_numbers():
    f = bu.demo()
    assert bu.norm_sq(f) == 2.0
    assert abs(bu.shifted_inner(f, f, 0.5) - 16 / (3 * math.pi)) < 1e-12
    r = bu.check_backward_up(f, 1.0)
    assert r["pass"]
    assert abs(r["residual"] - (math.sqrt(0.75) - 0.5)) < 1e-12


def test_sampling_and_admissibility():
    f = bu.CoeffVec(-1, [1, 0, -1])
    assert f[1] == -1 and f[5] == 0
    assert abs(bu.evaluate(f, 1.0) + 1) < 1e-15
    assert bu.is_admissible(bu.demo())
    with pytest.raises(bu.InadmissibleFunction):
        bu.check_heisenberg(bu.CoeffVec(0, [1.0]))
    with pytest.raises(bu.ParameterError):
        bu.check_backward_up(bu.demo(), 0.0)


def test_json_round_trip():
    f = bu.random_coeffs(3, 9)
    assert bu.CoeffVec.from_json(f.to_json()) == f


def test_sweep_and_limits():
    csv = bu.delta_sweep_csv(bu.demo())
    assert len(csv.splitlines()) == 12
    grid = [2.0**-k for k in range(1, 9)]
    assert 0.9 <= bu.convergence_rate(bu.demo(), grid) <= 1.1
    assert bu.commutator_limit_check(bu.demo(), [1.0])[0][1] == pytest.approx(1.0)


def test_optimizer_and_oracle():
    r = bu.minimize_ratio(dim=3, restarts=1, seed=4)
    assert r["ratio"] >= 1 - 1e-9
    entries = bu.validate_kernels(max_lag=2)
    assert all(e["abs_err"] <= 1e-10 for e in entries)
    assert abs(bu.dense_grid_inner(bu.demo(), bu.demo(), 0.5) - 16 / (3 * math.pi)) < 1e-6
