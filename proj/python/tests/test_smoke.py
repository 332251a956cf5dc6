import math

import pytest

import twostate as ts


def test_step_optimum_matches_reported_values():
    report = ts.step_model_optimum()
    assert report.argmax == pytest.approx(1.165561, abs=1e-5)
    assert report.q_star_max == pytest.approx(1.7246, abs=5e-4)


def test_decay_optimum():
    report = ts.decay_model_optimum()
    assert report.argmax == pytest.approx(1 / math.sqrt(3), abs=1e-9)
    assert report.q_star_max == pytest.approx(1 + 3 * math.sqrt(3) / 8, abs=1e-12)


def test_aggregate_decomposition():
    op = ts.CapacityOperator(2.0, 1.0, 1.0, math.pi / 3)
    r = ts.aggregate_product(op, ts.ActivityProfile.decay(1.0), ts.ExchangeFrequency(0.5))
    assert r.q == pytest.approx(r.classical_part + r.asymmetry_term + r.interference_term)
    assert r.q_star == pytest.approx(1.28867513459481288, rel=1e-12)


def test_amplitudes_and_capacity():
    a = ts.amplitudes_at(ts.ExchangeFrequency(1.0), math.pi / 2)
    assert a.c1 == pytest.approx(0, abs=1e-15)
    assert a.c2 == pytest.approx(-1j)
    op = ts.CapacityOperator(1.0, 1.0, 1.0, math.pi / 2)
    k = ts.instantaneous_capacity(op, ts.ExchangeFrequency(1.0), 1.0, math.pi / 4)
    assert k == pytest.approx(2.0)


def test_tabulated_profile_and_generic_optimizer():
    samples = [(i * 0.01, 1.0) for i in range(101)]
    profile = ts.ActivityProfile.tabulated(samples)
    assert profile.kind == ts.ProfileKind.tabulated
    coeff = ts.fourier_coefficient(profile, math.pi)
    assert coeff.imag_part == pytest.approx(2 / math.pi, abs=1e-9)
    report = ts.maximize_q_star(profile, math.pi / 2, 0.01, math.pi, 1.0)
    assert report.argmax == pytest.approx(1.165561, abs=1e-5)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ts.CapacityOperator(1.0, 1.0, 1.5, 0.0)
    with pytest.raises(ts.InvalidInput):
        ts.ActivityProfile.step(-1.0)
    with pytest.raises(ValueError):
        ts.scaled_symmetric(1.5, ts.ActivityProfile.step(1.0), ts.ExchangeFrequency(1.0), 0.0)
