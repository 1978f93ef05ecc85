"""Unit tests for STDP, eligibility traces and the dopamine field."""

import math

import numpy as np
import pytest

from neuroforage import plasticity as pl


def test_stdp_window_closed_form():
    for dt_ms in range(-500, 501, 7):
        dt = dt_ms / 1000.0
        got = pl.stdp_value(dt)
        if dt >= 0:
            want = 0.1 * math.exp(-dt / 0.02)
        else:
            want = -0.15 * math.exp(dt / 0.11)
        assert got == pytest.approx(want, abs=1e-12)


def test_stdp_example_pairing():
    # pre at 30 ms, post at 32 ms -> +0.1 * e^(-0.002/0.02)
    assert pl.stdp_value(0.002) == pytest.approx(0.1 * math.exp(-0.1), abs=1e-12)


def test_stdp_integral_is_depression_dominated():
    # A_minus * tau_minus > A_plus * tau_plus: random pairings depress on average.
    assert 0.15 * 0.11 > 0.1 * 0.02


def test_elig_decay_matches_exponential_within_euler_error():
    f = pl.elig_decay_factor()
    assert f == 1.0 - 1.0 / 476.0
    value = 1.0
    for _ in range(476):
        value *= f
    assert abs(value / math.exp(-1.0) - 1.0) < 0.002


def test_dopamine_release_delay_and_amount():
    field = pl.DopamineField()
    # 6 DA spikes in one tick exceeds the threshold of 5
    field.tick(n_da_spikes=6)
    levels = [field.tick() for _ in range(6)]
    # release arrives 5 ticks after the burst tick
    assert levels[3] < 0.0
    assert levels[4] > 0.0035 * 6 * 0.9
    assert levels[4] == pytest.approx(
        (pl.DA_BASELINE + (0.0035 * 6)) * 1.0 + 0.0,
        rel=0.05)


def test_dopamine_burst_threshold_is_strict():
    field = pl.DopamineField()
    field.tick(n_da_spikes=5)
    for _ in range(10):
        level = field.tick()
    assert level < 0.0  # never left the (negative) baseline region

    field = pl.DopamineField(burst_threshold=0)
    field.tick(n_da_spikes=1)
    levels = [field.tick() for _ in range(6)]
    assert max(levels) > 0.003


def test_dopamine_poison_context_negates_release():
    field = pl.DopamineField()
    field.tick(n_da_spikes=10, negate=True)
    levels = [field.tick() for _ in range(6)]
    assert min(levels) < -0.03


def test_dopamine_decays_toward_baseline():
    field = pl.DopamineField()
    field.level = 0.1
    f = pl.da_decay_factor()
    assert f == 1.0 - 1.0 / 200.0
    expected = 0.1
    for _ in range(400):
        level = field.tick()
        expected = pl.DA_BASELINE + (expected - pl.DA_BASELINE) * f
    assert level == pytest.approx(expected, abs=1e-15)
    # after 2 time constants the excursion has shrunk to ~e^-2
    assert level - pl.DA_BASELINE < 0.1 * math.exp(-2.0) * 1.1


def test_weight_update_gated_by_dopamine():
    elig = np.array([0.5, -0.5, 0.0])
    w = np.array([1.0, 1.0, 1.0])
    pl.decay_and_integrate(elig, w, 3, pl.elig_decay_factor(), 0.0)
    assert np.all(w == 1.0)  # zero dopamine -> zero net change, bit for bit
    pl.decay_and_integrate(elig, w, 3, pl.elig_decay_factor(), 0.01)
    assert w[0] > 1.0 and w[1] < 1.0 and w[2] == 1.0


def test_weight_clamp_both_ends():
    f = pl.elig_decay_factor()
    elig = np.array([10.0, -10.0])
    w = np.array([3.9, 0.1])
    for _ in range(50):
        pl.decay_and_integrate(elig, w, 2, f, 0.05)
        elig[0], elig[1] = 10.0, -10.0
        assert 0.0 <= w[1] and w[0] <= 4.0
    assert w[0] == 4.0 and w[1] == 0.0


def test_dampening_triggers_above_mean_limit():
    w = np.array([3.0, 2.5, 1.0, 0.05])
    idx = np.arange(4)
    assert pl.dampen_group(w, idx, 2.0, 0.1) is False  # mean 1.6375
    w2 = np.array([3.0, 2.5, 2.1, 0.05])
    assert pl.dampen_group(w2, idx, 2.0, 0.1) is False  # mean 1.9125
    w3 = np.array([3.0, 2.5, 2.1, 1.0])
    assert pl.dampen_group(w3, idx, 2.0, 0.1) is True
    assert np.allclose(w3, [2.9, 2.4, 2.0, 0.9])
    w4 = np.array([4.0, 4.0, 0.04, 4.0])
    assert pl.dampen_group(w4, idx, 2.0, 0.1) is True
    assert w4[2] == 0.0  # floored, not negative


def _tiny_net():
    # one synapse 0 -> 1
    out_ptr = np.array([0, 1, 1], dtype=np.int64)
    out_syn = np.array([0], dtype=np.int64)
    in_ptr = np.array([0, 0, 1], dtype=np.int64)
    in_syn = np.array([0], dtype=np.int64)
    pre = np.array([0], dtype=np.int64)
    post = np.array([1], dtype=np.int64)
    return out_ptr, out_syn, in_ptr, in_syn, pre, post


def _bump(spiked, t, last_spike, elig, net):
    out_ptr, out_syn, in_ptr, in_syn, pre, post = net
    pl.apply_stdp(np.array(spiked, dtype=np.int64), len(spiked), t, last_spike,
                  out_ptr, out_syn, in_ptr, in_syn, pre, post, elig, 1,
                  pl.A_PLUS, pl.A_MINUS, pl.TAU_PLUS_S, pl.TAU_MINUS_S)


def test_apply_stdp_pairings():
    net = _tiny_net()
    last_spike = np.full(2, pl.NEVER_SPIKED)
    elig = np.zeros(1)

    _bump([0], 30, last_spike, elig, net)
    assert elig[0] == 0.0  # no post spike yet, nothing to pair
    assert last_spike[0] == 30

    _bump([1], 32, last_spike, elig, net)
    want = 0.1 * math.exp(-0.002 / 0.02)
    assert elig[0] == pytest.approx(want, abs=1e-12)

    _bump([0], 40, last_spike, elig, net)
    want += -0.15 * math.exp(-0.008 / 0.11)
    assert elig[0] == pytest.approx(want, abs=1e-12)

    # nearest neighbour: a second post spike pairs with the latest pre (40),
    # not the first one (30)
    _bump([1], 45, last_spike, elig, net)
    want += 0.1 * math.exp(-0.005 / 0.02)
    assert elig[0] == pytest.approx(want, abs=1e-12)


def test_apply_stdp_simultaneous_spikes_use_prior_times():
    net = _tiny_net()
    last_spike = np.full(2, pl.NEVER_SPIKED)
    elig = np.zeros(1)
    _bump([0], 10, last_spike, elig, net)
    _bump([1], 12, last_spike, elig, net)
    base = elig[0]
    # both fire in the same tick: pre pairs against post@12, post against pre@10
    _bump([0, 1], 20, last_spike, elig, net)
    want = base - 0.15 * math.exp(-0.008 / 0.11) + 0.1 * math.exp(-0.010 / 0.02)
    assert elig[0] == pytest.approx(want, abs=1e-12)
    assert last_spike[0] == 20 and last_spike[1] == 20


def test_uncorrelated_trains_give_negative_mean_eligibility():
    # Two independent 5 Hz Poisson trains; depression dominance should pull
    # the time-averaged eligibility below zero.
    rng = np.random.default_rng(42)
    f = pl.elig_decay_factor()
    means = []
    for _ in range(12):
        elig = 0.0
        acc = 0.0
        t_pre = t_post = None
        for t in range(60_000):
            elig *= f
            pre = rng.random() < 0.005
            post = rng.random() < 0.005
            if pre and t_post is not None:
                elig += pl.stdp_value((t_post - t) / 1000.0)
            if post and t_pre is not None:
                elig += pl.stdp_value((t - t_pre) / 1000.0)
            if pre:
                t_pre = t
            if post:
                t_post = t
            acc += elig
        means.append(acc / 60_000)
    assert np.mean(means) < 0.0
