"""Unit tests for spike encoding/decoding helpers."""

import numpy as np
import pytest

from neuroforage import sensorimotor as sm


def test_decode_winner_loser():
    assert sm.decode_speeds(10, 3) == (31.2, 25.0)
    assert sm.decode_speeds(3, 10) == (25.0, 31.2)
    left, right = sm.decode_speeds(5, 5)
    assert left == right == pytest.approx(28.1)
    assert sm.decode_speeds(1, 0) == (31.2, 25.0)


def test_stimulate_group_poisson_stats():
    g = np.random.default_rng(1)
    acc = np.zeros(3000)
    sm.stimulate_group(g, acc, 100, 3000, 12.0)
    assert np.all(acc[:100] == 0.0)
    vals = acc[100:]
    assert vals.mean() == pytest.approx(12.0, abs=0.3)
    assert np.all(vals == np.round(vals))  # integer spike-count currents
    sm.stimulate_group(g, acc, 0, 100, 0.0)
    assert np.all(acc[:100] == 0.0)


def test_stimulation_accumulates():
    g = np.random.default_rng(2)
    acc = np.full(10, 1.5)
    sm.stimulate_group(g, acc, 0, 10, 30.0)
    assert np.all(acc >= 1.5)


def test_window_constants():
    assert sm.WINDOW_MS == 70
    assert sm.RANGE_GAIN == 30.0
    assert sm.TOUCH_MEAN == 12.0
    assert sm.EXPLORATION_MEAN == 2.35
