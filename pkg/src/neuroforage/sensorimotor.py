"""Spike coding between the robot's body and the network.

The control loop runs on 70 ms windows (~14 Hz).  Range-sensor values are
injected as an independent Poisson current into every neuron of the winning
sensor group for the first tick of a window; touch events inject Poisson
current for one tick as they happen.  Exploration picks one motor side per
window and injects fresh independent Poisson currents into its neurons on
every tick of the window.  Motor intent is read back by counting
motor-group spikes over the window and mapping the winner to the maximum
wheel speed and the loser to the minimum.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .world import SPEED_MAX, SPEED_MIN

WINDOW_MS = 70
RANGE_GAIN = 30.0
TOUCH_MEAN = 12.0
EXPLORATION_MEAN = 2.35


@njit(cache=True)
def stimulate_group(g, injected, start: int, stop: int, lam: float):
    """Add an independent Poisson(lam) current to each neuron of a group."""
    if lam <= 0.0:
        return
    for i in range(start, stop):
        injected[i] += float(g.poisson(lam))


@njit(cache=True)
def decode_speeds(count_left: int, count_right: int):
    """Map window spike counts to wheel speeds.

    The busier motor group gets SPEED_MAX for its wheel, the other
    SPEED_MIN; equal counts give both the midpoint.  Speeds are full-regime
    values; they are halved at motion time while inside a container.
    """
    if count_left > count_right:
        return SPEED_MAX, SPEED_MIN
    if count_right > count_left:
        return SPEED_MIN, SPEED_MAX
    mid = 0.5 * (SPEED_MIN + SPEED_MAX)
    return mid, mid
