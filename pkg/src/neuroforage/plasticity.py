"""Reward-modulated plasticity: STDP, eligibility traces, dopamine.

Pairings do not change weights directly.  Each plastic synapse carries an
eligibility trace that STDP bumps up or down; the trace decays with a 476 ms
time constant and is multiplied by the extracellular dopamine level every
tick to produce the actual weight change.  Dopamine sits at a slightly
negative baseline and spikes upward ~5 ms after a synchronous burst of the
dopaminergic population, so recently active synapses are depressed by
default and potentiated when their activity precedes reward.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

A_PLUS = 0.1
A_MINUS = 0.15
TAU_PLUS_S = 0.02
TAU_MINUS_S = 0.11
TAU_ELIG_S = 0.476

DA_BASELINE = -0.0004
DA_PER_SPIKE = 0.0035
DA_DELAY_MS = 5
DA_TAU_S = 0.2
DA_BURST_THRESHOLD = 5

W_MIN = 0.0
W_MAX = 4.0

# a post spike this soon after its synapse's last pre spike counts as a
# response to that input rather than an uncorrelated event.  Responses are
# exempt from depression by later pre spikes: without the exemption every
# stimulus volley re-pairs LTD against the previous volley's response and
# the net drift of a reliably driven pathway sits near zero instead of
# clearly positive
RESPONSE_CLAIM_MS = 70.0

DAMPEN_MEAN_LIMIT = 2.0
DAMPEN_STEP = 0.1

NEVER_SPIKED = -1.0e18


@njit(cache=True)
def stdp_value(dt_s: float, a_plus: float = A_PLUS, a_minus: float = A_MINUS,
               tau_plus_s: float = TAU_PLUS_S,
               tau_minus_s: float = TAU_MINUS_S) -> float:
    """STDP window for a pre/post pairing separated by dt_s = t_post - t_pre.

    dt >= 0 potentiates, dt < 0 depresses; dt is in seconds.
    """
    if dt_s >= 0.0:
        return a_plus * math.exp(-dt_s / tau_plus_s)
    return -a_minus * math.exp(dt_s / tau_minus_s)


def elig_decay_factor(tau_s: float = TAU_ELIG_S, dt_ms: float = 1.0) -> float:
    """Per-tick Euler decay multiplier for the eligibility trace."""
    return 1.0 - dt_ms / (tau_s * 1000.0)


def da_decay_factor(tau_s: float = DA_TAU_S, dt_ms: float = 1.0) -> float:
    return 1.0 - dt_ms / (tau_s * 1000.0)


@njit(cache=True)
def apply_stdp(spiked, n_spiked, t_ms, last_spike,
               out_ptr, out_syn, in_ptr, in_syn,
               syn_pre, syn_post, elig, claimed, n_plastic,
               a_plus, a_minus, tau_plus_s, tau_minus_s):
    """Nearest-neighbour STDP bumps for every neuron that fired this tick.

    All pairings are evaluated against the opposite side's last spike time
    as of the start of the tick; the firing neurons' own times are written
    afterwards, so the result is independent of iteration order.  Plastic
    synapses occupy indices [0, n_plastic).

    A post spike that followed this synapse's pre spike within
    RESPONSE_CLAIM_MS is recorded in claimed[s]; depression from later pre
    spikes skips it.  A post spike with no recent pre stays unclaimed and is
    depressed by the next pre spike as usual, which is what keeps
    uncorrelated firing net-depressing while driven responses potentiate.
    """
    for k in range(n_spiked):
        n = spiked[k]
        for q in range(out_ptr[n], out_ptr[n + 1]):
            s = out_syn[q]
            if s >= n_plastic:
                continue
            t_post = last_spike[syn_post[s]]
            if t_post > NEVER_SPIKED * 0.5 and t_post != claimed[s]:
                dt_s = (t_post - t_ms) / 1000.0
                elig[s] += stdp_value(dt_s, a_plus, a_minus, tau_plus_s, tau_minus_s)
        for q in range(in_ptr[n], in_ptr[n + 1]):
            s = in_syn[q]
            if s >= n_plastic:
                continue
            t_pre = last_spike[syn_pre[s]]
            if t_pre > NEVER_SPIKED * 0.5:
                dt_s = (t_ms - t_pre) / 1000.0
                elig[s] += stdp_value(dt_s, a_plus, a_minus, tau_plus_s, tau_minus_s)
                if t_ms - t_pre <= RESPONSE_CLAIM_MS:
                    claimed[s] = t_ms
    for k in range(n_spiked):
        last_spike[spiked[k]] = t_ms


@njit(cache=True, fastmath=True)
def decay_and_integrate(elig, w, n_plastic, decay, da_level):
    """One tick of trace decay plus dopamine-gated weight update.

    w += elig * da for every plastic synapse, clamped to [0, 4] so a weight
    never leaves its bounds even transiently.
    """
    for s in range(n_plastic):
        e = elig[s] * decay
        elig[s] = e
        wv = w[s] + e * da_level
        if wv < W_MIN:
            wv = W_MIN
        elif wv > W_MAX:
            wv = W_MAX
        w[s] = wv


@njit(cache=True)
def dampen_group(w, idx, mean_limit, step) -> bool:
    """Homeostatic dampening for one synapse group.

    If the group's mean weight exceeds mean_limit, subtract step from every
    member (floored at 0).  Returns True when a correction was applied.
    """
    n = idx.shape[0]
    if n == 0:
        return False
    total = 0.0
    for k in range(n):
        total += w[idx[k]]
    if total / n <= mean_limit:
        return False
    for k in range(n):
        wv = w[idx[k]] - step
        if wv < 0.0:
            wv = 0.0
        w[idx[k]] = wv
    return True


@njit(cache=True)
def dopamine_tick(level, t_ms, n_da_spikes, negate, queue,
                  per_spike, burst_threshold, baseline, decay, delay_ms):
    """Advance the dopamine level by one tick.

    A population burst (strictly more than burst_threshold DA spikes in this
    tick) enqueues a release of per_spike * n_da_spikes, delivered delay_ms
    later; negate flips its sign (aversive context).  Scheduled releases due
    now are applied, then the level decays toward baseline.
    """
    qn = queue.shape[0]
    if n_da_spikes > burst_threshold:
        amt = per_spike * n_da_spikes
        if negate:
            amt = -amt
        queue[(t_ms + delay_ms) % qn] += amt
    slot = t_ms % qn
    level += queue[slot]
    queue[slot] = 0.0
    return baseline + (level - baseline) * decay


class DopamineField:
    """Convenience wrapper holding dopamine state for stepwise use."""

    def __init__(self, baseline: float = DA_BASELINE,
                 per_spike: float = DA_PER_SPIKE,
                 burst_threshold: int = DA_BURST_THRESHOLD,
                 tau_s: float = DA_TAU_S, delay_ms: int = DA_DELAY_MS):
        self.baseline = baseline
        self.per_spike = per_spike
        self.burst_threshold = burst_threshold
        self.decay = da_decay_factor(tau_s)
        self.delay_ms = delay_ms
        self.level = baseline
        self.queue = np.zeros(delay_ms + 1)
        self.t_ms = 0

    def tick(self, n_da_spikes: int = 0, negate: bool = False) -> float:
        self.level = dopamine_tick(self.level, self.t_ms, n_da_spikes, negate,
                                   self.queue, self.per_spike,
                                   self.burst_threshold, self.baseline,
                                   self.decay, self.delay_ms)
        self.t_ms += 1
        return self.level
