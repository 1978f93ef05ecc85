"""Spiking network state: populations, synapses, delayed delivery.

Synapses are stored flat with CSR-style adjacency by presynaptic and by
postsynaptic neuron.  Plastic synapses occupy the front of every array so
the per-tick plasticity loops touch a contiguous block.  All spikes are
delivered with a uniform 1 ms conduction delay: current from a spike at
tick t reaches its targets at tick t+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .neurons import step_neurons
from .plasticity import NEVER_SPIKED


@dataclass
class SynapseTable:
    pre: np.ndarray
    post: np.ndarray
    weight: np.ndarray
    elig: np.ndarray
    cat: np.ndarray
    n_plastic: int
    claimed: np.ndarray = field(default=None)
    out_ptr: np.ndarray = field(default=None)
    out_syn: np.ndarray = field(default=None)
    in_ptr: np.ndarray = field(default=None)
    in_syn: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.claimed is None:
            # per-synapse time of the last post spike that answered a pre
            # spike; such responses are exempt from later depression
            self.claimed = np.full(self.pre.shape[0], NEVER_SPIKED)

    def build_adjacency(self, n_neurons: int) -> None:
        self.out_ptr, self.out_syn = _csr(self.pre, n_neurons)
        self.in_ptr, self.in_syn = _csr(self.post, n_neurons)

    def __len__(self) -> int:
        return self.pre.shape[0]


def _csr(keys: np.ndarray, n: int):
    order = np.argsort(keys, kind="stable").astype(np.int64)
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(ptr, keys + 1, 1)
    np.cumsum(ptr, out=ptr)
    return ptr, order


@njit(cache=True)
def deliver_spikes(spiked, n_spiked, out_ptr, out_syn, post, weight, pending):
    """Accumulate outgoing synaptic current into the next tick's buffer."""
    for k in range(n_spiked):
        n = spiked[k]
        for q in range(out_ptr[n], out_ptr[n + 1]):
            s = out_syn[q]
            pending[post[s]] += weight[s]


@njit(cache=True)
def collect_spikes(spiked_mask, spiked_idx) -> int:
    n = 0
    for i in range(spiked_mask.shape[0]):
        if spiked_mask[i]:
            spiked_idx[n] = i
            n += 1
    return n


class Network:
    """A wired population with per-tick stepping.

    groups maps group name to a half-open [start, stop) index range laid out
    contiguously in table order.
    """

    def __init__(self, a, b, c, d, groups, syn: SynapseTable,
                 bg_current=None, kind: str = "food_only", v0=None):
        self.n = a.shape[0]
        self.a, self.b, self.c, self.d = a, b, c, d
        self.v = np.full(self.n, -65.0) if v0 is None else v0.astype(np.float64)
        self.u = self.b * self.v
        self.groups = groups
        self.kind = kind
        self.syn = syn
        self.bg_current = bg_current if bg_current is not None else np.zeros(self.n)
        self.last_spike = np.full(self.n, NEVER_SPIKED)
        self.pending = np.zeros(self.n)
        self._next = np.zeros(self.n)
        self._mask = np.zeros(self.n, dtype=np.bool_)
        self._idx = np.zeros(self.n, dtype=np.int64)
        if syn.out_ptr is None:
            syn.build_adjacency(self.n)

    def group_slice(self, name: str) -> slice:
        start, stop = self.groups[name]
        return slice(start, stop)

    def group_size(self, name: str) -> int:
        start, stop = self.groups[name]
        return stop - start

    def synapse_indices(self, cat: int) -> np.ndarray:
        return np.nonzero(self.syn.cat == cat)[0]

    def step(self, injected: np.ndarray | None = None) -> np.ndarray:
        """Advance one tick; returns indices of neurons that fired.

        injected: extra current for this tick (stimuli, exploration, noise).
        Synaptic current scheduled by the previous tick's spikes is added
        automatically, and this tick's spikes are queued for the next.
        """
        current = self.pending
        current += self.bg_current
        if injected is not None:
            current += injected
        step_neurons(self.v, self.u, self.a, self.b, self.c, self.d,
                     current, self._mask)
        n_spiked = collect_spikes(self._mask, self._idx)
        spiked = self._idx[:n_spiked]
        self._next[:] = 0.0
        deliver_spikes(spiked, n_spiked, self.syn.out_ptr, self.syn.out_syn,
                       self.syn.post, self.syn.weight, self._next)
        self.pending, self._next = self._next, self.pending
        return spiked.copy()
