"""Unit tests for network stepping and spike delivery."""

import numpy as np

from neuroforage.network import Network, SynapseTable


def _two_neuron_net(weight: float):
    a = np.array([0.02, 0.02])
    b = np.array([0.2, 0.2])
    c = np.array([-65.0, -65.0])
    d = np.array([8.0, 8.0])
    syn = SynapseTable(pre=np.array([0], dtype=np.int32),
                       post=np.array([1], dtype=np.int32),
                       weight=np.array([weight]),
                       elig=np.zeros(1),
                       cat=np.zeros(1, dtype=np.int8),
                       n_plastic=0)
    return Network(a, b, c, d, {"all": (0, 2)}, syn)


def test_spike_current_arrives_one_tick_later():
    net = _two_neuron_net(30.0)
    inj = np.zeros(2)
    inj[0] = 200.0  # force neuron 0 to fire now
    spiked = net.step(inj)
    assert spiked.tolist() == [0]
    v_before = net.v[1]
    spiked = net.step()  # synaptic current lands this tick
    assert net.v[1] > v_before + 10.0 or 1 in spiked.tolist()


def test_zero_weight_synapse_is_inert():
    runs = []
    for w in (0.0, None):
        if w is None:
            net = _two_neuron_net(0.0)
            net.syn.weight = np.zeros(0)
            net.syn.pre = np.zeros(0, dtype=np.int32)
            net.syn.post = np.zeros(0, dtype=np.int32)
            net.syn.out_ptr = None
            net.syn.build_adjacency(2)
        else:
            net = _two_neuron_net(w)
        rng = np.random.default_rng(9)
        trace = []
        for t in range(500):
            inj = rng.uniform(0.0, 8.0, size=2)
            trace.append(tuple(net.step(inj).tolist()))
        runs.append(trace)
    assert runs[0] == runs[1]


def test_step_is_deterministic():
    traces = []
    for _ in range(2):
        net = _two_neuron_net(15.0)
        rng = np.random.default_rng(4)
        trace = []
        for t in range(300):
            trace.append(tuple(net.step(rng.uniform(0, 10, 2)).tolist()))
        traces.append(trace)
    assert traces[0] == traces[1]
