"""Unit tests for population layout and wiring construction."""

import numpy as np
import pytest

from neuroforage import architecture as ar


def test_layout_sizes_and_order():
    g = ar.group_ranges("food_only")
    assert ar.total_neurons("food_only") == 160
    assert g["food_left"] == (0, 20)
    assert g["food_right"] == (20, 40)
    assert g["motor_left"] == (40, 60)
    assert g["motor_right"] == (60, 80)
    assert g["touch_food"] == (80, 100)
    assert g["dopamine"] == (100, 140)
    assert g["inhibitory"] == (140, 160)

    g = ar.group_ranges("food_container")
    assert ar.total_neurons("food_container") == 240
    assert g["food_left"] == (0, 20)
    assert g["container_left"] == (40, 60)
    assert g["container_right"] == (60, 80)
    assert g["motor_left"] == (80, 100)
    assert g["motor_right"] == (100, 120)
    assert g["touch_food"] == (120, 140)
    assert g["touch_food_container"] == (140, 160)
    assert g["touch_empty_container"] == (160, 180)
    assert g["dopamine"] == (180, 220)
    assert g["inhibitory"] == (220, 240)


def test_wiring_probabilities():
    # mean edge count over repeated builds approaches n_pre*n_post*p
    counts = []
    inhib_counts = []
    for seed in range(60):
        net = ar.build_network("food_only", "Learning",
                               np.random.default_rng(seed))
        counts.append(len(net.synapse_indices(ar.CAT_FOOD_LR)))
        inhib_counts.append(len(net.synapse_indices(ar.CAT_INHIB)))
    # binomial(400, .85): mean 340, sd 7.1; the sample mean sd is ~0.92
    assert np.mean(counts) == pytest.approx(340.0, abs=4.0)
    # binomial(20*159, .10): mean 318
    assert np.mean(inhib_counts) == pytest.approx(318.0, abs=10.0)


def test_plastic_first_ordering():
    net = ar.build_network("food_container", "DualLearning",
                           np.random.default_rng(0))
    syn = net.syn
    n_p = syn.n_plastic
    plastic_cats = set(syn.cat[:n_p].tolist())
    fixed_cats = set(syn.cat[n_p:].tolist())
    assert plastic_cats == {ar.CAT_FOOD_LL, ar.CAT_FOOD_LR, ar.CAT_FOOD_RL,
                            ar.CAT_FOOD_RR, ar.CAT_CONT_LL, ar.CAT_CONT_LR,
                            ar.CAT_CONT_RL, ar.CAT_CONT_RR,
                            ar.CAT_FCONT_TOUCH_DA, ar.CAT_ETOUCH_DA}
    assert fixed_cats == {ar.CAT_FTOUCH_DA, ar.CAT_INHIB}


def test_variant_weight_presets():
    net = ar.build_network("food_container", "Benchmark",
                           np.random.default_rng(1))
    syn = net.syn
    assert syn.n_plastic == 0
    for cat in ar.FOOD_CROSS_CATS + ar.CONT_CROSS_CATS:
        assert np.all(syn.weight[net.synapse_indices(cat)] == 4.0)
    for cat in ar.FOOD_STRAIGHT_CATS + ar.CONT_STRAIGHT_CATS:
        assert np.all(syn.weight[net.synapse_indices(cat)] == 0.0)

    net = ar.build_network("food_container", "FixedHighContainerDopamine",
                           np.random.default_rng(2))
    for cat in (ar.CAT_FCONT_TOUCH_DA, ar.CAT_ETOUCH_DA):
        idx = net.synapse_indices(cat)
        assert np.all(net.syn.weight[idx] == 4.0)
        assert np.all(idx >= net.syn.n_plastic)  # frozen
    # container taxis remains plastic from zero
    idx = net.synapse_indices(ar.CAT_CONT_LR)
    assert np.all(net.syn.weight[idx] == 0.0)
    assert np.all(idx < net.syn.n_plastic)


def test_food_touch_reward_wiring_fixed():
    net = ar.build_network("food_only", "Learning", np.random.default_rng(3))
    idx = net.synapse_indices(ar.CAT_FTOUCH_DA)
    assert np.all(net.syn.weight[idx] == 3.0)
    assert np.all(idx >= net.syn.n_plastic)
    t0, t1 = net.groups["touch_food"]
    d0, d1 = net.groups["dopamine"]
    assert np.all((net.syn.pre[idx] >= t0) & (net.syn.pre[idx] < t1))
    assert np.all((net.syn.post[idx] >= d0) & (net.syn.post[idx] < d1))


def test_inhibitory_wiring():
    net = ar.build_network("food_only", "Learning", np.random.default_rng(4))
    idx = net.synapse_indices(ar.CAT_INHIB)
    w = net.syn.weight[idx]
    assert np.all((w >= -3.0) & (w <= 0.0))
    assert np.any(w < -1.5)
    # no self-connections anywhere
    assert np.all(net.syn.pre != net.syn.post)


def test_background_currents():
    net = ar.build_network("food_only", "Learning", np.random.default_rng(5),
                           da_drive=3.65, bias=3.0)
    d0, d1 = net.groups["dopamine"]
    assert np.all(net.bg_current[d0:d1] == 3.65)
    outside = np.concatenate([net.bg_current[:d0], net.bg_current[d1:]])
    assert np.all(outside == 3.0)


def test_dopamine_burst_phenotype():
    net = ar.build_network("food_only", "Learning", np.random.default_rng(7))
    d0, d1 = net.groups["dopamine"]
    assert np.all(net.c[d0:d1] == -50.0)
    assert np.all(net.d[d0:d1] == 2.0)
    het = ar.build_network("food_only", "Learning", np.random.default_rng(7),
                           da_burst=False)
    assert het.c[d0:d1].std() > 0.1  # falls back to the heterogeneous draw


def test_initial_state_desynchronized():
    net = ar.build_network("food_only", "Learning", np.random.default_rng(8))
    assert np.all((net.v >= -75.0) & (net.v <= -60.0))
    assert net.v.std() > 1.0
    assert np.allclose(net.u, net.b * net.v)


def test_build_is_deterministic():
    n1 = ar.build_network("food_container", "DualLearning",
                          np.random.default_rng(11))
    n2 = ar.build_network("food_container", "DualLearning",
                          np.random.default_rng(11))
    assert np.array_equal(n1.syn.pre, n2.syn.pre)
    assert np.array_equal(n1.syn.post, n2.syn.post)
    assert np.array_equal(n1.syn.weight, n2.syn.weight)
    assert np.array_equal(n1.c, n2.c)
    assert np.array_equal(n1.v, n2.v)


def test_unknown_variant_rejected():
    with pytest.raises(ValueError, match="variant"):
        ar.build_network("food_only", "Nope", np.random.default_rng(0))


def test_literal_parameter_switch():
    net = ar.build_network("food_only", "Learning", np.random.default_rng(6),
                           literal_ab=True)
    f0, f1 = net.groups["food_left"]
    assert np.all(net.a[f0:f1] == 0.2)
    assert np.all(net.b[f0:f1] == 0.02)
    i0, i1 = net.groups["inhibitory"]
    assert np.all(net.a[i0:i1] == 0.1)  # inhibitory population unaffected
