"""Population layout, wiring tables and robot variants.

Two architectures exist.  The open-arena robot has 160 neurons: left/right
food sensors, left/right motors, food touch sensors, a dopaminergic
population and an inhibitory population.  The container robot adds
left/right container sensors plus touch sensors for entering food and empty
containers, for 240 neurons.  Sensor-to-motor wiring is probabilistic
(p=0.85 per pair), touch-to-dopamine wiring sparse (p=0.10), and the
inhibitory population projects to every other neuron with p=0.10 and fixed
uniform-negative weights.
"""

from __future__ import annotations

import numpy as np

from .network import Network, SynapseTable
from .neurons import excitatory_params, inhibitory_params

P_SENSOR_MOTOR = 0.85
P_TOUCH_DA = 0.10
P_INHIB = 0.10
W_TAXIS_MAX = 4.0
W_FOOD_TOUCH_DA = 3.0

# operating point, expressed as per-role shifts of the resting drive.  Range
# sensors rest depolarized: a stimulus draw then overshoots threshold by a
# wide margin, so the whole group answers in a compact two-tick volley even
# when spike-frequency adaptation is holding recovery high.  Compact volleys
# are what make the driven motor response an all-or-nothing floor of the
# full group instead of a straggling partial count.  Touch sensors rest
# depolarized for the same reason (their event volleys are weaker, mean 12).
# The motor groups rest slightly hyperpolarized: the exploration current
# (mean 2.35) then fires only part of the group per window, keeping the
# exploring side's count strictly below the driven response floor, which is
# what lets learned responses override exploration without ever losing to
# it.  A zero-mean membrane jitter goes to every neuron: it keeps the
# sub-threshold dopaminergic drive firing sparsely and desynchronizes the
# driven groups so motor counts rarely land on exact left/right ties
NOISE_BIAS = 0.0
NOISE_AMP = 1.0
SENSOR_REST_OFFSET = 2.0
TOUCH_REST_OFFSET = 3.0
MOTOR_REST_OFFSET = -0.2
INHIB_REST_OFFSET = 3.5

# total constant drive to the dopaminergic population, bisected so its
# background rate sits in the 0.2-0.8 Hz band at the default jitter
DA_BACKGROUND_DRIVE = 3.15
DA_DRIVE_LITERAL = 3.65

# dopaminergic neurons use the bursting corner of the excitatory family so a
# touch volley reliably drives several same-millisecond spike counts past the
# >5 release condition; the per-tick gating passes only the synchronous core
# of the burst, which puts one collection's total release near +0.1
DA_BURST_C = -50.0
DA_BURST_D = 2.0

# spread applied around each neuron's resting point at construction so the
# population does not start phase-locked
V_INIT_SPREAD = 1.5

# synapse categories, used for logging, dampening and analysis
CAT_FOOD_LL = 0
CAT_FOOD_LR = 1
CAT_FOOD_RL = 2
CAT_FOOD_RR = 3
CAT_CONT_LL = 4
CAT_CONT_LR = 5
CAT_CONT_RL = 6
CAT_CONT_RR = 7
CAT_FCONT_TOUCH_DA = 8
CAT_ETOUCH_DA = 9
CAT_FTOUCH_DA = 10
CAT_INHIB = 11

FOOD_CROSS_CATS = (CAT_FOOD_LR, CAT_FOOD_RL)
FOOD_STRAIGHT_CATS = (CAT_FOOD_LL, CAT_FOOD_RR)
CONT_CROSS_CATS = (CAT_CONT_LR, CAT_CONT_RL)
CONT_STRAIGHT_CATS = (CAT_CONT_LL, CAT_CONT_RR)

LAYOUTS = {
    "food_only": [
        ("food_left", 20), ("food_right", 20),
        ("motor_left", 20), ("motor_right", 20),
        ("touch_food", 20),
        ("dopamine", 40), ("inhibitory", 20),
    ],
    "food_container": [
        ("food_left", 20), ("food_right", 20),
        ("container_left", 20), ("container_right", 20),
        ("motor_left", 20), ("motor_right", 20),
        ("touch_food", 20), ("touch_food_container", 20),
        ("touch_empty_container", 20),
        ("dopamine", 40), ("inhibitory", 20),
    ],
}

# variant tables: weight class -> (initial value, plastic)
_FROZEN_TAXIS = {"cross": (W_TAXIS_MAX, False), "straight": (0.0, False)}
_PLASTIC_ZERO = {"cross": (0.0, True), "straight": (0.0, True)}
_FROZEN_ZERO = {"cross": (0.0, False), "straight": (0.0, False)}

VARIANTS = {
    "food_only": {
        "Learning": {"food": _PLASTIC_ZERO},
        "TaxisInitLearning": {"food": {"cross": (W_TAXIS_MAX, True),
                                       "straight": (0.0, True)}},
        "LearningDisabled": {"food": _FROZEN_ZERO},
        "RandomWalk": {"food": _FROZEN_ZERO},
        "Benchmark": {"food": _FROZEN_TAXIS},
    },
    "food_container": {
        "LearningDisabled": {"food": _FROZEN_TAXIS, "cont": _FROZEN_ZERO,
                             "ctouch_da": (0.0, False)},
        "RandomWalk": {"food": _FROZEN_ZERO, "cont": _FROZEN_ZERO,
                       "ctouch_da": (0.0, False)},
        "NoContainerDopamine": {"food": _FROZEN_TAXIS, "cont": _PLASTIC_ZERO,
                                "ctouch_da": (0.0, False)},
        "ContainerDopamineLearning": {"food": _FROZEN_TAXIS,
                                      "cont": _PLASTIC_ZERO,
                                      "ctouch_da": (0.0, True)},
        "FixedHighContainerDopamine": {"food": _FROZEN_TAXIS,
                                       "cont": _PLASTIC_ZERO,
                                       "ctouch_da": (W_TAXIS_MAX, False)},
        "Benchmark": {"food": _FROZEN_TAXIS, "cont": _FROZEN_TAXIS,
                      "ctouch_da": (0.0, False)},
        "DopamineTransfer": {"food": _FROZEN_TAXIS, "cont": _FROZEN_TAXIS,
                             "ctouch_da": (0.0, True)},
        "DualLearning": {"food": _PLASTIC_ZERO, "cont": _PLASTIC_ZERO,
                         "ctouch_da": (0.0, True)},
    },
}


def group_ranges(kind: str) -> dict[str, tuple[int, int]]:
    out = {}
    at = 0
    for name, size in LAYOUTS[kind]:
        out[name] = (at, at + size)
        at += size
    return out


def total_neurons(kind: str) -> int:
    return sum(size for _, size in LAYOUTS[kind])


def build_network(kind: str, variant: str, rng: np.random.Generator,
                  literal_ab: bool = False,
                  da_drive: float = DA_BACKGROUND_DRIVE,
                  bias: float = NOISE_BIAS,
                  sensor_offset: float = None,
                  touch_offset: float = None,
                  motor_offset: float = None,
                  inhib_offset: float = None,
                  da_burst: bool = True) -> Network:
    """Construct a wired robot brain for one trial.

    All randomness (parameter heterogeneity, wiring, inhibitory weights,
    initial membrane state) comes from rng in a fixed order, so a seed fully
    determines the build.  da_drive is the total constant current to the
    dopaminergic population; every other neuron receives bias, with the
    range-sensor, touch and motor groups shifted by their role offsets on
    top of it.
    """
    if sensor_offset is None:
        sensor_offset = SENSOR_REST_OFFSET
    if touch_offset is None:
        touch_offset = TOUCH_REST_OFFSET
    if motor_offset is None:
        motor_offset = MOTOR_REST_OFFSET
    if inhib_offset is None:
        inhib_offset = INHIB_REST_OFFSET
    if variant not in VARIANTS[kind]:
        raise ValueError(f"variant: unknown name {variant!r} for {kind}")
    spec = VARIANTS[kind][variant]
    groups = group_ranges(kind)
    n = total_neurons(kind)

    a = np.zeros(n)
    b = np.zeros(n)
    c = np.zeros(n)
    d = np.zeros(n)
    for name, (start, stop) in groups.items():
        size = stop - start
        if name == "inhibitory":
            ga, gb, gc, gd = inhibitory_params(size, rng)
        elif name == "dopamine" and da_burst:
            ga = np.full(size, 0.2 if literal_ab else 0.02)
            gb = np.full(size, 0.02 if literal_ab else 0.2)
            gc = np.full(size, DA_BURST_C)
            gd = np.full(size, DA_BURST_D)
        else:
            ga, gb, gc, gd = excitatory_params(size, rng, literal_ab)
        a[start:stop], b[start:stop] = ga, gb
        c[start:stop], d[start:stop] = gc, gd

    bg = np.full(n, bias)
    offsets = {"food_left": sensor_offset, "food_right": sensor_offset,
               "container_left": sensor_offset,
               "container_right": sensor_offset,
               "touch_food": touch_offset,
               "touch_food_container": touch_offset,
               "touch_empty_container": touch_offset,
               "motor_left": motor_offset, "motor_right": motor_offset,
               "inhibitory": inhib_offset}
    for name, off in offsets.items():
        if name in groups:
            g0, g1 = groups[name]
            bg[g0:g1] += off
    da0, da1 = groups["dopamine"]
    bg[da0:da1] = da_drive

    rules = []

    def taxis_rules(sensor_prefix, table, cats):
        left = f"{sensor_prefix}_left"
        right = f"{sensor_prefix}_right"
        straight, cross = table["straight"], table["cross"]
        rules.append((left, "motor_left", P_SENSOR_MOTOR, straight, cats[0]))
        rules.append((left, "motor_right", P_SENSOR_MOTOR, cross, cats[1]))
        rules.append((right, "motor_left", P_SENSOR_MOTOR, cross, cats[2]))
        rules.append((right, "motor_right", P_SENSOR_MOTOR, straight, cats[3]))

    taxis_rules("food", spec["food"],
                (CAT_FOOD_LL, CAT_FOOD_LR, CAT_FOOD_RL, CAT_FOOD_RR))
    if kind == "food_container":
        taxis_rules("container", spec["cont"],
                    (CAT_CONT_LL, CAT_CONT_LR, CAT_CONT_RL, CAT_CONT_RR))
    rules.append(("touch_food", "dopamine", P_TOUCH_DA,
                  (W_FOOD_TOUCH_DA, False), CAT_FTOUCH_DA))
    if kind == "food_container":
        rules.append(("touch_food_container", "dopamine", P_TOUCH_DA,
                      spec["ctouch_da"], CAT_FCONT_TOUCH_DA))
        rules.append(("touch_empty_container", "dopamine", P_TOUCH_DA,
                      spec["ctouch_da"], CAT_ETOUCH_DA))

    plastic = {"pre": [], "post": [], "w": [], "cat": []}
    fixed = {"pre": [], "post": [], "w": [], "cat": []}

    def add(bucket, pre_idx, post_idx, w, cat):
        bucket["pre"].append(pre_idx)
        bucket["post"].append(post_idx)
        bucket["w"].append(w)
        bucket["cat"].append(np.full(pre_idx.shape[0], cat, dtype=np.int8))

    for src, dst, p, (w0, is_plastic), cat in rules:
        s0, s1 = groups[src]
        d0, d1 = groups[dst]
        mask = rng.random((s1 - s0, d1 - d0)) < p
        pre_idx, post_idx = np.nonzero(mask)
        add(plastic if is_plastic else fixed,
            (pre_idx + s0).astype(np.int32), (post_idx + d0).astype(np.int32),
            np.full(pre_idx.shape[0], w0), cat)

    # inhibitory projections: to every other neuron, fixed negative weights
    i0, i1 = groups["inhibitory"]
    mask = rng.random((i1 - i0, n)) < P_INHIB
    for k in range(i1 - i0):
        mask[k, i0 + k] = False  # no self-connections
    pre_idx, post_idx = np.nonzero(mask)
    w_inh = rng.uniform(-3.0, 0.0, size=pre_idx.shape[0])
    add(fixed, (pre_idx + i0).astype(np.int32), post_idx.astype(np.int32),
        w_inh, CAT_INHIB)

    def cat_arrays(bucket):
        if not bucket["pre"]:
            return (np.zeros(0, dtype=np.int32), np.zeros(0, dtype=np.int32),
                    np.zeros(0), np.zeros(0, dtype=np.int8))
        return (np.concatenate(bucket["pre"]), np.concatenate(bucket["post"]),
                np.concatenate(bucket["w"]), np.concatenate(bucket["cat"]))

    p_pre, p_post, p_w, p_cat = cat_arrays(plastic)
    f_pre, f_post, f_w, f_cat = cat_arrays(fixed)

    syn = SynapseTable(
        pre=np.concatenate([p_pre, f_pre]),
        post=np.concatenate([p_post, f_post]),
        weight=np.concatenate([p_w, f_w]),
        elig=np.zeros(p_w.shape[0] + f_w.shape[0]),
        cat=np.concatenate([p_cat, f_cat]),
        n_plastic=p_w.shape[0],
    )
    # start every neuron at the stable fixed point of its own driven dynamics
    # (v' = 0.04v^2+5v+140-bv+I with I its background current), plus a small
    # spread for desynchronization.  A grid init far below the driven resting
    # point hands neurons a recovery value so low that whole groups fire one
    # synchronized volley at t=0
    disc = (5.0 - b) ** 2 - 0.16 * (140.0 + bg)
    safe = disc > 0.0
    v_star = np.where(safe,
                      (-(5.0 - b) - np.sqrt(np.where(safe, disc, 1.0))) / 0.08,
                      -65.0)
    v0 = v_star + rng.uniform(-V_INIT_SPREAD, V_INIT_SPREAD, size=n)
    return Network(a, b, c, d, groups, syn, bg_current=bg, kind=kind, v0=v0)
