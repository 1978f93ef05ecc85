"""Trial execution, per-trial logs, behavioural metrics and batch running.

A trial is fully determined by (config, trial_index): the per-trial
generator is spawned as SeedSequence(config.seed, spawn_key=(trial_index,)),
so a batch can be extended without reshuffling earlier trials and any trial
can be reproduced in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import architecture as ar
from . import engine
from .architecture import build_network
from .network import Network
from .plasticity import da_decay_factor, elig_decay_factor
from .scenarios import ScenarioConfig
from .world import (Arena, CONTAINER_SENSE_RANGE, EV_FOOD, FOOD_SENSE_RANGE,
                    SPEED_MAX, SPEED_MIN, torus_distance)

_LOG_GROUPS = (
    ar.FOOD_CROSS_CATS, ar.FOOD_STRAIGHT_CATS,
    ar.CONT_CROSS_CATS, ar.CONT_STRAIGHT_CATS,
    (ar.CAT_FCONT_TOUCH_DA,), (ar.CAT_ETOUCH_DA,),
)

_DAMP_GROUPS = (
    ar.FOOD_CROSS_CATS + ar.FOOD_STRAIGHT_CATS,
    ar.CONT_CROSS_CATS + ar.CONT_STRAIGHT_CATS,
    (ar.CAT_FCONT_TOUCH_DA, ar.CAT_ETOUCH_DA),
)


@dataclass
class TrialLog:
    """Everything recorded from one trial, enough to recompute any metric."""
    config: ScenarioConfig
    trial_index: int
    window_ms: int
    win_log: np.ndarray            # (n_windows, engine.N_COLS)
    events_t: np.ndarray
    events_kind: np.ndarray
    collected: int
    poison: int
    weights_final: np.ndarray
    syn_pre: np.ndarray
    syn_post: np.ndarray
    syn_cat: np.ndarray
    n_plastic: int
    initial_food_distance: float
    spikes_t: np.ndarray | None = None
    spikes_id: np.ndarray | None = None

    @property
    def t_ms(self) -> np.ndarray:
        """Window-end timestamps for the win_log rows."""
        n = self.win_log.shape[0]
        return (np.arange(n, dtype=np.int64) + 1) * self.window_ms


def _concat_indices(cat: np.ndarray, groups, limit: int | None = None):
    """Flat index array + group pointer array for a tuple of cat groups."""
    idx_parts = []
    ptr = [0]
    for cats in groups:
        sel = np.nonzero(np.isin(cat, cats))[0]
        if limit is not None:
            sel = sel[sel < limit]
        idx_parts.append(sel.astype(np.int64))
        ptr.append(ptr[-1] + sel.shape[0])
    if idx_parts:
        idx = np.concatenate(idx_parts)
    else:
        idx = np.zeros(0, dtype=np.int64)
    return idx, np.array(ptr, dtype=np.int64)


def _group_bounds(net: Network) -> np.ndarray:
    gb = np.zeros(engine.GB_LEN, dtype=np.int64)

    def put(slot, name):
        if name in net.groups:
            gb[slot], gb[slot + 1] = net.groups[name]

    put(engine.GB_FOOD_L, "food_left")
    put(engine.GB_FOOD_R, "food_right")
    put(engine.GB_CONT_L, "container_left")
    put(engine.GB_CONT_R, "container_right")
    put(engine.GB_MOTOR_L, "motor_left")
    put(engine.GB_MOTOR_R, "motor_right")
    put(engine.GB_TOUCH_FOOD, "touch_food")
    put(engine.GB_TOUCH_FCONT, "touch_food_container")
    put(engine.GB_TOUCH_ECONT, "touch_empty_container")
    put(engine.GB_DA, "dopamine")
    return gb


def run_trial(config: ScenarioConfig, trial_index: int = 0,
              log_spikes: bool | None = None) -> TrialLog:
    config.validate()
    if log_spikes is None:
        log_spikes = config.log_spikes
    ss = np.random.SeedSequence(config.seed, spawn_key=(trial_index,))
    g = np.random.Generator(np.random.PCG64(ss))

    net = build_network(config.kind, config.variant, g,
                        literal_ab=config.neuron.literal_ab,
                        da_drive=config.dopamine.background_drive,
                        bias=config.neuron.noise_bias,
                        sensor_offset=config.neuron.sensor_offset,
                        touch_offset=config.neuron.touch_offset,
                        motor_offset=config.neuron.motor_offset,
                        inhib_offset=config.neuron.inhib_offset,
                        da_burst=config.neuron.da_burst)

    if config.food_positions is not None:
        arena = Arena(config.arena_width, config.arena_height, n_food=0, rng=g)
        pos = np.asarray(config.food_positions, dtype=np.float64)
        arena.food_x = pos[:, 0].copy()
        arena.food_y = pos[:, 1].copy()
        arena.food_kind = np.zeros(pos.shape[0], dtype=np.int8)
    else:
        arena = Arena(config.arena_width, config.arena_height,
                      n_food=config.n_food,
                      n_food_containers=config.n_food_containers,
                      n_empty_containers=config.n_empty_containers, rng=g)

    r = config.robot
    mid = 0.5 * (SPEED_MIN + SPEED_MAX)
    rob = np.array([
        r.x if r.x is not None else config.arena_width / 2.0,
        r.y if r.y is not None else config.arena_height / 2.0,
        r.heading,
        r.v_left if r.v_left is not None else mid,
        r.v_right if r.v_right is not None else mid,
    ])
    inside = np.full(1, -1, dtype=np.int64)

    if arena.has_containers:
        dists = [torus_distance(rob[0], rob[1], arena.container_x[j],
                                arena.container_y[j], arena.width, arena.height)
                 for j in range(arena.container_x.shape[0])
                 if arena.container_kind[j] == 0]
    else:
        dists = [torus_distance(rob[0], rob[1], arena.food_x[j],
                                arena.food_y[j], arena.width, arena.height)
                 for j in range(arena.food_x.shape[0])
                 if arena.food_kind[j] == 0]
    initial_food_distance = float(min(dists)) if dists else float("nan")

    window = config.encode.window_ms
    n_ticks = int(round(config.duration_s * 1000.0))
    n_windows = n_ticks // window
    switch_tick = (int(round(config.switch_to_poison_s * 1000.0))
                   if config.switch_to_poison_s is not None else -1)

    syn = net.syn
    damp_idx, damp_ptr = _concat_indices(syn.cat, _DAMP_GROUPS,
                                         limit=syn.n_plastic)
    cat_idx, cat_ptr = _concat_indices(syn.cat, _LOG_GROUPS)
    gb = _group_bounds(net)

    win_log = np.zeros((n_windows, engine.N_COLS))
    ev_cap = int(config.duration_s * 40) + 1024
    ev_t = np.zeros(ev_cap, dtype=np.int64)
    ev_kind = np.zeros(ev_cap, dtype=np.int8)
    counters = np.zeros(3, dtype=np.int64)
    spike_cap = min(n_ticks * 16, 50_000_000) if log_spikes else 0
    spike_t = np.zeros(spike_cap, dtype=np.int32)
    spike_id = np.zeros(spike_cap, dtype=np.int32)
    spike_n = np.zeros(1, dtype=np.int64)
    status = np.zeros(1, dtype=np.int64)
    da_queue = np.zeros(config.dopamine.release_delay_ms + 1)
    xs = engine.make_noise_state(g)

    engine.run_trial_kernel(
        g, xs, window,
        net.v, net.u, net.a, net.b, net.c, net.d, net.bg_current,
        net.pending, net._next, net.last_spike,
        syn.pre, syn.post, syn.weight, syn.elig, syn.claimed, syn.n_plastic,
        syn.out_ptr, syn.out_syn, syn.in_ptr, syn.in_syn,
        syn.n_plastic > 0,
        config.stdp.a_plus, config.stdp.a_minus,
        config.stdp.tau_plus_s, config.stdp.tau_minus_s,
        elig_decay_factor(config.stdp.elig_tau_s),
        config.dopamine.baseline, config.dopamine.baseline,
        config.dopamine.per_spike, config.dopamine.burst_threshold,
        da_decay_factor(config.dopamine.decay_tau_s),
        config.dopamine.release_delay_ms, da_queue,
        config.dopamine.poison_context_ms,
        gb,
        config.encode.range_gain, config.encode.touch_mean,
        config.encode.exploration_mean,
        config.neuron.noise_amp,
        arena.width, arena.height,
        arena.food_x, arena.food_y, arena.food_kind,
        arena.container_x, arena.container_y, arena.container_kind,
        FOOD_SENSE_RANGE, CONTAINER_SENSE_RANGE,
        rob, inside, switch_tick,
        damp_idx, damp_ptr,
        config.dampening.mean_limit, config.dampening.step,
        cat_idx, cat_ptr,
        win_log, ev_t, ev_kind, counters,
        spike_t, spike_id, spike_n, status)

    if status[0] != 0:
        raise RuntimeError("simulation produced a non-finite membrane state")

    n_ev = counters[0]
    return TrialLog(
        config=config, trial_index=trial_index, window_ms=window,
        win_log=win_log,
        events_t=ev_t[:n_ev].copy(), events_kind=ev_kind[:n_ev].copy(),
        collected=int(counters[1]), poison=int(counters[2]),
        weights_final=syn.weight.copy(),
        syn_pre=syn.pre, syn_post=syn.post, syn_cat=syn.cat,
        n_plastic=syn.n_plastic,
        initial_food_distance=initial_food_distance,
        spikes_t=spike_t[:spike_n[0]].copy() if log_spikes else None,
        spikes_id=spike_id[:spike_n[0]].copy() if log_spikes else None)


def _cat_mean(log: TrialLog, cats) -> float:
    sel = np.isin(log.syn_cat, cats)
    if not sel.any():
        return float("nan")
    return float(log.weights_final[sel].mean())


def attraction_correct(log: TrialLog, modality: str) -> bool:
    """Taxis-learned predicate on final weights.

    Food: combined cross mean > 0.5 and > 1.1x the combined straight mean.
    Container: the same test per side (left-sensor cross vs left straight,
    right-sensor cross vs right straight), both sides must pass.
    """
    if modality == "food":
        cross = _cat_mean(log, ar.FOOD_CROSS_CATS)
        straight = _cat_mean(log, ar.FOOD_STRAIGHT_CATS)
        return cross > 0.5 and cross > 1.1 * straight
    if modality == "container":
        lr = _cat_mean(log, (ar.CAT_CONT_LR,))
        ll = _cat_mean(log, (ar.CAT_CONT_LL,))
        rl = _cat_mean(log, (ar.CAT_CONT_RL,))
        rr = _cat_mean(log, (ar.CAT_CONT_RR,))
        return (lr > 0.5 and lr > 1.1 * ll) and (rl > 0.5 and rl > 1.1 * rr)
    raise ValueError(f"modality: must be 'food' or 'container', got {modality!r}")


def escape_time(log: TrialLog) -> float | None:
    """Seconds until the robot leaves its initial orbit, if it ever does.

    Departure is distance-to-food > 1.5x the starting distance sustained for
    a full control window; collecting the food also ends the orbit.
    """
    col = log.events_t[log.events_kind == EV_FOOD]
    col_t = float(col[0]) / 1000.0 if col.size else None
    esc_t = None
    r0 = log.initial_food_distance
    if np.isfinite(r0):
        d = log.win_log[:, engine.COL_DIST_FOOD]
        thr = 1.5 * r0
        for i in range(1, d.shape[0]):
            if d[i] > thr and d[i - 1] > thr:
                esc_t = i * log.window_ms / 1000.0
                break
    times = [t for t in (col_t, esc_t) if t is not None]
    return min(times) if times else None


def trial_record(log: TrialLog) -> dict:
    rec = {
        "trial": log.trial_index,
        "collected": log.collected,
        "poison": log.poison,
        "attraction_food": bool(attraction_correct(log, "food")),
        "final_w_food_cross": _cat_mean(log, ar.FOOD_CROSS_CATS),
        "final_w_food_straight": _cat_mean(log, ar.FOOD_STRAIGHT_CATS),
    }
    if log.config.kind == "food_container":
        rec["attraction_container"] = bool(attraction_correct(log, "container"))
        rec["final_w_cont_cross"] = _cat_mean(log, ar.CONT_CROSS_CATS)
        rec["final_w_cont_straight"] = _cat_mean(log, ar.CONT_STRAIGHT_CATS)
        rec["final_w_foodtouch_da"] = _cat_mean(log, (ar.CAT_FCONT_TOUCH_DA,))
        rec["final_w_emptytouch_da"] = _cat_mean(log, (ar.CAT_ETOUCH_DA,))
    et = escape_time(log)
    if et is not None:
        rec["escape_time_s"] = et
    return rec


def run_batch(config: ScenarioConfig, n_trials: int | None = None,
              n_jobs: int = 1, log_spikes: bool | None = None) -> list[TrialLog]:
    config.validate()
    n = n_trials if n_trials is not None else config.trials
    if n_jobs != 1:
        from joblib import Parallel, delayed
        return Parallel(n_jobs=n_jobs)(
            delayed(run_trial)(config, i, log_spikes) for i in range(n))
    return [run_trial(config, i, log_spikes) for i in range(n)]


def summarize_batch(config: ScenarioConfig, logs: list[TrialLog]) -> dict:
    from . import __version__
    records = [trial_record(log) for log in logs]
    collected = np.array([r["collected"] for r in records], dtype=np.float64)
    poison = np.array([r["poison"] for r in records], dtype=np.float64)
    agg = {
        "collected_mean": float(collected.mean()) if records else 0.0,
        "collected_sd": float(collected.std(ddof=1)) if len(records) > 1 else 0.0,
        "poison_mean": float(poison.mean()) if records else 0.0,
        "attraction_food_pct": 100.0 * float(np.mean(
            [r["attraction_food"] for r in records])) if records else 0.0,
    }
    if config.kind == "food_container":
        agg["attraction_container_pct"] = 100.0 * float(np.mean(
            [r["attraction_container"] for r in records]))
    escapes = [r["escape_time_s"] for r in records if "escape_time_s" in r]
    if escapes:
        agg["escape_count"] = len(escapes)
        agg["escape_time_median_s"] = float(np.median(escapes))
    return {
        "package": "neuroforage",
        "version": __version__,
        "config": config.to_dict(),
        "n_trials": len(logs),
        "trials": records,
        "aggregate": agg,
    }
