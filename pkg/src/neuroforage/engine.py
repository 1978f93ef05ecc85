"""Fused per-trial simulation loop.

One call to run_trial_kernel advances a whole trial tick by tick: stimulus
injection, neuron stepping, spike delivery, plasticity, dopamine dynamics,
robot motion and contact handling, with per-window decoding, homeostatic
dampening and logging.  Everything inside is nopython so multi-thousand-
second trials run in seconds.

Randomness is split over two streams: the trial Generator drives every
discrete choice (stimulus Poisson draws, winner ties, exploration,
respawns) while a cheap xorshift128+ stream, seeded from the same
Generator, supplies the dense per-neuron current noise.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .network import collect_spikes, deliver_spikes
from .neurons import step_neurons
from .plasticity import apply_stdp, dampen_group, decay_and_integrate, dopamine_tick
from .sensorimotor import decode_speeds, stimulate_group
from .world import (advance_robot, resolve_contacts_containers,
                    resolve_contacts_food, sense_sides, torus_distance,
                    winner_take_all)

SPEED_INSIDE_FACTOR = 0.5

# group-bound slots in the gb array
GB_FOOD_L = 0       # [0,1) food_left, [2,3) food_right
GB_FOOD_R = 2
GB_CONT_L = 4       # container sensor groups, 0,0 when absent
GB_CONT_R = 6
GB_MOTOR_L = 8
GB_MOTOR_R = 10
GB_TOUCH_FOOD = 12
GB_TOUCH_FCONT = 14
GB_TOUCH_ECONT = 16
GB_DA = 18
GB_LEN = 20

# window-log columns
COL_COLLECTED = 0
COL_DA = 1
COL_W_FOOD_CROSS = 2
COL_W_FOOD_STRAIGHT = 3
COL_W_CONT_CROSS = 4
COL_W_CONT_STRAIGHT = 5
COL_W_FCONT_DA = 6
COL_W_ETOUCH_DA = 7
COL_E_FOOD_CROSS = 8
COL_E_FOOD_STRAIGHT = 9
COL_E_CONT_CROSS = 10
COL_E_CONT_STRAIGHT = 11
COL_X = 12
COL_Y = 13
COL_HEADING = 14
COL_DIST_FOOD = 15
COL_MOTOR_LEFT = 16
COL_MOTOR_RIGHT = 17
N_COLS = 18

_INV53 = 1.0 / 9007199254740992.0


def make_noise_state(g: np.random.Generator) -> np.ndarray:
    """Seed the xorshift128+ noise stream from the trial generator."""
    return g.integers(1, 2 ** 63 - 1, size=2, dtype=np.int64).astype(np.uint64)


@njit(cache=True, inline="always")
def _xs_uniform(xs) -> float:
    """xorshift128+ uniform in [0, 1); xs is a 2-element uint64 state."""
    x = xs[0]
    y = xs[1]
    xs[0] = y
    x ^= x << np.uint64(23)
    x ^= x >> np.uint64(17)
    x ^= y ^ (y >> np.uint64(26))
    xs[1] = x
    return float((x + y) >> np.uint64(11)) * _INV53


@njit(cache=True)
def _cat_mean(values, cat_idx, lo, hi) -> float:
    if hi <= lo:
        return np.nan
    total = 0.0
    for k in range(lo, hi):
        total += values[cat_idx[k]]
    return total / (hi - lo)


@njit(cache=True)
def run_trial_kernel(g, xs, window,
                     v, u, pa, pb, pc, pd, bg, pending, nxt, last_spike,
                     syn_pre, syn_post, syn_w, syn_elig, syn_claimed, n_plastic,
                     out_ptr, out_syn, in_ptr, in_syn,
                     plastic_on,
                     a_plus, a_minus, tau_plus_s, tau_minus_s, e_decay,
                     da_level0, da_baseline, da_per_spike, da_threshold,
                     da_decay, da_delay, da_queue, poison_ctx_ms,
                     gb,
                     range_gain, touch_mean, expl_mean, noise_amp,
                     aw, ah, fx, fy, fkind, cx, cy, ckind,
                     food_range, cont_range,
                     rob, inside, switch_tick,
                     damp_idx, damp_ptr, damp_limit, damp_step,
                     cat_idx, cat_ptr,
                     win_log, ev_t, ev_kind, counters,
                     spike_t, spike_id, spike_n, status):
    """Run win_log.shape[0] control windows in place.

    rob holds [x, y, heading, v_left, v_right]; inside the current container
    index or -1.  Speeds are full-regime values, halved at motion time while
    inside a container.  Returns nothing; all outputs are written into the
    passed arrays and status[0] is set nonzero if the state went non-finite.
    """
    n = v.shape[0]
    nf = fx.shape[0]
    nc = cx.shape[0]
    has_cont = nc > 0
    inj = np.zeros(n)
    touch = np.zeros(3, dtype=np.bool_)
    all_food = np.ones(nf, dtype=np.bool_)
    all_cont = np.ones(nc, dtype=np.bool_)
    one = np.ones(1, dtype=np.bool_)
    da_level = da_level0
    ctx_until = np.int64(-1)
    scap = spike_t.shape[0]
    mask = np.zeros(n, dtype=np.bool_)
    sidx = np.zeros(n, dtype=np.int64)
    n_windows = win_log.shape[0]

    for wi in range(n_windows):
        base_t = wi * window

        # sense at the window start; each modality winner-take-alls its two
        # quadrant responses and drives its sensor group on the first tick
        fl = 0.0
        fr = 0.0
        cl = 0.0
        cr = 0.0
        if has_cont:
            ins = inside[0]
            if ins >= 0:
                if ckind[ins] == 0:
                    fl, fr = sense_sides(rob[0], rob[1], rob[2], aw, ah,
                                         fx[ins:ins + 1], fy[ins:ins + 1],
                                         one, food_range)
            else:
                cl, cr = sense_sides(rob[0], rob[1], rob[2], aw, ah,
                                     cx, cy, all_cont, cont_range)
        else:
            fl, fr = sense_sides(rob[0], rob[1], rob[2], aw, ah,
                                 fx, fy, all_food, food_range)
        fl, fr = winner_take_all(fl, fr, g.random())
        cl, cr = winner_take_all(cl, cr, g.random())
        # one motor side is picked per window; its neurons then receive fresh
        # Poisson exploration currents on every tick of the window
        if g.random() < 0.5:
            e0 = gb[GB_MOTOR_L]
            e1 = gb[GB_MOTOR_L + 1]
        else:
            e0 = gb[GB_MOTOR_R]
            e1 = gb[GB_MOTOR_R + 1]
        cnt_l = 0
        cnt_r = 0

        for k in range(window):
            t = base_t + k
            if t == switch_tick:
                for j in range(nf):
                    fkind[j] = 1

            # --- assemble this tick's injected current, starting from the
            # uniform membrane jitter every neuron receives.  The jitter keeps
            # the sub-threshold dopaminergic drive firing sparsely and breaks
            # up lockstep crossings in the driven and exploring groups, which
            # would otherwise produce exact left/right motor count ties
            if noise_amp > 0.0:
                for i in range(n):
                    inj[i] = (2.0 * _xs_uniform(xs) - 1.0) * noise_amp
            else:
                for i in range(n):
                    inj[i] = 0.0
            if k == 0:
                stimulate_group(g, inj, gb[GB_FOOD_L], gb[GB_FOOD_L + 1],
                                fl * range_gain)
                stimulate_group(g, inj, gb[GB_FOOD_R], gb[GB_FOOD_R + 1],
                                fr * range_gain)
                if has_cont:
                    stimulate_group(g, inj, gb[GB_CONT_L], gb[GB_CONT_L + 1],
                                    cl * range_gain)
                    stimulate_group(g, inj, gb[GB_CONT_R], gb[GB_CONT_R + 1],
                                    cr * range_gain)
            if touch[0]:
                stimulate_group(g, inj, gb[GB_TOUCH_FOOD],
                                gb[GB_TOUCH_FOOD + 1], touch_mean)
            if touch[1]:
                stimulate_group(g, inj, gb[GB_TOUCH_FCONT],
                                gb[GB_TOUCH_FCONT + 1], touch_mean)
            if touch[2]:
                stimulate_group(g, inj, gb[GB_TOUCH_ECONT],
                                gb[GB_TOUCH_ECONT + 1], touch_mean)
            touch[0] = False
            touch[1] = False
            touch[2] = False
            stimulate_group(g, inj, e0, e1, expl_mean)

            # --- step the network; spikes reach their targets next tick
            for i in range(n):
                pending[i] += bg[i] + inj[i]
            step_neurons(v, u, pa, pb, pc, pd, pending, mask)
            ns = collect_spikes(mask, sidx)
            if scap > 0:
                for q in range(ns):
                    p = spike_n[0]
                    if p < scap:
                        spike_t[p] = t
                        spike_id[p] = sidx[q]
                        spike_n[0] = p + 1
            nda = 0
            for q in range(ns):
                idx = sidx[q]
                if gb[GB_MOTOR_L] <= idx < gb[GB_MOTOR_L + 1]:
                    cnt_l += 1
                elif gb[GB_MOTOR_R] <= idx < gb[GB_MOTOR_R + 1]:
                    cnt_r += 1
                elif gb[GB_DA] <= idx < gb[GB_DA + 1]:
                    nda += 1
            for i in range(n):
                nxt[i] = 0.0
            deliver_spikes(sidx, ns, out_ptr, out_syn, syn_post, syn_w, nxt)
            for i in range(n):
                pending[i] = nxt[i]

            # --- plasticity: decay and dopamine-gated integration first, so
            # a fresh pairing bump starts decaying the following tick
            if plastic_on:
                decay_and_integrate(syn_elig, syn_w, n_plastic, e_decay,
                                    da_level)
                apply_stdp(sidx, ns, float(t), last_spike,
                           out_ptr, out_syn, in_ptr, in_syn,
                           syn_pre, syn_post, syn_elig, syn_claimed, n_plastic,
                           a_plus, a_minus, tau_plus_s, tau_minus_s)
            da_level = dopamine_tick(da_level, t, nda, t <= ctx_until,
                                     da_queue, da_per_spike, da_threshold,
                                     da_baseline, da_decay, da_delay)

        # --- window boundary: decode this window's counts, then integrate the
        # window's motion with the freshly decoded speeds.  Acting on the same
        # counts that were just read keeps the sense-act loop delay-free at
        # window resolution; contacts found along the arc stimulate the touch
        # groups on the first tick of the next window
        vl, vr = decode_speeds(cnt_l, cnt_r)
        rob[3] = vl
        rob[4] = vr
        for k in range(window):
            t = base_t + k
            sp = SPEED_INSIDE_FACTOR if (has_cont and inside[0] >= 0) else 1.0
            x, y, hd = advance_robot(rob[0], rob[1], rob[2],
                                     rob[3] * sp, rob[4] * sp, 0.001, aw, ah)
            rob[0] = x
            rob[1] = y
            rob[2] = hd
            if has_cont:
                resolve_contacts_containers(g, t, x, y, cx, cy, ckind,
                                            fx, fy, aw, ah, inside,
                                            ev_t, ev_kind, counters, touch)
            else:
                if resolve_contacts_food(g, t, x, y, fx, fy, fkind, aw, ah,
                                         ev_t, ev_kind, counters, touch):
                    ctx_until = t + poison_ctx_ms
        if plastic_on:
            for j in range(damp_ptr.shape[0] - 1):
                dampen_group(syn_w, damp_idx[damp_ptr[j]:damp_ptr[j + 1]],
                             damp_limit, damp_step)
        win_log[wi, COL_COLLECTED] = counters[1]
        win_log[wi, COL_DA] = da_level
        for j in range(6):
            win_log[wi, COL_W_FOOD_CROSS + j] = _cat_mean(
                syn_w, cat_idx, cat_ptr[j], cat_ptr[j + 1])
        for j in range(4):
            win_log[wi, COL_E_FOOD_CROSS + j] = _cat_mean(
                syn_elig, cat_idx, cat_ptr[j], cat_ptr[j + 1])
        win_log[wi, COL_X] = rob[0]
        win_log[wi, COL_Y] = rob[1]
        win_log[wi, COL_HEADING] = rob[2]
        best = 1.0e18
        if has_cont:
            for j in range(nc):
                if ckind[j] == 0:
                    dd = torus_distance(rob[0], rob[1], cx[j], cy[j], aw, ah)
                    if dd < best:
                        best = dd
        else:
            for j in range(nf):
                if fkind[j] == 0:
                    dd = torus_distance(rob[0], rob[1], fx[j], fy[j], aw, ah)
                    if dd < best:
                        best = dd
        win_log[wi, COL_DIST_FOOD] = best if best < 1.0e17 else np.nan
        win_log[wi, COL_MOTOR_LEFT] = cnt_l
        win_log[wi, COL_MOTOR_RIGHT] = cnt_r

    status[0] = 0
    for i in range(n):
        if not np.isfinite(v[i]):
            status[0] = 1
            break
