"""Offline pairing replay: per-block eligibility around early collections.

Replays the exact nearest-neighbour + response-claim bookkeeping from the
logged spike train for the four food sensor->motor blocks, validates the
pooled means against the engine's win_log, then prints the per-block
eligibility and recent context at each early collection.
"""
import numpy as np
import neuroforage.architecture as arch
from neuroforage.plasticity import (A_PLUS, A_MINUS, TAU_PLUS_S, TAU_MINUS_S,
                                    TAU_ELIG_S, RESPONSE_CLAIM_MS)
from neuroforage.scenarios import preset_food_only
from neuroforage.simulate import run_trial

arch.DA_BURST_C = -55.0
arch.DA_BURST_D = 4.0

cfg = preset_food_only()
cfg.duration_s = 150.0
log = run_trial(cfg, 0, log_spikes=True)

t = np.asarray(log.spikes_t)
nid = np.asarray(log.spikes_id)
cats = log.syn_cat
pre = log.syn_pre
post = log.syn_post
sel = np.nonzero(cats < 4)[0]
n_syn = len(sel)
s_pre = pre[sel]
s_post = post[sel]
s_cat = cats[sel]

# replay per ms
n_ms = int(cfg.duration_s * 1000)
last = {}
elig = np.zeros(n_syn)
claimed = np.full(n_syn, -1.0e18)
last_spike = np.full(160, -1.0e18)
decay = 1.0 - 1.0 / (TAU_ELIG_S * 1000.0)

# spikes grouped by ms
order = np.argsort(t, kind="stable")
t = t[order]; nid = nid[order]
# adjacency over the selected synapses
by_pre = [[] for _ in range(160)]
by_post = [[] for _ in range(160)]
for j in range(n_syn):
    by_pre[s_pre[j]].append(j)
    by_post[s_post[j]].append(j)
by_pre = [np.array(x, dtype=int) for x in by_pre]
by_post = [np.array(x, dtype=int) for x in by_post]

block_means = np.zeros((n_ms // 70 + 1, 4))
block_cnt = np.array([(s_cat == c).sum() for c in range(4)], dtype=float)

ptr = 0
for ms in range(n_ms):
    elig *= decay
    lo = ptr
    while ptr < len(t) and t[ptr] == ms:
        ptr += 1
    spikers = nid[lo:ptr]
    spikers = spikers[spikers < 80]
    for n in spikers:
        if n < 40:                       # sensor fires: LTD vs last post
            for j in by_pre[n]:
                tp = last_spike[s_post[j]]
                if tp > -1.0e17 and tp != claimed[j]:
                    elig[j] += -A_MINUS * np.exp((tp - ms) / 1000.0 / TAU_MINUS_S)
        else:                            # motor fires: LTP vs last pre
            for j in by_post[n]:
                tq = last_spike[s_pre[j]]
                if tq > -1.0e17:
                    elig[j] += A_PLUS * np.exp(-(ms - tq) / 1000.0 / TAU_PLUS_S)
                    if ms - tq <= RESPONSE_CLAIM_MS:
                        claimed[j] = ms
    for n in spikers:
        last_spike[n] = ms
    if ms % 70 == 69:
        w = ms // 70
        for c in range(4):
            block_means[w, c] = elig[s_cat == c].sum() / block_cnt[c]

# validate pooled vs engine win_log (cols 8/9), engine logs at window end
wl = log.win_log
nw = min(len(wl), len(block_means)) - 2
cr = (block_means[:nw, 1] * block_cnt[1] + block_means[:nw, 2] * block_cnt[2]) \
    / (block_cnt[1] + block_cnt[2])
st = (block_means[:nw, 0] * block_cnt[0] + block_means[:nw, 3] * block_cnt[3]) \
    / (block_cnt[0] + block_cnt[3])
err_c = np.abs(cr - wl[:nw, 8]).max()
err_s = np.abs(st - wl[:nw, 9]).max()
print(f"replay validation: max |err| cross {err_c:.2e} straight {err_s:.2e}")

# context at collections
ev = [log.events_t[k] for k in range(len(log.events_t)) if log.events_kind[k] == 0]
print(f"collections: {len(ev)}")
print("per-collection block elig (window before touch):")
print("  t(s)   LS>LM    LS>RM    RS>LM    RS>RM   sens(5 windows)  expl-> winner(5w)")
tt = np.asarray(t); nn = np.asarray(nid)
for e in ev[:25]:
    w = int(e) // 70
    if w < 2:
        continue
    bm = block_means[w - 1]
    sides = []
    expl = []
    for k in range(w - 5, w):
        m = (tt >= k * 70) & (tt < (k + 1) * 70)
        ids = nn[m]
        ls = ((ids >= 0) & (ids < 20)).sum(); rs = ((ids >= 20) & (ids < 40)).sum()
        lm = ((ids >= 40) & (ids < 60)).sum(); rm = ((ids >= 60) & (ids < 80)).sum()
        sides.append("L" if ls > rs else ("R" if rs > ls else "-"))
        expl.append("l" if lm > rm else ("r" if rm > lm else "-"))
    print(f"  {e/1000.0:5.1f} {bm[0]:+.4f}  {bm[1]:+.4f}  {bm[2]:+.4f}  {bm[3]:+.4f}"
          f"   {''.join(sides)}            {''.join(expl)}")
