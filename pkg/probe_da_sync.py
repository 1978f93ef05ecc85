"""Per-collection dopamine release statistics across DA neuron parameters."""
import numpy as np
import neuroforage.architecture as arch
from neuroforage.scenarios import preset_food_only
from neuroforage.simulate import run_trial

PARAMS = [(-50.0, 2.0), (-50.0, 4.0), (-50.0, 6.0), (-50.0, 8.0),
          (-52.0, 2.0), (-52.0, 4.0), (-55.0, 4.0)]

print(" c     d   coll  rel_rate  rel_med  rel_p25  rel_p75  spikes_med  bg_Hz")
for c, d in PARAMS:
    arch.DA_BURST_C = c
    arch.DA_BURST_D = d
    cfg = preset_food_only()
    cfg.duration_s = 200.0
    log = run_trial(cfg, 0, log_spikes=True)
    t = np.asarray(log.spikes_t)
    nid = np.asarray(log.spikes_id)
    da_t = t[(nid >= 100) & (nid < 140)]
    col = log.events_t[log.events_kind == 0]
    rels = []
    tots = []
    for e in col:
        w = da_t[(da_t > e) & (da_t <= e + 100)]
        tots.append(w.size)
        if w.size:
            _, counts = np.unique(w, return_counts=True)
            rels.append(0.0035 * counts[counts > 5].sum())
        else:
            rels.append(0.0)
    rels = np.array(rels)
    # background rate away from collections: mask 200ms after each touch
    m = np.ones(da_t.shape[0], dtype=bool)
    for e in log.events_t:
        m &= ~((da_t > e) & (da_t <= e + 200))
    bg_hz = m.sum() / 40.0 / 200.0
    print(f"{c:5.0f} {d:4.0f}  {len(col):4d}   {(rels > 0).mean():5.2f}   "
          f"{np.median(rels):7.4f} {np.percentile(rels,25):7.4f} "
          f"{np.percentile(rels,75):7.4f}   {np.median(tots):6.0f}     {bg_hz:.2f}")
