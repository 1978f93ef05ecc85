"""Exploration spike train statistics at several motor offsets."""
import numpy as np
import neuroforage.architecture as arch
from neuroforage.scenarios import preset_food_only
from neuroforage.simulate import run_trial

arch.DA_BURST_C = -55.0
arch.DA_BURST_D = 4.0

for mo in [-0.2, -0.1, 0.0]:
    cfg = preset_food_only()
    cfg.duration_s = 60.0
    cfg.variant = "RandomWalk"
    cfg.neuron.motor_offset = mo
    log = run_trial(cfg, 0, log_spikes=True)
    t = np.asarray(log.spikes_t)
    nid = np.asarray(log.spikes_id)
    # food_only: LM 40-59, RM 60-79
    win = (t // 70).astype(int)
    nwin = int(win.max()) + 1
    cl = np.zeros(nwin); cr = np.zeros(nwin)
    lat_sum = 0.0; lat_n = 0
    lat_hist = np.zeros(7)
    for w in range(nwin):
        m = win == w
        ids = nid[m]; ts = t[m]
        lm = (ids >= 40) & (ids < 60)
        rm = (ids >= 60) & (ids < 80)
        cl[w] = lm.sum(); cr[w] = rm.sum()
        big = lm if cl[w] >= cr[w] else rm
        if big.sum() > 0:
            lat = ts[big] - w * 70
            lat_sum += lat.sum(); lat_n += len(lat)
            for L in lat:
                lat_hist[min(6, int(L // 10))] += 1
    expl = np.maximum(cl, cr)
    quiet = np.minimum(cl, cr)
    print(f"mo={mo:+.1f}: exploring-side count/window mean {expl.mean():.1f} "
          f"p50 {np.median(expl):.0f} p90 {np.percentile(expl, 90):.0f} "
          f"max {expl.max():.0f}  (per neuron {expl.mean()/20:.2f}) | "
          f"quiet-side mean {quiet.mean():.2f} max {quiet.max():.0f}")
    print(f"          latency mean {lat_sum/max(1,lat_n):.1f}ms  "
          f"hist(10ms bins) {lat_hist.astype(int)}")
