"""Sensor-side switch statistics during sensing epochs (w ~ 0 regime)."""
import numpy as np
import neuroforage.architecture as arch
from neuroforage.scenarios import preset_food_only
from neuroforage.simulate import run_trial

arch.DA_BURST_C = -55.0
arch.DA_BURST_D = 4.0

cfg = preset_food_only()
cfg.duration_s = 120.0
cfg.variant = "RandomWalk"          # frozen zero: pure early-regime geometry

switches = 0
stays = 0
runlens = []
sensing_frac = []
for trial in range(4):
    log = run_trial(cfg, trial, log_spikes=True)
    t = np.asarray(log.spikes_t)
    nid = np.asarray(log.spikes_id)
    win = (t // 70).astype(int)
    nwin = int(win.max()) + 1
    side = np.full(nwin, -1)
    for w in range(nwin):
        ids = nid[win == w]
        ls = ((ids >= 0) & (ids < 20)).sum()
        rs = ((ids >= 20) & (ids < 40)).sum()
        if ls + rs >= 3:
            side[w] = 0 if ls > rs else 1
    sensing_frac.append(np.mean(side >= 0))
    run = 0
    for w in range(1, nwin):
        if side[w] >= 0 and side[w - 1] >= 0:
            if side[w] == side[w - 1]:
                stays += 1
                run += 1
            else:
                switches += 1
                runlens.append(run + 1)
                run = 0
total = switches + stays
print(f"sensing windows: {np.mean(sensing_frac):.2%} of all windows")
print(f"consecutive sensing pairs: {total}, switches {switches} "
      f"({switches/total:.1%}), same-side run length mean "
      f"{np.mean(runlens):.1f} windows ({np.mean(runlens)*0.07:.2f}s)")
