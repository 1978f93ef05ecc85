"""Time course of block weights and collection rate for a few trials."""
import sys
import numpy as np
from neuroforage.scenarios import preset_food_only
from neuroforage.simulate import run_trial

trials = [int(x) for x in sys.argv[1:]] or [1]
cfg = preset_food_only()
cfg.duration_s = 1000.0

for ti in trials:
    log = run_trial(cfg, ti)
    wl = log.win_log
    n = wl.shape[0]
    step = int(50_000 / 70)
    print(f"trial {ti}: collected {log.collected}")
    print("   t(s)    w_c    w_s   coll  pulses")
    prev_c = 0.0
    for i in range(step - 1, n, step):
        da = wl[max(0, i - step):i, 1]
        pulses = (da > 0.01).sum()
        print(f"  {(i+1)*0.07:6.0f}  {wl[i,2]:5.2f}  {wl[i,3]:5.2f}  "
              f"{wl[i,0]:5.0f}  {pulses:5d}")
