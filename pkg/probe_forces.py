"""Decompose cross/straight weight growth into pulse vs baseline forces.

For each window classify da activity (pulse if da level > 0.01) and
accumulate the observed delta of the block-mean weights separately for
pulse windows and quiet windows.  Also report standing eligibility means.
"""
import numpy as np
import neuroforage.architecture as arch
from neuroforage.scenarios import preset_food_only
from neuroforage.simulate import run_trial

arch.DA_BURST_C = -55.0
arch.DA_BURST_D = 4.0

cfg = preset_food_only()
cfg.duration_s = 300.0

COLL, DA, WC, WS, EC, ES = 0, 1, 2, 3, 8, 9

for trial in range(4):
    log = run_trial(cfg, trial)
    wl = log.win_log
    da = wl[:, DA]
    dwc = np.diff(wl[:, WC])
    dws = np.diff(wl[:, WS])
    pulse = da[1:] > 0.01
    quiet = ~pulse
    ec = wl[:, EC]
    es = wl[:, ES]
    print(f"trial {trial}: collected {wl[-1, COLL]:.0f}  "
          f"final w_c {wl[-1, WC]:.2f} w_s {wl[-1, WS]:.2f}")
    print(f"  pulse windows {pulse.sum():4d}: dw_c {dwc[pulse].sum():+8.3f}  "
          f"dw_s {dws[pulse].sum():+8.3f}")
    print(f"  quiet windows {quiet.sum():4d}: dw_c {dwc[quiet].sum():+8.3f}  "
          f"dw_s {dws[quiet].sum():+8.3f}")
    print(f"  standing elig: e_c mean {ec.mean():+.4f} (p10 {np.percentile(ec,10):+.4f} "
          f"p90 {np.percentile(ec,90):+.4f})  e_s mean {es.mean():+.4f} "
          f"(p10 {np.percentile(es,10):+.4f} p90 {np.percentile(es,90):+.4f})")
    print(f"  elig at pulse windows: e_c {ec[1:][pulse].mean():+.4f}  "
          f"e_s {es[1:][pulse].mean():+.4f}")
