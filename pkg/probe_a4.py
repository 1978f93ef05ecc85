"""Dopamine response transfer: thresholded vs threshold-free release."""
import numpy as np
from neuroforage.scenarios import preset_dopamine_transfer
from neuroforage.simulate import run_batch, trial_record

def arm(label, threshold=None):
    cfg = preset_dopamine_transfer()
    if threshold is not None:
        cfg.dopamine.burst_threshold = threshold
    logs = run_batch(cfg, 20)
    ok = 0
    pairs = []
    for x in logs:
        r = trial_record(x)
        f = r["final_w_foodtouch_da"]
        e = r["final_w_emptytouch_da"]
        pairs.append((f, e))
        if f >= 4.0 * e:
            ok += 1
    print(f"{label}: {ok}/20 with food >= 4x empty")
    print("  ", " ".join(f"{f:.2f}/{e:.2f}" for f, e in pairs))
    return ok

ok_thr = arm("thresholded")
ok_no = arm("no threshold", threshold=0)
print(f"threshold {ok_thr}/20 vs no-threshold {ok_no}/20 "
      f"(need first >= 18, second strictly lower)")
