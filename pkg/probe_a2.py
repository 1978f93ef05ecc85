"""Orbit-escape arms: frozen taxis, learning with negative / positive baseline."""
import numpy as np
from neuroforage.scenarios import preset_orbiting
from neuroforage.simulate import run_batch, escape_time

def arm(label, variant, baseline=None):
    cfg = preset_orbiting()
    cfg.variant = variant
    if baseline is not None:
        cfg.dopamine.baseline = baseline
    logs = run_batch(cfg, 20)
    times = [escape_time(x) for x in logs]
    esc = [t for t in times if t is not None]
    med = float(np.median(esc)) if esc else float("nan")
    print(f"{label:26s} escapes {len(esc):2d}/20  median {med:6.2f}s  "
          f"times {['%.1f' % t if t is not None else '-' for t in times]}")

arm("frozen taxis", "Benchmark")
arm("learning, baseline -4e-4", "TaxisInitLearning")
arm("learning, baseline +4e-4", "TaxisInitLearning", baseline=+0.0004)
