"""A2 arms under the vicinity-loss escape definition, sweeping motor offset.

Escape = robot collects the orbited food OR its distance from the food
exceeds the sensing range (truly leaves the vicinity).  Wobbles that the
driven response recaptures do not count.
"""
import numpy as np
import neuroforage.architecture as arch
from neuroforage.scenarios import preset_orbiting
from neuroforage.simulate import run_batch

arch.DA_BURST_C = -55.0
arch.DA_BURST_D = 4.0

SENSE_RANGE = 30.0
DIST = 15

def escape_time(log, window_ms=70):
    for k in range(len(log.events_t)):
        if log.events_kind[k] == 0:
            return log.events_t[k] / 1000.0
    d = log.win_log[:, DIST]
    for i in range(len(d)):
        if d[i] > SENSE_RANGE:
            return (i + 1) * window_ms / 1000.0
    return None

def arm(name, variant, baseline, mo):
    cfg = preset_orbiting()
    cfg.variant = variant
    cfg.dopamine.baseline = baseline
    cfg.neuron.motor_offset = mo
    logs = run_batch(cfg, n_jobs=10)
    times = [escape_time(lg) for lg in logs]
    esc = [t for t in times if t is not None]
    med = np.median(esc) if esc else float("nan")
    print(f"  {name:8s} escapes {len(esc):2d}/20  median {med:6.2f}s  "
          f"times {[f'{t:.1f}' for t in sorted(esc)[:8]]}")
    return len(esc), med

for mo in [-0.2, 0.0, 0.2, 0.4, 0.6]:
    print(f"mo={mo:+.1f}")
    arm("frozen", "Benchmark", -0.0004, mo)
    arm("learn-", "TaxisInitLearning", -0.0004, mo)
    arm("learn+", "TaxisInitLearning", +0.0004, mo)
