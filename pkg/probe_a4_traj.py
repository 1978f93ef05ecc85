"""Container-touch dopamine weight growth in passing vs failing trials."""
import sys
import numpy as np
from neuroforage.scenarios import preset_dopamine_transfer
from neuroforage.simulate import run_trial

cfg = preset_dopamine_transfer()
for ti in [int(x) for x in sys.argv[1:]] or [14, 10, 7, 2]:
    log = run_trial(cfg, ti)
    wl = log.win_log
    n = wl.shape[0]
    step = int(300_000 / 70)
    cells = []
    for i in range(step - 1, n, step):
        cells.append(f"{wl[i,6]:.2f}/{wl[i,7]:.2f}")
    print(f"trial {ti:2d} collected {log.collected:4d}: " + "  ".join(cells))
