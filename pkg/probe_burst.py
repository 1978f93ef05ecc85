"""Per-collection dopaminergic burst synchrony, early vs late in a trial."""
import numpy as np
from neuroforage.scenarios import preset_food_only
from neuroforage.simulate import run_trial

cfg = preset_food_only()
cfg.duration_s = 1000.0
log = run_trial(cfg, 1, log_spikes=True)

t = np.asarray(log.spikes_t)
nid = np.asarray(log.spikes_id)
da_mask = (nid >= 100) & (nid < 140)
tch_mask = (nid >= 80) & (nid < 100)
da_t = t[da_mask]
tch_t = t[tch_mask]

col = log.events_t[log.events_kind == 0]

def band(lo_s, hi_s, label):
    sel = col[(col >= lo_s * 1000) & (col < hi_s * 1000)]
    peaks = []
    totals = []
    tchs = []
    for e in sel:
        w = da_t[(da_t > e) & (da_t <= e + 120)]
        tt = tch_t[(tch_t > e) & (tch_t <= e + 90)]
        if w.size:
            _, counts = np.unique(w, return_counts=True)
            peaks.append(counts.max())
            totals.append(w.size)
        else:
            peaks.append(0)
            totals.append(0)
        tchs.append(tt.size)
    peaks = np.array(peaks)
    print(f"{label}: {len(sel)} collections, release rate "
          f"{(peaks > 5).mean():.2f}")
    print(f"  same-ms peak: median {np.median(peaks):.0f} "
          f"p25 {np.percentile(peaks,25):.0f} p75 {np.percentile(peaks,75):.0f}")
    print(f"  da spikes/collection: median {np.median(totals):.0f}  "
          f"touch spikes: median {np.median(tchs):.0f} "
          f"p25 {np.percentile(tchs,25):.0f} p75 {np.percentile(tchs,75):.0f}")

band(100, 350, "early (100-350s)")
band(550, 700, "mid   (550-700s)")
band(820, 1000, "late  (820-1000s)")

# context: overall DA rate and inhibitory rate per band
inh_t = t[(nid >= 140) & (nid < 160)]
mot_t = t[(nid >= 40) & (nid < 80)]
for lo, hi, label in ((100, 350, "early"), (550, 700, "mid"), (820, 1000, "late")):
    n_da = ((da_t >= lo*1000) & (da_t < hi*1000)).sum()
    n_in = ((inh_t >= lo*1000) & (inh_t < hi*1000)).sum()
    n_mo = ((mot_t >= lo*1000) & (mot_t < hi*1000)).sum()
    dur = hi - lo
    print(f"{label}: da {n_da/40/dur:.2f} Hz  inhib {n_in/20/dur:.2f} Hz  "
          f"motor {n_mo/40/dur:.2f} Hz")
