"""Poison-switch reversal: learning robot vs random-walk baseline."""
import numpy as np
from neuroforage.scenarios import preset_food_poison
from neuroforage.simulate import run_batch

cfg = preset_food_poison()
logs = run_batch(cfg, 20)

switch_w = int(1000_000 / 70)
post_rates = []
drops = []
for x in logs:
    kinds = x.events_kind
    t = x.events_t
    n_poison_post = int(((kinds == 1) & (t >= 1_000_000)).sum())
    post_rates.append(n_poison_post)
    wl = x.win_log
    w0 = wl[switch_w - 1, 2]
    w200 = wl[min(switch_w + int(200_000 / 70), wl.shape[0] - 1), 2]
    drops.append(1.0 - w200 / w0 if w0 > 0 else float("nan"))

cfg2 = preset_food_poison()
cfg2.variant = "RandomWalk"
logs2 = run_batch(cfg2, 20)
base_rates = [int(((x.events_kind == 1) & (x.events_t >= 1_000_000)).sum())
              for x in logs2]

post = np.array(post_rates, dtype=float)
base = np.array(base_rates, dtype=float)
print("learning poison (2nd 1000s):", post_rates)
print("randwalk poison (2nd 1000s):", base_rates)
print(f"means: learning {post.mean():.1f} baseline {base.mean():.1f} "
      f"ratio {post.mean() / base.mean():.2f}  (need <= 1.5)")
print("cross-weight drop within 200s of switch:",
      " ".join(f"{d:.2f}" for d in drops))
print(f"min drop {np.nanmin(drops):.2f}  (need >= 0.50 each? criterion says "
      f"mean cross weight drops >= 50%)")
print(f"mean drop {np.nanmean(drops):.2f}")
