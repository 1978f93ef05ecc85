"""Learning vs learning-disabled foraging over 20 trials of 1000s."""
import numpy as np
from neuroforage.scenarios import preset_food_only
from neuroforage.simulate import run_batch, attraction_correct

cfg = preset_food_only()
logs = run_batch(cfg, 20)
coll = np.array([x.collected for x in logs], dtype=float)
attr = [attraction_correct(x, "food") for x in logs]
wc = [float(np.mean([x.win_log[-1, 2]])) for x in logs]
ws = [float(np.mean([x.win_log[-1, 3]])) for x in logs]

cfg2 = preset_food_only()
cfg2.variant = "LearningDisabled"
logs2 = run_batch(cfg2, 20)
coll2 = np.array([x.collected for x in logs2], dtype=float)

print("learning:  ", " ".join(f"{int(c)}" for c in coll))
print("  w_c/w_s: ", " ".join(f"{a:.2f}/{b:.2f}" for a, b in zip(wc, ws)))
print("  attraction:", sum(attr), "/ 20")
print("disabled:  ", " ".join(f"{int(c)}" for c in coll2))
print(f"means: learning {coll.mean():.1f}  disabled {coll2.mean():.1f}  "
      f"ratio {coll.mean() / coll2.mean():.2f}")
