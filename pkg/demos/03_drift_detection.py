"""Change detection and the semantic drift test on gradient-norm streams.

An expert is a candidate for duplication when two independent signals agree:
the windowed cumulative z-score of its gradient norms flags a significant
upward shift (small right-tail p-value), and its gradient has become nearly
orthogonal to its weight matrix (|cos| below delta), meaning the updates no
longer refine the expert's current function.
"""

import numpy as np

from massmoe.expansion import CpdMonitor, alignment_test, decompose_gradient

rng = np.random.default_rng(0)
mon = CpdMonitor(window=50, warmup=100, alpha=0.01)

# stationary stream: p-values hover around 0.5, no alarms
stream = np.abs(rng.normal(5.0, 1.0, 400))
ps = [mon.observe_gradient(0, g) for g in stream]
quiet = [p for p in ps if p is not None]
print(f"stationary stream: {len(quiet)} p-values, "
      f"min {min(quiet):.3f}, alarms at alpha=0.01: {sum(p <= 0.01 for p in quiet)}")

# inject a +5 sigma mean shift and watch the p-value collapse
mon.reset()
stream = np.abs(rng.normal(5.0, 1.0, 400))
stream[300:] += 5.0
first_alarm = None
for t, g in enumerate(stream):
    p = mon.observe_gradient(0, g)
    if p is not None and p <= 0.01 and first_alarm is None:
        first_alarm = t
print(f"shift injected at step 300, first alarm at step {first_alarm}")

# the alignment test separates "still learning" from "drifting"
w = rng.normal(0, 1, (8, 8))
parallel_grad = 0.5 * w + 1e-5 * rng.normal(0, 1, (8, 8))
orth = rng.normal(0, 1, (8, 8))
orth -= decompose_gradient(orth, w)[0]          # remove the parallel part
print(f"\nparallel gradient drifting?   {alignment_test(parallel_grad, w)}")
print(f"orthogonal gradient drifting? {alignment_test(orth, w)}")

# on a trigger, the parent keeps only the weight-parallel component and the
# clone takes the full gradient
aligned, full = decompose_gradient(orth + 0.3 * w, w)
residual = full - aligned
print(f"\ndecomposition: |aligned|={np.linalg.norm(aligned):.3f} "
      f"|residual|={np.linalg.norm(residual):.3f} "
      f"<residual,W>={float(residual.ravel() @ w.ravel()):.2e}")
