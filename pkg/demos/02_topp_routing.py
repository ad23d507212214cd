"""Routing-mass (top-p) selection versus fixed top-k.

Top-p activates the minimal set of highest-scoring experts whose cumulative
routing mass reaches p, so the number of active experts adapts per token:
confident tokens use one expert, ambiguous ones spread over several. The
selected experts are mixed with their raw scores; nothing is renormalized.
"""

import numpy as np

from massmoe import moe
from massmoe.numerics import Tensor

rng = np.random.default_rng(0)
pool = moe.MoePool(d=16, k_init=6, k_max=8, rng=rng)

print("hand-picked score vectors, p = 0.7:")
for scores in ([0.90, 0.04, 0.02, 0.02, 0.01, 0.01],
               [0.40, 0.35, 0.10, 0.08, 0.04, 0.03],
               [0.20, 0.18, 0.17, 0.16, 0.15, 0.14]):
    sel, k_star = moe.topp_select(np.array(scores), 0.7)
    print(f"  scores={scores} -> selected {sel} (k*={k_star})")

# against the same scores, top-k always pays for k experts
sel, _ = moe.topk_select(np.array([0.90, 0.04, 0.02, 0.02, 0.01, 0.01]), 3)
print(f"\nfixed top-3 on the confident vector still activates {sel}")

# per-token adaptivity on random representations through a real gate
x = Tensor(rng.normal(0, 1.0, (200, 16)))
_, decisions = moe.forward(x, pool, p=0.7)
k_stars = np.array([d.k_star for d in decisions])
print(f"\n200 random tokens through a random pool (p=0.7):")
print(f"  k* histogram: {np.bincount(k_stars, minlength=7)[1:]}")
print(f"  mean active experts per token: {k_stars.mean():.2f} of {pool.size}")

# raising p monotonically grows each token's selected set
for p in (0.3, 0.5, 0.7, 0.9):
    _, decisions = moe.forward(x, pool, p=p)
    print(f"  p={p}: mean k* = {np.mean([d.k_star for d in decisions]):.2f}")
