"""Specialization and cost-effectiveness analysis on routing logs.

Two tools: pairwise Jensen-Shannon divergence of label-conditioned routing
distributions (how differently experts are used across entities or
properties), and the per-K loss frontier with its elbow (the most
cost-effective expert count). This demo runs them on synthetic routing logs
so it needs no prior training; point the same calls at a sweep directory's
routing.npz files for real runs.
"""

import numpy as np

from massmoe import analysis as ana

rng = np.random.default_rng(0)
K, tokens_per_label = 8, 400

# a specialized router: each entity concentrates on its own pair of experts
routing, entity = [], []
for lab in range(4):
    conc = np.full(K, 0.5)
    conc[2 * lab:2 * lab + 2] = 20.0
    routing.append(rng.dirichlet(conc, tokens_per_label))
    entity.append(np.full(tokens_per_label, lab))
routing, entity = np.vstack(routing), np.concatenate(entity)
prop = rng.integers(0, 4, entity.size)        # properties unrelated to routing

ent_table, prop_table = ana.routing_by_semantics(routing, entity, prop)
_, ent_jsd = ana.pairwise_jsd_summary(ent_table)
_, prop_jsd = ana.pairwise_jsd_summary(prop_table)
print(f"specialized router: mean entity JSD {ent_jsd:.3f}, "
      f"mean property JSD {prop_jsd:.3f}")

# an indifferent router scores near zero on both axes
flat = rng.dirichlet(np.full(K, 5.0), entity.size)
ent_table, _ = ana.routing_by_semantics(flat, entity, prop)
_, flat_jsd = ana.pairwise_jsd_summary(ent_table)
print(f"indifferent router: mean entity JSD {flat_jsd:.3f}")

# loss frontier over expert counts with diminishing returns past the elbow
runs = []
for K in (5, 10, 15, 20, 25):
    base = 2.0 + 1.2 * np.exp(-(K - 5) / 4.0)
    for seed in range(3):
        runs.append({"run_id": f"naive_K{K}_seed{seed}", "K": K,
                     "test_loss": base + rng.normal(0, 0.01)})
frontier, elbow = ana.build_frontier(runs)
print("\nloss frontier:")
for f in frontier:
    marker = "  <- elbow" if f.k == elbow else ""
    print(f"  K={f.k:2d}  best loss {f.best_loss:.4f}{marker}")
