"""Train a small adaptive run end to end and watch the expert pool evolve.

The first 10% of steps form the expansion phase: after every backward pass
the engine checks each expert for a gradient-norm change point plus semantic
drift, duplicates flagged experts with the decomposed update, and applies the
masked-loss stopping rule to the previous addition. The rest of the run
trains the frozen pool. Takes about a minute on one core.
"""

import numpy as np

from massmoe import hmm_gen, model, trainer
from massmoe.expansion import ExpansionConfig

spec = hmm_gen.WorldSpec(num_entities=10, num_properties=10, vocab_size=64,
                         num_concepts=5)
ds = hmm_gen.generate_dataset(spec, hmm_gen.sample_concepts(spec, 0),
                              n=3000, t_prime=10, seed=0)

mc = model.ModelConfig(d_model=64, n_heads=4, vocab_size=64, max_seq_len=64,
                       k_init=5, k_max=10, p=0.7, seed=0)
tc = trainer.TrainConfig(total_steps=3000, batch_size=8, learning_rate=1e-3,
                         mode="mass", seed=0, eval_every=600,
                         expansion=ExpansionConfig(window=50, warmup=100))
tr = trainer.Trainer(model.ModelState(mc), ds, tc)
print(f"expansion phase: steps 1..{tc.phase_end_step} of {tc.total_steps}")

for _ in range(tc.total_steps):
    rec = tr.step_once()
    if "expansion" in rec:
        ev = rec["expansion"]
        print(f"  step {ev['step']}: expert {ev['parent']} duplicated -> "
              f"{ev['new']} (p={ev['p_value']:.2e}, cos={ev['cosine']:+.5f})")
    if "eval" in rec:
        e = rec["eval"]
        print(f"step {rec['step']:4d}  test loss {e['test_loss']:.4f}  "
              f"K={rec['K']}  mean k*={e['mean_k_star']:.2f}")

for chk in tr.ledger.nll_checks:
    print(f"masked-loss check at step {chk.step}: expert {chk.expert_id} "
          f"dL={chk.delta_l:+.4f} -> {'removed' if chk.removed else 'retained'} "
          f"(patience {chk.patience_after})")

print(f"\nfinal pool size {tr.state.pool.size} "
      f"(started at {mc.k_init}, cap {mc.k_max}); "
      f"expansion stopped early: {tr.ledger.stopped}")
print(f"untrained baseline would be ln(64) = {np.log(64):.3f}")
