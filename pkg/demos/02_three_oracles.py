"""Three independent routes to the same probabilities.

1. Evolve the full state (coin x position x fusion space).
2. Sum over pairs of paths, weighting each pair with the overlap of the
   fusion states the two braid words produce.
3. Replace that overlap with a Kauffman bracket of the closed braid.

Agreement to round-off is the strongest check that braiding, closures and
bookkeeping are right.
"""
from anyonwalk import WalkConfig, evolve, path_sum_distribution, verify_trace_identity
from anyonwalk.models import AnyonModel

t = 4
for model in ("ising", "su2k:3"):
    engine = evolve(WalkConfig(model, t_max=t, closure="markov")).at(t).as_dict()
    fusion = path_sum_distribution(t, model, "markov", "fusion")
    bracket = path_sum_distribution(t, model, "markov", "bracket")
    print(f"\n{model}, t={t}")
    for s in sorted(fusion):
        print(f"  s={s:+d}  engine {engine[s]:.12f}  path sum {fusion[s]:.12f}  bracket {bracket[s]:.12f}")

rep = verify_trace_identity([1, -2, 1, 3, -2], AnyonModel.su2k(4))
print("\nsingle trace check:", rep["fusion"], "vs", rep["bracket"], "pass" if rep["pass"] else "FAIL")
