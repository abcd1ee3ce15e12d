"""Who escapes a finite chain first?

The walker starts in the middle of N sites with absorbing sites at both
ends.  We accumulate the probability of having been absorbed.  The
classical walker is eventually absorbed with certainty; interference keeps
part of the quantum walkers' amplitude inside for a long time.
"""
from anyonwalk import WalkConfig, evolve
from anyonwalk.observables import classical_rw_reference, exit_probability, hadamard_reference

for N in (12, 28):
    cfg = WalkConfig("ising", t_max=300, boundary="absorbing", sites=N, s0=N // 2)
    curves = {
        "RW": exit_probability(classical_rw_reference(cfg)),
        "QW": exit_probability(hadamard_reference(cfg)),
        "Ising": exit_probability(evolve(cfg)),
    }
    print(f"\nN={N}")
    for t in (25, 50, 100, 200, 300):
        print(f"  t={t:>3}  " + "  ".join(f"{k}={v[t]:.4f}" for k, v in curves.items()))
