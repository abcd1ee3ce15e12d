"""How fast does an Ising anyon spread compared with a plain Hadamard walker?

Both walkers start at the origin with coin |0>.  The Hadamard walker's
variance grows like t^2; every hop of the anyon braids it with the
stationary anyons it passes, which entangles position with the fusion
space and slows the spreading down.
"""
import numpy as np

from anyonwalk import WalkConfig, evolve
from anyonwalk.observables import classify_scaling, variance

T = 14
print(f"{'t':>3} {'hadamard':>10} {'ising':>10}")
series = {}
for model in ("hadamard", "ising"):
    tr = evolve(WalkConfig(model, t_max=T))
    series[model] = np.array([variance(tr.p[t], tr.sites, 0) for t in range(T + 1)])
for t in range(T + 1):
    print(f"{t:>3} {series['hadamard'][t]:>10.3f} {series['ising'][t]:>10.3f}")

t = np.arange(6, T + 1)
for model, v in series.items():
    fit = classify_scaling(t, v[6:])
    print(f"{model}: log-log exponent {fit.exponent:.2f} over t={t[0]}..{t[-1]} -> {fit.classification}")
print("At these short times the anyon sits between the two regimes; see the README for the long-time picture.")
