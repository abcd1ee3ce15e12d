"""Forgetting the fusion space after every two steps gives a diffusive walk.

The W^2 channel runs two walk steps and then throws away the coin and the
fusion register, starting the next round from a fresh vacuum.  The variance
then grows linearly for every level k; for Ising it is exactly 2n after n
rounds, and the distribution is a binomial.
"""
import numpy as np

from anyonwalk import W2Channel
from anyonwalk.channel import aligned_binomial, circulant_distribution
from anyonwalk.observables import classify_scaling, total_variation

n = 120
for model in ("ising", "su2k:3", "su2k:4", "su2k:5"):
    v = W2Channel(model).variance_series(n)
    fit = classify_scaling(np.arange(30, n + 1), v[30:])
    print(f"{model:>7}: variance after {n} rounds {v[-1]:8.2f}, exponent {fit.exponent:.3f} ({fit.classification})")

for t in (20, 100):
    s, p = circulant_distribution("ising", t // 2)
    print(f"Ising after {t} walk steps vs binomial: TV = {total_variation(p, aligned_binomial(t, s)):.1e}")
