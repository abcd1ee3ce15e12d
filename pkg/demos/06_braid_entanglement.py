"""Entanglement generated by one double braid between two fusion trees.

Two groups of three spin-1/2 anyons start unentangled.  Braiding the third
anyon of one group around the first of the other entangles the groups;
the linear entropy Q of either group measures how much.  Level k=1 is
Abelian and gives Q=0; large k approaches the classical limit like 1/k^2.
"""
from anyonwalk import entropy_sweep
from anyonwalk.entanglement import ASYMPTOTE

print(f"{'k':>4} {'Q':>10} {'leakage':>10} {'k^2 Q':>10}")
for r in entropy_sweep([1, 2, 3, 4, 5, 10, 20, 50, 100, 200, 400]):
    print(f"{r.k:>4} {r.Q:>10.6f} {r.leakage_weight:>10.6f} {r.k2Q:>10.4f}")
print(f"large-k limit of k^2 Q: {ASYMPTOTE:.4f}")
