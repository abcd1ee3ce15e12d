"""Trajectory-sum oracle for ``p(s, t)``.

A path is a bit vector ``a`` (0 = left, 1 = right).  Starting from coin
``|0>`` the Hadamard coin gives it amplitude ``2**(-t/2) * (-1)**z(a)`` with
``z`` the number of adjacent right-right pairs, and the braids it performs
form the word ``B_a``.  Two paths interfere only if they end on the same site
with the same final coin, so

    p(s, t) = 2**-t * sum (-1)**(z(a) + z(a')) <Phi0| B_a'^dag B_a |Phi0>.

The trace can be taken in the fusion space or read off the Kauffman bracket
of the closed braid.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Sequence

import numpy as np

from .fusion import MARKOV, PLAT, inverse_word, make_fusion_space
from .links import kauffman_bracket
from .models import AnyonModel

__all__ = [
    "z_count",
    "braid_word_for_path",
    "path_sum_probability",
    "path_sum_distribution",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 8


def z_count(a: Sequence[int]) -> int:
    """Number of adjacent right-right pairs ``sum a_j a_{j+1}``."""
    a = np.asarray(a, dtype=int)
    return int(np.sum(a[:-1] * a[1:])) if a.size > 1 else 0


def braid_word_for_path(a: Sequence[int], s0: int) -> list[int]:
    """Time-ordered braid word of a path starting on strand ``s0``.

    A step from strand ``s`` crosses between ``s`` and ``s+1`` when moving
    right and between ``s-1`` and ``s`` when moving left, so step ``j`` uses
    generator ``s_{j-1} + a_j - 1``.
    """
    word, s = [], int(s0)
    for aj in a:
        g = s + int(aj) - 1
        if g < 1:
            raise IndexError(f"path leaves the strand range at generator {g}")
        word.append(g)
        s += 1 if aj else -1
    return word


def _paths_by_end(t: int) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    groups = defaultdict(list)
    for a in itertools.product((0, 1), repeat=t):
        groups[2 * sum(a) - t, a[-1]].append(a)
    return groups


def _bracket_value(word, model: AnyonModel, closure: str, n_strands: int) -> complex:
    lam, amp = model.framing
    d = model.scalars.d
    w = sum(1 if g > 0 else -1 for g in word)
    if closure == MARKOV:
        # strands the word never touches close into separate loops that cancel
        # against the normalization, so only the touched range is needed
        lo = min((abs(g) for g in word), default=1)
        hi = max((abs(g) for g in word), default=1)
        local = [g - (lo - 1) if g > 0 else g + (lo - 1) for g in word]
        n = hi - lo + 2
        return lam**w * kauffman_bracket(local, n, amp, MARKOV) / d ** (n - 1)
    n = n_strands + n_strands % 2
    return lam**w * kauffman_bracket(word, n_strands, amp, PLAT) / d ** (n // 2 - 1)


def path_sum_distribution(
    t: int,
    model: AnyonModel | str,
    closure: str = MARKOV,
    trace: str = "fusion",
    cap: int = DEFAULT_CAP,
) -> dict[int, float]:
    """``{s - s0: p}`` after ``t`` steps from coin ``|0>`` on the infinite line.

    Strands are laid out as in the walk engine's infinite window, so the
    result is directly comparable with it.

    Parameters
    ----------
    trace : {"fusion", "bracket"}
        Evaluate ``<Phi0|B_a'^dag B_a|Phi0>`` in the fusion space or as the
        Kauffman bracket of the closed word.
    """
    if isinstance(model, str):
        model = AnyonModel.parse(model)
    if t > cap:
        raise ValueError(f"t={t} exceeds the path-sum cap of {cap}")
    if t < 1:
        return {0: 1.0}
    n_strands = 2 * t + 1
    s0 = t + 1
    out = {}
    if trace == "fusion":
        space = make_fusion_space(model, n_strands, closure)
        vac = space.vacuum()
    elif trace == "bracket":
        if model.is_abelian and model.kind != "su2k":
            raise ValueError("bracket traces need a non-Abelian model")
    else:
        raise ValueError(f"unknown trace method {trace!r}")
    for (disp, _), paths in sorted(_paths_by_end(t).items()):
        signs = np.array([(-1) ** z_count(a) for a in paths], dtype=float)
        words = [braid_word_for_path(a, s0) for a in paths]
        if trace == "fusion":
            V = np.array([space.apply_word(vac, w) for w in words])
            gram = V.conj() @ V.T  # gram[a', a] = <B_a' Phi|B_a Phi>
        else:
            m = len(words)
            gram = np.empty((m, m), dtype=complex)
            for i, j in itertools.product(range(m), repeat=2):
                gram[i, j] = _bracket_value(words[j] + inverse_word(words[i]), model, closure, n_strands)
        val = signs @ gram @ signs / 2**t
        out[disp] = out.get(disp, 0.0) + complex(val)
    res = {}
    for disp, v in out.items():
        if abs(v.imag) > 1e-9:
            raise ArithmeticError(f"complex probability {v} at displacement {disp}")
        res[disp] = float(v.real)
    return res


def path_sum_probability(
    s: int,
    t: int,
    model: AnyonModel | str,
    closure: str = MARKOV,
    s0: int = 0,
    trace: str = "fusion",
    cap: int = DEFAULT_CAP,
) -> float:
    """``p(s, t)`` from the trajectory sum; zero off the reachable lattice."""
    return path_sum_distribution(t, model, closure, trace, cap).get(s - s0, 0.0)
