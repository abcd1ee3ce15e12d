"""Fusion Hilbert space of a chain of anyons and the braid-group action on it.

Braid words are sequences of signed generator indices: ``+i`` is the
counterclockwise exchange ``b_i`` of strands ``i`` and ``i+1`` (1-based) and
``-i`` its inverse.  Words are applied left to right, i.e. in time order.

Two initial vacua are available:

``plat``
    neighbouring strands ``(1,2), (3,4), ...`` fuse to the vacuum.  An odd
    strand count gets one idle spectator strand appended.
``markov``
    each braiding strand ``i`` is paired with an idle partner ``2n+1-i`` that
    never braids, so ``2n`` anyons in total.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .models import ABELIAN, ISING, AnyonModel, quantum_integer

__all__ = [
    "FusionSpace",
    "QubitFusionSpace",
    "PathFusionSpace",
    "AbelianFusionSpace",
    "make_fusion_space",
    "inverse_word",
    "relabel_cycle_word",
    "time_order",
    "writhe",
    "fusion_paths",
    "fusion_dimension",
    "anyon_count",
]

PLAT = "plat"
MARKOV = "markov"


def inverse_word(word: Sequence[int]) -> list[int]:
    return [-g for g in reversed(word)]


def writhe(word: Iterable[int]) -> int:
    return sum(1 if g > 0 else -1 for g in word)


def relabel_cycle_word(n: int) -> list[int]:
    """Factors ``[b_1, b_2, ..., b_{n-1}]`` of the ring relabelling braid.

    The braid is the operator product ``b_1 b_2 ... b_{n-1}``; it carries the
    strand at position ``n`` to position 1 and shifts the others up by one.
    The factors are listed as written in the product, so the rightmost acts
    first: use :func:`time_order` before handing it to ``apply_word``.
    """
    if n < 2:
        raise ValueError("cycle relabelling needs at least two strands")
    return list(range(1, n))


def time_order(product: Sequence[int]) -> list[int]:
    """Turn an operator product (rightmost factor first in time) into a time-ordered word."""
    return list(product)[::-1]


def fusion_paths(n_anyons: int, k: int) -> np.ndarray:
    """All sequential fusion paths of ``n_anyons`` spin-1/2 anyons with vacuum total.

    Rows are paths ``(j_0, ..., j_n)`` in twice-spin units, in lexicographic
    order of their up/down step bits.
    """
    paths = np.zeros((1, 1), dtype=np.int16)
    for step in range(n_anyons):
        remaining = n_anyons - step - 1
        j = paths[:, -1]
        blocks = []
        for delta in (-1, 1):
            jn = j + delta
            ok = (jn >= 0) & (jn <= k) & (jn <= remaining)
            blocks.append((paths[ok], jn[ok]))
        # interleave so that a down step sorts before an up step
        rows = np.concatenate([b[0] for b in blocks])
        new = np.concatenate([b[1] for b in blocks])
        order = np.lexsort((new, *rows.T[::-1]))
        paths = np.column_stack([rows, new])[order]
    return paths


def _path_keys(paths: np.ndarray) -> np.ndarray:
    # step bits (1 = up) packed big-endian into one integer per path
    n = paths.shape[1] - 1
    if n > 62:
        raise ValueError("path basis limited to 62 anyons")
    up = (np.diff(paths.astype(np.int64), axis=1) > 0).astype(np.int64)
    return up @ (np.int64(1) << np.arange(n - 1, -1, -1, dtype=np.int64))


def anyon_count(n_strands: int, closure: str = PLAT) -> int:
    """Total anyons behind ``n_strands`` braiding strands (partners and padding included)."""
    return 2 * n_strands if closure == MARKOV else n_strands + n_strands % 2


def fusion_dimension(model: AnyonModel, n_strands: int, closure: str = PLAT) -> int:
    """Dimension of the fusion space without building it."""
    if model.kind == ABELIAN:
        return 1
    n = anyon_count(n_strands, closure)
    k = model.level
    counts = np.zeros(k + 1, dtype=object)
    counts[0] = 1
    for _ in range(n):
        nxt = np.zeros_like(counts)
        nxt[1:] += counts[:-1]
        nxt[:-1] += counts[1:]
        counts = nxt
    return int(counts[0])


class FusionSpace:
    """Common interface; see :func:`make_fusion_space`."""

    model: AnyonModel
    n_strands: int
    n_anyons: int
    closure: str
    dim: int

    def _check(self, g: int) -> None:
        if g == 0 or abs(g) >= self.n_strands:
            raise IndexError(
                f"generator {g} out of range for {self.n_strands} braiding strands"
            )

    def vacuum(self) -> np.ndarray:
        raise NotImplementedError

    def apply(self, vecs: np.ndarray, g: int) -> np.ndarray:
        raise NotImplementedError

    def apply_word(self, vecs: np.ndarray, word: Sequence[int]) -> np.ndarray:
        out = vecs
        for g in word:
            out = self.apply(out, g)
        return out

    def generator_matrix(self, g: int) -> np.ndarray:
        """Dense matrix of a signed generator; small spaces only."""
        return self.apply(np.eye(self.dim, dtype=complex), g).T

    def expectation(self, word: Sequence[int], state: np.ndarray | None = None) -> complex:
        """``<state| word |state>``, vacuum by default."""
        v = self.vacuum() if state is None else state
        return complex(np.vdot(v, self.apply_word(v, word)))


class AbelianFusionSpace(FusionSpace):
    """One-dimensional fusion space: braids act as phases."""

    def __init__(self, model: AnyonModel, n_strands: int, closure: str = PLAT):
        self.model = model
        self.n_strands = n_strands
        self.n_anyons = anyon_count(n_strands, closure)
        self.closure = closure
        self.dim = 1
        self._phase = model.exchange_phase

    def vacuum(self) -> np.ndarray:
        return np.ones(1, dtype=complex)

    def apply(self, vecs, g):
        self._check(g)
        return vecs * (self._phase if g > 0 else self._phase.conjugate())


class QubitFusionSpace(FusionSpace):
    """Ising fusion space ``(C^2)^m`` with ``m = n_anyons/2 - 1`` qubits.

    Qubit 1 is the most significant bit of the flat index.  Generators act as
    ``R`` on qubit 1 (b_1), ``B`` on qubit j (b_2j), ``P`` on qubits
    ``(j, j+1)`` (b_2j+1) and ``R`` on qubit m (last generator), applied by
    reshaping, never as a full matrix.
    """

    def __init__(self, model: AnyonModel, n_strands: int, closure: str = PLAT):
        mats = model.local_matrices
        if mats.P is None:
            raise ValueError("qubit fusion space needs a k=2 model")
        self.model = model
        self.n_strands = n_strands
        self.closure = closure
        self.n_anyons = anyon_count(n_strands, closure)
        self.m = self.n_anyons // 2 - 1
        self.dim = 2**self.m
        self._R = np.diag(mats.R).copy()
        self._P = np.diag(mats.P).copy()
        self._B = mats.B.copy()

    def vacuum(self) -> np.ndarray:
        if self.closure == PLAT:
            v = np.zeros(self.dim, dtype=complex)
            v[0] = 1.0
            return v
        # rainbow vacuum from the k=2 path basis: qubit j carries j_{2j}/2
        paths = fusion_paths(self.n_anyons, 2)
        amps = _rainbow_amplitudes(paths, self.n_strands, 2)
        v = np.zeros(self.dim, dtype=complex)
        bits = paths[:, 2 : 2 * self.m + 1 : 2] // 2
        idx = bits @ (1 << np.arange(self.m - 1, -1, -1)) if self.m else np.zeros(len(paths), int)
        np.add.at(v, idx, amps)
        return v

    def _diag(self, vecs, phases, q, width):
        m = self.m
        shape = vecs.shape
        v = vecs.reshape(-1, 2 ** (q - 1), 2**width, 2 ** (m - q - width + 1))
        return (v * phases[None, None, :, None]).reshape(shape)

    def apply(self, vecs, g):
        self._check(g)
        vecs = np.asarray(vecs)
        inv = g < 0
        g = abs(g)
        m = self.m
        last = self.n_anyons - 1
        if m == 0:
            ph = self._R[0]
            return vecs * (ph.conjugate() if inv else ph)
        if g == 1 or g == last:
            q = 1 if g == 1 else m
            ph = self._R.conj() if inv else self._R
            return self._diag(vecs, ph, q, 1)
        if g % 2 == 0:
            q = g // 2
            U = self._B.conj().T if inv else self._B
            shape = vecs.shape
            v = vecs.reshape(-1, 2 ** (q - 1), 2, 2 ** (m - q))
            return np.einsum("ij,abjc->abic", U, v).reshape(shape)
        q = (g - 1) // 2
        ph = self._P.conj() if inv else self._P
        return self._diag(vecs, ph, q, 2)


class PathFusionSpace(FusionSpace):
    """SU(2)_k fusion space in the sequential path basis.

    Each generator is stored as a sparse matrix with at most two entries per
    row (a 1x1 or 2x2 block per path).
    """

    def __init__(self, model: AnyonModel, n_strands: int, closure: str = PLAT):
        self.model = model
        self.k = model.level
        self.n_strands = n_strands
        self.closure = closure
        self.n_anyons = anyon_count(n_strands, closure)
        self.paths = fusion_paths(self.n_anyons, self.k)
        self.dim = len(self.paths)
        self._keys = _path_keys(self.paths)
        self._gens: dict[int, sp.csr_matrix] = {}

    def _generator(self, g: int) -> sp.csr_matrix:
        if g in self._gens:
            return self._gens[g]
        if g < 0:
            M = self._generator(-g).conj().T.tocsr()
            self._gens[g] = M
            return M
        lam, a = self.model.framing
        k, n = self.k, self.n_anyons
        left = self.paths[:, g - 1].astype(int)
        mid = self.paths[:, g].astype(int)
        right = self.paths[:, g + 1].astype(int)
        qi = lambda x: quantum_integer(x, k)
        touch = left == right
        diag = np.full(self.dim, a, dtype=complex)
        diag[touch] += qi(mid[touch] + 1) / qi(left[touch] + 1) / a
        other = 2 * left - mid
        hop = touch & (other >= 0) & (other <= k)
        rows = np.flatnonzero(hop)
        # flipping j_g swaps the step bits at positions g and g+1
        swap = np.int64(1) << np.int64(n - g - 1)
        sign = np.where(mid[rows] > left[rows], 1, -1)  # up-down becomes down-up
        keys = self._keys[rows] - sign * swap
        cols = np.searchsorted(self._keys, keys)
        off = (
            np.sqrt(qi(mid[rows] + 1) * qi(other[rows] + 1)) / qi(left[rows] + 1) / a
        )
        idx = np.arange(self.dim)
        M = sp.csr_matrix(
            (
                lam * np.concatenate([diag, off]),
                (np.concatenate([idx, rows]), np.concatenate([idx, cols])),
            ),
            shape=(self.dim, self.dim),
        )
        self._gens[g] = M
        return M

    def vacuum(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        if self.closure == PLAT:
            target = _path_keys(np.arange(self.n_anyons + 1)[None, :] % 2)
            v[np.searchsorted(self._keys, target[0])] = 1.0
            return v
        return _rainbow_amplitudes(self.paths, self.n_strands, self.k).astype(complex)

    def apply(self, vecs, g):
        self._check(g)
        M = self._generator(g)
        vecs = np.asarray(vecs)
        if vecs.ndim == 1:
            return M @ vecs
        shape = vecs.shape
        flat = vecs.reshape(-1, self.dim)
        return (M @ flat.T).T.reshape(shape)


def _rainbow_amplitudes(paths: np.ndarray, n: int, k: int) -> np.ndarray:
    """Amplitudes of the nested vacuum pairing ``(i, 2n+1-i)`` on ``2n`` anyons."""
    d = float(quantum_integer(2, k))
    mirrored = np.all(paths[:, n + 1 :] == paths[:, n - 1 :: -1][:, : paths.shape[1] - n - 1], axis=1)
    amps = np.sqrt(quantum_integer(paths[:, n].astype(float) + 1, k)) / d ** (n / 2)
    return np.where(mirrored, amps, 0.0)


def make_fusion_space(model: AnyonModel, n_strands: int, closure: str = PLAT) -> FusionSpace:
    """Fusion space for ``n_strands`` braiding strands of ``model``."""
    if closure not in (PLAT, MARKOV):
        raise ValueError(f"closure must be 'plat' or 'markov', got {closure!r}")
    if n_strands < 1:
        raise ValueError("need at least one strand")
    if model.kind == ABELIAN:
        return AbelianFusionSpace(model, n_strands, closure)
    if model.kind == ISING:
        return QubitFusionSpace(model, n_strands, closure)
    return PathFusionSpace(model, n_strands, closure)
