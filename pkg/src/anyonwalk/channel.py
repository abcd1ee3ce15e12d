"""The W^2 decoherence model: two walk steps, then fusion and coin are discarded.

Each application starts from a fresh fusion register in the Markov vacuum
(every strand paired with an idle partner) and the coin reset to ``|0>``:

    E(rho) = Tr_{F,C}[ W^2 (rho x |Phi0><Phi0| x |0><0|) W^2^dag ].

Two steps from site ``s`` follow one of four paths

    ====  ===========================  =========  ====  ============
    path  braid word (time order)      amplitude  coin  displacement
    ====  ===========================  =========  ====  ============
    LL    b_{s-1}, b_{s-2}             1/2        0     -2
    LR    b_{s-1}, b_{s-1}             1/2        1     0
    RL    b_s, b_s                     1/2        0     0
    RR    b_s, b_{s+1}                 -1/2       1     +2
    ====  ===========================  =========  ====  ============

so ``E`` maps ``rho(s1, s2)`` to ``rho'(s1+D1, s2+D2)`` with a weight
``G(D1, D2, s2-s1)`` built from Markov traces of two-step braid words.  The
Markov trace is translation invariant, so ``G`` does not depend on the
centre of mass, and for ``|s2-s1| >= 5`` the two words touch disjoint strands
and the trace factorizes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .fusion import MARKOV, inverse_word, make_fusion_space
from .models import AnyonModel

__all__ = [
    "TWO_STEP_PATHS",
    "W2Kernel",
    "w2_kernel",
    "KrausSet",
    "build_w2_kraus",
    "apply_channel",
    "W2Channel",
    "circulant_distribution",
    "binomial_reference",
    "aligned_binomial",
]

SHIFTS = (-2, 0, 2)
# (name, generator offsets relative to s, amplitude, final coin, displacement)
TWO_STEP_PATHS = (
    ("LL", (-1, -2), 0.5, 0, -2),
    ("LR", (-1, -1), 0.5, 1, 0),
    ("RL", (0, 0), 0.5, 0, 0),
    ("RR", (0, 1), -0.5, 1, 2),
)
REACH = 5  # |s2 - s1| from which the two words act on disjoint strands


def _word(s: int, offsets) -> list[int]:
    return [s + o for o in offsets]


@dataclass(frozen=True)
class W2Kernel:
    """Transition weights of the translation-invariant W^2 channel.

    ``near[i, j, delta + REACH - 1]`` holds ``G(SHIFTS[i], SHIFTS[j], delta)``
    for ``|delta| < REACH``; ``far[c, i]`` is the single-path weight used
    when the two words are independent, so that
    ``G(D_i, D_j, delta) = sum_c far[c, i] * conj(far[c, j])`` beyond reach.
    """

    model: str
    near: np.ndarray
    far: np.ndarray

    def weight(self, i: int, j: int, delta: int) -> complex:
        if abs(delta) < REACH:
            return complex(self.near[i, j, delta + REACH - 1])
        return complex(np.sum(self.far[:, i] * self.far[:, j].conj()))

    def toeplitz(self, i: int, j: int, size: int) -> np.ndarray:
        """``M[a, b] = G(D_i, D_j, b - a)`` for a window of ``size`` sites."""
        delta = np.arange(size)[None, :] - np.arange(size)[:, None]
        out = np.full((size, size), np.sum(self.far[:, i] * self.far[:, j].conj()), dtype=complex)
        close = np.abs(delta) < REACH
        out[close] = self.near[i, j, delta[close] + REACH - 1]
        return out


@lru_cache(maxsize=32)
def _kernel_cached(model_str: str) -> W2Kernel:
    model = AnyonModel.parse(model_str)
    near = np.zeros((3, 3, 2 * REACH - 1), dtype=complex)
    far = np.zeros((2, 3), dtype=complex)
    if model.kind == "abelian":
        ph = model.exchange_phase
        for _, _, amp, c, disp in TWO_STEP_PATHS:
            far[c, SHIFTS.index(disp)] += amp * ph**2
        for i in range(3):
            for j in range(3):
                near[i, j, :] = np.sum(far[:, i] * far[:, j].conj())
        return W2Kernel(model_str, near, far)

    # single-path traces: strands s-2 .. s+2 with s = 3
    space = make_fusion_space(model, 5, MARKOV)
    for _, offs, amp, c, disp in TWO_STEP_PATHS:
        far[c, SHIFTS.index(disp)] += amp * space.expectation(_word(3, offs))
    for delta in range(-(REACH - 1), REACH):
        s1 = 3 + max(0, -delta)
        s2 = s1 + delta
        n = max(s1, s2) + 3
        space = make_fusion_space(model, n, MARKOV)
        vac = space.vacuum()
        for _, o1, a1, c1, d1 in TWO_STEP_PATHS:
            v1 = space.apply_word(vac, _word(s1, o1))
            for _, o2, a2, c2, d2 in TWO_STEP_PATHS:
                if c1 != c2:
                    continue
                v2 = space.apply_word(vac, _word(s2, o2))
                near[SHIFTS.index(d1), SHIFTS.index(d2), delta + REACH - 1] += (
                    a1 * np.conj(a2) * np.vdot(v2, v1)
                )
    return W2Kernel(model_str, near, far)


def w2_kernel(model: AnyonModel | str) -> W2Kernel:
    """Kernel of the W^2 channel for ``model`` (cached per model)."""
    return _kernel_cached(str(model if isinstance(model, AnyonModel) else AnyonModel.parse(model)))


@dataclass
class KrausSet:
    """Operators ``E[k]`` mapping ``window`` input sites to ``window + 4`` output sites.

    Input site ``i`` sits at output index ``i + 2``.
    """

    ops: np.ndarray
    window: int
    labels: list

    def completeness_error(self) -> float:
        S = np.einsum("kab,kac->bc", self.ops.conj(), self.ops)
        return float(np.abs(S - np.eye(self.window)).max())


def build_w2_kraus(model: AnyonModel | str, window: int, compress: bool = False) -> KrausSet:
    """Explicit Kraus operators ``E_fc = <f, c| W^2 |Phi0, 0>`` on a finite window.

    ``f`` runs over the Markov-vacuum fusion basis of the ``window + 4``
    strands the walker can touch.  With ``compress`` the set is reduced to
    the minimal one through the Choi matrix.
    """
    if isinstance(model, str):
        model = AnyonModel.parse(model)
    if window < 5:
        raise ValueError("window must have at least 5 sites")
    out = window + 4
    space = make_fusion_space(model, out, MARKOV)
    vac = space.vacuum()
    K = np.zeros((space.dim, 2, out, window), dtype=complex)
    for i in range(window):
        s = i + 3  # strand of input site i (strands are 1-based)
        for _, offs, amp, c, disp in TWO_STEP_PATHS:
            word = [g for g in _word(s, offs)]
            v = space.apply_word(vac, word) if all(1 <= g < out for g in word) else None
            if v is None:
                raise IndexError("two-step word leaves the strand range")
            K[:, c, i + 2 + disp, i] += amp * v
    ops = K.reshape(-1, out, window)
    labels = [(f, c) for f in range(space.dim) for c in range(2)]
    if compress:
        choi = np.einsum("kab,kcd->abcd", ops, ops.conj()).reshape(out * window, out * window)
        w, U = np.linalg.eigh(choi)
        keep = w > 1e-13 * max(w.max(), 1.0)
        ops = (U[:, keep] * np.sqrt(w[keep])).T.reshape(-1, out, window)
        labels = [("choi", r) for r in range(ops.shape[0])]
    else:
        nz = np.abs(ops).reshape(len(ops), -1).max(axis=1) > 0
        ops = ops[nz]
        labels = [l for l, z in zip(labels, nz) if z]
    return KrausSet(ops, window, labels)


def apply_channel(rho: np.ndarray, kraus: KrausSet) -> np.ndarray:
    """``sum_k E_k rho E_k^dag``."""
    rho = np.asarray(rho)
    if rho.shape != (kraus.window, kraus.window):
        raise ValueError(f"rho has shape {rho.shape}, Kraus set expects {(kraus.window,) * 2}")
    return np.einsum("kab,bc,kdc->ad", kraus.ops, rho, kraus.ops.conj())


class W2Channel:
    """Structured application of the W^2 channel on a window that grows with time.

    Each application enlarges the window by two sites on each side, so
    nothing ever leaves the window.
    """

    def __init__(self, model: AnyonModel | str):
        self.kernel = w2_kernel(model)
        self._cache: dict[int, list] = {}

    def _blocks(self, size: int):
        if size not in self._cache:
            k = self.kernel
            self._cache = {
                size: [(i, j, k.toeplitz(i, j, size)) for i in range(3) for j in range(3)]
            }
        return self._cache[size]

    def apply(self, rho: np.ndarray) -> np.ndarray:
        L = rho.shape[0]
        out = np.zeros((L + 4, L + 4), dtype=complex)
        for i, j, M in self._blocks(L):
            a, b = 2 + SHIFTS[i], 2 + SHIFTS[j]
            out[a : a + L, b : b + L] += M * rho
        return out

    def iterate(self, n: int, rho0: np.ndarray | None = None):
        """Yield ``rho`` after ``0..n`` applications, starting from a point mass."""
        rho = np.ones((1, 1), dtype=complex) if rho0 is None else np.asarray(rho0, dtype=complex)
        yield rho
        for _ in range(n):
            rho = self.apply(rho)
            yield rho

    def variance_series(self, n: int) -> np.ndarray:
        """Variance about the start after ``0..n`` applications from a point mass."""
        out = np.zeros(n + 1)
        for t, rho in enumerate(self.iterate(n)):
            p = np.real(np.diag(rho))
            x = np.arange(len(p)) - (len(p) - 1) / 2
            out[t] = p @ x**2
        return out


def circulant_distribution(
    model: AnyonModel | str, n: int, delta_max: int = 32, ring: int | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Position distribution after ``n`` applications in the circulant model.

    The interior channel commutes with translations, so in the momentum basis
    of the centre of mass it reduces to a transfer matrix over the
    separation ``delta = s2 - s1``, truncated at ``|delta| <= delta_max``.
    Returns ``(displacements, p)``.
    """
    k = w2_kernel(model)
    L = ring or 4 * n + 8
    kappa = 2 * np.pi * np.fft.fftfreq(2 * L)  # conjugate to X = s1 + s2
    deltas = np.arange(-delta_max, delta_max + 1)
    nd = len(deltas)
    T = np.zeros((len(kappa), nd, nd), dtype=complex)
    for i, D1 in enumerate(SHIFTS):
        for j, D2 in enumerate(SHIFTS):
            phase = np.exp(-1j * kappa * (D1 + D2))
            for col, dl in enumerate(deltas):
                row = dl + D2 - D1 + delta_max
                if 0 <= row < nd:
                    T[:, row, col] += phase * k.weight(i, j, int(dl))
    vec = np.zeros((len(kappa), nd), dtype=complex)
    vec[:, delta_max] = 1.0
    for _ in range(n):
        vec = np.einsum("kab,kb->ka", T, vec)
    # diagonal: X = 2s, delta = 0
    field = np.fft.ifft(vec[:, delta_max])  # over X mod 2L
    X = np.arange(2 * L)
    X = np.where(X >= L, X - 2 * L, X)
    even = X % 2 == 0
    s = X[even] // 2
    p = field[even].real
    order = np.argsort(s)
    return s[order], p[order]


def binomial_reference(s: int, t: int, s0: int = 0) -> float:
    """``2**-t * C(t, (2t - (s - s0)) / 4)``, zero off its support."""
    num = 2 * t - (s - s0)
    if num % 4:
        return 0.0
    j = num // 4
    if not 0 <= j <= t:
        return 0.0
    return comb(t, j) / 2.0**t


def aligned_binomial(t: int, displacements: np.ndarray) -> np.ndarray:
    """Binomial reference moved onto the channel's lattice.

    The reference lives on steps of 4 over ``[-2t, 2t]``; halving its
    displacements puts it on the channel's lattice after ``t/2`` applications.
    """
    return np.array([binomial_reference(2 * int(x), t) for x in displacements])
