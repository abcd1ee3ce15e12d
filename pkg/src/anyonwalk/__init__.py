"""Exact simulation of discrete-time quantum walks of anyons.

A mobile anyon hops along a chain of stationary anyons and interacts with
them only through braiding.  The package offers three independent routes to
the position distribution (state-vector evolution, a trajectory sum with
link-invariant traces, and a two-step Kraus channel) together with the
observables used to tell ballistic from diffusive spreading, mixing on rings,
exit probabilities and braid-generated entanglement.
"""
import os as _os

_threads = _os.environ.get("ANYONWALK_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        _os.environ.setdefault(_var, _threads)

__version__ = "0.1.0"

from .models import AnyonModel, ising_matrices, quantum_scalars, su2_2_matrices, su2_k_data  # noqa: E402
from .fusion import inverse_word, make_fusion_space, relabel_cycle_word, time_order, writhe  # noqa: E402
from .walk import WalkConfig, evolve, initial_state, position_distribution, step  # noqa: E402
from .links import kauffman_bracket, verify_trace_identity  # noqa: E402
from .pathsum import braid_word_for_path, path_sum_distribution, path_sum_probability, z_count  # noqa: E402
from .channel import W2Channel, apply_channel, binomial_reference, build_w2_kraus  # noqa: E402
from .entanglement import entropy_sweep  # noqa: E402

__all__ = [
    "AnyonModel",
    "ising_matrices",
    "su2_2_matrices",
    "su2_k_data",
    "quantum_scalars",
    "make_fusion_space",
    "inverse_word",
    "relabel_cycle_word",
    "time_order",
    "writhe",
    "WalkConfig",
    "evolve",
    "initial_state",
    "step",
    "position_distribution",
    "kauffman_bracket",
    "verify_trace_identity",
    "z_count",
    "braid_word_for_path",
    "path_sum_probability",
    "path_sum_distribution",
    "W2Channel",
    "build_w2_kraus",
    "apply_channel",
    "binomial_reference",
    "entropy_sweep",
]
