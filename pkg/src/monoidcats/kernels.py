"""Backend selection for the integer kernels.

The compiled ``_ckernels`` module is used when it was built; otherwise, or
when ``MONOIDCATS_PURE=1`` is set, the pure-Python twin is used. Both expose
the same functions with identical results.
"""

import os

from monoidcats import _pykernels

if os.environ.get("MONOIDCATS_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from monoidcats import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

letter_counts = _impl.letter_counts
occ_ranks = _impl.occ_ranks
letter_positions = _impl.letter_positions
canonical_perm = _impl.canonical_perm
compose = _impl.compose
transport = _impl.transport
invert = _impl.invert
is_permutation = _impl.is_permutation
first_violation = _impl.first_violation
hom_maps = _impl.hom_maps
fiber_maps = _impl.fiber_maps


def available_backends():
    """Map of backend name to kernel module, for tests and benchmarks."""
    backends = {"python": _pykernels}
    try:
        from monoidcats import _ckernels
    except ImportError:
        pass
    else:
        backends["cython"] = _ckernels
    return backends
