"""Kernel selection: compiled reduction core with pure-Python fallback.

The Cython extension ``_reduce_cy`` implements the same API as
``_reduce_py``.  The compiled kernel is preferred when available; set
``BINPART_KERNEL=python`` (or ``compiled``) to force a choice, and
:func:`use` switches at runtime (used by the benchmark and the
equivalence tests).
"""

import os

from . import _reduce_py

try:
    from . import _reduce_cy
except ImportError:
    _reduce_cy = None

_IMPLS = {"python": _reduce_py}
if _reduce_cy is not None:
    _IMPLS["compiled"] = _reduce_cy

_active = None

exp_key = None
divides = None
exp_lcm = None
normalize = None
raw_from_pairs = None
normal_form = None
spoly = None
KERNEL_NAME = None


def use(name: str):
    """Activate a kernel implementation by name."""
    global _active, exp_key, divides, exp_lcm, normalize
    global raw_from_pairs, normal_form, spoly, KERNEL_NAME
    impl = _IMPLS.get(name)
    if impl is None:
        raise ValueError(f"kernel {name!r} not available (have {sorted(_IMPLS)})")
    _active = impl
    exp_key = impl.exp_key
    divides = impl.divides
    exp_lcm = impl.exp_lcm
    normalize = impl.normalize
    raw_from_pairs = impl.raw_from_pairs
    normal_form = impl.normal_form
    spoly = impl.spoly
    KERNEL_NAME = impl.KERNEL_NAME
    return impl


def available() -> tuple[str, ...]:
    return tuple(sorted(_IMPLS))


_default = os.environ.get("BINPART_KERNEL", "")
if _default not in _IMPLS:
    _default = "compiled" if "compiled" in _IMPLS else "python"
use(_default)
