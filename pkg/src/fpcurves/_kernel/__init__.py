"""Term-order kernel backend selection.

The hot inner loops (term comparisons, sorted merges, normal forms) have a
compiled implementation in ``_core`` and a pure-Python twin in ``_pure`` with
identical semantics.  The compiled one is used when importable; set
``FPCURVES_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("FPCURVES_PURE") == "1":
    from . import _pure as impl

    _BACKEND = "pure"
else:
    try:
        from . import _core as impl  # type: ignore[attr-defined]

        _BACKEND = "compiled"
    except ImportError:
        from . import _pure as impl

        _BACKEND = "pure"

KRing = impl.KRing
KReducer = impl.KReducer


def backend_name():
    return _BACKEND


def pure_kring(*args, **kwargs):
    """Always-pure ring, used by cross-backend consistency tests."""
    from . import _pure

    return _pure.KRing(*args, **kwargs)
