"""Canonicalization kernels with a compiled core and a pure fallback.

The hot operations of the whole system live here: minimal row forms,
column normalization, the exhaustive row-monomial scan, and the staged
prefix-growing minimizer used for minimality tests and canonical forms.
At import time the compiled Cython extension is selected when present;
otherwise the pure-Python implementation with the same interface is
used.  Set ``PIWGEN_PURE=1`` to force the fallback (useful for
benchmarks and cross-checking).

Entries handled by the compiled kernels must fit in a C int; anything
generated from PIW instances with k ≤ 10⁴ is far below that bound.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("PIWGEN_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND

row_min = _impl.row_min
ord_neg = _impl.ord_neg
minclass_scan = _impl.minclass_scan
is_minimal = _impl.is_minimal
canonical_form = _impl.canonical_form


def available_backends() -> dict[str, object]:
    """Importable kernel implementations keyed by backend name."""
    impls: dict[str, object] = {_pure.BACKEND: _pure}
    try:
        from . import _fast

        impls[_fast.BACKEND] = _fast
    except ImportError:
        pass
    return impls
