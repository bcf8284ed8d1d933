"""Selects the simplex kernel: compiled extension if importable, else pure Python.

Set CAPAX_PURE_PYTHON=1 to force the pure kernel (used by the benchmark and
by tests that compare the two backends).
"""

from __future__ import annotations

import os

from . import _tableau_py

_BACKENDS = {"pure": _tableau_py.Tableau}

if os.environ.get("CAPAX_PURE_PYTHON", "") != "1":
    try:
        from . import _tableau_c

        _BACKENDS["compiled"] = _tableau_c.Tableau
    except ImportError:
        pass

DEFAULT_BACKEND = "compiled" if "compiled" in _BACKENDS else "pure"


def backend_names() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_tableau_class(name: str | None = None):
    if name is None:
        name = DEFAULT_BACKEND
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown LP backend {name!r}; available: {backend_names()}") from None
