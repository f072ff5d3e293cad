"""Kernel backend selection.

The compiled extension (lensgrid._ext, Cython) is preferred when built; the
pure-Python twin (lensgrid._kernels_py) is the fallback, so a plain source
checkout works without a compiler.  benchmarks/bench_kernels.py compares the
two; tests assert their outputs match.
"""

from __future__ import annotations

from types import ModuleType

from . import _kernels_py

try:
    from . import _ext as _impl  # type: ignore[attr-defined]
except ImportError:
    _impl = _kernels_py

BACKEND: str = _impl.BACKEND

min_translation = _impl.min_translation
bracket_counts = _impl.bracket_counts


def available_backends() -> tuple[str, ...]:
    return ("python",) if _impl is _kernels_py else ("cython", "python")


def get_backend(name: str) -> ModuleType:
    if name == "python":
        return _kernels_py
    if name == "cython":
        if _impl is _kernels_py:
            raise RuntimeError("compiled backend not built")
        return _impl
    raise ValueError(f"unknown backend {name!r}")
