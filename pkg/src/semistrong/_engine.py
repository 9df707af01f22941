"""Selection between the compiled kernels and the pure-Python fallback.

The compiled extension is optional; when it is missing (or the
SEMISTRONG_PURE_PYTHON environment variable is set) every entry point runs
the pure-Python implementation.  Both implementations are exercised against
each other in the test suite and must agree bit for bit.
"""

from __future__ import annotations

import os

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    _kernels = None

ENGINES = ("auto", "python", "native")
_FORCE_PYTHON_ENV = "SEMISTRONG_PURE_PYTHON"


def native_available() -> bool:
    return _kernels is not None


def kernels():
    if _kernels is None:
        raise RuntimeError("compiled kernels are not available in this build")
    return _kernels


def resolve_engine(engine: str, native_fits: bool) -> str:
    """Map an engine request to "python" or "native"."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    if engine == "native":
        if not native_available():
            raise RuntimeError("compiled kernels requested but not available")
        return "native"
    if engine == "python":
        return "python"
    if os.environ.get(_FORCE_PYTHON_ENV):
        return "python"
    return "native" if (native_available() and native_fits) else "python"
