"""Backend switch for the hot kernels.

Numba is used when importable unless ``SOMBOR_DISABLE_NUMBA`` is set to a
truthy value, in which case the vectorised numpy kernels run instead.
"""

from __future__ import annotations

import os

DISABLE_ENV = "SOMBOR_DISABLE_NUMBA"
THREADS_ENV = "SOMBOR_THREADS"

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


USE_NUMBA = HAVE_NUMBA and not _env_flag(DISABLE_ENV)


def njit(func):
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True, nogil=True)(func)


def default_backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1
