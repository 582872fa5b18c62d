"""Pick the kernel backend at import time.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` module. Set ``KDEPSET_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType


def _load() -> ModuleType:
    if os.environ.get("KDEPSET_PURE_PYTHON", "") not in ("", "0"):
        return importlib.import_module("kdepset._pykernels")
    try:
        return importlib.import_module("kdepset._ckernels")
    except ImportError:
        return importlib.import_module("kdepset._pykernels")


kernels: ModuleType = _load()
BACKEND: str = kernels.BACKEND


def available_backends() -> dict[str, ModuleType]:
    """All importable kernel modules keyed by backend name."""
    found = {"python": importlib.import_module("kdepset._pykernels")}
    try:
        found["cython"] = importlib.import_module("kdepset._ckernels")
    except ImportError:
        pass
    return found


def use(name: str) -> ModuleType:
    """Switch the active backend (``"python"`` or ``"cython"``) process-wide."""
    global kernels, BACKEND
    kernels = available_backends()[name]
    BACKEND = kernels.BACKEND
    return kernels
