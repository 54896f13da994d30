"""Hot integer-table kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports; set ``COCART_PURE_PYTHON=1`` to
force the fallback.  ``BACKEND`` names the active choice.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("COCART_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

associativity_violations = _active.associativity_violations
is_associative_operation = _active.is_associative_operation
count_associative_operations = _active.count_associative_operations

__all__ = [
    "BACKEND",
    "associativity_violations",
    "count_associative_operations",
    "compiled_backend",
    "is_associative_operation",
    "python_backend",
]
