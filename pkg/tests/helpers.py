from functools import lru_cache

from cocart.fixtures import FIXTURE_NAMES, load_fixture


@lru_cache(maxsize=None)
def bundle(name):
    """Shipped fixture, parsed and validated once per session."""
    return load_fixture(name)


WITH_MAGMAL = tuple(n for n in FIXTURE_NAMES if n != "walking-idempotent")
WITH_SYMMETRY = tuple(n for n in WITH_MAGMAL if n != "pointed-pair")
COCARTESIAN = ("terminal", "join", "double-unit")
NOT_COCARTESIAN = ("meet", "z2", "walking-idempotent-tensor", "constant-colax")
