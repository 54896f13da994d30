"""Finite-category toolkit for deciding when a magmal category is cocartesian."""

from .bundle import Bundle, load_bundle, parse_bundle, serialize_bundle, validate_bundle
from .characterize import Verdict, check_all, check_condition, replay_verdict
from .core import Cospan, FinCat, Functor, NatTrans, ValidationReport, validate_category
from .errors import (
    CocartError,
    CompositionError,
    InvariantViolated,
    LawError,
    MissingStructure,
    NotInvertible,
    ParseError,
    PreconditionFailed,
    ResolveError,
    SizeLimitExceeded,
)
from .fixtures import FIXTURE_NAMES, build_fixture, load_fixture
from .magmal import IdentityMagma, MagmalStructure, SymmetricStructure, validate_magmal

__version__ = "0.1.0"

__all__ = [
    "Bundle", "load_bundle", "parse_bundle", "serialize_bundle", "validate_bundle",
    "Verdict", "check_all", "check_condition", "replay_verdict",
    "Cospan", "FinCat", "Functor", "NatTrans", "ValidationReport", "validate_category",
    "CocartError", "CompositionError", "InvariantViolated", "LawError", "MissingStructure",
    "NotInvertible", "ParseError", "PreconditionFailed", "ResolveError", "SizeLimitExceeded",
    "FIXTURE_NAMES", "build_fixture", "load_fixture",
    "IdentityMagma", "MagmalStructure", "SymmetricStructure", "validate_magmal",
]
