"""Builders for the shipped fixture bundles.

The YAML files under ``cocart/data`` are generated from these builders;
``python3 -m cocart.fixtures`` rewrites them.  ``load_fixture`` reads the
shipped files, so tests can check that the two agree.
"""

from __future__ import annotations

from importlib import resources
from itertools import product
from pathlib import Path

from .bundle import Bundle, dump_bundle, parse_bundle
from .core import FinCat
from .magmal import IdentityMagma, MagmalStructure, SymmetricStructure

FIXTURE_NAMES = (
    "terminal",
    "join",
    "meet",
    "z2",
    "walking-idempotent",
    "walking-idempotent-tensor",
    "double-unit",
    "constant-colax",
    "pointed-pair",
)


def _one_object(elements, multiply, name) -> FinCat:
    """The one-object category ``*`` of a finite monoid; ``elements[0]`` is the unit."""
    morphisms = [(x, "*", "*") for x in elements]
    table = {(g, f): multiply(g, f) for g in elements for f in elements}
    return FinCat(["*"], morphisms, {"*": elements[0]}, table, name=name)


def _chain(name) -> FinCat:
    """The poset ``0 <= 1`` with morphisms ``id0``, ``id1`` and ``u``."""
    morphisms = [("id0", "0", "0"), ("id1", "1", "1"), ("u", "0", "1")]
    hom = {(d, c): n for n, d, c in morphisms}
    table = {}
    for g, gd, gc in morphisms:
        for f, fd, fc in morphisms:
            if fc == gd:
                table[(g, f)] = hom[(fd, gc)]
    return FinCat(["0", "1"], morphisms, {"0": "id0", "1": "id1"}, table, name=name)


def _indiscrete(objects, name) -> FinCat:
    morphisms = [(f"{a}->{b}", a, b) for a in objects for b in objects]
    table = {
        (f"{b}->{c}", f"{a}->{b}"): f"{a}->{c}" for a in objects for b in objects for c in objects
    }
    return FinCat(objects, morphisms, {a: f"{a}->{a}" for a in objects}, table, name=name)


def _thin_tensor(c: FinCat, on_objects) -> MagmalStructure:
    """Tensor tables on a thin category from an object operation."""
    tobj = {(a, b): on_objects(a, b) for a in c.objects for b in c.objects}
    tmor = {}
    for f in c.morphisms:
        for g in c.morphisms:
            src, tgt = tobj[(f.dom, g.dom)], tobj[(f.cod, g.cod)]
            (h,) = c.hom(src, tgt)
            tmor[(f.name, g.name)] = h
    return tobj, tmor


def _identity_symmetry(c, t) -> SymmetricStructure:
    """Associator and braiding made of identities (valid whenever the tensor is strict and commutative)."""
    alpha = {
        (a, b, d): c.identity(t(t(a, b), d)) for a, b, d in product(c.objects, repeat=3)
    }
    sigma = {(a, b): c.identity(t(a, b)) for a, b in product(c.objects, repeat=2)}
    return SymmetricStructure(alpha, sigma)


def terminal() -> Bundle:
    c = _one_object(["1"], lambda g, f: "1", "terminal")
    m = MagmalStructure(c, {("*", "*"): "*"}, {("1", "1"): "1"}, "*", {"*": "1"}, {"*": "1"})
    s = _identity_symmetry(c, m.tensor)
    g = IdentityMagma({"*": "1"}, {"*": "1"})
    return Bundle(c, m, s, g, name="terminal", notes="the terminal category with its unique structure")


def _poset_bundle(name, op, unit, notes, with_magma) -> Bundle:
    c = _chain(name)
    tobj, tmor = _thin_tensor(c, op)
    ids = {a: c.identity(a) for a in c.objects}
    m = MagmalStructure(c, tobj, tmor, unit, ids, ids)
    s = _identity_symmetry(c, m.tensor)
    g = None
    if with_magma:
        g = IdentityMagma(
            {a: c.hom(unit, a)[0] for a in c.objects}, {a: c.identity(a) for a in c.objects}
        )
    return Bundle(c, m, s, g, name=name, notes=notes)


def join() -> Bundle:
    return _poset_bundle("join", max, "0", "poset 0 <= 1 with join as tensor and unit 0", True)


def meet() -> Bundle:
    return _poset_bundle("meet", min, "1", "poset 0 <= 1 with meet as tensor and unit 1", False)


def _z2_product(g, f):
    return "1" if g == f else "g"


def z2() -> Bundle:
    c = _one_object(["1", "g"], _z2_product, "z2")
    tmor = {(f, g): _z2_product(f, g) for f in ("1", "g") for g in ("1", "g")}
    m = MagmalStructure(c, {("*", "*"): "*"}, tmor, "*", {"*": "1"}, {"*": "1"})
    s = _identity_symmetry(c, m.tensor)
    return Bundle(c, m, s, None, name="z2", notes="the group of order two, tensor is multiplication")


def _idempotent_product(g, f):
    return "1" if g == f == "1" else "e"


def walking_idempotent() -> Bundle:
    c = _one_object(["1", "e"], _idempotent_product, "walking-idempotent")
    return Bundle(c, name="walking-idempotent", notes="one object with a non-identity idempotent e")


def walking_idempotent_tensor() -> Bundle:
    c = _one_object(["1", "e"], _idempotent_product, "walking-idempotent-tensor")
    tmor = {(f, g): _idempotent_product(f, g) for f in ("1", "e") for g in ("1", "e")}
    m = MagmalStructure(c, {("*", "*"): "*"}, tmor, "*", {"*": "1"}, {"*": "1"})
    s = _identity_symmetry(c, m.tensor)
    return Bundle(
        c, m, s, None,
        name="walking-idempotent-tensor",
        notes="walking idempotent with tensor given by composition; the unit is not initial",
    )


def double_unit() -> Bundle:
    c = _indiscrete(["I", "I'"], "double-unit")
    tobj = {(a, b): a for a in c.objects for b in c.objects}
    tmor = {(f.name, g.name): f.name for f in c.morphisms for g in c.morphisms}
    lam = {a: f"{a}->I" for a in c.objects}
    rho = {a: f"{a}->{a}" for a in c.objects}
    m = MagmalStructure(c, tobj, tmor, "I", lam, rho)
    alpha = {(a, b, d): f"{a}->{a}" for a, b, d in product(c.objects, repeat=3)}
    sigma = {(a, b): f"{a}->{b}" for a, b in product(c.objects, repeat=2)}
    g = IdentityMagma({a: f"I->{a}" for a in c.objects}, {a: f"{a}->{a}" for a in c.objects})
    return Bundle(
        c, m, SymmetricStructure(alpha, sigma), g,
        name="double-unit",
        notes="indiscrete category on I and I', tensor is the first projection; I' is a second unit",
    )


def double_unit_alternate():
    """The second unit structure ``(I', lam', rho')`` on the double-unit tensor."""
    objects = ("I", "I'")
    return "I'", {a: f"{a}->I'" for a in objects}, {a: f"{a}->{a}" for a in objects}


def constant_colax() -> Bundle:
    c = _chain("constant-colax")
    tobj, tmor = _thin_tensor(c, lambda a, b: "1")
    unitor = {"0": "u", "1": "id1"}
    m = MagmalStructure(c, tobj, tmor, "0", unitor, unitor)
    s = _identity_symmetry(c, m.tensor)
    return Bundle(
        c, m, s, None,
        name="constant-colax",
        notes="poset 0 <= 1 with the constant tensor 1; the unitor at 0 is u, which is not invertible",
    )


def pointed_pair() -> Bundle:
    c = _indiscrete(["0", "X"], "pointed-pair")
    tobj = {(a, b): a for a in c.objects for b in c.objects}
    tmor = {(f.name, g.name): f.name for f in c.morphisms for g in c.morphisms}
    lam = {a: f"{a}->0" for a in c.objects}
    rho = {a: f"{a}->{a}" for a in c.objects}
    m = MagmalStructure(c, tobj, tmor, "0", lam, rho)
    return Bundle(
        c, m, name="pointed-pair",
        notes="indiscrete category on 0 and X; every object is a zero object and the tensor is a product",
    )


BUILDERS = {
    "terminal": terminal,
    "join": join,
    "meet": meet,
    "z2": z2,
    "walking-idempotent": walking_idempotent,
    "walking-idempotent-tensor": walking_idempotent_tensor,
    "double-unit": double_unit,
    "constant-colax": constant_colax,
    "pointed-pair": pointed_pair,
}


def build_fixture(name: str) -> Bundle:
    return BUILDERS[name]()


def fixture_path(name: str):
    return resources.files("cocart").joinpath("data", f"{name}.yaml")


def load_fixture(name: str) -> Bundle:
    if name not in BUILDERS:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return parse_bundle(fixture_path(name).read_text(encoding="utf-8"))


def write_fixture_files(directory) -> list:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name in FIXTURE_NAMES:
        path = directory / f"{name}.yaml"
        dump_bundle(build_fixture(name), path)
        written.append(path)
    return written


if __name__ == "__main__":
    for path in write_fixture_files(Path(__file__).parent / "data"):
        print(path)
