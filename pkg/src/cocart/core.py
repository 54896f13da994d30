"""Finite categories as explicit composition tables, plus brute-force oracles.

Every other module treats the oracles here (``is_initial``, ``is_coproduct``,
``is_colimit``, ``natural_transformations_between``) as ground truth.  They
only rely on a small duck-typed category protocol::

    c.objects            sequence of objects, in a fixed order
    c.morphisms          sequence of morphisms, in a fixed order
    c.hom(a, b)          tuple of morphisms a -> b, in a fixed order
    c.dom(f), c.cod(f)
    c.identity(a)
    c.compose(g, f)      g . f

so the concrete finite-set backend can reuse them over a probe universe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod
from types import MappingProxyType
from typing import Any, Hashable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import CompositionError, NotInvertible, SizeLimitExceeded

DEFAULT_LIMIT = 10**7


@dataclass(frozen=True)
class Morphism:
    name: Hashable
    dom: Hashable
    cod: Hashable


@dataclass(frozen=True)
class Violation:
    law: str
    detail: str
    witnesses: tuple = ()

    def __str__(self):
        return f"[{self.law}] {self.detail}"


@dataclass
class ValidationReport:
    """Collected law violations; an empty report means every law holds."""

    subject: str = ""
    violations: list = field(default_factory=list)

    def add(self, law, detail, *witnesses):
        self.violations.append(Violation(law, detail, tuple(witnesses)))

    def extend(self, other):
        self.violations.extend(other.violations)

    @property
    def ok(self):
        return not self.violations

    def laws(self):
        return {v.law for v in self.violations}

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __str__(self):
        if self.ok:
            return f"{self.subject or 'report'}: ok"
        lines = [f"{self.subject or 'report'}: {len(self)} violation(s)"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


class FinCat:
    """A finite category given by object/morphism lists and a composition table.

    ``compose_table`` maps ``(g, f)`` to the name of ``g . f``.  Construction
    never rejects malformed tables; ``validate_category`` reports them.
    """

    def __init__(self, objects, morphisms, identities, compose_table, name=""):
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = tuple(
            m if isinstance(m, Morphism) else Morphism(*m) for m in morphisms
        )
        self.identities = MappingProxyType(dict(identities))
        self.compose_table = MappingProxyType(dict(compose_table))
        self._by_name = {}
        for m in self.morphisms:
            self._by_name.setdefault(m.name, m)
        self._hom = {}
        for m in self.morphisms:
            self._hom.setdefault((m.dom, m.cod), []).append(m.name)
        self._hom = {k: tuple(v) for k, v in self._hom.items()}
        self._object_set = frozenset(self.objects)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FinCat{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def has_object(self, a):
        return a in self._object_set

    def has_morphism(self, f):
        return f in self._by_name

    def morphism(self, f) -> Morphism:
        try:
            return self._by_name[f]
        except KeyError:
            raise CompositionError(f"unknown morphism {f!r}") from None

    def dom(self, f):
        return self.morphism(f).dom

    def cod(self, f):
        return self.morphism(f).cod

    def identity(self, a):
        try:
            return self.identities[a]
        except KeyError:
            raise CompositionError(f"no identity for object {a!r}") from None

    def hom(self, a, b) -> tuple:
        return self._hom.get((a, b), ())

    def compose(self, g, f):
        """``g . f``; a hard error when the pair is not composable."""
        if self.cod(f) != self.dom(g):
            raise CompositionError(f"{g!r} . {f!r} is not composable")
        try:
            return self.compose_table[(g, f)]
        except KeyError:
            raise CompositionError(f"composite {g!r} . {f!r} missing from table") from None

    def endomorphisms(self, a):
        return self.hom(a, a)

    def is_identity(self, f):
        return self.identities.get(self.dom(f)) == f

    def encode(self):
        """Index-encoded composition table for the kernels (``-1`` = undefined)."""
        index = {m.name: i for i, m in enumerate(self.morphisms)}
        n = len(self.morphisms)
        table = np.full((n, n), -1, dtype=np.intc)
        for (g, f), h in self.compose_table.items():
            if g in index and f in index and h in index:
                table[index[g], index[f]] = index[h]
        return index, table


def comp(c, *fs):
    """Right-to-left composite: ``comp(c, h, g, f) == h . g . f``."""
    if not fs:
        raise ValueError("comp needs at least one morphism")
    result = fs[-1]
    for g in reversed(fs[:-1]):
        result = c.compose(g, result)
    return result


def hom_set(c, a, b) -> list:
    """Morphisms ``a -> b`` in declaration order."""
    return list(c.hom(a, b))


# ---------------------------------------------------------------- validation


def validate_category(c: FinCat) -> ValidationReport:
    report = ValidationReport(f"category {c.name}".strip())
    seen = set()
    for a in c.objects:
        if a in seen:
            report.add("duplicate-object", f"object {a!r} declared twice", a)
        seen.add(a)
    names = set()
    for m in c.morphisms:
        if m.name in names:
            report.add("duplicate-morphism", f"morphism {m.name!r} declared twice", m.name)
        names.add(m.name)
        for end in (m.dom, m.cod):
            if not c.has_object(end):
                report.add("typing", f"{m.name!r} has unknown endpoint {end!r}", m.name)

    for a in c.objects:
        i = c.identities.get(a)
        if i is None:
            report.add("identity", f"object {a!r} has no identity", a)
        elif not c.has_morphism(i):
            report.add("identity", f"identity {i!r} of {a!r} is not declared", a, i)
        elif c.dom(i) != a or c.cod(i) != a:
            report.add("identity", f"identity {i!r} of {a!r} is not an endomorphism of it", a, i)
    for a in c.identities:
        if not c.has_object(a):
            report.add("identity", f"identity given for unknown object {a!r}", a)

    for (g, f), h in c.compose_table.items():
        if not (c.has_morphism(g) and c.has_morphism(f)):
            report.add("compose-entry", f"entry ({g!r}, {f!r}) names an unknown morphism", g, f)
            continue
        if c.cod(f) != c.dom(g):
            report.add("non-composable", f"entry for non-composable pair {g!r} . {f!r}", g, f)
            continue
        if not c.has_morphism(h):
            report.add("compose-entry", f"{g!r} . {f!r} = unknown morphism {h!r}", g, f, h)
        elif c.dom(h) != c.dom(f) or c.cod(h) != c.cod(g):
            report.add("composite-typing", f"{g!r} . {f!r} = {h!r} has the wrong type", g, f, h)

    for f in c.morphisms:
        for g in c.morphisms:
            if f.cod == g.dom and (g.name, f.name) not in c.compose_table:
                report.add("totality", f"composite {g.name!r} . {f.name!r} undefined", g.name, f.name)
    if report.laws() - {"composite-typing"}:
        # identity and associativity checks need a total table of known names
        return report

    for m in c.morphisms:
        f = m.name
        if c.compose(f, c.identity(m.dom)) != f:
            report.add("right-identity", f"{f!r} . id_{m.dom} != {f!r}", f)
        if c.compose(c.identity(m.cod), f) != f:
            report.add("left-identity", f"id_{m.cod} . {f!r} != {f!r}", f)

    index, table = c.encode()
    names = [m.name for m in c.morphisms]
    for h, g, f in kernels.associativity_violations(table):
        report.add(
            "associativity",
            f"{names[h]!r} . ({names[g]!r} . {names[f]!r}) != ({names[h]!r} . {names[g]!r}) . {names[f]!r}",
            names[h], names[g], names[f],
        )
    return report


# ---------------------------------------------------------------- constructions


def terminal_category(name="1") -> FinCat:
    return FinCat(["*"], [("id*", "*", "*")], {"*": "id*"}, {("id*", "id*"): "id*"}, name=name)


def discrete_category(objects: Iterable, name="") -> FinCat:
    objects = list(objects)
    morphisms = [(("id", a), a, a) for a in objects]
    identities = {a: ("id", a) for a in objects}
    table = {(("id", a), ("id", a)): ("id", a) for a in objects}
    return FinCat(objects, morphisms, identities, table, name=name)


def product_category(c, d, *more) -> FinCat:
    """Product of finite categories; binary products have pair objects.

    With more than two factors objects and morphisms are flat tuples.
    """
    cats = (c, d) + more
    objects = list(product(*(k.objects for k in cats)))
    morphisms = [
        (tuple(m.name for m in ms), tuple(m.dom for m in ms), tuple(m.cod for m in ms))
        for ms in product(*(k.morphisms for k in cats))
    ]
    identities = {obj: tuple(k.identity(a) for k, a in zip(cats, obj)) for obj in objects}
    table = {}
    for gs in product(*(k.morphisms for k in cats)):
        for fs in product(*(k.morphisms for k in cats)):
            if all(f.cod == g.dom for f, g in zip(fs, gs)):
                key = (tuple(g.name for g in gs), tuple(f.name for f in fs))
                table[key] = tuple(k.compose(g.name, f.name) for k, g, f in zip(cats, gs, fs))
    name = " x ".join(k.name or "?" for k in cats)
    return FinCat(objects, morphisms, identities, table, name=name)


def opposite_category(c: FinCat) -> FinCat:
    morphisms = [(m.name, m.cod, m.dom) for m in c.morphisms]
    table = {(f, g): h for (g, f), h in c.compose_table.items()}
    return FinCat(c.objects, morphisms, c.identities, table, name=f"{c.name}^op")


class Functor:
    """A functor between finite categories given by explicit object/morphism maps."""

    def __init__(self, source, target, on_objects: Mapping, on_morphisms: Mapping, name=""):
        self.source = source
        self.target = target
        self.on_objects = MappingProxyType(dict(on_objects))
        self.on_morphisms = MappingProxyType(dict(on_morphisms))
        self.name = name

    def ob(self, a):
        return self.on_objects[a]

    def __call__(self, f):
        return self.on_morphisms[f]

    def __repr__(self):
        return f"<Functor {self.name or '?'}: {self.source.name or '?'} -> {self.target.name or '?'}>"


def identity_functor(c) -> Functor:
    return Functor(
        c, c, {a: a for a in c.objects}, {m.name: m.name for m in c.morphisms}, name="1"
    )


def constant_functor(c, d, obj) -> Functor:
    """The functor ``c -> d`` constant at ``obj`` (identities everywhere)."""
    i = d.identity(obj)
    return Functor(
        c, d, {a: obj for a in c.objects}, {m.name: i for m in c.morphisms}, name=f"const {obj}"
    )


def compose_functors(g: Functor, f: Functor) -> Functor:
    return Functor(
        f.source,
        g.target,
        {a: g.ob(f.ob(a)) for a in f.source.objects},
        {m.name: g(f(m.name)) for m in f.source.morphisms},
        name=f"{g.name}.{f.name}",
    )


def diagonal_functor(c) -> Functor:
    """``X -> (X, X)`` into ``product_category(c, c)``."""
    target = product_category(c, c)
    return Functor(
        c,
        target,
        {a: (a, a) for a in c.objects},
        {m.name: (m.name, m.name) for m in c.morphisms},
        name="diagonal",
    )


def validate_functor(F: Functor) -> ValidationReport:
    report = ValidationReport(f"functor {F.name}".strip())
    S, T = F.source, F.target
    for a in S.objects:
        if a not in F.on_objects or not T.has_object(F.ob(a)):
            report.add("functor-objects", f"object {a!r} is not sent to an object", a)
    for m in S.morphisms:
        if m.name not in F.on_morphisms or not T.has_morphism(F(m.name)):
            report.add("functor-morphisms", f"morphism {m.name!r} is not sent to a morphism", m.name)
    if not report.ok:
        return report
    for m in S.morphisms:
        fm = F(m.name)
        if T.dom(fm) != F.ob(m.dom) or T.cod(fm) != F.ob(m.cod):
            report.add("functor-typing", f"F({m.name!r}) = {fm!r} has the wrong type", m.name)
    if not report.ok:
        return report
    for a in S.objects:
        if F(S.identity(a)) != T.identity(F.ob(a)):
            report.add("functor-identity", f"F(id_{a}) is not an identity", a)
    for f in S.morphisms:
        for g in S.morphisms:
            if f.cod == g.dom:
                if F(S.compose(g.name, f.name)) != T.compose(F(g.name), F(f.name)):
                    report.add(
                        "functor-composition",
                        f"F({g.name!r} . {f.name!r}) != F({g.name!r}) . F({f.name!r})",
                        g.name, f.name,
                    )
    return report


def is_isomorphism(F: Functor) -> bool:
    """Functor bijective on objects and morphisms (and a valid functor)."""
    if not validate_functor(F).ok:
        return False
    objs = [F.ob(a) for a in F.source.objects]
    mors = [F(m.name) for m in F.source.morphisms]
    return (
        len(set(objs)) == len(objs) == len(F.target.objects)
        and len(set(mors)) == len(mors) == len(F.target.morphisms)
    )


@dataclass
class NatTrans:
    """A family of components ``source(a) -> target(a)`` indexed by objects."""

    source: Functor
    target: Functor
    components: Mapping

    def __getitem__(self, a):
        return self.components[a]


def naturality_violations(alpha: NatTrans, limit: int | None = None) -> list:
    """Morphisms ``f: a -> b`` whose naturality square fails."""
    F, G = alpha.source, alpha.target
    T = F.target
    bad = []
    for m in F.source.morphisms:
        lhs = T.compose(G(m.name), alpha[m.dom])
        rhs = T.compose(alpha[m.cod], F(m.name))
        if lhs != rhs:
            bad.append(m.name)
            if limit is not None and len(bad) >= limit:
                break
    return bad


def is_natural(alpha: NatTrans) -> bool:
    T = alpha.source.target
    for a in alpha.source.source.objects:
        c = alpha[a]
        if not T.has_morphism(c) or T.dom(c) != alpha.source.ob(a) or T.cod(c) != alpha.target.ob(a):
            return False
    return not naturality_violations(alpha, limit=1)


def natural_transformations_between(F: Functor, G: Functor, limit: int = DEFAULT_LIMIT) -> list:
    """Every natural family ``F => G``, in lexicographic order of components.

    Raises ``SizeLimitExceeded`` when the raw candidate space (the product of
    the component hom-sets) exceeds ``limit``.
    """
    S, T = F.source, F.target
    objects = list(S.objects)
    choices = [T.hom(F.ob(a), G.ob(a)) for a in objects]
    space = prod(len(ch) for ch in choices)
    if space > limit:
        raise SizeLimitExceeded("natural transformation search", space, limit)
    position = {a: i for i, a in enumerate(objects)}
    # a square can be checked once both of its endpoints are assigned
    squares = [[] for _ in objects]
    for m in S.morphisms:
        squares[max(position[m.dom], position[m.cod])].append(m)

    results = []
    assignment = {}

    def extend(i):
        if i == len(objects):
            results.append(NatTrans(F, G, dict(assignment)))
            return
        a = objects[i]
        for comp_a in choices[i]:
            assignment[a] = comp_a
            if all(
                T.compose(G(m.name), assignment[m.dom]) == T.compose(assignment[m.cod], F(m.name))
                for m in squares[i]
            ):
                extend(i + 1)
            del assignment[a]

    extend(0)
    return results


# ---------------------------------------------------------------- universal properties


@dataclass(frozen=True)
class Cospan:
    apex: Any
    left: Any
    right: Any


def inverse(c, f):
    """The two-sided inverse of ``f`` found by search, or ``NotInvertible``."""
    a, b = c.dom(f), c.cod(f)
    for g in c.hom(b, a):
        if c.compose(g, f) == c.identity(a) and c.compose(f, g) == c.identity(b):
            return g
    raise NotInvertible(f"{f!r} has no inverse")


def is_invertible(c, f) -> bool:
    try:
        inverse(c, f)
    except NotInvertible:
        return False
    return True


def is_initial(c, i) -> bool:
    return all(len(c.hom(i, x)) == 1 for x in c.objects)


def is_terminal(c, t) -> bool:
    return all(len(c.hom(x, t)) == 1 for x in c.objects)


@dataclass(frozen=True)
class CoproductFailure:
    """A probe pair ``(a, b)`` into ``target`` with the wrong number of mediators."""

    target: Any
    a: Any
    b: Any
    mediators: tuple


def coproduct_failure(c, cospan: Cospan):
    """First probe that breaks the coproduct property, or ``None``."""
    A, B = c.dom(cospan.left), c.dom(cospan.right)
    for x in c.objects:
        candidates = c.hom(cospan.apex, x)
        for a in c.hom(A, x):
            for b in c.hom(B, x):
                mediators = tuple(
                    m for m in candidates
                    if c.compose(m, cospan.left) == a and c.compose(m, cospan.right) == b
                )
                if len(mediators) != 1:
                    return CoproductFailure(x, a, b, mediators)
    return None


def is_coproduct(c, cospan: Cospan) -> bool:
    return coproduct_failure(c, cospan) is None


def is_product(c: FinCat, span: Cospan) -> bool:
    """Dual oracle: ``span`` legs go out of the apex."""
    return is_coproduct(opposite_category(c), span)


def cocones(c, diagram: Functor, x) -> Iterator[dict]:
    """All cocones from ``diagram`` to ``x``, as ``{j: leg}`` dicts."""
    J = diagram.source
    index = list(J.objects)
    for legs in product(*(c.hom(diagram.ob(j), x) for j in index)):
        kappa = dict(zip(index, legs))
        if all(
            c.compose(kappa[m.cod], diagram(m.name)) == kappa[m.dom] for m in J.morphisms
        ):
            yield kappa


def is_colimit(c, diagram: Functor, apex, legs: Mapping) -> bool:
    """Brute-force colimit oracle for a diagram ``J -> c`` with cocone ``legs``."""
    J = diagram.source
    for x in c.objects:
        candidates = c.hom(apex, x)
        for kappa in cocones(c, diagram, x):
            count = sum(
                1 for m in candidates
                if all(c.compose(m, legs[j]) == kappa[j] for j in J.objects)
            )
            if count != 1:
                return False
    return True
