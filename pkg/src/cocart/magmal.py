"""Magmal, unital and symmetric structure on a finite category; unital magmas.

A magmal structure is anything offering ``base``, ``unit``, ``tensor(a, b)``,
``tensor_mor(f, g)``, ``lam(a)`` and ``rho(a)``; ``MagmalStructure`` is the
table-backed version.  Here ``lam(a): a -> I (x) a`` and ``rho(a): a -> a (x) I``
point *into* the tensor, so colax (non-invertible) unitors are representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from types import MappingProxyType
from typing import Mapping

from .core import (
    DEFAULT_LIMIT,
    Functor,
    NatTrans,
    ValidationReport,
    comp,
    inverse,
    is_invertible,
    naturality_violations,
    product_category,
    validate_functor,
)
from .errors import CompositionError, NotInvertible, SizeLimitExceeded


class MagmalStructure:
    """Tensor tables, unit object and unitor components over a ``FinCat``."""

    def __init__(self, base, tensor_objects, tensor_morphisms, unit, lam, rho, name=""):
        self.base = base
        self.tensor_objects = MappingProxyType(dict(tensor_objects))
        self.tensor_morphisms = MappingProxyType(dict(tensor_morphisms))
        self.unit = unit
        self.lambdas = MappingProxyType(dict(lam))
        self.rhos = MappingProxyType(dict(rho))
        self.name = name or base.name

    def __repr__(self):
        return f"<MagmalStructure on {self.base.name or '?'} unit={self.unit!r}>"

    def tensor(self, a, b):
        return self.tensor_objects[(a, b)]

    def tensor_mor(self, f, g):
        return self.tensor_morphisms[(f, g)]

    def lam(self, a):
        return self.lambdas[a]

    def rho(self, a):
        return self.rhos[a]

    def with_unit(self, unit, lam, rho):
        """Same tensor, different unit data."""
        return MagmalStructure(
            self.base, self.tensor_objects, self.tensor_morphisms, unit, lam, rho, self.name
        )


@dataclass(frozen=True)
class SymmetricStructure:
    """Associator ``alpha[(a, b, c)]: (a(x)b)(x)c -> a(x)(b(x)c)`` and braiding ``sigma[(a, b)]``."""

    alpha: Mapping
    sigma: Mapping


@dataclass(frozen=True)
class UnitalMagma:
    carrier: object
    eta: object
    mu: object


@dataclass(frozen=True)
class IdentityMagma:
    """Per-object unit and multiplication components, ``eta[a]: I -> a``, ``mu[a]: a(x)a -> a``."""

    eta: Mapping
    mu: Mapping

    def at(self, a) -> UnitalMagma:
        return UnitalMagma(a, self.eta[a], self.mu[a])


# ---------------------------------------------------------------- functors


def tensor_functor(m: MagmalStructure) -> Functor:
    """The tensor as a functor out of ``product_category(base, base)``."""
    c = m.base
    source = product_category(c, c)
    return Functor(
        source,
        c,
        {(a, b): m.tensor(a, b) for a, b in source.objects},
        {(f, g): m.tensor_mor(f, g) for f, g in (x.name for x in source.morphisms)},
        name="tensor",
    )


def tensor_functors(f: Functor, g: Functor, m: MagmalStructure) -> Functor:
    """Pointwise tensor ``a |-> f(a) (x) g(a)`` of two endofunctors of the base."""
    c = m.base
    return Functor(
        c,
        c,
        {a: m.tensor(f.ob(a), g.ob(a)) for a in c.objects},
        {x.name: m.tensor_mor(f(x.name), g(x.name)) for x in c.morphisms},
        name=f"({f.name} (x) {g.name})",
    )


def _nested(m, cube, shape):
    c = m.base
    if shape == "left":
        ob = lambda a, b, d: m.tensor(m.tensor(a, b), d)
        ar = lambda f, g, h: m.tensor_mor(m.tensor_mor(f, g), h)
    else:
        ob = lambda a, b, d: m.tensor(a, m.tensor(b, d))
        ar = lambda f, g, h: m.tensor_mor(f, m.tensor_mor(g, h))
    return Functor(
        cube,
        c,
        {x: ob(*x) for x in cube.objects},
        {x.name: ar(*x.name) for x in cube.morphisms},
        name=f"{shape}-nested tensor",
    )


def nested_tensor_functors(m: MagmalStructure):
    """``((a(x)b)(x)c, a(x)(b(x)c))`` as functors out of the cube of the base."""
    c = m.base
    cube = product_category(c, c, c)
    return _nested(m, cube, "left"), _nested(m, cube, "right")


def tensor_and_swapped(m: MagmalStructure):
    """``(a, b) |-> a(x)b`` and ``(a, b) |-> b(x)a`` out of the square of the base."""
    t = tensor_functor(m)
    sq = t.source
    swapped = Functor(
        sq,
        m.base,
        {(a, b): m.tensor(b, a) for a, b in sq.objects},
        {(f, g): m.tensor_mor(g, f) for f, g in (x.name for x in sq.morphisms)},
        name="swapped tensor",
    )
    return t, swapped


# ---------------------------------------------------------------- validation


def validate_magmal(m: MagmalStructure) -> ValidationReport:
    c = m.base
    report = ValidationReport(f"magmal structure {m.name}".strip())
    for a, b in product(c.objects, repeat=2):
        if (a, b) not in m.tensor_objects or not c.has_object(m.tensor(a, b)):
            report.add("tensor-objects", f"{a!r} (x) {b!r} is not an object", a, b)
    for f, g in product([x.name for x in c.morphisms], repeat=2):
        if (f, g) not in m.tensor_morphisms or not c.has_morphism(m.tensor_mor(f, g)):
            report.add("tensor-morphisms", f"{f!r} (x) {g!r} is not a morphism", f, g)
    if not c.has_object(m.unit):
        report.add("unit", f"unit {m.unit!r} is not an object", m.unit)
    if not report.ok:
        return report
    bifunctor = validate_functor(tensor_functor(m))
    for v in bifunctor:
        report.add("bifunctor:" + v.law, v.detail, *v.witnesses)
    if not report.ok:
        return report

    I = m.unit
    for name, comps, target in (
        ("lambda", m.lambdas, lambda a: m.tensor(I, a)),
        ("rho", m.rhos, lambda a: m.tensor(a, I)),
    ):
        for a in c.objects:
            x = comps.get(a)
            if x is None or not c.has_morphism(x):
                report.add(f"{name}-typing", f"{name}_{a} missing or undeclared", a)
            elif c.dom(x) != a or c.cod(x) != target(a):
                report.add(
                    f"{name}-typing",
                    f"{name}_{a} = {x!r} must have type {a!r} -> {target(a)!r}",
                    a, x,
                )
    if not report.ok:
        return report

    iI = c.identity(I)
    for x in c.morphisms:
        f, a, b = x.name, x.dom, x.cod
        if c.compose(m.lam(b), f) != c.compose(m.tensor_mor(iI, f), m.lam(a)):
            report.add("lambda-naturality", f"lambda is not natural at {f!r}", f)
        if c.compose(m.rho(b), f) != c.compose(m.tensor_mor(f, iI), m.rho(a)):
            report.add("rho-naturality", f"rho is not natural at {f!r}", f)
    if m.lam(I) != m.rho(I):
        report.add("unit-coherence", f"lambda_I = {m.lam(I)!r} differs from rho_I = {m.rho(I)!r}", I)
    return report


def is_unital(m) -> bool:
    c = m.base
    return all(is_invertible(c, m.lam(a)) and is_invertible(c, m.rho(a)) for a in c.objects)


def unit_iso(unit1, unit2, m: MagmalStructure):
    """Comparison isomorphisms between two unit structures on the same tensor.

    ``unit1`` and ``unit2`` are ``(I, lam, rho)`` triples with component dicts.
    Returns ``(I -> I', I' -> I)``; the first is ``lam_{I'}^{-1} . rho'_I``.
    """
    c = m.base
    (i1, lam1, rho1), (i2, lam2, rho2) = unit1, unit2
    forward = c.compose(inverse(c, lam1[i2]), rho2[i1])
    backward = c.compose(inverse(c, lam2[i1]), rho1[i2])
    if c.compose(backward, forward) != c.identity(i1) or c.compose(forward, backward) != c.identity(i2):
        raise NotInvertible(f"unit comparisons {forward!r}, {backward!r} are not mutually inverse")
    return forward, backward


def unit_iso_companion(unit1, unit2, m: MagmalStructure):
    """The other comparison ``I -> I'``, namely ``rho_{I'}^{-1} . lam'_I``."""
    c = m.base
    (i1, lam1, rho1), (i2, lam2, rho2) = unit1, unit2
    return c.compose(inverse(c, rho1[i2]), lam2[i1])


# ---------------------------------------------------------------- magmas


def unit_law_violations(m, magma: UnitalMagma) -> list:
    """Which of the two unit laws fail for ``magma`` (``[]`` when both hold)."""
    c = m.base
    a, eta, mu = magma.carrier, magma.eta, magma.mu
    ia = c.identity(a)
    bad = []
    if comp(c, mu, m.tensor_mor(eta, ia), m.lam(a)) != ia:
        bad.append("left-unit")
    if comp(c, mu, m.tensor_mor(ia, eta), m.rho(a)) != ia:
        bad.append("right-unit")
    return bad


def is_unital_magma(m, magma: UnitalMagma) -> bool:
    c = m.base
    a = magma.carrier
    try:
        typed = (
            c.dom(magma.eta) == m.unit and c.cod(magma.eta) == a
            and c.dom(magma.mu) == m.tensor(a, a) and c.cod(magma.mu) == a
        )
    except CompositionError:
        return False
    return typed and not unit_law_violations(m, magma)


def is_magma_homomorphism(f, a: UnitalMagma, b: UnitalMagma, m) -> bool:
    c = m.base
    if c.dom(f) != a.carrier or c.cod(f) != b.carrier:
        return False
    return (
        c.compose(f, a.mu) == c.compose(b.mu, m.tensor_mor(f, f))
        and c.compose(f, a.eta) == b.eta
    )


def monoid_law_violations(m, s: SymmetricStructure, magma: UnitalMagma) -> list:
    """Associativity (through ``alpha``) and commutativity (``mu . sigma = mu``)."""
    c = m.base
    a, mu = magma.carrier, magma.mu
    ia = c.identity(a)
    bad = []
    lhs = c.compose(mu, m.tensor_mor(mu, ia))
    rhs = comp(c, mu, m.tensor_mor(ia, mu), s.alpha[(a, a, a)])
    if lhs != rhs:
        bad.append("associativity")
    if c.compose(mu, s.sigma[(a, a)]) != mu:
        bad.append("commutativity")
    return bad


def validate_identity_magma(m, g: IdentityMagma) -> ValidationReport:
    """Unit laws at every object plus naturality of ``eta`` and ``mu``."""
    c = m.base
    I = m.unit
    report = ValidationReport("identity magma")
    for a in c.objects:
        magma = g.at(a)
        try:
            typed = (
                c.dom(magma.eta) == I and c.cod(magma.eta) == a
                and c.dom(magma.mu) == m.tensor(a, a) and c.cod(magma.mu) == a
            )
        except (CompositionError, KeyError):
            typed = False
        if not typed:
            report.add("magma-typing", f"eta_{a} or mu_{a} has the wrong type", a)
    if not report.ok:
        return report
    for a in c.objects:
        for law in unit_law_violations(m, g.at(a)):
            report.add(law, f"{law} law fails at {a!r}", a)
    for x in c.morphisms:
        f, a, b = x.name, x.dom, x.cod
        if c.compose(f, g.eta[a]) != g.eta[b]:
            report.add("eta-naturality", f"{f!r} . eta_{a} != eta_{b}", f)
        if c.compose(f, g.mu[a]) != c.compose(g.mu[b], m.tensor_mor(f, f)):
            report.add("mu-naturality", f"{f!r} . mu_{a} != mu_{b} . ({f!r} (x) {f!r})", f)
    return report


def enumerate_identity_magmas(
    m: MagmalStructure,
    require_commutative_monoid: bool = False,
    s: SymmetricStructure | None = None,
    limit: int = DEFAULT_LIMIT,
) -> list:
    """Every unital magma structure on the identity functor, in object order.

    With ``require_commutative_monoid`` each component must also be associative
    and commutative with respect to ``s``.
    """
    if require_commutative_monoid and s is None:
        raise ValueError("commutative monoid filter needs a symmetric structure")
    c = m.base
    I = m.unit
    objects = list(c.objects)
    position = {a: i for i, a in enumerate(objects)}
    raw = [
        [(e, u) for e in c.hom(I, a) for u in c.hom(m.tensor(a, a), a)] for a in objects
    ]
    space = prod(len(r) for r in raw)
    if space > limit:
        raise SizeLimitExceeded("identity magma search", space, limit)
    local = []
    for a, options in zip(objects, raw):
        keep = []
        for e, u in options:
            magma = UnitalMagma(a, e, u)
            if unit_law_violations(m, magma):
                continue
            if require_commutative_monoid and monoid_law_violations(m, s, magma):
                continue
            keep.append((e, u))
        local.append(keep)
    squares = [[] for _ in objects]
    for x in c.morphisms:
        squares[max(position[x.dom], position[x.cod])].append(x)

    results = []
    eta, mu = {}, {}

    def natural_at(x):
        f, a, b = x.name, x.dom, x.cod
        return (
            c.compose(f, eta[a]) == eta[b]
            and c.compose(f, mu[a]) == c.compose(mu[b], m.tensor_mor(f, f))
        )

    def extend(i):
        if i == len(objects):
            results.append(IdentityMagma(dict(eta), dict(mu)))
            return
        a = objects[i]
        for e, u in local[i]:
            eta[a], mu[a] = e, u
            if all(natural_at(x) for x in squares[i]):
                extend(i + 1)
            del eta[a], mu[a]

    extend(0)
    return results


# ---------------------------------------------------------------- symmetry


def middle_interchange(m, s: SymmetricStructure, a, b, x, y):
    """``(a(x)b)(x)(x(x)y) -> (a(x)x)(x)(b(x)y)`` built from ``sigma[(b, x)]``.

    The zig-zag is
    ``alpha^-1 . (a (x) alpha) . (a (x) (sigma (x) y)) . (a (x) alpha^-1) . alpha``.
    """
    c = m.base
    ia, iy = c.identity(a), c.identity(y)
    alpha = s.alpha
    steps = [
        alpha[(a, b, m.tensor(x, y))],
        m.tensor_mor(ia, inverse(c, alpha[(b, x, y)])),
        m.tensor_mor(ia, m.tensor_mor(s.sigma[(b, x)], iy)),
        m.tensor_mor(ia, alpha[(x, b, y)]),
        inverse(c, alpha[(a, x, m.tensor(b, y))]),
    ]
    return comp(c, *reversed(steps))


def middle_interchange_alt(m, s: SymmetricStructure, a, b, x, y):
    """Same morphism as ``middle_interchange`` through the other bracketing."""
    c = m.base
    ia, iy = c.identity(a), c.identity(y)
    alpha = s.alpha
    steps = [
        inverse(c, alpha[(m.tensor(a, b), x, y)]),
        m.tensor_mor(alpha[(a, b, x)], iy),
        m.tensor_mor(m.tensor_mor(ia, s.sigma[(b, x)]), iy),
        m.tensor_mor(inverse(c, alpha[(a, x, b)]), iy),
        alpha[(m.tensor(a, x), b, y)],
    ]
    return comp(c, *reversed(steps))


def induced_magma_on_tensor(a: UnitalMagma, b: UnitalMagma, m, s: SymmetricStructure) -> UnitalMagma:
    """Unital magma on ``a (x) b`` from the componentwise product."""
    c = m.base
    A, B = a.carrier, b.carrier
    mu = c.compose(m.tensor_mor(a.mu, b.mu), middle_interchange(m, s, A, B, A, B))
    eta = c.compose(m.tensor_mor(a.eta, b.eta), m.lam(m.unit))
    return UnitalMagma(m.tensor(A, B), eta, mu)


def pentagon_violations(m, alpha) -> list:
    c = m.base
    t = m.tensor
    bad = []
    for a, b, x, d in product(c.objects, repeat=4):
        lhs = c.compose(alpha[(a, b, t(x, d))], alpha[(t(a, b), x, d)])
        rhs = comp(
            c,
            m.tensor_mor(c.identity(a), alpha[(b, x, d)]),
            alpha[(a, t(b, x), d)],
            m.tensor_mor(alpha[(a, b, x)], c.identity(d)),
        )
        if lhs != rhs:
            bad.append((a, b, x, d))
    return bad


def triangle_violations(m, alpha) -> list:
    """``alpha_{a,I,b} . (rho_a (x) b) = a (x) lam_b`` for every pair."""
    c = m.base
    bad = []
    for a, b in product(c.objects, repeat=2):
        lhs = c.compose(alpha[(a, m.unit, b)], m.tensor_mor(m.rho(a), c.identity(b)))
        rhs = m.tensor_mor(c.identity(a), m.lam(b))
        if lhs != rhs:
            bad.append((a, b))
    return bad


def hexagon_violations(m, alpha, sigma) -> list:
    c = m.base
    t = m.tensor
    bad = []
    for a, b, x in product(c.objects, repeat=3):
        ia, ib, ix = c.identity(a), c.identity(b), c.identity(x)
        lhs = comp(c, alpha[(b, x, a)], sigma[(a, t(b, x))], alpha[(a, b, x)])
        rhs = comp(c, m.tensor_mor(ib, sigma[(a, x)]), alpha[(b, a, x)], m.tensor_mor(sigma[(a, b)], ix))
        if lhs != rhs:
            bad.append(("hexagon-1", a, b, x))
        lhs = comp(
            c,
            inverse(c, alpha[(x, a, b)]),
            sigma[(t(a, b), x)],
            inverse(c, alpha[(a, b, x)]),
        )
        rhs = comp(
            c,
            m.tensor_mor(sigma[(a, x)], ib),
            inverse(c, alpha[(a, x, b)]),
            m.tensor_mor(ia, sigma[(b, x)]),
        )
        if lhs != rhs:
            bad.append(("hexagon-2", a, b, x))
    return bad


def symmetry_violations(m, sigma) -> list:
    c = m.base
    return [
        (a, b)
        for a, b in product(c.objects, repeat=2)
        if c.compose(sigma[(b, a)], sigma[(a, b)]) != c.identity(m.tensor(a, b))
    ]


def validate_symmetric(m: MagmalStructure, s: SymmetricStructure) -> ValidationReport:
    c = m.base
    report = ValidationReport("symmetric structure")
    t = m.tensor
    for a, b, x in product(c.objects, repeat=3):
        f = s.alpha.get((a, b, x))
        if f is None or not c.has_morphism(f) or c.dom(f) != t(t(a, b), x) or c.cod(f) != t(a, t(b, x)):
            report.add("alpha-typing", f"alpha_{a},{b},{x} missing or mistyped", a, b, x)
    for a, b in product(c.objects, repeat=2):
        f = s.sigma.get((a, b))
        if f is None or not c.has_morphism(f) or c.dom(f) != t(a, b) or c.cod(f) != t(b, a):
            report.add("sigma-typing", f"sigma_{a},{b} missing or mistyped", a, b)
    if not report.ok:
        return report
    left, right = nested_tensor_functors(m)
    for f in naturality_violations(NatTrans(left, right, s.alpha)):
        report.add("alpha-naturality", f"alpha is not natural at {f!r}", f)
    plain, swapped = tensor_and_swapped(m)
    for f in naturality_violations(NatTrans(plain, swapped, s.sigma)):
        report.add("sigma-naturality", f"sigma is not natural at {f!r}", f)
    for key, f in s.alpha.items():
        if not is_invertible(c, f):
            report.add("alpha-invertible", f"alpha_{key} = {f!r} is not invertible", *key)
    if not report.ok:
        return report
    for w in pentagon_violations(m, s.alpha):
        report.add("pentagon", f"pentagon fails at {w!r}", *w)
    for w in triangle_violations(m, s.alpha):
        report.add("triangle", f"triangle fails at {w!r}", *w)
    for w in hexagon_violations(m, s.alpha, s.sigma):
        report.add(w[0], f"{w[0]} fails at {w[1:]!r}", *w[1:])
    for w in symmetry_violations(m, s.sigma):
        report.add("symmetry", f"sigma_{w[1]},{w[0]} . sigma_{w[0]},{w[1]} != id", *w)
    return report
