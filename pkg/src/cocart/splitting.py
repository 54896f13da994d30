"""Idempotents, their splittings, weak adjunctions and weak colimits, Karoubi envelopes.

A naturally weak adjunction (or colimit) chooses transposes (or mediators)
that are natural but need not be unique.  The chosen transpose of the unit is
then an idempotent, and the genuine universal object is its splitting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import (
    Cospan,
    FinCat,
    Functor,
    NatTrans,
    ValidationReport,
    discrete_category,
    is_colimit,
    is_coproduct,
    is_initial,
    naturality_violations,
    product_category,
    terminal_category,
    validate_category,
)
from .errors import InvariantViolated
from .magmal import IdentityMagma, MagmalStructure, SymmetricStructure, validate_identity_magma, validate_magmal


@dataclass(frozen=True)
class Idempotent:
    obj: object
    e: object


@dataclass(frozen=True)
class Splitting:
    """``e = section . retraction`` with ``retraction . section = id``."""

    idempotent: Idempotent
    summand: object
    retraction: object
    section: object


def is_idempotent(c, e) -> bool:
    return c.dom(e) == c.cod(e) and c.compose(e, e) == e


def idempotents(c) -> list:
    """Every idempotent of ``c``, in object order then morphism order."""
    return [Idempotent(a, e) for a in c.objects for e in c.hom(a, a) if c.compose(e, e) == e]


def is_splitting(c, sp: Splitting) -> bool:
    e = sp.idempotent
    return (
        c.compose(sp.section, sp.retraction) == e.e
        and c.compose(sp.retraction, sp.section) == c.identity(sp.summand)
    )


def retractions(e: Idempotent, c) -> list:
    """Every ``r: A -> A`` with ``r . e = id_A``."""
    ia = c.identity(e.obj)
    return [r for r in c.hom(e.obj, e.obj) if c.compose(r, e.e) == ia]


def check_retraction_lemma(e: Idempotent, c) -> bool:
    """Whether ``e`` has a retraction; checked against ``e == id``.

    Raises ``InvariantViolated`` if the two sides disagree, which can only
    happen for a table that is not a category.
    """
    has = bool(retractions(e, c))
    if has != (e.e == c.identity(e.obj)):
        raise InvariantViolated(f"retraction lemma fails for {e.e!r} on {e.obj!r}")
    return has


def splittings(e: Idempotent, c) -> list:
    """All ``(S, r, s)`` splitting ``e``, in object then morphism order."""
    found = []
    for s_obj in c.objects:
        ids = c.identity(s_obj)
        for r in c.hom(e.obj, s_obj):
            for s in c.hom(s_obj, e.obj):
                if c.compose(s, r) == e.e and c.compose(r, s) == ids:
                    found.append(Splitting(e, s_obj, r, s))
    return found


def split_idempotent(e: Idempotent, c) -> Splitting | None:
    """First splitting of ``e`` in deterministic order, or ``None``."""
    for s_obj in c.objects:
        ids = c.identity(s_obj)
        for r in c.hom(e.obj, s_obj):
            for s in c.hom(s_obj, e.obj):
                if c.compose(s, r) == e.e and c.compose(r, s) == ids:
                    return Splitting(e, s_obj, r, s)
    return None


def splitting_comparison(c, first: Splitting, second: Splitting):
    """The comparison isomorphisms ``S -> S'`` and ``S' -> S`` between two splittings."""
    forward = c.compose(second.retraction, first.section)
    backward = c.compose(first.retraction, second.section)
    if (
        c.compose(backward, forward) != c.identity(first.summand)
        or c.compose(forward, backward) != c.identity(second.summand)
    ):
        raise InvariantViolated("splittings of the same idempotent are not isomorphic")
    return forward, backward


def all_idempotents_split(c) -> bool:
    return all(split_idempotent(e, c) is not None for e in idempotents(c))


# ---------------------------------------------------------------- weak adjunctions


@dataclass
class WeakAdjunctionData:
    """``J: A -> E``, ``L: A -> C``, ``R: C -> E``, unit ``eta: J => RL`` and chosen transposes.

    ``flat[(x, y)]`` maps each ``h: Jx -> Ry`` to a morphism ``Lx -> y``.
    """

    J: Functor
    L: Functor
    R: Functor
    eta: Mapping
    flat: Mapping

    def transpose(self, x, y, h):
        return self.flat[(x, y)][h]


def validate_weak_adjunction(w: WeakAdjunctionData) -> ValidationReport:
    """Section property of ``flat`` plus naturality of ``eta`` and ``flat`` in both slots."""
    A, C, E = w.J.source, w.L.target, w.J.target
    report = ValidationReport("weak adjunction")
    unit_source = w.J
    unit_target = Functor(
        A, E, {x: w.R.ob(w.L.ob(x)) for x in A.objects},
        {f.name: w.R(w.L(f.name)) for f in A.morphisms},
    )
    for f in naturality_violations(NatTrans(unit_source, unit_target, w.eta)):
        report.add("eta-naturality", f"eta is not natural at {f!r}", f)
    for x in A.objects:
        for y in C.objects:
            table = w.flat.get((x, y), {})
            for h in E.hom(w.J.ob(x), w.R.ob(y)):
                k = table.get(h)
                if k is None or C.dom(k) != w.L.ob(x) or C.cod(k) != y:
                    report.add("flat-typing", f"flat_{x},{y}({h!r}) missing or mistyped", x, y, h)
                    continue
                if E.compose(w.R(k), w.eta[x]) != h:
                    report.add("flat-section", f"R(flat({h!r})) . eta_{x} != {h!r}", x, y, h)
    if not report.ok:
        return report
    for u in A.morphisms:
        x2, x = u.dom, u.cod
        for y in C.objects:
            for h in E.hom(w.J.ob(x), w.R.ob(y)):
                lhs = w.transpose(x2, y, E.compose(h, w.J(u.name)))
                rhs = C.compose(w.transpose(x, y, h), w.L(u.name))
                if lhs != rhs:
                    report.add("flat-naturality-x", f"flat not natural in X at {u.name!r}, {h!r}", u.name, h)
    for v in C.morphisms:
        y, y2 = v.dom, v.cod
        for x in A.objects:
            for h in E.hom(w.J.ob(x), w.R.ob(y)):
                lhs = w.transpose(x, y2, E.compose(w.R(v.name), h))
                rhs = C.compose(v.name, w.transpose(x, y, h))
                if lhs != rhs:
                    report.add("flat-naturality-y", f"flat not natural in Y at {v.name!r}, {h!r}", v.name, h)
    return report


def weak_adjunction_idempotent(w: WeakAdjunctionData, x) -> Idempotent:
    """The endomorphism ``flat_{x, Lx}(eta_x)`` of ``Lx``; idempotent for valid data."""
    C = w.L.target
    lx = w.L.ob(x)
    e = w.transpose(x, lx, w.eta[x])
    if not is_idempotent(C, e):
        raise InvariantViolated(f"flat(eta_{x}) = {e!r} is not idempotent")
    return Idempotent(lx, e)


def comparison_is_bijective(w: WeakAdjunctionData) -> bool:
    """Whether ``k |-> R(k) . eta_x`` is a bijection on every hom-set."""
    A, C, E = w.J.source, w.L.target, w.J.target
    for x in A.objects:
        for y in C.objects:
            images = [E.compose(w.R(k), w.eta[x]) for k in C.hom(w.L.ob(x), y)]
            if len(set(images)) != len(images) or set(images) != set(E.hom(w.J.ob(x), w.R.ob(y))):
                return False
    return True


def _coprojections(m, g, a, b):
    c = m.base
    pi1 = c.compose(m.tensor_mor(c.identity(a), g.eta[b]), m.rho(a))
    pi2 = c.compose(m.tensor_mor(g.eta[a], c.identity(b)), m.lam(b))
    return pi1, pi2


def weak_coproduct_adjunction(m: MagmalStructure, g: IdentityMagma) -> WeakAdjunctionData:
    """Tensor weakly left adjoint to the diagonal, transposing ``(a, b)`` to ``mu . (a (x) b)``."""
    from .magmal import tensor_functor

    c = m.base
    square = product_category(c, c)
    ident = Functor(
        square, square, {x: x for x in square.objects}, {f.name: f.name for f in square.morphisms}, "1"
    )
    L = tensor_functor(m)
    R = Functor(
        c, square, {a: (a, a) for a in c.objects}, {f.name: (f.name, f.name) for f in c.morphisms},
        "diagonal",
    )
    eta = {(a, b): _coprojections(m, g, a, b) for a, b in square.objects}
    flat = {}
    for a, b in square.objects:
        for y in c.objects:
            flat[((a, b), y)] = {
                (p, q): c.compose(g.mu[y], m.tensor_mor(p, q))
                for p in c.hom(a, y)
                for q in c.hom(b, y)
            }
    return WeakAdjunctionData(ident, L, R, eta, flat)


def weak_initial_adjunction(m: MagmalStructure, g: IdentityMagma) -> WeakAdjunctionData:
    """The unit object weakly initial, with chosen maps ``eta_Y: I -> Y``."""
    c = m.base
    one = terminal_category()
    ident = Functor(one, one, {"*": "*"}, {"id*": "id*"}, "1")
    L = Functor(one, c, {"*": m.unit}, {"id*": c.identity(m.unit)}, "unit")
    R = Functor(c, one, {a: "*" for a in c.objects}, {f.name: "id*" for f in c.morphisms}, "!")
    flat = {("*", y): {"id*": g.eta[y]} for y in c.objects}
    return WeakAdjunctionData(ident, L, R, {"*": "id*"}, flat)


# ---------------------------------------------------------------- weak colimits


@dataclass
class WeakColimitData:
    """A cocone ``cocone[j]: D(j) -> apex`` with a chosen mediator per competing cocone.

    ``mediator[(x, legs)]`` is keyed by the target and the tuple of legs in
    the object order of the diagram's index category.
    """

    diagram: Functor
    apex: object
    cocone: Mapping
    mediator: Mapping

    def mediate(self, x, legs):
        return self.mediator[(x, tuple(legs))]


def validate_weak_colimit(w: WeakColimitData, c) -> ValidationReport:
    from .core import cocones

    report = ValidationReport("weak colimit")
    index = list(w.diagram.source.objects)
    cone = [w.cocone[j] for j in index]
    all_cocones = {x: [tuple(k[j] for j in index) for k in cocones(c, w.diagram, x)] for x in c.objects}
    if cone not in ([list(k) for k in all_cocones[w.apex]]):
        report.add("cocone", "the chosen legs do not form a cocone")
        return report
    for x, ks in all_cocones.items():
        for legs in ks:
            med = w.mediator.get((x, legs))
            if med is None or c.dom(med) != w.apex or c.cod(med) != x:
                report.add("mediator-typing", f"no mediator for cocone {legs!r} into {x!r}", x, legs)
                continue
            if any(c.compose(med, w.cocone[j]) != leg for j, leg in zip(index, legs)):
                report.add("mediator-factorization", f"mediator for {legs!r} does not factor", x, legs)
    if not report.ok:
        return report
    for v in c.morphisms:
        for legs in all_cocones[v.dom]:
            moved = tuple(c.compose(v.name, leg) for leg in legs)
            if w.mediate(v.cod, moved) != c.compose(v.name, w.mediate(v.dom, legs)):
                report.add("mediator-naturality", f"mediator not natural at {v.name!r}", v.name, legs)
    return report


def colimit_from_weak(w: WeakColimitData, c):
    """Split the mediator of the cocone itself; the transported cocone is a colimit.

    Returns ``(summand, legs)`` or ``None`` when the idempotent does not split.
    """
    index = list(w.diagram.source.objects)
    e = w.mediate(w.apex, [w.cocone[j] for j in index])
    if not is_idempotent(c, e):
        raise InvariantViolated(f"mediator {e!r} of the cocone is not idempotent")
    sp = split_idempotent(Idempotent(w.apex, e), c)
    if sp is None:
        return None
    legs = {j: c.compose(sp.retraction, w.cocone[j]) for j in index}
    ok = is_colimit(c, w.diagram, sp.summand, legs)
    if ok and not index:
        ok = is_initial(c, sp.summand)
    elif ok and len(index) == 2 and not w.diagram.source.hom(index[0], index[1]):
        j0, j1 = index
        ok = is_coproduct(c, Cospan(sp.summand, legs[j0], legs[j1]))
    if not ok:
        raise InvariantViolated("split cocone fails the colimit oracle")
    return sp.summand, legs


def weak_coproduct_colimit(m: MagmalStructure, g: IdentityMagma, a, b) -> WeakColimitData:
    """Binary diagram ``(a, b)`` with apex ``a (x) b`` and mediators ``mu . (p (x) q)``."""
    c = m.base
    shape = discrete_category([0, 1], name="2")
    diagram = Functor(
        shape, c, {0: a, 1: b}, {("id", 0): c.identity(a), ("id", 1): c.identity(b)}, "pair"
    )
    pi1, pi2 = _coprojections(m, g, a, b)
    mediator = {
        (x, (p, q)): c.compose(g.mu[x], m.tensor_mor(p, q))
        for x in c.objects
        for p in c.hom(a, x)
        for q in c.hom(b, x)
    }
    return WeakColimitData(diagram, m.tensor(a, b), {0: pi1, 1: pi2}, mediator)


def weak_initial_colimit(m: MagmalStructure, g: IdentityMagma) -> WeakColimitData:
    """Empty diagram with apex ``I`` and mediators ``eta_X``."""
    c = m.base
    diagram = Functor(discrete_category([], name="0"), c, {}, {}, "empty")
    return WeakColimitData(diagram, m.unit, {}, {(x, ()): g.eta[x] for x in c.objects})


# ---------------------------------------------------------------- Karoubi envelope


class KaroubiCategory(FinCat):
    """Objects are idempotents ``(A|p)``; morphisms ``f:(A|p)->(B|q)`` with ``q f p = f``."""

    def __init__(self, base, objects, morphisms, identities, table, pairs, underlying):
        super().__init__(objects, morphisms, identities, table, name=f"kar({base.name})")
        self.base = base
        self.pairs = pairs
        self.underlying = underlying
        self._lift = {v: k for k, v in pairs.items()}
        self._lift_mor = {(underlying[m.name], m.dom, m.cod): m.name for m in self.morphisms}

    def object_for(self, a, p):
        return self._lift[(a, p)]

    def morphism_for(self, f, src, tgt):
        """The morphism over ``f`` between the named Karoubi objects."""
        return self._lift_mor[(f, src, tgt)]


def karoubi_object_name(a, p) -> str:
    return f"({a}|{p})"


def karoubi_envelope(c: FinCat):
    """The idempotent completion of ``c`` and the embedding ``A |-> (A|id_A)``."""
    pairs = {}
    for e in idempotents(c):
        pairs[karoubi_object_name(e.obj, e.e)] = (e.obj, e.e)
    objects = list(pairs)
    morphisms = []
    underlying = {}
    by_ends = {}
    for src in objects:
        a, p = pairs[src]
        for tgt in objects:
            b, q = pairs[tgt]
            for f in c.hom(a, b):
                if c.compose(q, c.compose(f, p)) == f:
                    name = f"{f}:{src}->{tgt}"
                    morphisms.append((name, src, tgt))
                    underlying[name] = f
                    by_ends[(f, src, tgt)] = name
    identities = {x: by_ends[(pairs[x][1], x, x)] for x in objects}
    table = {}
    for f_name, src, mid in morphisms:
        for g_name, mid2, tgt in morphisms:
            if mid2 == mid:
                h = c.compose(underlying[g_name], underlying[f_name])
                table[(g_name, f_name)] = by_ends[(h, src, tgt)]
    kar = KaroubiCategory(c, objects, morphisms, identities, table, pairs, underlying)
    embedding = Functor(
        c,
        kar,
        {a: karoubi_object_name(a, c.identity(a)) for a in c.objects},
        {
            f.name: by_ends[(f.name, karoubi_object_name(f.dom, c.identity(f.dom)),
                             karoubi_object_name(f.cod, c.identity(f.cod)))]
            for f in c.morphisms
        },
        name="embedding",
    )
    return kar, embedding


def transport_magmal_to_karoubi(
    m: MagmalStructure,
    g: IdentityMagma | None = None,
    s: SymmetricStructure | None = None,
):
    """Carry the magmal structure (and optionally a magma and a symmetry) to ``kar(base)``.

    Returns ``(magmal, magma, symmetry)`` on the envelope; the last two are
    ``None`` when not supplied.  Everything is re-validated.
    """
    c = m.base
    kar, _ = karoubi_envelope(c)
    pairs = kar.pairs
    lift = kar.object_for
    lift_mor = kar.morphism_for
    t, tm = m.tensor, m.tensor_mor

    def tensor_obj(x, y):
        (a, p), (b, q) = pairs[x], pairs[y]
        return lift(t(a, b), tm(p, q))

    tensor_objects = {(x, y): tensor_obj(x, y) for x in kar.objects for y in kar.objects}
    tensor_morphisms = {}
    for f in kar.morphisms:
        for h in kar.morphisms:
            tensor_morphisms[(f.name, h.name)] = lift_mor(
                tm(kar.underlying[f.name], kar.underlying[h.name]),
                tensor_objects[(f.dom, h.dom)],
                tensor_objects[(f.cod, h.cod)],
            )
    I = m.unit
    unit = lift(I, c.identity(I))
    lam, rho = {}, {}
    for x in kar.objects:
        a, p = pairs[x]
        ip = tm(c.identity(I), p)
        pi = tm(p, c.identity(I))
        lam[x] = lift_mor(c.compose(ip, c.compose(m.lam(a), p)), x, tensor_objects[(unit, x)])
        rho[x] = lift_mor(c.compose(pi, c.compose(m.rho(a), p)), x, tensor_objects[(x, unit)])
    new = MagmalStructure(kar, tensor_objects, tensor_morphisms, unit, lam, rho, name=kar.name)
    report = validate_category(kar)
    report.extend(validate_magmal(new))
    if not report.ok:
        raise InvariantViolated("transported magmal structure fails validation", report)

    magma = None
    if g is not None:
        eta, mu = {}, {}
        for x in kar.objects:
            a, p = pairs[x]
            eta[x] = lift_mor(c.compose(p, g.eta[a]), unit, x)
            mu[x] = lift_mor(
                c.compose(p, c.compose(g.mu[a], tm(p, p))), tensor_objects[(x, x)], x
            )
        magma = IdentityMagma(eta, mu)
        report = validate_identity_magma(new, magma)
        if not report.ok:
            raise InvariantViolated("transported magma fails validation", report)

    symmetry = None
    if s is not None:
        from .magmal import validate_symmetric

        alpha, sigma = {}, {}
        for x in kar.objects:
            a, p = pairs[x]
            for y in kar.objects:
                b, q = pairs[y]
                sigma[(x, y)] = lift_mor(
                    c.compose(tm(q, p), c.compose(s.sigma[(a, b)], tm(p, q))),
                    tensor_objects[(x, y)], tensor_objects[(y, x)],
                )
                for z in kar.objects:
                    d, r = pairs[z]
                    src = tensor_objects[(tensor_objects[(x, y)], z)]
                    tgt = tensor_objects[(x, tensor_objects[(y, z)])]
                    core = s.alpha[(a, b, d)]
                    alpha[(x, y, z)] = lift_mor(
                        c.compose(tm(p, tm(q, r)), c.compose(core, tm(tm(p, q), r))), src, tgt
                    )
        symmetry = SymmetricStructure(alpha, sigma)
        report = validate_symmetric(new, symmetry)
        if not report.ok:
            raise InvariantViolated("transported symmetry fails validation", report)
    return new, magma, symmetry
