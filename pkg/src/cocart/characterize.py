"""Deciding the five characterisations of cocartesian structure, and moving between them.

Conditions:

``a``  the unit is initial and every canonical cospan ``A -> A(x)B <- B`` is a coproduct;
``b``  the identity functor carries exactly one commutative monoid structure;
``c``  some unital magma on the identity functor satisfies the shuffle equation;
``d``  some unital magma on the identity functor satisfies the quasi-symmetry equation;
``e``  the unitors are invertible and the tensor has a right adjoint.

Each check returns a ``Verdict`` whose witnesses can be replayed against
the brute-force oracles with ``replay_verdict``.  The constructions in the
second half build initial objects, coprojections, copairings, associators
and braidings out of whichever condition is available.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .core import (
    DEFAULT_LIMIT,
    Cospan,
    Functor,
    NatTrans,
    comp,
    coproduct_failure,
    inverse,
    is_coproduct,
    is_initial,
    is_invertible,
    is_terminal,
    natural_transformations_between,
    opposite_category,
    validate_functor,
)
from .errors import InvariantViolated, NotInvertible, PreconditionFailed, SizeLimitExceeded
from .magmal import (
    IdentityMagma,
    SymmetricStructure,
    enumerate_identity_magmas,
    hexagon_violations,
    is_unital,
    middle_interchange,
    monoid_law_violations,
    nested_tensor_functors,
    pentagon_violations,
    symmetry_violations,
    tensor_and_swapped,
    triangle_violations,
    validate_identity_magma,
    validate_symmetric,
)
from .splitting import Idempotent, split_idempotent

CONDITIONS = ("a", "b", "c", "d", "e")
NO_UNIT = "no unit object exists"
NO_MAGMA = "no unital magma structure on the identity functor"


@dataclass
class Verdict:
    """Outcome of one condition check.  ``witnesses`` always carries a ``kind`` key."""

    condition: str
    holds: bool
    reason: str = ""
    witnesses: dict = field(default_factory=dict)

    def summary(self) -> str:
        mark = "holds" if self.holds else "fails"
        return f"({self.condition}) {mark}: {self.reason}" if self.reason else f"({self.condition}) {mark}"


def _empty(m) -> bool:
    return not m.base.objects


def _no_unit(condition) -> Verdict:
    return Verdict(condition, False, NO_UNIT, {"kind": "no-unit"})


# ---------------------------------------------------------------- initial data and coprojections


@dataclass(frozen=True)
class InitialityData:
    """Components ``bracket[A]: I -> A``."""

    bracket: Mapping


@dataclass(frozen=True)
class Coprojections:
    """``pi1[(A, B)]: A -> A(x)B`` and ``pi2[(A, B)]: B -> A(x)B``."""

    pi1: Mapping
    pi2: Mapping


def initiality_from_unit(m) -> InitialityData:
    """The unique maps out of ``I``; requires ``I`` to be initial."""
    c = m.base
    if not is_initial(c, m.unit):
        raise PreconditionFailed(f"unit {m.unit!r} is not initial")
    return InitialityData({a: c.hom(m.unit, a)[0] for a in c.objects})


def canonical_cospan(m, bracket, a, b) -> Cospan:
    """``(A(x)[]_B) . rho_A`` and ``([]_A(x)B) . lam_B`` into ``A(x)B``."""
    c = m.base
    left = c.compose(m.tensor_mor(c.identity(a), bracket[b]), m.rho(a))
    right = c.compose(m.tensor_mor(bracket[a], c.identity(b)), m.lam(b))
    return Cospan(m.tensor(a, b), left, right)


def coprojections_from_initial(m, b: InitialityData) -> Coprojections:
    c = m.base
    pi1, pi2 = {}, {}
    for x, y in product(c.objects, repeat=2):
        cs = canonical_cospan(m, b.bracket, x, y)
        pi1[(x, y)], pi2[(x, y)] = cs.left, cs.right
    p = Coprojections(pi1, pi2)
    _check_coprojections(m, p)
    return p


def coprojection_violations(m, p: Coprojections) -> list:
    """Naturality in both slots and the unit boundary conditions."""
    c = m.base
    bad = []
    for a, b in product(c.objects, repeat=2):
        t = m.tensor(a, b)
        for name, leg, src in (("pi1", p.pi1.get((a, b)), a), ("pi2", p.pi2.get((a, b)), b)):
            if leg is None or not c.has_morphism(leg) or c.dom(leg) != src or c.cod(leg) != t:
                bad.append((f"{name}-typing", a, b))
    if bad:
        return bad
    for a in c.objects:
        if p.pi2[(m.unit, a)] != m.lam(a):
            bad.append(("pi2-unit", a))
        if p.pi1[(a, m.unit)] != m.rho(a):
            bad.append(("pi1-unit", a))
    for f in c.morphisms:
        for b in c.objects:
            ib = c.identity(b)
            # pi1 natural in its first slot, pi2 natural in its second
            if c.compose(p.pi1[(f.cod, b)], f.name) != c.compose(m.tensor_mor(f.name, ib), p.pi1[(f.dom, b)]):
                bad.append(("pi1-naturality", f.name, b))
            if c.compose(p.pi2[(b, f.cod)], f.name) != c.compose(m.tensor_mor(ib, f.name), p.pi2[(b, f.dom)]):
                bad.append(("pi2-naturality", f.name, b))
            # and each is natural in the other slot too
            if c.compose(m.tensor_mor(ib, f.name), p.pi1[(b, f.dom)]) != p.pi1[(b, f.cod)]:
                bad.append(("pi1-naturality-2", f.name, b))
            if c.compose(m.tensor_mor(f.name, ib), p.pi2[(f.dom, b)]) != p.pi2[(f.cod, b)]:
                bad.append(("pi2-naturality-1", f.name, b))
    return bad


def _check_coprojections(m, p):
    bad = coprojection_violations(m, p)
    if bad:
        raise InvariantViolated(f"coprojections violate {bad[0]!r}")


def initial_from_coprojections(m, p: Coprojections) -> InitialityData:
    """``[]_A := lam_A^{-1} . pi1^{I,A}``; needs invertible ``lam``."""
    c = m.base
    I = m.unit
    bracket = {}
    for a in c.objects:
        bracket[a] = c.compose(inverse(c, m.lam(a)), p.pi1[(I, a)])
    if bracket[I] != c.identity(I):
        raise InvariantViolated(f"[]_I = {bracket[I]!r} is not the identity")
    for f in c.morphisms:
        if c.compose(f.name, bracket[f.dom]) != bracket[f.cod]:
            raise InvariantViolated(f"[] is not natural at {f.name!r}")
    return InitialityData(bracket)


# ---------------------------------------------------------------- condition (a)


def check_condition_a(m) -> Verdict:
    if _empty(m):
        return _no_unit("a")
    c = m.base
    I = m.unit
    for x in c.objects:
        n = len(c.hom(I, x))
        if n != 1:
            return Verdict(
                "a", False, f"unit {I!r} is not initial: {n} morphisms {I!r} -> {x!r}",
                {"kind": "not-initial", "unit": I, "target": x, "count": n},
            )
    bracket = initiality_from_unit(m).bracket
    for a, b in product(c.objects, repeat=2):
        cs = canonical_cospan(m, bracket, a, b)
        fail = coproduct_failure(c, cs)
        if fail is not None:
            return Verdict(
                "a", False,
                f"cospan into {a!r} (x) {b!r} is not a coproduct: "
                f"{len(fail.mediators)} mediators for ({fail.a!r}, {fail.b!r}) into {fail.target!r}",
                {
                    "kind": "not-coproduct", "pair": (a, b), "cospan": cs,
                    "probe": (fail.target, fail.a, fail.b), "mediators": fail.mediators,
                },
            )
    return Verdict("a", True, "unit initial and every canonical cospan is a coproduct", {"kind": "cocartesian"})


def _require_a(m):
    v = check_condition_a(m)
    if not v.holds:
        raise PreconditionFailed(f"structure is not cocartesian: {v.reason}")


# ---------------------------------------------------------------- condition (b)


def check_condition_b(m, s: SymmetricStructure, limit: int = DEFAULT_LIMIT) -> Verdict:
    if _empty(m):
        return _no_unit("b")
    found = enumerate_identity_magmas(m, require_commutative_monoid=True, s=s, limit=limit)
    n = len(found)
    if n == 1:
        return Verdict("b", True, "exactly one commutative monoid on the identity functor",
                       {"kind": "count", "count": 1, "magma": found[0]})
    return Verdict("b", False, f"{n} commutative monoid structures on the identity functor (need exactly 1)",
                   {"kind": "count", "count": n})


# ---------------------------------------------------------------- conditions (c) and (d)


def diagram1_composites(m, s, g, a, b):
    """Both legs of the shuffle equation at ``(a, b)``: ``mu_{a(x)b} . shuffle`` and ``mu_a (x) mu_b``."""
    c = m.base
    lhs = c.compose(g.mu[m.tensor(a, b)], middle_interchange(m, s, a, a, b, b))
    rhs = m.tensor_mor(g.mu[a], g.mu[b])
    return lhs, rhs


def diagram2_composite(m, g, a, b):
    """``mu_{a(x)b} . ((a (x) eta_b) (x) (eta_a (x) b)) . (rho_a (x) lam_b)``."""
    c = m.base
    ia, ib = c.identity(a), c.identity(b)
    middle = m.tensor_mor(m.tensor_mor(ia, g.eta[b]), m.tensor_mor(g.eta[a], ib))
    return comp(c, g.mu[m.tensor(a, b)], middle, m.tensor_mor(m.rho(a), m.lam(b)))


def _diagram1_failure(m, s, g):
    for a, b in product(m.base.objects, repeat=2):
        lhs, rhs = diagram1_composites(m, s, g, a, b)
        if lhs != rhs:
            return a, b, lhs, rhs
    return None


def _diagram2_failure(m, g):
    c = m.base
    for a, b in product(c.objects, repeat=2):
        e = diagram2_composite(m, g, a, b)
        if e != c.identity(m.tensor(a, b)):
            return a, b, e
    return None


def _magma_candidates(m, g, limit):
    if g is not None:
        return [g]
    return enumerate_identity_magmas(m, limit=limit)


def check_condition_c(m, s: SymmetricStructure, g: IdentityMagma | None = None,
                      limit: int = DEFAULT_LIMIT) -> Verdict:
    """With ``g`` given, test that family; otherwise test every family."""
    if _empty(m):
        return _no_unit("c")
    candidates = _magma_candidates(m, g, limit)
    if not candidates:
        return Verdict("c", False, NO_MAGMA, {"kind": "no-magma", "count": 0})
    first = None
    for cand in candidates:
        fail = _diagram1_failure(m, s, cand)
        if fail is None:
            return Verdict("c", True, "shuffle equation commutes for every pair",
                           {"kind": "magma", "magma": cand})
        if first is None:
            first = (cand, fail)
    cand, (a, b, lhs, rhs) = first
    return Verdict(
        "c", False, f"shuffle equation fails at ({a!r}, {b!r}): {lhs!r} != {rhs!r}",
        {"kind": "diagram", "magma": cand, "pair": (a, b), "lhs": lhs, "rhs": rhs,
         "magmas_tested": len(candidates)},
    )


def check_condition_d(m, g: IdentityMagma | None = None, limit: int = DEFAULT_LIMIT) -> Verdict:
    if _empty(m):
        return _no_unit("d")
    candidates = _magma_candidates(m, g, limit)
    if not candidates:
        return Verdict("d", False, NO_MAGMA, {"kind": "no-magma", "count": 0})
    first = None
    for cand in candidates:
        fail = _diagram2_failure(m, cand)
        if fail is None:
            return Verdict("d", True, "quasi-symmetry equation commutes for every pair",
                           {"kind": "magma", "magma": cand})
        if first is None:
            first = (cand, fail)
    cand, (a, b, e) = first
    return Verdict(
        "d", False,
        f"quasi-symmetry equation fails at ({a!r}, {b!r}): composite {e!r} is not the identity",
        {"kind": "diagram", "magma": cand, "pair": (a, b), "composite": e,
         "magmas_tested": len(candidates)},
    )


# ---------------------------------------------------------------- condition (e)


@dataclass
class AdjointData:
    """Right adjoint ``(L, R)`` to the tensor with counit ``epsilon[A]: LA (x) RA -> A``.

    ``transposes[(X, Y, A, f)] = (f^L, f^R)`` records the unique factorization
    ``f = epsilon_A . (f^L (x) f^R)`` of every ``f: X (x) Y -> A``.
    """

    L: Functor
    R: Functor
    epsilon: Mapping
    transposes: Mapping

    def transpose(self, x, y, a, f):
        return self.transposes[(x, y, a, f)]


def _factorizations(m, l, r, eps, a):
    """Unique-factorization table for a candidate counit, or ``None``."""
    c = m.base
    table = {}
    for x in c.objects:
        for y in c.objects:
            seen = {}
            for p in c.hom(x, l):
                for q in c.hom(y, r):
                    f = c.compose(eps, m.tensor_mor(p, q))
                    if f in seen:
                        return None
                    seen[f] = (p, q)
            if len(seen) != len(c.hom(m.tensor(x, y), a)):
                return None
            for f, pq in seen.items():
                table[(x, y, a, f)] = pq
    return table


def _counit_at(m, a):
    c = m.base
    for l in c.objects:
        for r in c.objects:
            for eps in c.hom(m.tensor(l, r), a):
                table = _factorizations(m, l, r, eps, a)
                if table is not None:
                    return l, r, eps, table
    return None


def _adjoint_search(m, limit):
    c = m.base
    objs = c.objects
    space = sum(len(c.hom(m.tensor(l, r), a)) for a in objs for l in objs for r in objs)
    if space > limit:
        raise SizeLimitExceeded("right adjoint search", space, limit)
    choice = {}
    for a in objs:
        found = _counit_at(m, a)
        if found is None:
            return None, a
        choice[a] = found
    transposes = {}
    for a, (_, _, _, table) in choice.items():
        transposes.update(table)
    on_l, on_r = {}, {}
    for f in c.morphisms:
        la, ra, eps, _ = choice[f.dom]
        k = c.compose(f.name, eps)
        on_l[f.name], on_r[f.name] = transposes[(la, ra, f.cod, k)]
    L = Functor(c, c, {a: choice[a][0] for a in objs}, on_l, "L")
    R = Functor(c, c, {a: choice[a][1] for a in objs}, on_r, "R")
    for F in (L, R):
        report = validate_functor(F)
        if not report.ok:
            raise InvariantViolated(f"transposed action {F.name} is not a functor", report)
    return AdjointData(L, R, {a: choice[a][2] for a in objs}, transposes), None


def find_right_adjoint_to_tensor(m, limit: int = DEFAULT_LIMIT) -> AdjointData | None:
    """First couniversal family in object order, or ``None`` if some object has none."""
    ad, _ = _adjoint_search(m, limit)
    return ad


def check_condition_e(m, limit: int = DEFAULT_LIMIT) -> Verdict:
    if _empty(m):
        return _no_unit("e")
    c = m.base
    for a in c.objects:
        for name, f in (("lambda", m.lam(a)), ("rho", m.rho(a))):
            if not is_invertible(c, f):
                return Verdict("e", False, f"{name}_{a} = {f!r} is not invertible",
                               {"kind": "not-unital", "unitor": name, "object": a, "morphism": f})
    ad, bad = _adjoint_search(m, limit)
    if ad is None:
        return Verdict("e", False, f"no couniversal morphism into {bad!r}; the tensor has no right adjoint",
                       {"kind": "no-adjoint", "object": bad})
    return Verdict("e", True, "unitors invertible and the tensor has a right adjoint",
                   {"kind": "adjoint", "adjoint": ad})


def derived_magma_from_adjoint(m, ad: AdjointData) -> IdentityMagma:
    """Unit and multiplication transposed from the inverse unitors through the counit."""
    c = m.base
    I = m.unit
    eta, mu = {}, {}
    for a in c.objects:
        lam_inv, rho_inv = inverse(c, m.lam(a)), inverse(c, m.rho(a))
        lam_l, lam_r = ad.transpose(I, a, a, lam_inv)
        rho_l, rho_r = ad.transpose(a, I, a, rho_inv)
        eta[a] = comp(c, ad.epsilon[a], m.tensor_mor(lam_l, rho_r), m.lam(I))
        mu[a] = c.compose(ad.epsilon[a], m.tensor_mor(rho_l, lam_r))
    g = IdentityMagma(eta, mu)
    report = validate_identity_magma(m, g)
    if not report.ok:
        raise InvariantViolated("magma derived from the adjoint fails validation", report)
    return g


# ---------------------------------------------------------------- copairings and idempotents


def eta_I_initiality(m, g: IdentityMagma):
    """Check ``eta_I`` is idempotent with retraction ``mu_I . lam_I``, hence the identity.

    Returns ``(is_initial(I), eta_I)``; all three readings must agree.
    """
    c = m.base
    I = m.unit
    e = g.eta[I]
    iI = c.identity(I)
    idempotent = c.compose(e, e) == e
    retraction = comp(c, g.mu[I], m.lam(I), e) == iI
    initial = is_initial(c, I)
    if not (idempotent and retraction and (e == iI) and initial):
        raise InvariantViolated(
            f"eta_I readings disagree: idempotent={idempotent} retraction={retraction} "
            f"identity={e == iI} initial={initial}"
        )
    return initial, e


def mediating_morphism(m, g: IdentityMagma, a, b):
    """``[a, b] := mu_X . (a (x) b)`` for ``a: A -> X`` and ``b: B -> X``."""
    c = m.base
    x = c.cod(a)
    if c.cod(b) != x:
        raise PreconditionFailed(f"{a!r} and {b!r} have different codomains")
    return c.compose(g.mu[x], m.tensor_mor(a, b))


def weak_coprojections(m, g: IdentityMagma, a, b) -> Cospan:
    """Coprojections built from the magma units: ``(A(x)eta_B) . rho_A`` and ``(eta_A(x)B) . lam_B``."""
    return canonical_cospan(m, g.eta, a, b)


def coproduct_idempotent(m, g: IdentityMagma, a, b) -> Idempotent:
    eta_I_initiality(m, g)
    c = m.base
    e = diagram2_composite(m, g, a, b)
    if c.compose(e, e) != e:
        raise InvariantViolated(f"endomorphism {e!r} of {a!r} (x) {b!r} is not idempotent")
    return Idempotent(m.tensor(a, b), e)


def synthesize_coproduct(m, g: IdentityMagma, a, b) -> Cospan | None:
    """Split the coproduct idempotent and return the transported cospan, or ``None``."""
    c = m.base
    e = coproduct_idempotent(m, g, a, b)
    sp = split_idempotent(e, c)
    if sp is None:
        return None
    weak = weak_coprojections(m, g, a, b)
    cs = Cospan(sp.summand, c.compose(sp.retraction, weak.left), c.compose(sp.retraction, weak.right))
    if not is_coproduct(c, cs):
        raise InvariantViolated(f"split cospan for ({a!r}, {b!r}) is not a coproduct")
    return cs


def idempotents_agree_with_condition_d(m, g: IdentityMagma) -> bool:
    """``e(A, B) = id`` for every pair exactly when condition (d) holds for ``g``."""
    c = m.base
    all_identity = all(
        coproduct_idempotent(m, g, a, b).e == c.identity(m.tensor(a, b))
        for a, b in product(c.objects, repeat=2)
    )
    return all_identity == check_condition_d(m, g).holds


def copair(m, bracket, a, b, x, y):
    """The unique ``k: A(x)B -> X`` with ``k . pi1 = x`` and ``k . pi2 = y``."""
    c = m.base
    cs = canonical_cospan(m, bracket, a, b)
    target = c.cod(x)
    found = [
        k for k in c.hom(cs.apex, target)
        if c.compose(k, cs.left) == x and c.compose(k, cs.right) == y
    ]
    if len(found) != 1:
        raise InvariantViolated(f"{len(found)} copairings of ({x!r}, {y!r}) out of {a!r} (x) {b!r}")
    return found[0]


# ---------------------------------------------------------------- consequences of (a)


def unitors_invertible_from_cocartesian(m) -> bool:
    """Inverses ``[[]_A, 1_A]`` and ``[1_A, []_A]`` of the unitors, checked on both sides."""
    _require_a(m)
    c = m.base
    I = m.unit
    bracket = initiality_from_unit(m).bracket
    for a in c.objects:
        ia = c.identity(a)
        lam_inv = copair(m, bracket, I, a, bracket[a], ia)
        rho_inv = copair(m, bracket, a, I, ia, bracket[a])
        checks = (
            c.compose(lam_inv, m.lam(a)) == ia,
            c.compose(m.lam(a), lam_inv) == c.identity(m.tensor(I, a)),
            c.compose(rho_inv, m.rho(a)) == ia,
            c.compose(m.rho(a), rho_inv) == c.identity(m.tensor(a, I)),
        )
        if not all(checks):
            raise InvariantViolated(f"constructed unitor inverses fail at {a!r}")
    return True


def unique_associator(m, limit: int = DEFAULT_LIMIT) -> NatTrans:
    """``alpha = [[i_A, i_B], i_C]``, shown to be the only natural candidate, plus coherence."""
    _require_a(m)
    c = m.base
    t = m.tensor
    bracket = initiality_from_unit(m).bracket
    comps = {}
    for a, b, d in product(c.objects, repeat=3):
        outer = canonical_cospan(m, bracket, a, t(b, d))
        inner = canonical_cospan(m, bracket, b, d)
        i_a = outer.left
        i_b = c.compose(outer.right, inner.left)
        i_d = c.compose(outer.right, inner.right)
        first = copair(m, bracket, a, b, i_a, i_b)
        comps[(a, b, d)] = copair(m, bracket, t(a, b), d, first, i_d)
    left, right = nested_tensor_functors(m)
    alpha = NatTrans(left, right, comps)
    candidates = natural_transformations_between(left, right, limit)
    if len(candidates) != 1 or dict(candidates[0].components) != comps:
        raise InvariantViolated(f"{len(candidates)} natural associator candidates (expected exactly 1)")
    if pentagon_violations(m, comps) or triangle_violations(m, comps):
        raise InvariantViolated("associator fails the pentagon or triangle")
    return alpha


def unique_braiding(m, limit: int = DEFAULT_LIMIT) -> NatTrans:
    """``sigma = [pi2, pi1]``, shown unique by enumeration, with symmetry and hexagons."""
    _require_a(m)
    c = m.base
    bracket = initiality_from_unit(m).bracket
    comps = {}
    for a, b in product(c.objects, repeat=2):
        swapped = canonical_cospan(m, bracket, b, a)
        comps[(a, b)] = copair(m, bracket, a, b, swapped.right, swapped.left)
    plain, swapped_f = tensor_and_swapped(m)
    sigma = NatTrans(plain, swapped_f, comps)
    candidates = natural_transformations_between(plain, swapped_f, limit)
    if len(candidates) != 1 or dict(candidates[0].components) != comps:
        raise InvariantViolated(f"{len(candidates)} natural braiding candidates (expected exactly 1)")
    alpha = unique_associator(m, limit).components
    if symmetry_violations(m, comps) or hexagon_violations(m, alpha, comps):
        raise InvariantViolated("braiding fails the symmetry law or a hexagon")
    return sigma


def canonical_symmetry(m, limit: int = DEFAULT_LIMIT) -> SymmetricStructure:
    """The symmetric monoidal structure forced by the coproducts, fully validated."""
    s = SymmetricStructure(
        dict(unique_associator(m, limit).components), dict(unique_braiding(m, limit).components)
    )
    report = validate_symmetric(m, s)
    if not report.ok:
        raise InvariantViolated("canonical symmetry fails validation", report)
    return s


def canonical_magma_from_coproducts(m, limit: int = DEFAULT_LIMIT) -> IdentityMagma:
    """``eta_A = []_A`` and ``mu_A = [1_A, 1_A]``; associative, commutative and unique."""
    _require_a(m)
    c = m.base
    bracket = initiality_from_unit(m).bracket
    eta, mu = {}, {}
    for a in c.objects:
        ia = c.identity(a)
        eta[a] = bracket[a]
        mu[a] = copair(m, bracket, a, a, ia, ia)
    g = IdentityMagma(eta, mu)
    report = validate_identity_magma(m, g)
    if not report.ok:
        raise InvariantViolated("codiagonal family fails validation", report)
    s = canonical_symmetry(m, limit)
    for a in c.objects:
        bad = monoid_law_violations(m, s, g.at(a))
        if bad:
            raise InvariantViolated(f"codiagonal on {a!r} fails {bad}")
    everything = enumerate_identity_magmas(m, limit=limit)
    if len(everything) != 1:
        raise InvariantViolated(f"{len(everything)} unital magma structures (expected exactly 1)")
    return g


def check_symmetry_implies_quasi(m, s: SymmetricStructure, g: IdentityMagma) -> bool:
    """Wherever the shuffle equation holds at ``(A, B)``, so does the quasi-symmetry equation."""
    c = m.base
    for a, b in product(c.objects, repeat=2):
        lhs, rhs = diagram1_composites(m, s, g, a, b)
        if lhs == rhs and diagram2_composite(m, g, a, b) != c.identity(m.tensor(a, b)):
            return False
    return True


# ---------------------------------------------------------------- biproducts


def is_cartesian_structure(m) -> bool:
    """Unit terminal and each ``A (x) B`` a product of ``A`` and ``B`` for some projections."""
    c = m.base
    if not is_terminal(c, m.unit):
        return False
    op = opposite_category(c)
    for a, b in product(c.objects, repeat=2):
        p = m.tensor(a, b)
        if not any(
            is_coproduct(op, Cospan(p, p1, p2)) for p1 in c.hom(p, a) for p2 in c.hom(p, b)
        ):
            return False
    return True


def zero_object(c):
    for z in c.objects:
        if is_initial(c, z) and is_terminal(c, z):
            return z
    return None


def has_finite_biproducts(c) -> bool:
    """Brute force: a zero object and, for every pair, a biproduct diagram."""
    z = zero_object(c)
    if z is None:
        return False
    op = opposite_category(c)

    def zero(a, b):
        return c.compose(c.hom(z, b)[0], c.hom(a, z)[0])

    for a, b in product(c.objects, repeat=2):
        ia, ib = c.identity(a), c.identity(b)
        found = False
        for p in c.objects:
            for i1, i2, p1, p2 in product(c.hom(a, p), c.hom(b, p), c.hom(p, a), c.hom(p, b)):
                if (
                    c.compose(p1, i1) == ia and c.compose(p2, i2) == ib
                    and c.compose(p2, i1) == zero(a, b) and c.compose(p1, i2) == zero(b, a)
                    and is_coproduct(c, Cospan(p, i1, i2))
                    and is_coproduct(op, Cospan(p, p1, p2))
                ):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def biproduct_sides(c, cartesian, limit: int = DEFAULT_LIMIT):
    """``(right adjoint to the product exists, finite biproducts exist)``."""
    if cartesian.base is not c:
        raise PreconditionFailed("cartesian structure lives on a different category")
    if not is_cartesian_structure(cartesian):
        raise PreconditionFailed("tensor is not a categorical product with terminal unit")
    adjoint = is_unital(cartesian) and find_right_adjoint_to_tensor(cartesian, limit) is not None
    return adjoint, has_finite_biproducts(c)


def verify_biproduct_corollary(c, cartesian, limit: int = DEFAULT_LIMIT) -> bool:
    adjoint, biproducts = biproduct_sides(c, cartesian, limit)
    return adjoint == biproducts


# ---------------------------------------------------------------- running and replaying


def check_condition(condition, m, s=None, g=None, limit: int = DEFAULT_LIMIT) -> Verdict:
    if condition == "a":
        return check_condition_a(m)
    if condition == "b":
        return check_condition_b(m, s, limit)
    if condition == "c":
        return check_condition_c(m, s, g, limit)
    if condition == "d":
        return check_condition_d(m, g, limit)
    if condition == "e":
        return check_condition_e(m, limit)
    raise ValueError(f"unknown condition {condition!r}")


def replay_verdict(v: Verdict, m, s=None, limit: int = DEFAULT_LIMIT) -> bool:
    """Re-derive the verdict from its witnesses alone; ``True`` when it is reproduced."""
    c = m.base
    kind = v.witnesses.get("kind")
    w = v.witnesses
    if kind == "no-unit":
        return not v.holds and not c.objects
    if kind == "not-initial":
        return not v.holds and len(c.hom(w["unit"], w["target"])) == w["count"] != 1
    if kind == "not-coproduct":
        cs = w["cospan"]
        x, a, b = w["probe"]
        meds = [k for k in c.hom(cs.apex, x) if c.compose(k, cs.left) == a and c.compose(k, cs.right) == b]
        return not v.holds and len(meds) != 1
    if kind == "cocartesian":
        return v.holds and check_condition_a(m).holds
    if kind == "count":
        found = enumerate_identity_magmas(m, require_commutative_monoid=True, s=s, limit=limit)
        return len(found) == w["count"] and v.holds == (len(found) == 1)
    if kind == "no-magma":
        return not v.holds and not enumerate_identity_magmas(m, limit=limit)
    if kind == "magma":
        g = w["magma"]
        if not validate_identity_magma(m, g).ok:
            return False
        if v.condition == "c":
            return v.holds and _diagram1_failure(m, s, g) is None
        return v.holds and _diagram2_failure(m, g) is None
    if kind == "diagram":
        g = w["magma"]
        a, b = w["pair"]
        if v.condition == "c":
            lhs, rhs = diagram1_composites(m, s, g, a, b)
            return not v.holds and lhs != rhs
        return not v.holds and diagram2_composite(m, g, a, b) != c.identity(m.tensor(a, b))
    if kind == "not-unital":
        return not v.holds and not is_invertible(c, w["morphism"])
    if kind == "no-adjoint":
        return not v.holds and _counit_at(m, w["object"]) is None
    if kind == "adjoint":
        ad = w["adjoint"]
        return v.holds and all(
            _factorizations(m, ad.L.ob(a), ad.R.ob(a), ad.epsilon[a], a) is not None for a in c.objects
        )
    return False


@dataclass
class TheoremCheck:
    verdicts: list
    skipped: dict
    agreement: bool

    def verdict(self, condition):
        for v in self.verdicts:
            if v.condition == condition:
                return v
        return None


def check_all(m, s=None, g=None, limit: int = DEFAULT_LIMIT) -> TheoremCheck:
    """Every condition whose inputs exist; ``b`` and ``c`` are skipped without a symmetry."""
    verdicts, skipped = [], {}
    for cond in CONDITIONS:
        if cond in ("b", "c") and s is None and not _empty(m):
            skipped[cond] = "needs a symmetric monoidal structure"
            continue
        verdicts.append(check_condition(cond, m, s, g, limit))
    agreement = len({v.holds for v in verdicts}) <= 1
    return TheoremCheck(verdicts, skipped, agreement)
