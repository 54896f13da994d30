"""Finite sets with the tensor ``A (x) B = A + A x B + B``.

This monoidal structure on sets has the empty set as an initial unit, and
every set carries the left band magma ``(x, y) |-> x`` naturally.  The
quasi-symmetry equation nevertheless fails: its composite sends ``mid(a, b)``
to ``inl(a)``.  Splitting that idempotent recovers the disjoint union.

Because the category of finite sets is infinite, universal properties and
naturality are checked against a probe universe: every function between the
carriers ``{x0, ..., x(n-1)}`` for ``n`` up to a bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import prod

from . import kernels
from .core import DEFAULT_LIMIT, Cospan, ValidationReport, is_coproduct
from .errors import CompositionError, InvariantViolated, SizeLimitExceeded
from .magmal import IdentityMagma, SymmetricStructure


def _show(x) -> str:
    return x if isinstance(x, str) else repr(x)


@dataclass(frozen=True)
class Inl:
    value: object

    def __repr__(self):
        return f"inl({_show(self.value)})"


@dataclass(frozen=True)
class Mid:
    left: object
    right: object

    def __repr__(self):
        return f"mid({_show(self.left)},{_show(self.right)})"


@dataclass(frozen=True)
class Inr:
    value: object

    def __repr__(self):
        return f"inr({_show(self.value)})"


EggerElem = (Inl, Mid, Inr)


@dataclass(frozen=True)
class FinSetObj:
    """A finite set with a fixed element order."""

    elements: tuple
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        index = {x: i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("set elements must be distinct")
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]

    def __repr__(self):
        return "{" + ", ".join(_show(x) for x in self.elements) + "}"


def carrier(n: int, prefix: str = "x") -> FinSetObj:
    """``{prefix0, ..., prefix(n-1)}``."""
    return FinSetObj(tuple(f"{prefix}{i}" for i in range(n)))


EMPTY = FinSetObj(())


@dataclass(frozen=True)
class SetMor:
    """A function, stored as the tuple of images of ``dom.elements``."""

    dom: FinSetObj
    cod: FinSetObj
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.dom):
            raise ValueError("a function needs one image per domain element")
        for y in images:
            if y not in self.cod:
                raise ValueError(f"image {y!r} is not in the codomain")

    @classmethod
    def from_function(cls, dom, cod, fn) -> "SetMor":
        return cls(dom, cod, tuple(fn(x) for x in dom.elements))

    @property
    def name(self):
        return self

    def __call__(self, x):
        return self.images[self.dom.index(x)]

    def __repr__(self):
        return "{" + ", ".join(f"{_show(x)}->{_show(y)}" for x, y in zip(self.dom, self.images)) + "}"


def identity(a: FinSetObj) -> SetMor:
    return SetMor(a, a, a.elements)


def compose(g: SetMor, f: SetMor) -> SetMor:
    if f.cod != g.dom:
        raise CompositionError(f"{g!r} . {f!r} is not composable")
    return SetMor(f.dom, g.cod, tuple(g(f(x)) for x in f.dom.elements))


@lru_cache(maxsize=None)
def all_functions(a: FinSetObj, b: FinSetObj) -> tuple:
    return tuple(SetMor(a, b, images) for images in product(b.elements, repeat=len(a)))


class FinSetCategory:
    """Finite sets as a category; ``objects`` and ``morphisms`` range over the probe universe.

    ``hom``, ``compose`` and ``identity`` work for any finite sets, so the
    generic oracles can be pointed at carriers outside the probe list.
    """

    def __init__(self, probe_bound: int = 3, extra=(), prefix: str = "x"):
        self.probe_bound = probe_bound
        objects = [carrier(n, prefix) for n in range(probe_bound + 1)]
        for a in extra:
            if a not in objects:
                objects.append(a)
        self.objects = tuple(objects)
        self.name = f"FinSet<={probe_bound}"
        self._morphisms = None

    @property
    def morphisms(self) -> tuple:
        if self._morphisms is None:
            self._morphisms = tuple(
                f for a in self.objects for b in self.objects for f in all_functions(a, b)
            )
        return self._morphisms

    def has_object(self, a):
        return isinstance(a, FinSetObj)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def identity(self, a):
        return identity(a)

    def hom(self, a, b):
        return all_functions(a, b)

    def compose(self, g, f):
        return compose(g, f)


# ---------------------------------------------------------------- the tensor


class _Star:
    def __repr__(self):
        return "*"


STAR = _Star()


def _split(e):
    """Read ``A (x) B`` as pairs in ``(A + *) x (B + *)`` minus ``(*, *)``."""
    if isinstance(e, Inl):
        return e.value, STAR
    if isinstance(e, Mid):
        return e.left, e.right
    if isinstance(e, Inr):
        return STAR, e.value
    raise TypeError(f"{e!r} is not a tensor element")


def _join(left, right):
    if left is STAR:
        return STAR if right is STAR else Inr(right)
    return Inl(left) if right is STAR else Mid(left, right)


def _lift(f, x):
    return STAR if x is STAR else f(x)


@lru_cache(maxsize=None)
def egger_tensor(a: FinSetObj, b: FinSetObj) -> FinSetObj:
    """Elements ``inl(a)``, then ``mid(a, b)`` row-major, then ``inr(b)``."""
    return FinSetObj(
        tuple(Inl(x) for x in a)
        + tuple(Mid(x, y) for x in a for y in b)
        + tuple(Inr(y) for y in b)
    )


def egger_tensor_mor(f: SetMor, g: SetMor) -> SetMor:
    dom, cod = egger_tensor(f.dom, g.dom), egger_tensor(f.cod, g.cod)
    return SetMor.from_function(
        dom, cod, lambda e: _join(*(_lift(h, x) for h, x in zip((f, g), _split(e))))
    )


def egger_lambda(a: FinSetObj) -> SetMor:
    """``a |-> inr(a)`` into ``{} (x) A``."""
    return SetMor.from_function(a, egger_tensor(EMPTY, a), Inr)


def egger_rho(a: FinSetObj) -> SetMor:
    """``a |-> inl(a)`` into ``A (x) {}``."""
    return SetMor.from_function(a, egger_tensor(a, EMPTY), Inl)


def egger_alpha(a, b, c) -> SetMor:
    """Regroup ``((x, y), z)`` as ``(x, (y, z))``, with ``*`` for absent components."""

    def regroup(e):
        u, z = _split(e)
        x, y = (STAR, STAR) if u is STAR else _split(u)
        return _join(x, _join(y, z))

    return SetMor.from_function(egger_tensor(egger_tensor(a, b), c), egger_tensor(a, egger_tensor(b, c)), regroup)


def egger_alpha_inverse(a, b, c) -> SetMor:
    def regroup(e):
        x, v = _split(e)
        y, z = (STAR, STAR) if v is STAR else _split(v)
        return _join(_join(x, y), z)

    return SetMor.from_function(egger_tensor(a, egger_tensor(b, c)), egger_tensor(egger_tensor(a, b), c), regroup)


def egger_sigma(a, b) -> SetMor:
    def swap(e):
        x, y = _split(e)
        return _join(y, x)

    return SetMor.from_function(egger_tensor(a, b), egger_tensor(b, a), swap)


class _Components:
    """A lazily computed, cached family of components indexed by objects or tuples of them."""

    def __init__(self, build):
        self._build = build
        self._cache = {}

    def __getitem__(self, key):
        if key not in self._cache:
            self._cache[key] = self._build(*key) if isinstance(key, tuple) else self._build(key)
        return self._cache[key]

    def get(self, key, default=None):
        try:
            return self[key]
        except (KeyError, TypeError, ValueError):
            return default


class EggerMagmal:
    """The magmal structure on finite sets, over a probe universe of the given bound."""

    def __init__(self, probe_bound: int = 3, extra=()):
        self.base = FinSetCategory(probe_bound, extra)
        self.unit = EMPTY
        self.name = "egger"

    def tensor(self, a, b):
        return egger_tensor(a, b)

    def tensor_mor(self, f, g):
        return egger_tensor_mor(f, g)

    def lam(self, a):
        return egger_lambda(a)

    def rho(self, a):
        return egger_rho(a)


def egger_symmetry() -> SymmetricStructure:
    return SymmetricStructure(_Components(egger_alpha), _Components(egger_sigma))


@dataclass(frozen=True)
class EggerCoherence:
    alpha: SetMor
    alpha_inverse: SetMor
    sigma: SetMor
    lam: SetMor
    rho: SetMor


def egger_coherence_violations(carriers, probe_bound: int = 2) -> list:
    """Every coherence or naturality law that fails on the given carriers.

    Pentagon over all quadruples of carriers; triangle, both hexagons and
    the symmetry law over pairs and triples; naturality of each component
    in each slot against every probe function of size at most ``probe_bound``.
    """
    carriers = list(dict.fromkeys(carriers))
    t, tm = egger_tensor, egger_tensor_mor
    bad = []
    for a, b, c in product(carriers, repeat=3):
        al = egger_alpha(a, b, c)
        if compose(egger_alpha_inverse(a, b, c), al) != identity(al.dom):
            bad.append(("alpha-inverse", a, b, c))
        lhs = compose(egger_alpha(b, c, a), compose(egger_sigma(a, t(b, c)), al))
        rhs = compose(tm(identity(b), egger_sigma(a, c)), compose(egger_alpha(b, a, c), tm(egger_sigma(a, b), identity(c))))
        if lhs != rhs:
            bad.append(("hexagon-1", a, b, c))
        lhs = compose(
            egger_alpha_inverse(c, a, b),
            compose(egger_sigma(t(a, b), c), egger_alpha_inverse(a, b, c)),
        )
        rhs = compose(
            tm(egger_sigma(a, c), identity(b)),
            compose(egger_alpha_inverse(a, c, b), tm(identity(a), egger_sigma(b, c))),
        )
        if lhs != rhs:
            bad.append(("hexagon-2", a, b, c))
    for a, b, c, d in product(carriers, repeat=4):
        lhs = compose(egger_alpha(a, b, t(c, d)), egger_alpha(t(a, b), c, d))
        rhs = compose(
            tm(identity(a), egger_alpha(b, c, d)),
            compose(egger_alpha(a, t(b, c), d), tm(egger_alpha(a, b, c), identity(d))),
        )
        if lhs != rhs:
            bad.append(("pentagon", a, b, c, d))
    for a, b in product(carriers, repeat=2):
        lhs = compose(egger_alpha(a, EMPTY, b), tm(egger_rho(a), identity(b)))
        if lhs != tm(identity(a), egger_lambda(b)):
            bad.append(("triangle", a, b))
        if compose(egger_sigma(b, a), egger_sigma(a, b)) != identity(t(a, b)):
            bad.append(("symmetry", a, b))
    if compose(egger_lambda(EMPTY), identity(EMPTY)) != egger_rho(EMPTY):
        bad.append(("unit-coherence",))
    probes = FinSetCategory(probe_bound).morphisms
    for f in probes:
        x, y = f.dom, f.cod
        if compose(egger_lambda(y), f) != compose(tm(identity(EMPTY), f), egger_lambda(x)):
            bad.append(("lambda-naturality", f))
        if compose(egger_rho(y), f) != compose(tm(f, identity(EMPTY)), egger_rho(x)):
            bad.append(("rho-naturality", f))
        for a, b in product(carriers, repeat=2):
            ia, ib = identity(a), identity(b)
            slots = [
                ((f, ia, ib), (x, a, b), (y, a, b)),
                ((ia, f, ib), (a, x, b), (a, y, b)),
                ((ia, ib, f), (a, b, x), (a, b, y)),
            ]
            for (p, q, r), src, tgt in slots:
                lhs = compose(egger_alpha(*tgt), tm(tm(p, q), r))
                rhs = compose(tm(p, tm(q, r)), egger_alpha(*src))
                if lhs != rhs:
                    bad.append(("alpha-naturality", f, src))
        for a in carriers:
            ia = identity(a)
            if compose(egger_sigma(y, a), tm(f, ia)) != compose(tm(ia, f), egger_sigma(x, a)):
                bad.append(("sigma-naturality", f, a))
            if compose(egger_sigma(a, y), tm(ia, f)) != compose(tm(f, ia), egger_sigma(a, x)):
                bad.append(("sigma-naturality", a, f))
    return bad


def egger_coherence(a: FinSetObj, b: FinSetObj, c: FinSetObj, probe_bound: int = 2) -> EggerCoherence:
    """Associator, braiding and unitors at the given carriers, after checking every law."""
    bad = egger_coherence_violations((a, b, c), probe_bound)
    if bad:
        raise InvariantViolated(f"coherence fails: {bad[0]!r}")
    return EggerCoherence(
        egger_alpha(a, b, c), egger_alpha_inverse(a, b, c), egger_sigma(a, b), egger_lambda(a), egger_rho(a)
    )


# ---------------------------------------------------------------- the left band


def _first(e):
    x, y = _split(e)
    return x if x is not STAR else y


def left_band_magma(a: FinSetObj):
    """``eta`` the empty map, ``mu`` keeps the left component when present."""
    return SetMor(EMPTY, a, ()), SetMor.from_function(egger_tensor(a, a), a, _first)


def left_band_identity_magma() -> IdentityMagma:
    return IdentityMagma(
        _Components(lambda a: left_band_magma(a)[0]), _Components(lambda a: left_band_magma(a)[1])
    )


def egger_hypotheses_report(carriers=(), probe_bound: int = 3) -> ValidationReport:
    """Unit laws and naturality of the left band over the probe universe plus ``carriers``."""
    from .magmal import validate_identity_magma

    m = EggerMagmal(probe_bound, extra=carriers)
    return validate_identity_magma(m, left_band_identity_magma())


@dataclass(frozen=True)
class Diagram2Witness:
    element: object
    image: object
    trace: tuple

    def describe(self) -> str:
        return " |-> ".join(f"{v!r}" for _, v in self.trace)


def diagram2_trace(a: FinSetObj, b: FinSetObj, x):
    """The path of ``x`` through each arrow of the quasi-symmetry composite."""
    eta_a, _ = left_band_magma(a)
    eta_b, _ = left_band_magma(b)
    _, mu = left_band_magma(egger_tensor(a, b))
    first = egger_tensor_mor(egger_rho(a), egger_lambda(b))
    second = egger_tensor_mor(
        egger_tensor_mor(identity(a), eta_b), egger_tensor_mor(eta_a, identity(b))
    )
    v1 = first(x)
    v2 = second(v1)
    v3 = mu(v2)
    return (
        ("A(x)B", x),
        ("rho_A (x) lam_B", v1),
        ("(A (x) eta_B) (x) (eta_A (x) B)", v2),
        ("mu_{A(x)B}", v3),
    )


def diagram2_map(a: FinSetObj, b: FinSetObj) -> SetMor:
    t = egger_tensor(a, b)
    return SetMor.from_function(t, t, lambda x: diagram2_trace(a, b, x)[-1][1])


def check_diagram2_egger(a: FinSetObj, b: FinSetObj) -> Diagram2Witness | None:
    """First element of ``A (x) B`` moved by the quasi-symmetry composite, or ``None``."""
    for x in egger_tensor(a, b):
        trace = diagram2_trace(a, b, x)
        if trace[-1][1] != x:
            return Diagram2Witness(x, trace[-1][1], trace)
    return None


@dataclass(frozen=True)
class EggerCoproduct:
    summand: FinSetObj
    retraction: SetMor
    section: SetMor
    cospan: Cospan
    idempotent: SetMor
    verified: bool


def egger_synthesize_coproduct(a: FinSetObj, b: FinSetObj, probe_bound: int = 3) -> EggerCoproduct:
    """Split the quasi-symmetry idempotent through its image and test the result as a coproduct."""
    from .characterize import coproduct_idempotent, weak_coprojections

    m = EggerMagmal(probe_bound)
    g = left_band_identity_magma()
    e = coproduct_idempotent(m, g, a, b).e
    if e != diagram2_map(a, b):
        raise InvariantViolated("generic and elementwise idempotents disagree")
    t = egger_tensor(a, b)
    summand = FinSetObj(tuple(x for x in t if e(x) == x))
    retraction = SetMor.from_function(t, summand, e)
    section = SetMor.from_function(summand, t, lambda x: x)
    if compose(section, retraction) != e or compose(retraction, section) != identity(summand):
        raise InvariantViolated("image factorization does not split the idempotent")
    weak = weak_coprojections(m, g, a, b)
    cospan = Cospan(summand, compose(retraction, weak.left), compose(retraction, weak.right))
    return EggerCoproduct(summand, retraction, section, cospan, e, is_coproduct(m.base, cospan))


# ---------------------------------------------------------------- monoids are semigroups


def mu_from_operation(m_obj: FinSetObj, table) -> SetMor:
    """Extend a binary operation on ``M`` to ``M (x) M -> M``, identity on the outer summands."""
    n = len(m_obj)
    elems = m_obj.elements

    def mu(e):
        if isinstance(e, Mid):
            return elems[table[m_obj.index(e.left) * n + m_obj.index(e.right)]]
        return _first(e)

    return SetMor.from_function(egger_tensor(m_obj, m_obj), m_obj, mu)


def egger_monoid_law_violations(m_obj: FinSetObj, eta: SetMor, mu: SetMor) -> list:
    """Unit laws and associativity (through the associator) for ``(M, eta, mu)``."""
    bad = []
    im = identity(m_obj)
    if compose(mu, compose(egger_tensor_mor(eta, im), egger_lambda(m_obj))) != im:
        bad.append("left-unit")
    if compose(mu, compose(egger_tensor_mor(im, eta), egger_rho(m_obj))) != im:
        bad.append("right-unit")
    lhs = compose(mu, egger_tensor_mor(mu, im))
    rhs = compose(mu, compose(egger_tensor_mor(im, mu), egger_alpha(m_obj, m_obj, m_obj)))
    if lhs != rhs:
        bad.append("associativity")
    return bad


def _candidate_values(m_obj: FinSetObj, eta: SetMor):
    """Per element of ``M (x) M``, the values ``mu`` may take under the unit laws."""
    t = egger_tensor(m_obj, m_obj)
    im = identity(m_obj)
    forced = {}
    for path in (
        compose(egger_tensor_mor(eta, im), egger_lambda(m_obj)),
        compose(egger_tensor_mor(im, eta), egger_rho(m_obj)),
    ):
        for x in m_obj:
            p = path(x)
            if forced.setdefault(p, x) != x:
                return None
    return [[forced[e]] if e in forced else list(m_obj.elements) for e in t.elements]


def egger_monoid_count(n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Count monoid structures ``(eta, mu)`` on an ``n``-element set.

    ``eta`` ranges over maps out of the empty set (exactly one); ``mu`` over
    maps allowed by the unit laws, then filtered by associativity evaluated
    element by element through the associator.
    """
    m_obj = carrier(n, "m")
    t = egger_tensor(m_obj, m_obj)
    total = 0
    for eta in all_functions(EMPTY, m_obj):
        options = _candidate_values(m_obj, eta)
        if options is None:
            continue
        space = prod(len(o) for o in options)
        if space > limit:
            raise SizeLimitExceeded("egger monoid search", space, limit)
        triple = egger_tensor(t, m_obj)
        alpha = egger_alpha(m_obj, m_obj, m_obj)
        index_t = t.index
        # for each z in (M(x)M)(x)M: where the two bracketings read mu
        plan = []
        for z in triple:
            u, w = _split(z)
            x, v = _split(alpha(z))
            plan.append((u, w, x, v))
        for images in product(*options):
            mu_img = images

            def mu_of(e):
                return mu_img[index_t(e)]

            ok = True
            for u, w, x, v in plan:
                left = mu_of(_join(_lift(mu_of, u), w))
                right = mu_of(_join(x, _lift(mu_of, v)))
                if left != right:
                    ok = False
                    break
            if ok:
                total += 1
    return total


def semigroup_count(n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Associative binary operations on ``n`` labels, by the compiled or Python kernel."""
    space = n ** (n * n)
    if space > limit:
        raise SizeLimitExceeded("semigroup enumeration", space, limit)
    return kernels.count_associative_operations(n)


def monoid_semigroup_correspondence(n: int, limit: int = DEFAULT_LIMIT):
    return egger_monoid_count(n, limit), semigroup_count(n, limit)
