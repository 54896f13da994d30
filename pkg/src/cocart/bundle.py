"""Bundle files: a YAML document describing a category and optional structure.

Layout (all names are strings; composition is a list of ``[g, f, g.f]``)::

    meta:       {name: ..., notes: ...}
    category:
      objects:     [A, B, ...]
      morphisms:   [[name, dom, cod], ...]
      identities:  {A: name, ...}
      compose:     [[g, f, composite], ...]
    magmal:
      unit:              I
      tensor_objects:    [[A, B, A(x)B], ...]
      tensor_morphisms:  [[f, g, f(x)g], ...]
      lambda:            {A: name, ...}
      rho:               {A: name, ...}
    symmetry:
      alpha:  [[A, B, C, name], ...]
      sigma:  [[A, B, name], ...]
    magma:
      eta:  {A: name, ...}
      mu:   {A: name, ...}

Plain scalars are always read as strings, so ``0`` and ``'0'`` are the same name.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .core import FinCat, ValidationReport, validate_category
from .errors import LawError, ParseError, ResolveError
from .magmal import (
    IdentityMagma,
    MagmalStructure,
    SymmetricStructure,
    validate_identity_magma,
    validate_magmal,
    validate_symmetric,
)

SECTIONS = ("meta", "category", "magmal", "symmetry", "magma")


@dataclass(eq=False)
class Bundle:
    category: FinCat
    magmal: MagmalStructure | None = None
    symmetry: SymmetricStructure | None = None
    magma: IdentityMagma | None = None
    name: str = ""
    notes: str = ""

    def to_document(self) -> dict:
        """Canonical document: declarations keep their order, table rows are sorted by it."""
        c = self.category
        obj = {a: i for i, a in enumerate(c.objects)}
        mor = {m.name: i for i, m in enumerate(c.morphisms)}

        doc = {}
        meta = {}
        if self.name:
            meta["name"] = self.name
        if self.notes:
            meta["notes"] = self.notes
        if meta:
            doc["meta"] = meta
        compose = sorted(c.compose_table.items(), key=lambda kv: (mor.get(kv[0][1], len(mor)), mor.get(kv[0][0], len(mor))))
        doc["category"] = {
            "objects": [str(a) for a in c.objects],
            "morphisms": [[str(m.name), str(m.dom), str(m.cod)] for m in c.morphisms],
            "identities": {str(a): str(c.identities[a]) for a in c.objects if a in c.identities},
            "compose": [[str(g), str(f), str(h)] for (g, f), h in compose],
        }

        def objects_first(table):
            return sorted(table.items(), key=lambda kv: tuple(obj.get(k, len(obj)) for k in _key(kv[0])))

        def unary(table):
            return {str(a): str(x) for a, x in objects_first(table)}

        m = self.magmal
        if m is not None:
            tmor = sorted(m.tensor_morphisms.items(), key=lambda kv: tuple(mor.get(k, len(mor)) for k in kv[0]))
            doc["magmal"] = {
                "unit": str(m.unit),
                "tensor_objects": [[str(a), str(b), str(x)] for (a, b), x in objects_first(m.tensor_objects)],
                "tensor_morphisms": [[str(f), str(g), str(h)] for (f, g), h in tmor],
                "lambda": unary(m.lambdas),
                "rho": unary(m.rhos),
            }
        if self.symmetry is not None:
            doc["symmetry"] = {
                "alpha": [[*map(str, k), str(v)] for k, v in objects_first(self.symmetry.alpha)],
                "sigma": [[*map(str, k), str(v)] for k, v in objects_first(self.symmetry.sigma)],
            }
        if self.magma is not None:
            doc["magma"] = {"eta": unary(self.magma.eta), "mu": unary(self.magma.mu)}
        return doc

    def __eq__(self, other):
        if not isinstance(other, Bundle):
            return NotImplemented
        return self.to_document() == other.to_document()


def _key(k):
    return k if isinstance(k, tuple) else (k,)


def serialize_bundle(bundle: Bundle) -> str:
    return yaml.safe_dump(
        bundle.to_document(), sort_keys=False, default_flow_style=None, allow_unicode=True, width=100
    )


def dump_bundle(bundle: Bundle, path) -> None:
    Path(path).write_text(serialize_bundle(bundle), encoding="utf-8")


def load_bundle(path, validate=True) -> Bundle:
    return parse_bundle(Path(path).read_text(encoding="utf-8"), validate=validate)


# ---------------------------------------------------------------- parsing


class _Doc:
    """Plain data converted from a YAML node tree, remembering node positions."""

    def __init__(self, root):
        self.positions = {}
        self.data = self._convert(root, ())

    def _convert(self, node, path):
        self.positions[path] = (node.start_mark.line + 1, node.start_mark.column + 1)
        if isinstance(node, yaml.ScalarNode):
            return node.value
        if isinstance(node, yaml.SequenceNode):
            return [self._convert(n, path + (i,)) for i, n in enumerate(node.value)]
        if isinstance(node, yaml.MappingNode):
            out = {}
            for k, v in node.value:
                if not isinstance(k, yaml.ScalarNode):
                    raise ParseError("mapping keys must be plain names", *self._mark(k))
                if k.value in out:
                    raise ParseError(f"duplicate key {k.value!r}", *self._mark(k))
                out[k.value] = self._convert(v, path + (k.value,))
            return out
        raise ParseError("unsupported YAML node", *self._mark(node))

    @staticmethod
    def _mark(node):
        return node.start_mark.line + 1, node.start_mark.column + 1

    def where(self, path):
        while path not in self.positions and path:
            path = path[:-1]
        return self.positions.get(path, (None, None))


def _require(doc, path, kind, value):
    if not isinstance(value, kind):
        want = {dict: "a mapping", list: "a list", str: "a name"}[kind]
        raise ParseError(f"{'.'.join(map(str, path)) or 'document'} must be {want}", *doc.where(path))
    return value


def _section(doc, key, required=False):
    data = doc.data
    if key not in data:
        if required:
            raise ParseError(f"missing required section {key!r}", *doc.where(()))
        return None
    return _require(doc, (key,), dict, data[key])


def _field(doc, section, sec, key, kind):
    if key not in sec:
        raise ParseError(f"section {section!r} is missing {key!r}", *doc.where((section,)))
    return _require(doc, (section, key), kind, sec[key])


def _rows(doc, section, key, rows, arity):
    out = []
    for i, row in enumerate(rows):
        path = (section, key, i)
        _require(doc, path, list, row)
        if len(row) != arity:
            raise ParseError(f"{section}.{key}[{i}] must have {arity} entries", *doc.where(path))
        for j, cell in enumerate(row):
            _require(doc, path + (j,), str, cell)
        out.append((path, row))
    return out


def _names_map(doc, section, key, mapping):
    for k, v in mapping.items():
        _require(doc, (section, key, k), str, v)
    return mapping


def parse_bundle(text: str, validate: bool = True) -> Bundle:
    """Structural parse, name resolution, then (optionally) law validation."""
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        line = mark.line + 1 if mark else None
        col = mark.column + 1 if mark else None
        raise ParseError(f"malformed bundle: {exc.problem or exc}", line, col) from None
    if root is None:
        raise ParseError("empty bundle", 1, 1)
    doc = _Doc(root)
    _require(doc, (), dict, doc.data)
    for key in doc.data:
        if key not in SECTIONS:
            raise ParseError(f"unknown section {key!r}", *doc.where((key,)))

    meta = _section(doc, "meta") or {}
    cat = _section(doc, "category", required=True)
    objects = _field(doc, "category", cat, "objects", list)
    for i, a in enumerate(objects):
        _require(doc, ("category", "objects", i), str, a)
    morphisms = _rows(doc, "category", "morphisms", _field(doc, "category", cat, "morphisms", list), 3)
    identities = _names_map(doc, "category", "identities", _field(doc, "category", cat, "identities", dict))
    compose = _rows(doc, "category", "compose", _field(doc, "category", cat, "compose", list), 3)

    object_set = set(objects)
    morphism_set = {row[0] for _, row in morphisms}

    def need_object(name, path):
        if name not in object_set:
            raise ResolveError(f"undeclared object {name!r}", *doc.where(path))

    def need_morphism(name, path):
        if name not in morphism_set:
            raise ResolveError(f"undeclared morphism {name!r}", *doc.where(path))

    for path, (_, d, c) in morphisms:
        need_object(d, path + (1,))
        need_object(c, path + (2,))
    for a, i in identities.items():
        need_object(a, ("category", "identities", a))
        need_morphism(i, ("category", "identities", a))
    for path, row in compose:
        for j, name in enumerate(row):
            need_morphism(name, path + (j,))

    category = FinCat(
        objects,
        [tuple(row) for _, row in morphisms],
        identities,
        {(g, f): h for _, (g, f, h) in compose},
        name=meta.get("name", "") if isinstance(meta.get("name", ""), str) else "",
    )

    magmal = None
    sec = _section(doc, "magmal")
    if sec is not None:
        unit = _field(doc, "magmal", sec, "unit", str)
        need_object(unit, ("magmal", "unit"))
        tobj = _rows(doc, "magmal", "tensor_objects", _field(doc, "magmal", sec, "tensor_objects", list), 3)
        tmor = _rows(doc, "magmal", "tensor_morphisms", _field(doc, "magmal", sec, "tensor_morphisms", list), 3)
        lam = _names_map(doc, "magmal", "lambda", _field(doc, "magmal", sec, "lambda", dict))
        rho = _names_map(doc, "magmal", "rho", _field(doc, "magmal", sec, "rho", dict))
        for path, row in tobj:
            for j, name in enumerate(row):
                need_object(name, path + (j,))
        for path, row in tmor:
            for j, name in enumerate(row):
                need_morphism(name, path + (j,))
        for key, table in (("lambda", lam), ("rho", rho)):
            for a, x in table.items():
                need_object(a, ("magmal", key, a))
                need_morphism(x, ("magmal", key, a))
        magmal = MagmalStructure(
            category,
            {(a, b): x for _, (a, b, x) in tobj},
            {(f, g): h for _, (f, g, h) in tmor},
            unit,
            lam,
            rho,
        )

    symmetry = None
    sec = _section(doc, "symmetry")
    if sec is not None:
        alpha = _rows(doc, "symmetry", "alpha", _field(doc, "symmetry", sec, "alpha", list), 4)
        sigma = _rows(doc, "symmetry", "sigma", _field(doc, "symmetry", sec, "sigma", list), 3)
        for path, row in alpha + sigma:
            for j, name in enumerate(row[:-1]):
                need_object(name, path + (j,))
            need_morphism(row[-1], path + (len(row) - 1,))
        symmetry = SymmetricStructure(
            {(a, b, c): x for _, (a, b, c, x) in alpha},
            {(a, b): x for _, (a, b, x) in sigma},
        )

    magma = None
    sec = _section(doc, "magma")
    if sec is not None:
        eta = _names_map(doc, "magma", "eta", _field(doc, "magma", sec, "eta", dict))
        mu = _names_map(doc, "magma", "mu", _field(doc, "magma", sec, "mu", dict))
        for key, table in (("eta", eta), ("mu", mu)):
            for a, x in table.items():
                need_object(a, ("magma", key, a))
                need_morphism(x, ("magma", key, a))
        magma = IdentityMagma(eta, mu)

    if (symmetry is not None or magma is not None) and magmal is None:
        which = "symmetry" if symmetry is not None else "magma"
        raise ParseError(f"section {which!r} needs a 'magmal' section", *doc.where((which,)))

    bundle = Bundle(
        category,
        magmal,
        symmetry,
        magma,
        name=str(meta.get("name", "")),
        notes=str(meta.get("notes", "")),
    )
    if validate:
        report = validate_bundle(bundle)
        if not report.ok:
            first = report.violations[0]
            raise LawError(f"bundle violates {len(report)} law(s); first: {first}", report=report)
    return bundle


def validate_bundle(bundle: Bundle) -> ValidationReport:
    """Category laws, then magmal, symmetric and magma laws when present."""
    report = ValidationReport(f"bundle {bundle.name}".strip())
    report.extend(validate_category(bundle.category))
    if not report.ok or bundle.magmal is None:
        return report
    report.extend(validate_magmal(bundle.magmal))
    if not report.ok:
        return report
    if bundle.symmetry is not None:
        report.extend(validate_symmetric(bundle.magmal, bundle.symmetry))
    if bundle.magma is not None:
        report.extend(validate_identity_magma(bundle.magmal, bundle.magma))
    return report
