"""Command line front end and the report format.

Commands read bundle files (see :mod:`cocart.bundle`); a path of the form
``fixture:NAME`` loads one of the shipped fixtures instead.  Exit status is
0 when a command ran to completion (negative verdicts included), 1 for bad
input or missing structure, 2 when an enumeration would exceed ``--limit``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import product

from .bundle import Bundle, dump_bundle, load_bundle
from .characterize import (
    CONDITIONS,
    AdjointData,
    Verdict,
    check_all,
    check_condition,
    replay_verdict,
    synthesize_coproduct,
)
from .core import DEFAULT_LIMIT, Cospan
from .errors import (
    BundleError,
    CocartError,
    LawError,
    MissingStructure,
    PreconditionFailed,
    SizeLimitExceeded,
)
from .magmal import IdentityMagma, enumerate_identity_magmas
from .splitting import all_idempotents_split, idempotents, transport_magmal_to_karoubi

EXIT_OK, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2
NO_MAGMA_EXISTS = "no magma structure exists"


@dataclass
class Report:
    """What a command found: verdicts with witnesses, free-form findings, timing and limits hit."""

    command: str
    subject: str = ""
    verdicts: list = field(default_factory=list)
    replayed: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)
    agreement: bool | None = None
    findings: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    timing: float = 0.0
    limit: int = DEFAULT_LIMIT
    limits_hit: list = field(default_factory=list)

    def verdict(self, condition) -> Verdict | None:
        return next((v for v in self.verdicts if v.condition == condition), None)

    def to_document(self) -> dict:
        return {
            "command": self.command,
            "subject": self.subject,
            "verdicts": [
                {
                    "condition": v.condition,
                    "holds": v.holds,
                    "reason": v.reason,
                    "witnesses": plain(v.witnesses),
                    "replayed": self.replayed.get(v.condition),
                }
                for v in self.verdicts
            ],
            "skipped": dict(self.skipped),
            "agreement": self.agreement,
            "findings": plain(self.findings),
            "timing": round(self.timing, 6),
            "limit": self.limit,
            "limits_hit": list(self.limits_hit),
        }

    def to_text(self) -> str:
        out = [f"{self.command}: {self.subject}" if self.subject else self.command]
        for v in self.verdicts:
            line = "  " + v.summary()
            if self.replayed.get(v.condition) is False:
                line += "  [witness did not replay]"
            out.append(line)
        for cond, why in self.skipped.items():
            out.append(f"  ({cond}) skipped: {why}")
        if self.agreement is not None:
            out.append("  conditions agree" if self.agreement else "  TOOLKIT BUG: conditions disagree")
        out.extend("  " + line for line in self.lines)
        for hit in self.limits_hit:
            out.append(f"  limit hit: {hit}")
        out.append(f"  ({self.timing:.3f}s)")
        return "\n".join(out)


def plain(x):
    """Witness data as JSON-ready names, lists and mappings."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, Verdict):
        return {"condition": x.condition, "holds": x.holds, "reason": x.reason}
    if isinstance(x, Cospan):
        return {"apex": plain(x.apex), "left": plain(x.left), "right": plain(x.right)}
    if isinstance(x, IdentityMagma):
        return {"eta": plain(x.eta), "mu": plain(x.mu)}
    if isinstance(x, AdjointData):
        return {
            "L": plain(x.L.on_objects),
            "R": plain(x.R.on_objects),
            "epsilon": plain(x.epsilon),
        }
    if isinstance(x, Mapping):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    return repr(x)


# ---------------------------------------------------------------- library entry points


class _NoStructure:
    """Stand-in magmal structure over the empty category, where no unit can exist."""

    def __init__(self, category):
        self.base = category
        self.unit = None


def _magmal_for(bundle: Bundle, what: str):
    if bundle.magmal is not None:
        return bundle.magmal
    if not bundle.category.objects:
        return _NoStructure(bundle.category)
    raise MissingStructure(f"{what} needs a 'magmal' section")


def run_check(bundle: Bundle, condition: str = "all", limit: int = DEFAULT_LIMIT) -> Report:
    """Evaluate one condition, or all five plus their agreement."""
    start = time.perf_counter()
    m = _magmal_for(bundle, f"condition {condition}")
    s, g = bundle.symmetry, bundle.magma
    report = Report("check", bundle.name or "bundle", limit=limit)
    if condition == "all":
        result = check_all(m, s, g, limit)
        report.verdicts = result.verdicts
        report.skipped = result.skipped
        report.agreement = result.agreement
    elif condition in CONDITIONS:
        if condition in ("b", "c") and s is None and bundle.category.objects:
            raise MissingStructure(f"condition {condition} needs a 'symmetry' section")
        report.verdicts = [check_condition(condition, m, s, g, limit)]
    else:
        raise PreconditionFailed(f"unknown condition {condition!r}")
    for v in report.verdicts:
        report.replayed[v.condition] = replay_verdict(v, m, s, limit)
    report.timing = time.perf_counter() - start
    return report


def _find_magma(m, given, limit):
    if given is not None:
        return given
    found = enumerate_identity_magmas(m, limit=limit)
    return found[0] if found else None


def run_synthesize(bundle: Bundle, karoubi: bool = False, limit: int = DEFAULT_LIMIT):
    """Split the quasi-symmetry idempotent at every pair; returns ``(report, bundle)``.

    With ``karoubi`` the category is first replaced by its idempotent
    completion and all structure is transported there.  The magma block is
    optional: without it one is searched for, and its absence is reported.
    """
    start = time.perf_counter()
    if bundle.magmal is None:
        raise MissingStructure("synthesize needs a 'magmal' section")
    m, g, s = bundle.magmal, bundle.magma, bundle.symmetry
    report = Report("synthesize", bundle.name or "bundle", limit=limit)
    category = bundle.category
    if karoubi:
        m, g, s = transport_magmal_to_karoubi(m, g, s)
        category = m.base
        report.lines.append(
            f"idempotent completion: {len(category.objects)} objects, {len(category.morphisms)} morphisms"
        )
    g = _find_magma(m, g, limit)
    out = Bundle(
        category, m, s, g,
        name=f"kar({bundle.name})" if karoubi and bundle.name else bundle.name,
        notes=bundle.notes,
    )
    split_all = all_idempotents_split(category)
    report.findings["idempotents"] = len(idempotents(category))
    report.findings["all_idempotents_split"] = split_all
    report.lines.append("every idempotent splits" if split_all else "some idempotent does not split")
    if g is None:
        report.findings["magma"] = None
        report.lines.append(NO_MAGMA_EXISTS)
        report.timing = time.perf_counter() - start
        return report, out
    report.findings["magma"] = g
    coproducts = {}
    for a, b in product(category.objects, repeat=2):
        cs = synthesize_coproduct(m, g, a, b)
        key = f"{a},{b}"
        coproducts[key] = cs
        if cs is None:
            report.lines.append(f"({a}, {b}): idempotent does not split")
        else:
            report.lines.append(f"({a}, {b}): coproduct {cs.apex} with {cs.left}, {cs.right}")
    report.findings["coproducts"] = coproducts
    report.findings["all_coproducts"] = all(cs is not None for cs in coproducts.values())
    report.timing = time.perf_counter() - start
    return report, out


def run_karoubi(bundle: Bundle) -> Bundle:
    """The idempotent completion as a bundle, with whatever structure the input carries."""
    from .splitting import karoubi_envelope

    if bundle.magmal is None:
        kar, _ = karoubi_envelope(bundle.category)
        return Bundle(kar, name=f"kar({bundle.name})" if bundle.name else "", notes=bundle.notes)
    m, g, s = transport_magmal_to_karoubi(bundle.magmal, bundle.magma, bundle.symmetry)
    return Bundle(m.base, m, s, g, name=f"kar({bundle.name})" if bundle.name else "", notes=bundle.notes)


def run_demo_egger(size_a: int, size_b: int, probe_bound: int = 3, limit: int = DEFAULT_LIMIT,
                   monoid_sizes=(1, 2, 3)) -> Report:
    """Walk through the finite-set counterexample for the given carrier sizes."""
    from . import concrete as eg

    if size_a < 0 or size_b < 0 or probe_bound < 0:
        raise PreconditionFailed("sizes must be non-negative")
    start = time.perf_counter()
    a, b = eg.carrier(size_a, "a"), eg.carrier(size_b, "b")
    report = Report("demo egger", f"|A|={size_a}, |B|={size_b}, probes up to {probe_bound}", limit=limit)
    say = report.lines.append

    coherence = eg.egger_coherence_violations((a, b), min(probe_bound, 2))
    hypotheses = eg.egger_hypotheses_report((a, b), probe_bound)
    report.findings["coherence_ok"] = not coherence
    report.findings["hypotheses_ok"] = hypotheses.ok
    say(f"A = {a!r}, B = {b!r}")
    say("coherence laws: " + ("all hold" if not coherence else f"{len(coherence)} failures"))
    say("left band magma (unit laws, naturality of eta and mu): "
        + ("all hold" if hypotheses.ok else str(hypotheses)))

    witness = eg.check_diagram2_egger(a, b)
    if witness is None:
        report.findings["witness"] = None
        say("quasi-symmetry composite is the identity on A (x) B")
    else:
        report.findings["witness"] = {
            "element": repr(witness.element),
            "image": repr(witness.image),
            "trace": [[label, repr(v)] for label, v in witness.trace],
        }
        say(f"quasi-symmetry composite moves {witness.element!r} to {witness.image!r}:")
        for label, v in witness.trace:
            say(f"  {label:<34} {v!r}")

    split = eg.egger_synthesize_coproduct(a, b, probe_bound)
    report.findings["summand"] = [repr(x) for x in split.summand]
    report.findings["summand_size"] = len(split.summand)
    report.findings["coproduct_verified"] = split.verified
    say(f"splitting the idempotent: summand {split.summand!r} of size {len(split.summand)}")
    say("  universal property against every probe target: " + ("holds" if split.verified else "fails"))

    counts = {}
    for n in monoid_sizes:
        try:
            counts[n] = eg.monoid_semigroup_correspondence(n, limit)
        except SizeLimitExceeded as exc:
            report.limits_hit.append(str(exc))
            break
    report.findings["monoid_counts"] = {str(n): list(c) for n, c in counts.items()}
    for n, (monoids, semigroups) in counts.items():
        say(f"n={n}: {monoids} monoids, {semigroups} semigroups" + ("" if monoids == semigroups else "  MISMATCH"))
    report.timing = time.perf_counter() - start
    return report


# ---------------------------------------------------------------- argument handling


def read_bundle(source: str, validate: bool = True) -> Bundle:
    if source.startswith("fixture:"):
        from .fixtures import load_fixture

        try:
            return load_fixture(source.split(":", 1)[1])
        except KeyError as exc:
            raise PreconditionFailed(exc.args[0]) from None
    return load_bundle(source, validate=validate)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", choices=("text", "machine"), default=argparse.SUPPRESS,
                        help="human text or JSON on stdout")
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS,
                        help=f"largest enumeration allowed (default {DEFAULT_LIMIT})")

    parser = argparse.ArgumentParser(
        prog="cocart", description="Check when a magmal category is cocartesian.", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse a bundle and check its laws")
    p.add_argument("file")

    p = sub.add_parser("check", parents=[common], help="evaluate the equivalent conditions")
    p.add_argument("file")
    p.add_argument("--condition", choices=(*CONDITIONS, "all"), default="all")

    p = sub.add_parser("synthesize", parents=[common], help="build coproducts by splitting idempotents")
    p.add_argument("file")
    p.add_argument("--karoubi", action="store_true", help="complete the category first")
    p.add_argument("-o", "--output", help="write the resulting bundle here")

    p = sub.add_parser("karoubi", parents=[common], help="write the idempotent completion")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("demo", parents=[common], help="worked examples")
    p.add_argument("example", choices=("egger",))
    p.add_argument("--size-a", type=int, default=2, help="size of the carrier A (default 2)")
    p.add_argument("--size-b", type=int, default=2, help="size of the carrier B (default 2)")
    p.add_argument(
        "--probe-bound", type=int, default=3, help="largest probe set for naturality and universal checks (default 3)"
    )
    return parser


def _emit(report: Report, mode: str, out):
    if mode == "machine":
        json.dump(report.to_document(), out, indent=2)
        out.write("\n")
    else:
        out.write(report.to_text() + "\n")


def _error(mode, kind, exc, out, err):
    if mode == "machine":
        doc = {"status": kind, "error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, BundleError):
            doc["line"], doc["column"] = exc.line, exc.column
        if isinstance(exc, LawError) and exc.report is not None:
            doc["violations"] = [str(v) for v in exc.report]
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        err.write(f"error: {exc}\n")
        if isinstance(exc, LawError) and exc.report is not None:
            for v in exc.report:
                err.write(f"  {v}\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    mode = getattr(args, "report", "text")
    limit = getattr(args, "limit", DEFAULT_LIMIT)
    try:
        if args.command == "validate":
            start = time.perf_counter()
            bundle = read_bundle(args.file)
            c = bundle.category
            report = Report("validate", bundle.name or args.file, limit=limit)
            report.findings = {
                "valid": True,
                "objects": len(c.objects),
                "morphisms": len(c.morphisms),
                "blocks": [k for k in ("magmal", "symmetry", "magma") if getattr(bundle, k) is not None],
            }
            blocks = ", ".join(report.findings["blocks"]) or "none"
            report.lines.append(f"valid: {len(c.objects)} objects, {len(c.morphisms)} morphisms; structure: {blocks}")
            report.timing = time.perf_counter() - start
        elif args.command == "check":
            report = run_check(read_bundle(args.file), args.condition, limit)
        elif args.command == "synthesize":
            report, result = run_synthesize(read_bundle(args.file), args.karoubi, limit)
            if args.output:
                dump_bundle(result, args.output)
                report.lines.append(f"wrote {args.output}")
        elif args.command == "karoubi":
            start = time.perf_counter()
            bundle = read_bundle(args.file)
            result = run_karoubi(bundle)
            dump_bundle(result, args.output)
            report = Report("karoubi", bundle.name or args.file, limit=limit)
            report.findings = {
                "objects": len(result.category.objects),
                "morphisms": len(result.category.morphisms),
                "output": args.output,
            }
            report.lines.append(
                f"{len(result.category.objects)} objects, {len(result.category.morphisms)} morphisms; wrote {args.output}"
            )
            report.timing = time.perf_counter() - start
        else:
            report = run_demo_egger(args.size_a, args.size_b, args.probe_bound, limit)
    except SizeLimitExceeded as exc:
        _error(mode, "limit", exc, out, err)
        return EXIT_LIMIT
    except (CocartError, OSError) as exc:
        _error(mode, "input-error", exc, out, err)
        return EXIT_INPUT
    _emit(report, mode, out)
    return EXIT_OK


__all__ = [
    "Report",
    "build_parser",
    "main",
    "plain",
    "read_bundle",
    "run_check",
    "run_demo_egger",
    "run_karoubi",
    "run_synthesize",
]
