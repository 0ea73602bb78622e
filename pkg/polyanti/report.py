"""
Structured text reports.

One entry per line: ``key: value`` for scalars, ``key:`` followed by
items indented by two spaces for lists. Points print as ``(a,b)``,
chains as points separated by single spaces, cuboids as ``(min)-(max)``
and booleans as ``yes``/``no``. Every report starts with ``command:``
and carries the analysed set under ``set:`` when there is one.
"""

import re
from collections import OrderedDict
from typing import Dict, List, Optional, Tuple, Union

from .cdim import CdimResult, join_irreducibles
from .core import (Chain, PointSet, check_accessible, check_chain_property, check_exchange_strict,
                   check_intersection_closed, check_union_closed, comparable, join_of_chains)
from .harness import SearchReport, reproduces_violation
from .planar import check_def4, is_n4_connected, is_orthogonally_convex
from .staircase import Cuboid, StaircaseSpec, staircase_points
from .utils import InvalidInputError, ValidationError, Violation, format_point

INDENT = "  "
CLASSES = ("poly-antimatroid", "poset", "antimatroidal-2d")
CLASS_REQUIREMENTS = {
    "poly-antimatroid": ("accessible", "union_closed"),
    "poset": ("accessible", "union_closed", "intersection_closed"),
    "antimatroidal-2d": ("def4",),
}

_POINT = re.compile(r"^\((\d+(?:,\d+)*)\)$")


class Report:
    """Ordered key/value entries; a value is a string or a list of strings."""

    def __init__(self, command: Optional[str] = None):
        self.entries: "OrderedDict[str, Union[str, List[str]]]" = OrderedDict()
        if command is not None:
            self.add("command", command)

    def add(self, key, value) -> "Report":
        if isinstance(value, bool):
            value = format_bool(value)
        self.entries[key] = str(value)
        return self

    def add_list(self, key, items) -> "Report":
        self.entries[key] = [str(item) for item in items]
        return self

    def add_set(self, S: PointSet) -> "Report":
        return self.add_list("set", (format_point(p) for p in S.sorted()))

    def get(self, key, default=None):
        return self.entries.get(key, default)

    def __contains__(self, key):
        return key in self.entries

    @property
    def command(self):
        return self.entries.get("command")

    def dumps(self) -> str:
        lines = []
        for key, value in self.entries.items():
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(INDENT + item for item in value)
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Report":
        report = cls()
        current = None
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            if line.startswith(INDENT):
                if current is None:
                    raise ValidationError(f"report line {line_no}: list item outside a list")
                report.entries[current].append(line[len(INDENT):])
                continue
            key, sep, value = line.partition(":")
            if not sep or not key:
                raise ValidationError(f"report line {line_no}: expected 'key: value', got {line!r}")
            value = value.strip()
            if value:
                report.entries[key] = value
                current = None
            else:
                report.entries[key] = []
                current = key
        if report.command is None:
            raise ValidationError("report has no 'command:' line")
        return report


def format_bool(value) -> str:
    return "yes" if value else "no"


def format_chain(chain) -> str:
    return " ".join(format_point(p) for p in chain)


def parse_point(text):
    match = _POINT.match(text.strip())
    if not match:
        raise ValidationError(f"not a point: {text!r}")
    return tuple(int(c) for c in match.group(1).split(","))


def parse_chain(text) -> Chain:
    return Chain(parse_point(t) for t in text.split())


def parse_cuboid(text) -> Cuboid:
    lo, sep, hi = text.strip().partition(")-(")
    if not sep:
        raise ValidationError(f"not a cuboid: {text!r}")
    return Cuboid(parse_point(lo + ")"), parse_point("(" + hi))


def parse_bool(text) -> bool:
    if text not in ("yes", "no"):
        raise ValidationError(f"not a yes/no value: {text!r}")
    return text == "yes"


def _parse_points(items) -> PointSet:
    return PointSet(parse_point(item) for item in items)


def _flag_violation(name, holds, message):
    return None if holds else Violation(name, (), message)


def run_checks(S: PointSet) -> "OrderedDict[str, Optional[Violation]]":
    """Every applicable predicate on S, mapped to its first violation (None when it holds)."""
    checks = OrderedDict()
    checks["accessible"] = check_accessible(S)
    checks["exchange_strict"] = check_exchange_strict(S)
    checks["chain_property"] = check_chain_property(S)
    checks["union_closed"] = check_union_closed(S)
    checks["intersection_closed"] = check_intersection_closed(S)
    if S.dim == 2:
        checks["def4"] = check_def4(S)
        checks["orthogonally_convex"] = _flag_violation(
            "orthogonally_convex", is_orthogonally_convex(S), "a row or column is not an interval")
        checks["n4_connected"] = _flag_violation(
            "n4_connected", is_n4_connected(S), "the set is not 4-connected")
    return checks


def class_violation(cls, checks) -> Optional[Violation]:
    """First violation among the predicates ``cls`` requires."""
    if cls not in CLASS_REQUIREMENTS:
        raise ValidationError(f"unknown class {cls!r}, expected one of {', '.join(CLASSES)}")
    for name in CLASS_REQUIREMENTS[cls]:
        if name not in checks:
            raise InvalidInputError(f"class {cls} needs two-dimensional input")
        if checks[name] is not None:
            return checks[name]
    return None


def verify_report(S: PointSet, cls, checks) -> Tuple[Report, Optional[Violation]]:
    violation = class_violation(cls, checks)
    report = Report("verify").add("class", cls).add("dim", S.dim).add("size", len(S))
    for name, found in checks.items():
        report.add(name, found is None)
    report.add("holds", violation is None)
    if violation is not None:
        report.add("violation", violation.message)
    return report.add_set(S), violation


def boundary_report(S: PointSet, lower: Chain, upper: Chain, check_join=False) -> Report:
    report = Report("boundary").add("dim", 2).add("size", len(S))
    report.add("lower", format_chain(lower)).add("upper", format_chain(upper))
    if check_join:
        report.add("join", "exact" if join_of_chains([lower, upper]) == S else "mismatch")
    return report.add_set(S)


def cdim_report(S: PointSet, result: CdimResult) -> Report:
    report = Report("cdim").add("method", result.method).add("dim", S.dim).add("size", len(S))
    report.add("lower_bound", result.lower)
    report.add_list("antichain", (format_point(p) for p in result.irreducible_antichain.sorted()))
    if result.is_exact:
        report.add("exact", result.lower)
        report.add_list("witnesses", (format_chain(c) for c in result.witness_chains))
    else:
        report.add("interval", f"[{result.lower}, {result.upper}]")
    return report.add_set(S)


def staircase_check_report(S: PointSet, spec: Optional[StaircaseSpec], verdict: Optional[bool],
                           regular=None, regularity_violations=()) -> Report:
    """``verdict`` is None when a search cap was hit."""
    report = Report("staircase check").add("dim", 3).add("size", len(S))
    if regular is not None:
        report.add("regular", regular)
        report.add_list("violations", regularity_violations)
    report.add("staircase", "unknown" if verdict is None else format_bool(verdict))
    if spec is not None:
        report.add_list("cuboids", spec.cuboids)
    return report.add_set(S)


def staircase_trace_report(S: PointSet, chains: Tuple[Chain, Chain, Chain], starts=None) -> Report:
    """``starts`` are the x-, y- and z-face start points when not all traces begin at the maximum."""
    report = Report("staircase trace").add("dim", 3).add("size", len(S))
    if starts is not None:
        report.add("starts", format_chain(starts))
    for name, chain in zip(("b_x", "b_y", "b_z"), chains):
        report.add(name, format_chain(chain))
    report.add("join", "exact" if join_of_chains(chains) == S else "mismatch")
    return report.add_set(S)


def conjecture_report(search: SearchReport, timings=False) -> Report:
    report = Report("conjecture").add("claim", search.claim).add("mode", search.mode)
    report.add("box", format_point(search.box))
    if search.bound is not None:
        report.add("bound", search.bound)
    if search.seed is not None:
        report.add("seed", search.seed)
    for key, value in search.counts.items():
        report.add(key, value)
    report.add_list("counterexamples",
                    (f"{c.claim} {format_chain(c.points.sorted())}" for c in search.counterexamples))
    report.add_list("indeterminates",
                    (f"{c.claim} {format_chain(c.points.sorted())}" for c in search.indeterminates))
    if timings:
        report.add("duration", f"{search.duration:.3f}")
    return report


def _chain_problems(name, text, S: PointSet) -> Tuple[Optional[Chain], List[str]]:
    try:
        chain = parse_chain(text)
    except ValidationError as exc:
        return None, [f"{name}: {exc}"]
    outside = [p for p in chain if p not in S]
    if outside:
        return chain, [f"{name}: {format_point(outside[0])} is not in the set"]
    return chain, []


def replay_report(report: Report, limits=None) -> List[str]:
    """
    Re-verify the witnesses and certificates of a parsed report.
    Returns the problems found; an empty list means everything re-verifies.
    """
    problems = []
    S = _parse_points(report.get("set")) if report.get("set") else None
    command = report.command

    if command == "verify":
        cls = report.get("class")
        violation = class_violation(cls, run_checks(S))
        if (violation is None) != parse_bool(report.get("holds")):
            problems.append(f"class {cls} verdict does not reproduce")

    elif command in ("boundary", "staircase trace"):
        names = ("lower", "upper") if command == "boundary" else ("b_x", "b_y", "b_z")
        chains = []
        for name in names:
            chain, found = _chain_problems(name, report.get(name, ""), S)
            problems.extend(found)
            chains.append(chain)
        if not problems and "join" in report:
            exact = join_of_chains(chains) == S
            if exact != (report.get("join") == "exact"):
                problems.append("join verdict does not reproduce")

    elif command == "cdim":
        antichain = [parse_point(t) for t in report.get("antichain", [])]
        if any(p not in S for p in antichain):
            problems.append("antichain point outside the set")
        elif antichain:
            irreducibles = join_irreducibles(S)
            problems.extend(f"antichain point {format_point(p)} is not join-irreducible"
                            for p in antichain if p not in irreducibles)
        if any(comparable(a, b) for i, a in enumerate(antichain) for b in antichain[i + 1:]):
            problems.append("antichain points are comparable")
        if max(1, len(antichain)) != int(report.get("lower_bound")):
            problems.append("antichain size does not match the lower bound")
        if "exact" in report:
            chains = []
            for i, text in enumerate(report.get("witnesses", []), start=1):
                chain, found = _chain_problems(f"witness {i}", text, S)
                problems.extend(found)
                chains.append(chain)
            if not problems:
                if len(chains) != int(report.get("exact")):
                    problems.append("witness count differs from the exact value")
                elif join_of_chains(chains) != S:
                    problems.append("witness chains do not join to the set")

    elif command == "staircase check":
        if report.get("staircase") == "yes":
            spec = StaircaseSpec(tuple(parse_cuboid(t) for t in report.get("cuboids", [])))
            try:
                if staircase_points(spec) != S:
                    problems.append("cuboid union differs from the set")
            except InvalidInputError as exc:
                problems.append(str(exc))

    elif command == "conjecture":
        bound = int(report.get("bound", 3))
        for item in report.get("counterexamples", []):
            claim, _, rest = item.partition(" ")
            points = PointSet(parse_point(t) for t in rest.split())
            if not reproduces_violation(claim, points, bound, limits):
                problems.append(f"counterexample does not reproduce: {item}")

    else:
        raise ValidationError(f"cannot replay a {command!r} report")
    return problems


def report_summary(report: Report) -> Dict[str, str]:
    """Scalar entries only, for console display."""
    return {k: v for k, v in report.entries.items() if not isinstance(v, list)}
