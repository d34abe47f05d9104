"""Exhaustive enumeration of small trees and mechanical verification of the
package's extremal and monotonicity claims.

``enumerate_free_trees`` produces exactly one representative per isomorphism
class by growing each (n-1)-vertex representative with one extra leaf at
every vertex and deduplicating by canonical form. ``verify`` then checks a
named claim over every class of every n-vertex tree and returns a
deterministic report; serialized reports are byte-identical across runs.

Check ids accepted by :func:`verify`:

- ``thm1_1``  per degree-sequence class, the maximum average 3-eccentricity
              equals the closed-form caterpillar value and the maximizers
              are exactly the caterpillars of the class.
- ``thm1_2``  per segment-sequence class, the generalized star is the
              unique minimizer.
- ``thm1_3``  per segment-count class, the balanced generalized star
              attains the minimum (ties reported, not failed).
- ``cor3_2``  the path uniquely maximizes over all n-vertex trees.
- ``cor3_3``  per maximum-degree class, the broom family maximizes.
- ``cor3_4``  per count-of-maximum-degree class, the uniform-branch
              caterpillars with branch degree 3 maximize.
- ``cor3_5``  per (maximum degree, count) class, the uniform-branch
              caterpillars maximize.
- ``thm3_1``  majorization between degree sequences orders the class maxima
              (anti-monotonically), strictly iff the internal counts differ.
- ``cor3_6``  lowering the branch degree of the uniform-branch family
              strictly raises its maximum.
- ``sigma_mono`` every sigma site strictly increases the average and keeps
              the degree sequence.
- ``pi_mono`` every pi site never increases the average.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import CapExceeded
from .extremal import (
    _uniform_branch_sequence,
    balanced_star,
    degree_sequence_bound,
    family_bound,
    generalized_star,
    internal_count,
    majorizes,
    uniform_branch_caterpillar,
)
from .steiner import aecc3
from .transforms import find_pi_sites, find_sigma_sites, pi_transform, sigma_transform
from .tree import (
    Tree,
    canonical_form,
    degree_sequence,
    from_edge_list,
    is_caterpillar,
    is_generalized_star,
    segment_sequence,
)

DEFAULT_CAP = 12

THEOREMS = (
    "thm1_1",
    "thm1_2",
    "thm1_3",
    "cor3_2",
    "cor3_3",
    "cor3_4",
    "cor3_5",
    "thm3_1",
    "cor3_6",
    "sigma_mono",
    "pi_mono",
)

GROUP_KEYS = ("degree_seq", "segment_seq", "segment_count", "max_degree", "count_max_degree")


# -- enumeration -----------------------------------------------------------------

_FREE: list[tuple[Tree, ...]] = []  # _FREE[i] holds all free trees of order i+1


def enumerate_free_trees(n: int, *, cap: int = DEFAULT_CAP) -> list[Tree]:
    """One representative per isomorphism class of n-vertex trees, sorted by canonical form."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"order {n} above the enumeration cap {cap}")
    while len(_FREE) < n:
        _FREE.append(_grow_level(len(_FREE) + 1))
    return list(_FREE[n - 1])


def _grow_level(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree(((),)),)
    by_canon: dict[str, Tree] = {}
    for rep in _FREE[n - 2]:
        edges = rep.edges()
        for v in range(n - 1):
            t = from_edge_list(edges + [(v, n - 1)])
            by_canon.setdefault(canonical_form(t), t)
    return tuple(by_canon[c] for c in sorted(by_canon))


def _group_key(key: str) -> Callable[[Tree], object]:
    if key == "degree_seq":
        return degree_sequence
    if key == "segment_seq":
        return segment_sequence
    if key == "segment_count":
        return lambda t: len(segment_sequence(t))
    if key == "max_degree":
        return lambda t: max(t.degrees())
    if key == "count_max_degree":
        return lambda t: t.degrees().count(max(t.degrees()))
    raise ValueError(f"unknown group key {key!r}; expected one of {GROUP_KEYS}")


def group_trees(trees: Iterable[Tree], key: str) -> dict:
    """Partition trees by the chosen key; every tree lands in exactly one class."""
    fn = _group_key(key)
    out: dict = {}
    for t in trees:
        out.setdefault(fn(t), []).append(t)
    return out


# -- reports -----------------------------------------------------------------------

@dataclass(frozen=True)
class TreeRef:
    """A tree pinned down for a report: canonical key plus one concrete edge list."""

    canonical: str
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ClassRecord:
    """Verification result for one class (or one checked pair/tree)."""

    key: str
    class_size: int
    passed: bool
    vacuous: bool = False
    extremal_value: Fraction | None = None
    claimed_value: Fraction | None = None
    argext: tuple[TreeRef, ...] = ()
    expected: tuple[TreeRef, ...] = ()
    ties: tuple[TreeRef, ...] = ()
    unique: bool | None = None
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    n: int
    passed: bool
    classes: tuple[ClassRecord, ...]
    notes: str = ""


def _ref(t: Tree) -> TreeRef:
    return TreeRef(canonical_form(t), tuple(t.edges()))


def _refs(trees: Iterable[Tree]) -> tuple[TreeRef, ...]:
    return tuple(sorted((_ref(t) for t in trees), key=lambda r: r.canonical))


def _canon_set(trees: Iterable[Tree]) -> set[str]:
    return {canonical_form(t) for t in trees}


def _seq_key(seq: Sequence[int]) -> str:
    return ",".join(str(x) for x in seq)


def _frac_str(f: Fraction | None) -> str | None:
    if f is None:
        return None
    return f"{f.numerator}/{f.denominator}"


# -- verification ------------------------------------------------------------------

def verify(theorem: str, n: int, *, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Exhaustively check one named claim over all n-vertex trees."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown check {theorem!r}; expected one of {THEOREMS}")
    trees = enumerate_free_trees(n, cap=cap)
    if n < 3:
        rec = ClassRecord(
            key="all",
            class_size=len(trees),
            passed=True,
            vacuous=True,
            detail="order below 3: average 3-eccentricity undefined",
        )
        return VerificationReport(theorem, n, True, (rec,), notes="vacuous")
    records = _VERIFIERS[theorem](trees, n)
    return VerificationReport(theorem, n, all(r.passed for r in records), tuple(records))


def _extremal_class_record(
    key: str,
    members: list[Tree],
    claimed: Fraction,
    expected: list[Tree],
    *,
    minimize: bool = False,
    require_unique: bool = False,
    vacuous: bool = False,
) -> ClassRecord:
    values = {t: aecc3(t) for t in members}
    best = min(values.values()) if minimize else max(values.values())
    argext = [t for t in members if values[t] == best]
    ok = best == claimed and _canon_set(argext) == _canon_set(expected)
    if require_unique:
        ok = ok and len(argext) == 1
    detail = ""
    if not ok:
        word = "minimum" if minimize else "maximum"
        detail = f"{word} {_frac_str(best)} or its attaining set deviates from the expected family"
    return ClassRecord(
        key=key,
        class_size=len(members),
        passed=ok,
        vacuous=vacuous,
        extremal_value=best,
        claimed_value=claimed,
        argext=_refs(argext),
        expected=_refs(expected),
        unique=len(argext) == 1,
        detail=detail,
    )


def _verify_thm1_1(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    for pi, members in sorted(group_trees(trees, "degree_seq").items()):
        records.append(
            _extremal_class_record(
                _seq_key(pi),
                members,
                degree_sequence_bound(pi),
                [t for t in members if is_caterpillar(t)],
            )
        )
    return records


def _verify_thm1_2(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    for seq, members in sorted(group_trees(trees, "segment_seq").items()):
        records.append(
            _extremal_class_record(
                _seq_key(seq),
                members,
                aecc3(generalized_star(seq)),
                [t for t in members if is_generalized_star(t)],
                minimize=True,
                require_unique=True,
                vacuous=len(members) == 1,
            )
        )
    return records


def _verify_thm1_3(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    for m, members in sorted(group_trees(trees, "segment_count").items()):
        star = balanced_star(n, m)
        star_canon = canonical_form(star)
        claimed = aecc3(star)
        values = {t: aecc3(t) for t in members}
        best = min(values.values())
        argmin = [t for t in members if values[t] == best]
        ties = [t for t in argmin if canonical_form(t) != star_canon]
        ok = best == claimed and star_canon in _canon_set(argmin)
        records.append(
            ClassRecord(
                key=f"m={m}",
                class_size=len(members),
                passed=ok,
                vacuous=len(members) == 1,
                extremal_value=best,
                claimed_value=claimed,
                argext=_refs(argmin),
                expected=(_ref(star),),
                ties=_refs(ties),
                unique=len(argmin) == 1,
                detail=f"{len(ties)} co-minimizer(s) beside the balanced star" if ties else "",
            )
        )
    return records


def _verify_cor3_2(trees: list[Tree], n: int) -> list[ClassRecord]:
    path = from_edge_list([(i, i + 1) for i in range(n - 1)])
    return [
        _extremal_class_record("all", list(trees), Fraction(n - 1), [path])
    ]


def _verify_cor3_3(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    for delta, members in sorted(group_trees(trees, "max_degree").items()):
        if delta < 3:
            records.append(
                ClassRecord(
                    key=f"delta={delta}",
                    class_size=len(members),
                    passed=True,
                    vacuous=True,
                    detail="maximum degree below 3: outside the family's premise",
                )
            )
            continue
        pi = (delta,) + (2,) * (n - delta - 1) + (1,) * delta
        records.append(
            _extremal_class_record(
                f"delta={delta}",
                members,
                family_bound("tndelta", n, delta=delta),
                [t for t in members if degree_sequence(t) == pi and is_caterpillar(t)],
            )
        )
    return records


def _verify_cor3_4(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    for k, members in sorted(group_trees(trees, "count_max_degree").items()):
        if not 1 <= k <= n - 3:
            records.append(
                ClassRecord(
                    key=f"k={k}",
                    class_size=len(members),
                    passed=True,
                    vacuous=True,
                    detail=f"count {k} outside the premise 1..{n - 3}",
                )
            )
            continue
        pi = _uniform_branch_sequence(n, 3, k)
        records.append(
            _extremal_class_record(
                f"k={k}",
                members,
                family_bound("tnk", n, k=k),
                [t for t in members if degree_sequence(t) == pi and is_caterpillar(t)],
            )
        )
    return records


def _verify_cor3_5(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    for delta, members in sorted(group_trees(trees, "max_degree").items()):
        if delta < 3:
            records.append(
                ClassRecord(
                    key=f"delta={delta}",
                    class_size=len(members),
                    passed=True,
                    vacuous=True,
                    detail="maximum degree below 3: outside the family's premise",
                )
            )
            continue
        for k, sub in sorted(group_trees(members, "count_max_degree").items()):
            pi = _uniform_branch_sequence(n, delta, k)
            records.append(
                _extremal_class_record(
                    f"delta={delta},k={k}",
                    sub,
                    family_bound("tndeltak", n, delta=delta, k=k),
                    [t for t in sub if degree_sequence(t) == pi and is_caterpillar(t)],
                )
            )
    return records


def _verify_thm3_1(trees: list[Tree], n: int) -> list[ClassRecord]:
    seqs = sorted(k for k in group_trees(trees, "degree_seq") if k[0] >= 3)
    records = []
    for a in seqs:
        for b in seqs:
            if a == b or not majorizes(a, b):
                continue
            ba, bb = degree_sequence_bound(a), degree_sequence_bound(b)
            if internal_count(a) == internal_count(b):
                ok = ba == bb
            else:
                ok = ba < bb
            records.append(
                ClassRecord(
                    key=f"{_seq_key(a)} >> {_seq_key(b)}",
                    class_size=2,
                    passed=ok,
                    extremal_value=ba,
                    claimed_value=bb,
                    detail="" if ok else "majorization does not order the class maxima as required",
                )
            )
    if not records:
        records.append(
            ClassRecord(
                key="all",
                class_size=0,
                passed=True,
                vacuous=True,
                detail="no comparable degree-sequence pairs with largest degree >= 3",
            )
        )
    return records


def _verify_cor3_6(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    if n > 3:
        for delta in range(4, n):
            for k in range(1, n):
                if n < 2 + k * (delta - 1):
                    break
                lo = aecc3(uniform_branch_caterpillar(n, delta - 1, k))
                hi = aecc3(uniform_branch_caterpillar(n, delta, k))
                ok = (
                    lo > hi
                    and lo == family_bound("tndeltak", n, delta=delta - 1, k=k)
                    and hi == family_bound("tndeltak", n, delta=delta, k=k)
                )
                records.append(
                    ClassRecord(
                        key=f"delta={delta},k={k}",
                        class_size=2,
                        passed=ok,
                        extremal_value=lo,
                        claimed_value=hi,
                        detail="" if ok else "lowering the branch degree must strictly raise the maximum",
                    )
                )
    if not records:
        records.append(
            ClassRecord(
                key="all",
                class_size=0,
                passed=True,
                vacuous=True,
                detail="no feasible (delta, k) with delta >= 4",
            )
        )
    return records


def _verify_sigma_mono(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    for t in trees:
        sites = find_sigma_sites(t)
        failures = []
        for site in sites:
            out = sigma_transform(t, site)
            if out.aecc3_after <= out.aecc3_before:
                failures.append(f"no strict increase at {site}")
            if degree_sequence(out.after) != degree_sequence(t):
                failures.append(f"degree sequence changed at {site}")
        ok = not failures
        records.append(
            ClassRecord(
                key=canonical_form(t),
                class_size=1,
                passed=ok,
                vacuous=not sites,
                argext=() if ok else (_ref(t),),
                detail=f"{len(sites)} site(s)" if ok else "; ".join(failures),
            )
        )
    return records


def _verify_pi_mono(trees: list[Tree], n: int) -> list[ClassRecord]:
    records = []
    for t in trees:
        sites = find_pi_sites(t)
        failures = []
        for site in sites:
            out = pi_transform(t, site)
            if out.aecc3_after > out.aecc3_before:
                failures.append(f"average increased at {site}")
        ok = not failures
        records.append(
            ClassRecord(
                key=canonical_form(t),
                class_size=1,
                passed=ok,
                vacuous=not sites,
                argext=() if ok else (_ref(t),),
                detail=f"{len(sites)} site(s)" if ok else "; ".join(failures),
            )
        )
    return records


_VERIFIERS: dict[str, Callable[[list[Tree], int], list[ClassRecord]]] = {
    "thm1_1": _verify_thm1_1,
    "thm1_2": _verify_thm1_2,
    "thm1_3": _verify_thm1_3,
    "cor3_2": _verify_cor3_2,
    "cor3_3": _verify_cor3_3,
    "cor3_4": _verify_cor3_4,
    "cor3_5": _verify_cor3_5,
    "thm3_1": _verify_thm3_1,
    "cor3_6": _verify_cor3_6,
    "sigma_mono": _verify_sigma_mono,
    "pi_mono": _verify_pi_mono,
}


# -- serialization -------------------------------------------------------------------

def _ref_dict(r: TreeRef) -> dict:
    return {"canonical": r.canonical, "edges": [list(e) for e in r.edges]}


def _record_dict(r: ClassRecord) -> dict:
    return {
        "key": r.key,
        "class_size": r.class_size,
        "passed": r.passed,
        "vacuous": r.vacuous,
        "extremal_value": _frac_str(r.extremal_value),
        "claimed_value": _frac_str(r.claimed_value),
        "argext": [_ref_dict(x) for x in r.argext],
        "expected": [_ref_dict(x) for x in r.expected],
        "ties": [_ref_dict(x) for x in r.ties],
        "unique": r.unique,
        "detail": r.detail,
    }


def report_to_json(report: VerificationReport) -> str:
    """Deterministic JSON rendering (same report, same bytes)."""
    doc = {
        "theorem": report.theorem,
        "n": report.n,
        "passed": report.passed,
        "notes": report.notes,
        "classes": [_record_dict(r) for r in report.classes],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def report_to_csv(report: VerificationReport) -> str:
    """One row per class: key, extremal value as p/q, class size, pass."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "extremal_value", "class_size", "pass"])
    for r in report.classes:
        writer.writerow(
            [r.key, _frac_str(r.extremal_value) or "", r.class_size, str(r.passed).lower()]
        )
    return buf.getvalue()
