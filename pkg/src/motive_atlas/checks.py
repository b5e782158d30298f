"""Self-check harness behind ``motive-atlas selfcheck``.

Every check is a named callable returning (ok, detail).  Reference tables
here are independent of the code under test: degrees are the classical
values, rank sequences are the published small-dimension tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Callable

from . import atlas, coxeter
from .motive import FlagDescriptor, generating_polynomial
from .rootsys import SimpleType, all_types, invariant_degrees, positive_roots, weyl_order
from .twisted import CatalogMismatch, classification_catalog


def _reference_degrees() -> dict[str, list[int]]:
    table = {}
    for n in range(1, 9):
        table[f"A{n}"] = list(range(2, n + 2))
    for n in range(2, 9):
        table[f"B{n}"] = list(range(2, 2 * n + 1, 2))
        table[f"C{n}"] = list(range(2, 2 * n + 1, 2))
    for n in range(3, 9):
        table[f"D{n}"] = sorted(list(range(2, 2 * n - 1, 2)) + [n])
    table.update(
        E6=[2, 5, 6, 8, 9, 12],
        E7=[2, 6, 8, 10, 12, 14, 18],
        E8=[2, 8, 12, 14, 18, 20, 24, 30],
        F4=[2, 6, 8, 12],
        G2=[2, 6],
    )
    return table


KNOWN_DEGREES = _reference_degrees()
E8_WEYL_ORDER = 696729600


def _a(n):
    return SimpleType("A", n)


GOLDEN_ROWS: list[tuple[str, FlagDescriptor, tuple[int, ...]]] = [
    ("P^3 = A3/P1", FlagDescriptor.maximal(_a(3), 1), (1, 1, 1, 1)),
    ("Q^3 = B2/P1", FlagDescriptor.maximal(SimpleType("B", 2), 1), (1, 1, 1, 1)),
    ("A2/B", FlagDescriptor.simple(_a(2), ()), (1, 2, 2, 1)),
    ("P^4 = A4/P1", FlagDescriptor.maximal(_a(4), 1), (1, 1, 1, 1, 1)),
    ("Q^4 = A3/P2", FlagDescriptor.maximal(_a(3), 2), (1, 1, 2, 1, 1)),
    ("B2/B", FlagDescriptor.simple(SimpleType("B", 2), ()), (1, 2, 2, 2, 1)),
    ("P^5 = A5/P1", FlagDescriptor.maximal(_a(5), 1), (1, 1, 1, 1, 1, 1)),
    ("Q^5 = B3/P1", FlagDescriptor.maximal(SimpleType("B", 3), 1), (1, 1, 1, 1, 1, 1)),
    ("G2/P2", FlagDescriptor.maximal(SimpleType("G", 2), 2), (1, 1, 1, 1, 1, 1)),
    ("A3/P_{a1}", FlagDescriptor.simple(_a(3), {1}), (1, 2, 3, 3, 2, 1)),
    ("A3/P_{a3}", FlagDescriptor.simple(_a(3), {3}), (1, 2, 3, 3, 2, 1)),
    ("A3/P_{a2}", FlagDescriptor.simple(_a(3), {2}), (1, 2, 3, 3, 2, 1)),
]

EXPECTED_COUNTS = {3: 3, 4: 3, 5: 5}
EXPECTED_COINCIDENCES = {
    frozenset({"ℙ³", "Q³"}),
    frozenset({"ℙ⁵", "Q⁵", "G2/P2"}),
    frozenset({"A3/P_{α1}", "A3/P_{α2}"}),
}

ORACLE_TYPES = all_types(4)  # includes D4, F4, G2


def oracle_mismatches(t: SimpleType, elements=None) -> list[tuple[frozenset, tuple, tuple]]:
    """Every theta where the closed formula and brute-force cosets disagree."""
    bad = []
    for theta, brute in sorted(coxeter.coset_polys(t, elements).items(), key=lambda kv: sorted(kv[0])):
        formula = generating_polynomial(FlagDescriptor.simple(t, theta))
        if brute != formula:
            bad.append((theta, formula, brute))
    return bad


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _degree_check(name: str) -> Callable[[], tuple[bool, str]]:
    def run():
        t = SimpleType.parse(name)
        got = invariant_degrees(t)
        want = KNOWN_DEGREES[name]
        if got != want:
            return False, f"computed {got}, reference {want}"
        if sum(d - 1 for d in got) != len(positive_roots(t)):
            return False, "sum(d_i - 1) != |Phi+|"
        if name == "E8" and prod(want) != E8_WEYL_ORDER:
            return False, f"product of reference degrees {prod(want)} != {E8_WEYL_ORDER}"
        return True, f"{got}, |W| = {weyl_order(t)}"

    return run


def _golden() -> tuple[bool, str]:
    for label, x, want in GOLDEN_ROWS:
        got = generating_polynomial(x)
        if got != want:
            return False, f"{label}: got {got}, expected {want}"
    return True, f"{len(GOLDEN_ROWS)} rows"


def _counts() -> tuple[bool, str]:
    flags = atlas.enumerate_flags(5)
    for d, n in EXPECTED_COUNTS.items():
        got = [c.canonical_name for c in flags if c.dimension == d]
        if len(got) != n:
            return False, f"dim {d}: {len(got)} varieties {got}, expected {n}"
    report = atlas.coincidence_classes(5)
    got = {frozenset(m.canonical_name for m in c.members) for c in report.coincidences}
    if got != EXPECTED_COINCIDENCES:
        return False, f"coincidence classes {sorted(map(sorted, got))}"
    return True, "3/3/5 varieties, 3 coincidence classes"


def _catalog() -> tuple[bool, str]:
    try:
        n = len(classification_catalog())
    except CatalogMismatch as e:
        return False, str(e)
    return True, f"{n} cases"


def _oracle(t: SimpleType) -> Callable[[], tuple[bool, str]]:
    def run():
        elements = coxeter.enumerate_elements(t)
        if len(elements) != weyl_order(t):
            return False, f"enumerated {len(elements)} elements, degree product {weyl_order(t)}"
        bad = oracle_mismatches(t, elements)
        if bad:
            theta, f, b = bad[0]
            return False, f"theta {sorted(theta)}: formula {f}, cosets {b}"
        return True, f"{2 ** t.rank} subsets"

    return run


def selfcheck_plan(skip_coxeter: bool = False) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    plan = [(f"{name} degree check", _degree_check(name)) for name in KNOWN_DEGREES]
    plan += [
        ("golden rank sequences", _golden),
        ("variety counts and coincidences", _counts),
        ("classification catalog", _catalog),
    ]
    if not skip_coxeter:
        plan += [(f"{t} coset oracle", _oracle(t)) for t in ORACLE_TYPES]
    return plan


def run_selfcheck(skip_coxeter: bool = False) -> list[CheckResult]:
    out = []
    for name, fn in selfcheck_plan(skip_coxeter):
        try:
            ok, detail = fn()
        except Exception as e:  # a crash is a failed check, not a crashed run
            ok, detail = False, f"{type(e).__name__}: {e}"
        out.append(CheckResult(name, ok, detail))
    return out
