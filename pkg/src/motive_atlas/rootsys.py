"""Simple root systems: Cartan matrices, positive roots, invariant degrees.

Simple roots are numbered as in Bourbaki's tables (1-based in the public
API).  The Cartan matrix follows Bourbaki's convention
``cartan[i][j] = <alpha_i, alpha_j^vee>``, so for G2 (alpha_1 short)::

    [[ 2, -1],
     [-3,  2]]

Node layouts:

* ``A_n``: chain 1 - 2 - ... - n
* ``B_n``: chain, alpha_n short;  ``C_n``: chain, alpha_n long
* ``D_n``: chain 1 - ... - (n-2), with n-1 and n both attached to n-2 (the fork)
* ``E_n``: chain 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
* ``F_4``: 1 - 2 => 3 - 4, alpha_1, alpha_2 long
* ``G_2``: alpha_1 short, alpha_2 long
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import prod

Matrix = tuple[tuple[int, ...], ...]
Root = tuple[int, ...]

FAMILIES = "ABCDEFG"

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


class InvalidTypeError(ValueError):
    """Raised for a family/rank combination that is not a root system."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in FAMILIES or len(f) != 1:
            raise InvalidTypeError(f"unknown family {f!r}; expected one of {FAMILIES}")
        if not isinstance(r, int) or isinstance(r, bool):
            raise InvalidTypeError(f"rank must be an integer, got {r!r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[f]
        if not ok:
            need = {
                "A": "rank >= 1",
                "B": "rank >= 2",
                "C": "rank >= 2",
                "D": "rank >= 3",
                "E": "rank in {6, 7, 8}",
                "F": "rank == 4",
                "G": "rank == 2",
            }[f]
            raise InvalidTypeError(f"{f}{r} is not a valid simple type ({f} requires {need})")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse ``"A3"``, ``"e8"``, ``"B_2"``."""
        m = _TYPE_RE.match(text)
        if not m:
            raise InvalidTypeError(f"cannot parse simple type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))


def _edges(t: SimpleType) -> list[tuple[int, int, int, int]]:
    """Bonds as (i, j, cartan[i][j], cartan[j][i]), 0-based."""
    f, n = t.family, t.rank
    if f == "A":
        return [(i, i + 1, -1, -1) for i in range(n - 1)]
    if f == "B":
        return [(i, i + 1, -1, -1) for i in range(n - 2)] + [(n - 2, n - 1, -2, -1)]
    if f == "C":
        return [(i, i + 1, -1, -1) for i in range(n - 2)] + [(n - 2, n - 1, -1, -2)]
    if f == "D":
        chain = [(i, i + 1, -1, -1) for i in range(n - 2)]
        return chain + [(n - 3, n - 1, -1, -1)]
    if f == "E":
        # 1-3, 3-4, 4-5, ..., (n-1)-n, 2-4 in Bourbaki labels
        es = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        return [(i, j, -1, -1) for i, j in es]
    if f == "F":
        return [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)]
    # G2
    return [(0, 1, -1, -3)]


@lru_cache(maxsize=None)
def cartan_matrix(t: SimpleType) -> Matrix:
    n = t.rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, a, b in _edges(t):
        m[i][j] = a
        m[j][i] = b
    return tuple(tuple(row) for row in m)


def _pairing(cartan: Matrix, beta: Root, i: int) -> int:
    # <beta, alpha_i^vee> for beta in the simple-root basis
    return sum(b * cartan[j][i] for j, b in enumerate(beta) if b)


def roots_from_cartan(cartan: Matrix) -> list[Root]:
    """Positive roots generated from the simple roots by root strings.

    For a positive root beta and a simple root alpha_i (beta != alpha_i),
    beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is the
    largest k with beta - k*alpha_i a root.  Roots are produced height by
    height, so the output is ordered by (height, lexicographic).
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known: set[Root] = set(simple)
    layer = sorted(simple)
    out = list(layer)
    while layer:
        nxt: set[Root] = set()
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - _pairing(cartan, beta, i) > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        layer = sorted(nxt - known)
        known.update(layer)
        out.extend(layer)
    return out


@lru_cache(maxsize=None)
def _positive_roots(t: SimpleType) -> tuple[Root, ...]:
    return tuple(roots_from_cartan(cartan_matrix(t)))


def positive_roots(t: SimpleType) -> list[Root]:
    """Positive roots in the simple-root basis, graded by height then lex."""
    return list(_positive_roots(t))


def exponents_from_roots(roots) -> list[int]:
    """Exponents m_i as the partition conjugate to the height distribution."""
    counts: dict[int, int] = {}
    for r in roots:
        h = sum(r)
        counts[h] = counts.get(h, 0) + 1
    heights = [counts[h] for h in sorted(counts)]
    rank = heights[0] if heights else 0
    return sorted(sum(1 for c in heights if c >= i) for i in range(1, rank + 1))


@lru_cache(maxsize=None)
def _degrees(t: SimpleType) -> tuple[int, ...]:
    return tuple(m + 1 for m in exponents_from_roots(_positive_roots(t)))


def invariant_degrees(t: SimpleType) -> list[int]:
    """Degrees of the fundamental invariants of W, sorted ascending."""
    return list(_degrees(t))


def weyl_order(t: SimpleType) -> int:
    return prod(invariant_degrees(t))


def all_types(max_rank: int) -> list[SimpleType]:
    """Every valid simple type of rank <= max_rank, in (family, rank) order."""
    out = []
    for f in FAMILIES:
        for r in range(1, max_rank + 1):
            try:
                out.append(SimpleType(f, r))
            except InvalidTypeError:
                pass
    return out
