"""Brute-force Weyl group enumeration.

This module is the independent check on the closed-form Poincare
polynomial in :mod:`motive_atlas.motive`: it never looks at invariant
degrees, only at the Cartan matrix.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .rootsys import Matrix, SimpleType, cartan_matrix, weyl_order

DEFAULT_WEYL_CAP = 10**6
CAP_ENV = "MOTIVE_ATLAS_WEYL_CAP"

ParabolicSubset = frozenset


class WeylCapExceeded(RuntimeError):
    def __init__(self, t: SimpleType, order: int, cap: int):
        self.simple_type = t
        self.order = order
        self.cap = cap
        super().__init__(
            f"|W({t})| = {order} exceeds the enumeration cap {cap}; "
            f"raise the cap to at least {order} (e.g. {CAP_ENV}={order})"
        )


def weyl_cap() -> int:
    """Enumeration cap, overridable through the environment."""
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_WEYL_CAP


@dataclass(frozen=True)
class WeylElement:
    """An element of W as its matrix on the simple-root basis.

    ``columns[j]`` is w(alpha_j) written in simple-root coordinates.
    """

    columns: Matrix
    length: int
    ascents: int = field(default=-1, compare=False)

    def __post_init__(self):
        if self.ascents < 0:
            mask = sum(1 << i for i, col in enumerate(self.columns) if all(c >= 0 for c in col))
            object.__setattr__(self, "ascents", mask)

    @property
    def matrix(self) -> Matrix:
        return tuple(zip(*self.columns))

    def is_positive_on(self, i: int) -> bool:
        """True iff w(alpha_i) is a positive root (i is 1-based)."""
        return bool(self.ascents >> (i - 1) & 1)


def _times_reflection(cols: Matrix, i: int, cartan: Matrix) -> Matrix:
    return _apply(cols, i, _touched(cartan)[i])


@lru_cache(maxsize=None)
def _touched(cartan: Matrix) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each i, the (j, <alpha_j, alpha_i^vee>) with a nonzero pairing."""
    n = len(cartan)
    return tuple(tuple((j, cartan[j][i]) for j in range(n) if cartan[j][i]) for i in range(n))


def _apply(cols: Matrix, i: int, touched) -> Matrix:
    # (w s_i)(alpha_j) = w(alpha_j) - <alpha_j, alpha_i^vee> w(alpha_i)
    ci = cols[i]
    out = list(cols)
    for j, a in touched:
        out[j] = tuple(x - a * y for x, y in zip(cols[j], ci))
    return tuple(out)


def enumerate_elements(t: SimpleType, cap: int | None = None) -> list[WeylElement]:
    """All elements of W(t), sorted by (length, matrix).

    Breadth-first search from the identity under right multiplication by
    simple reflections, so each element's BFS depth is its length.
    """
    cap = weyl_cap() if cap is None else cap
    order = weyl_order(t)
    if order > cap:
        raise WeylCapExceeded(t, order, cap)
    touched = _touched(cartan_matrix(t))
    n = t.rank
    ident = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
    seen = {ident: 0}
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        depth = seen[w] + 1
        for i in range(n):
            v = _apply(w, i, touched[i])
            if v not in seen:
                seen[v] = depth
                queue.append(v)
    elems = [WeylElement(cols, ln) for cols, ln in seen.items()]
    elems.sort(key=lambda e: (e.length, e.matrix))
    return elems


def minimal_coset_reps(
    t: SimpleType, theta: Iterable[int], elements: list[WeylElement] | None = None
) -> list[WeylElement]:
    """Minimal length representatives of W / W_theta.

    These are the w with w(alpha_i) > 0 for every i in theta.  Pass
    ``elements`` to reuse an enumeration across many theta.
    """
    theta = frozenset(theta)
    bad = [i for i in theta if not 1 <= i <= t.rank]
    if bad:
        raise ValueError(f"theta indices {sorted(bad)} out of range for {t}")
    if elements is None:
        elements = enumerate_elements(t)
    m = _mask(theta)
    return [w for w in elements if w.ascents & m == m]


def _mask(theta: Iterable[int]) -> int:
    return sum(1 << (i - 1) for i in theta)


def length_gen_poly(elements: Iterable[WeylElement]) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for w in elements:
        counts[w.length] = counts.get(w.length, 0) + 1
    if not counts:
        return ()
    top = max(counts)
    return tuple(counts.get(k, 0) for k in range(top + 1))


def coset_polys(t: SimpleType, elements: list[WeylElement] | None = None) -> dict[frozenset, tuple[int, ...]]:
    """length_gen_poly(minimal_coset_reps(t, theta)) for every theta at once."""
    if elements is None:
        elements = enumerate_elements(t)
    hist: dict[tuple[int, int], int] = {}
    for w in elements:
        key = (w.ascents, w.length)
        hist[key] = hist.get(key, 0) + 1
    out = {}
    for m in range(1 << t.rank):
        counts: dict[int, int] = {}
        for (asc, ln), c in hist.items():
            if asc & m == m:
                counts[ln] = counts.get(ln, 0) + c
        top = max(counts)
        theta = frozenset(i + 1 for i in range(t.rank) if m >> i & 1)
        out[theta] = tuple(counts.get(k, 0) for k in range(top + 1))
    return out


def count_inversions(t: SimpleType, w: WeylElement, roots) -> int:
    """Number of positive roots sent to negative roots by w."""
    cols = w.columns
    n = t.rank
    neg = 0
    for beta in roots:
        img = [0] * n
        for j, b in enumerate(beta):
            if b:
                for k in range(n):
                    img[k] += b * cols[j][k]
        if any(x < 0 for x in img):
            neg += 1
    return neg
