"""Split projective homogeneous varieties up to isomorphism.

Two flag descriptors name isomorphic varieties when they agree after

* dropping point factors (theta = all simple roots),
* the low-rank coincidences C2 = B2 and D3 = A3 (and B1 = C1 = A1,
  D2 = A1 x A1 for descriptors built with :func:`low_rank_factors`),
* the three isomorphisms between homogeneous spaces of different simple
  groups: C_n/P_1 = A_{2n-1}/P_1 (= P^{2n-1}), B_n/P_n = D_{n+1}/P_{n+1}
  (spinor varieties) and G2/P_1 = B3/P_1 (= Q^5),
* Dynkin diagram automorphisms (A_n reversal, the D_n fork swap, triality
  on D4, the E6 flip).

Canonical theta is the lexicographically smallest sorted tuple over the
diagram-automorphism orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable

from .motive import (
    FlagDescriptor,
    RankSequence,
    generating_polynomial,
)
from .rootsys import SimpleType, all_types, positive_roots

Factor = tuple[SimpleType, frozenset]

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _sup(n: int) -> str:
    return str(n).translate(_SUPERSCRIPT)


def low_rank_factors(family: str, rank: int, theta: Iterable[int]) -> list[Factor]:
    """Factors for a possibly degenerate type label such as B1 or D2."""
    theta = frozenset(theta)
    if family in "BC" and rank == 1:
        return [(SimpleType("A", 1), theta)]
    if family == "D" and rank == 2:
        # two orthogonal nodes
        a1 = SimpleType("A", 1)
        return [(a1, frozenset({1}) if i in theta else frozenset()) for i in (1, 2)]
    if family == "D" and rank == 1:
        return []
    return [(SimpleType(family, rank), theta)]


def _automorphisms(t: SimpleType) -> list[dict[int, int]]:
    n = t.rank
    ident = {i: i for i in range(1, n + 1)}
    if t.family == "A" and n > 1:
        return [ident, {i: n + 1 - i for i in range(1, n + 1)}]
    if t.family == "D" and n == 4:
        out = []
        for p in permutations((1, 3, 4)):
            m = dict(ident)
            m.update(zip((1, 3, 4), p))
            out.append(m)
        return out
    if t.family == "D" and n >= 5:
        m = dict(ident)
        m[n - 1], m[n] = n, n - 1
        return [ident, m]
    if t.family == "E" and n == 6:
        return [ident, {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}]
    return [ident]


def _rewrite(t: SimpleType, theta: frozenset) -> list[Factor] | None:
    """One identification step, or None if (t, theta) is already reduced."""
    n = t.rank
    full = frozenset(range(1, n + 1))
    omitted = full - theta
    if not omitted:
        return []
    if t.family == "C" and n == 2:
        swap = {1: 2, 2: 1}
        return [(SimpleType("B", 2), frozenset(swap[i] for i in theta))]
    if t.family == "D" and n == 3:
        to_a3 = {1: 2, 2: 1, 3: 3}
        return [(SimpleType("A", 3), frozenset(to_a3[i] for i in theta))]
    if t.family == "C" and omitted == {1}:
        a = SimpleType("A", 2 * n - 1)
        return [(a, frozenset(range(2, 2 * n)))]
    if t.family == "B" and omitted == {n}:
        d = SimpleType("D", n + 1)
        return [(d, frozenset(range(1, n + 1)))]
    if t.family == "G" and omitted == {1}:
        return [(SimpleType("B", 3), frozenset({2, 3}))]
    best = min(tuple(sorted(m[i] for i in theta)) for m in _automorphisms(t))
    if frozenset(best) != theta:
        return [(t, frozenset(best))]
    return None


def _factor_key(f: Factor):
    t, th = f
    return (t.family, t.rank, tuple(sorted(th)))


def canonical_descriptor(x: FlagDescriptor) -> FlagDescriptor:
    factors: list[Factor] = list(zip(x.factors, x.theta))
    done: list[Factor] = []
    while factors:
        t, th = factors.pop()
        step = _rewrite(t, th)
        if step is None:
            done.append((t, th))
        else:
            factors.extend(step)
    if not done:
        # a point; keep one factor so the descriptor stays non-empty
        a1 = SimpleType("A", 1)
        return FlagDescriptor((a1,), (frozenset({1}),))
    done.sort(key=_factor_key)
    return FlagDescriptor(tuple(t for t, _ in done), tuple(th for _, th in done))


def _theta_label(t: SimpleType, theta: frozenset) -> str:
    omitted = sorted(set(range(1, t.rank + 1)) - theta)
    if not theta:
        return f"{t}/B"
    if not omitted:
        return f"{t}/{t}"
    if len(omitted) == 1:
        return f"{t}/P{omitted[0]}"
    return f"{t}/P_{{{','.join('α' + str(i) for i in sorted(theta))}}}"


def _factor_name(t: SimpleType, theta: frozenset) -> str:
    n = t.rank
    omitted = set(range(1, n + 1)) - theta
    f = t.family
    if len(omitted) == 1:
        (k,) = omitted
        if f == "A":
            if k in (1, n):
                return f"ℙ{_sup(n)}"
            if n == 3:
                return f"Q{_sup(4)}"
            return f"Gr({min(k, n + 1 - k)},{n + 1})"
        if f == "B" and k == 1:
            return f"Q{_sup(2 * n - 1)}"
        if f == "D" and (k == 1 or (n == 4 and k in (3, 4))):
            return f"Q{_sup(2 * n - 2)}"
    return _theta_label(t, theta)


def display_name(x: FlagDescriptor) -> str:
    """Classical name of a canonical descriptor, else ``Type/P...``."""
    pairs = list(zip(x.factors, x.theta))
    a1 = SimpleType("A", 1)
    if len(pairs) == 2 and all(t == a1 and not th for t, th in pairs):
        return f"Q{_sup(2)}"
    if len(pairs) == 1 and len(pairs[0][1]) == pairs[0][0].rank:
        return "pt"
    return " × ".join(_factor_name(t, th) for t, th in pairs)


def type_theta_label(x: FlagDescriptor) -> str:
    return " × ".join(f"{t} Θ={{{','.join(map(str, sorted(th)))}}}" for t, th in zip(x.factors, x.theta))


@dataclass(frozen=True)
class CanonicalFlag:
    descriptor: FlagDescriptor
    canonical_name: str
    rank_sequence: RankSequence = field(compare=False)

    @property
    def dimension(self) -> int:
        return len(self.rank_sequence) - 1


def canonicalize(x: FlagDescriptor) -> CanonicalFlag:
    d = canonical_descriptor(x)
    return CanonicalFlag(d, display_name(d), generating_polynomial(d))


def motives_equal_split(x: FlagDescriptor, y: FlagDescriptor) -> bool:
    return generating_polynomial(x) == generating_polynomial(y)


def _sort_key(c: CanonicalFlag):
    return (c.dimension, c.rank_sequence, c.canonical_name, str(c.descriptor))


def _simple_flags(max_dim: int) -> list[CanonicalFlag]:
    found: dict[FlagDescriptor, CanonicalFlag] = {}
    for t in all_types(max_dim):
        n = t.rank
        roots = positive_roots(t)
        supports = [sum(1 << (i) for i, c in enumerate(r) if c) for r in roots]
        full = (1 << n) - 1
        for mask in range(full):
            # roots supported inside theta are exactly the Levi roots
            levi = sum(1 for s in supports if s & ~mask == 0)
            dim = len(roots) - levi
            if dim > max_dim:
                continue
            theta = frozenset(i + 1 for i in range(n) if mask >> i & 1)
            d = canonical_descriptor(FlagDescriptor.simple(t, theta))
            if d not in found:
                found[d] = CanonicalFlag(d, display_name(d), generating_polynomial(d))
    return sorted(found.values(), key=_sort_key)


def enumerate_flags(max_dim: int, allow_products: bool = False) -> list[CanonicalFlag]:
    """Every split flag variety X with 1 <= dim X <= max_dim, up to isomorphism.

    A simple factor of rank r has dimension >= r, so scanning simple types
    of rank <= max_dim is complete.
    """
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    simple = _simple_flags(max_dim)
    out = list(simple)
    if allow_products:
        seen = {c.descriptor for c in out}

        def extend(start: int, chosen: list[CanonicalFlag], dim: int):
            if len(chosen) >= 2:
                x = FlagDescriptor(
                    tuple(t for c in chosen for t in c.descriptor.factors),
                    tuple(th for c in chosen for th in c.descriptor.theta),
                )
                c = canonicalize(x)
                if c.descriptor not in seen:
                    seen.add(c.descriptor)
                    out.append(c)
            for k in range(start, len(simple)):
                s = simple[k]
                if dim + s.dimension <= max_dim:
                    extend(k, chosen + [s], dim + s.dimension)

        extend(0, [], 0)
    out.sort(key=_sort_key)
    return out


@dataclass(frozen=True)
class CoincidenceClass:
    dimension: int
    rank_sequence: RankSequence
    members: tuple[CanonicalFlag, ...]


@dataclass(frozen=True)
class CoincidenceReport:
    max_dim: int
    classes: tuple[CoincidenceClass, ...]

    @property
    def coincidences(self) -> list[CoincidenceClass]:
        return [c for c in self.classes if len(c.members) >= 2]


def coincidence_classes(max_dim: int, allow_products: bool = False) -> CoincidenceReport:
    groups: dict[tuple[int, RankSequence], list[CanonicalFlag]] = {}
    for c in enumerate_flags(max_dim, allow_products):
        groups.setdefault((c.dimension, c.rank_sequence), []).append(c)
    classes = tuple(
        CoincidenceClass(dim, seq, tuple(members))
        for (dim, seq), members in sorted(groups.items(), key=lambda kv: (kv[0], kv[1][0].canonical_name))
    )
    return CoincidenceReport(max_dim, classes)

