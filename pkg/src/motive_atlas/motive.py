"""Rank sequences of split flag varieties.

For X = G/P_theta the Chow motive is a sum of Tate twists, and the
multiplicities are the coefficients of

    p_X(z) = prod_i [d_i(W)]_z  /  prod_j prod_i [d_i(W_j)]_z

where [d]_z = 1 + z + ... + z^(d-1) and W_1 x ... x W_m are the irreducible
factors of W_theta.  Polynomials are dense tuples of Python ints, lowest
degree first; the zero polynomial is ``()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .rootsys import (
    InvalidTypeError,
    Matrix,
    SimpleType,
    cartan_matrix,
    invariant_degrees,
    positive_roots,
    weyl_order,
)

RankSequence = tuple[int, ...]


class InexactDivisionError(ArithmeticError):
    pass


def _trim(c: Sequence[int]) -> RankSequence:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> RankSequence:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_div_exact(num: Sequence[int], den: Sequence[int]) -> RankSequence:
    """Quotient of num by den; raises unless den divides num over Z."""
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return ()
    if len(num) < len(den):
        raise InexactDivisionError(f"{den} does not divide {num}")
    rem = list(num)
    lead = den[-1]
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(rem[k + len(den) - 1], lead)
        if r:
            raise InexactDivisionError(f"{den} does not divide {num} over the integers")
        q[k] = c
        if c:
            for j, d in enumerate(den):
                rem[k + j] -= c * d
    if any(rem):
        raise InexactDivisionError(f"{den} does not divide {num}: nonzero remainder")
    return _trim(q)


def q_integer(d: int) -> RankSequence:
    """(z^d - 1)/(z - 1) = 1 + z + ... + z^(d-1)."""
    return (1,) * d


def q_factorial(n: int) -> RankSequence:
    out: RankSequence = (1,)
    for k in range(1, n + 1):
        out = poly_mul(out, q_integer(k))
    return out


def evaluate(p: Sequence[int], z: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * z + c
    return acc


# -- sub-diagram classification ---------------------------------------------

def _template_candidates(k: int) -> list[SimpleType]:
    out = []
    for f in "ABCDEFG":
        try:
            out.append(SimpleType(f, k))
        except InvalidTypeError:
            pass
    return out


def _match(sub: Matrix, tmpl: Matrix) -> tuple[int, ...] | None:
    """Find perm with sub[perm[a]][perm[b]] == tmpl[a][b], by backtracking."""
    n = len(tmpl)
    perm: list[int] = []
    used = [False] * n

    def extend() -> bool:
        a = len(perm)
        if a == n:
            return True
        for cand in range(n):
            if used[cand]:
                continue
            if all(sub[perm[b]][cand] == tmpl[b][a] and sub[cand][perm[b]] == tmpl[a][b] for b in range(a)):
                perm.append(cand)
                used[cand] = True
                if extend():
                    return True
                perm.pop()
                used[cand] = False
        return False

    return tuple(perm) if extend() else None


def components(cartan: Matrix, theta: Iterable[int]) -> list[list[int]]:
    """Connected components of the diagram restricted to theta (1-based)."""
    rest = set(theta)
    comps = []
    while rest:
        start = min(rest)
        stack, comp = [start], {start}
        rest.discard(start)
        while stack:
            i = stack.pop()
            for j in list(rest):
                if cartan[i - 1][j - 1] != 0:
                    rest.discard(j)
                    comp.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


@lru_cache(maxsize=None)
def classify_matrix(sub: Matrix) -> tuple[SimpleType, tuple[int, ...]]:
    """Identify a connected Cartan matrix with a Bourbaki template.

    Returns the type and ``perm`` such that template node ``a`` is node
    ``perm[a]`` of ``sub`` (both 0-based).  B is tried before C and A before
    D, so the rank-2 and rank-3 coincidences come back as B2 and A3.
    """
    for t in _template_candidates(len(sub)):
        perm = _match(sub, cartan_matrix(t))
        if perm is not None:
            return t, perm
    raise ValueError(f"matrix {sub} is not a connected finite-type Cartan matrix")


def classify_subdiagram(t: SimpleType, theta: Iterable[int]) -> list[tuple[SimpleType, tuple[int, ...]]]:
    """Irreducible factors of W_theta.

    Each entry is (type, nodes) with ``nodes[a]`` the index in t of the
    template's simple root a+1.
    """
    c = cartan_matrix(t)
    out = []
    for comp in components(c, theta):
        sub = tuple(tuple(c[i - 1][j - 1] for j in comp) for i in comp)
        st, perm = classify_matrix(sub)
        out.append((st, tuple(comp[p] for p in perm)))
    return out


# -- flag descriptors ------------------------------------------------------

@dataclass(frozen=True)
class FlagDescriptor:
    """G/P_theta for G a product of simple split groups.

    ``theta[k]`` is the set of simple roots (1-based) of ``factors[k]`` that
    lie in the Levi; the full set makes that factor a point.
    """

    factors: tuple[SimpleType, ...]
    theta: tuple[frozenset, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "theta", tuple(frozenset(s) for s in self.theta))
        if not self.factors:
            raise ValueError("a flag descriptor needs at least one factor")
        if len(self.factors) != len(self.theta):
            raise ValueError("one theta per factor is required")
        for t, th in zip(self.factors, self.theta):
            bad = sorted(i for i in th if not (isinstance(i, int) and 1 <= i <= t.rank))
            if bad:
                raise ValueError(f"theta indices {bad} invalid for {t}")

    @classmethod
    def simple(cls, t: SimpleType, theta: Iterable[int]) -> "FlagDescriptor":
        return cls((t,), (frozenset(theta),))

    @classmethod
    def maximal(cls, t: SimpleType, *omitted: int) -> "FlagDescriptor":
        """G/P with the listed simple roots removed from the Levi."""
        return cls.simple(t, set(range(1, t.rank + 1)) - set(omitted))

    def omitted(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(range(1, t.rank + 1)) - th for t, th in zip(self.factors, self.theta))

    def __str__(self):
        parts = []
        for t, th in zip(self.factors, self.theta):
            parts.append(f"{t}{{{','.join(map(str, sorted(th)))}}}")
        return " x ".join(parts)


def _factor_poly(t: SimpleType, theta: frozenset) -> RankSequence:
    num: RankSequence = (1,)
    for d in invariant_degrees(t):
        num = poly_mul(num, q_integer(d))
    den: RankSequence = (1,)
    for st, _ in classify_subdiagram(t, theta):
        for d in invariant_degrees(st):
            den = poly_mul(den, q_integer(d))
    return poly_div_exact(num, den)


def generating_polynomial(x: FlagDescriptor) -> RankSequence:
    out: RankSequence = (1,)
    for t, th in zip(x.factors, x.theta):
        out = poly_mul(out, _factor_poly(t, th))
    return out


def levi_root_count(t: SimpleType, theta: Iterable[int]) -> int:
    """|Phi^+_theta|: positive roots supported on theta."""
    return sum(len(positive_roots(st)) for st, _ in classify_subdiagram(t, theta))


def flag_dimension(x: FlagDescriptor) -> int:
    return len(generating_polynomial(x)) - 1


def dimension_from_roots(x: FlagDescriptor) -> int:
    """sum over factors of |Phi^+| - |Phi^+_theta|, without any polynomials."""
    return sum(len(positive_roots(t)) - levi_root_count(t, th) for t, th in zip(x.factors, x.theta))


def coset_count(x: FlagDescriptor) -> int:
    """prod |W| / |W_theta| from Weyl orders of the factors."""
    total = 1
    for t, th in zip(x.factors, x.theta):
        sub = prod(weyl_order(st) for st, _ in classify_subdiagram(t, th))
        total *= weyl_order(t) // sub
    return total
