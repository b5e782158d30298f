"""Twisted flag varieties and a rule engine for motivic isomorphism.

Nothing here builds algebras, quadratic forms or cocycles.  A central
simple algebra is a label plus (degree, index, exponent, op); a quadric is a
label plus its dimension and isotropy data; G2- and B/C-forms carry the
label of their twisting cocycle.  Two objects with the same label are the
same object over k, and distinct labels mean distinct (and, for algebras,
non-opposite) Brauer classes.

:func:`classify_pair` runs a fixed list of rules and stops at the first
conclusive one.  The two necessary conditions (equal split rank sequences,
equal CH_0 cokernels) always run first and are recorded in the trace even
when they pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Union

from .atlas import canonical_descriptor, low_rank_factors
from .motive import FlagDescriptor, RankSequence, generating_polynomial
from .rootsys import SimpleType


class InvalidDescriptorError(ValueError):
    pass


def _prime_factors(n: int) -> set[int]:
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


@dataclass(frozen=True)
class BrauerDescriptor:
    class_id: str
    op: bool
    degree: int
    index: int
    exponent: int

    def __post_init__(self):
        for name in ("degree", "index", "exponent"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidDescriptorError(f"{name} must be a positive integer, got {v!r}")
        if self.degree % self.index:
            raise InvalidDescriptorError(
                f"index must divide degree (index {self.index}, degree {self.degree})"
            )
        if self.index % self.exponent:
            raise InvalidDescriptorError(
                f"exponent must divide index (exponent {self.exponent}, index {self.index})"
            )
        missing = _prime_factors(self.index) - _prime_factors(self.exponent)
        if missing:
            raise InvalidDescriptorError(
                f"every prime dividing the index must divide the exponent "
                f"(primes {sorted(missing)} divide index {self.index} but not exponent {self.exponent})"
            )
        if self.exponent <= 2 and self.op:
            # A = A^op in Br(k) when the class has order <= 2
            object.__setattr__(self, "op", False)

    @property
    def split(self) -> bool:
        return self.index == 1

    def opposite(self) -> "BrauerDescriptor":
        return replace(self, op=not self.op)


def validate_algebra(degree: int, index: int, exponent: int, op: bool = False, class_id: str = "A") -> BrauerDescriptor:
    return BrauerDescriptor(class_id, bool(op), degree, index, exponent)


@dataclass(frozen=True)
class SBFlag:
    """SB_{n_1,...,n_r}(A): twisted form of A_n/P_theta, theta = Pi minus {alpha_{n_i}}."""

    algebra: BrauerDescriptor
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        d = self.algebra.degree
        if d < 2:
            raise InvalidDescriptorError("SB flags need an algebra of degree >= 2")
        s = self.steps
        if not s:
            raise InvalidDescriptorError("SB flag steps must be non-empty")
        if any(b <= a for a, b in zip(s, s[1:])):
            raise InvalidDescriptorError(f"SB flag steps must be strictly increasing, got {s}")
        if s[0] < 1 or s[-1] > d - 1:
            raise InvalidDescriptorError(f"SB flag steps must lie in 1..{d - 1}, got {s}")

    @property
    def split(self) -> bool:
        return self.algebra.split

    @property
    def is_severi_brauer(self) -> bool:
        """SB(A) itself, or SB_{deg-1}(A) = SB(A^op)."""
        return self.steps in ((1,), (self.algebra.degree - 1,))

    @property
    def has_extreme_step(self) -> bool:
        return self.steps[0] == 1 or self.steps[-1] == self.algebra.degree - 1

    def dual_steps(self) -> tuple[int, ...]:
        d = self.algebra.degree
        return tuple(sorted(d - s for s in self.steps))


@dataclass(frozen=True)
class Quadric:
    dim: int
    form_id: str
    anisotropic: bool = False
    split: bool = False

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InvalidDescriptorError(f"quadric dimension must be >= 1, got {self.dim!r}")
        if self.split and self.anisotropic:
            raise InvalidDescriptorError("a split quadric cannot be anisotropic")


@dataclass(frozen=True)
class G2Form:
    cocycle_id: str
    split: bool
    parabolic: int

    def __post_init__(self):
        if self.parabolic not in (1, 2):
            raise InvalidDescriptorError(f"G2 parabolic must be 1 or 2, got {self.parabolic!r}")


@dataclass(frozen=True)
class BCForm:
    family: str
    rank: int
    l: int
    cocycle_id: str
    split: bool

    def __post_init__(self):
        if self.family not in ("B", "C"):
            raise InvalidDescriptorError(f"family must be B or C, got {self.family!r}")
        SimpleType(self.family, self.rank)
        if not 1 <= self.l <= self.rank:
            raise InvalidDescriptorError(f"l must lie in 1..{self.rank}, got {self.l}")


@dataclass(frozen=True)
class SplitVariety:
    """A split flag variety given directly by its descriptor."""

    descriptor: FlagDescriptor

    @property
    def split(self) -> bool:
        return True


TwistedVariety = Union[SBFlag, Quadric, G2Form, BCForm, SplitVariety]


def is_split(x: TwistedVariety) -> bool:
    return bool(x.split)


def split_model(x: TwistedVariety) -> FlagDescriptor:
    if isinstance(x, SBFlag):
        return FlagDescriptor.maximal(SimpleType("A", x.algebra.degree - 1), *x.steps)
    if isinstance(x, Quadric):
        n = x.dim
        if n == 2:
            # Q^2 = P^1 x P^1: the vector weight of D2 is the sum of both nodes
            a1 = SimpleType("A", 1)
            return FlagDescriptor((a1, a1), (frozenset(), frozenset()))
        family, rank = ("B", (n + 1) // 2) if n % 2 else ("D", n // 2 + 1)
        factors = low_rank_factors(family, rank, range(2, rank + 1))
        return FlagDescriptor(tuple(t for t, _ in factors), tuple(th for _, th in factors))
    if isinstance(x, G2Form):
        return FlagDescriptor.maximal(SimpleType("G", 2), x.parabolic)
    if isinstance(x, BCForm):
        return FlagDescriptor.maximal(SimpleType(x.family, x.rank), x.l)
    if isinstance(x, SplitVariety):
        return x.descriptor
    raise TypeError(f"not a twisted variety: {x!r}")


def chow0_cokernel(x: TwistedVariety) -> int | None:
    """Order of Coker(CH_0(X) -> CH_0(X_s)), or None when not determined."""
    if is_split(x):
        return 1
    if isinstance(x, SBFlag):
        if x.has_extreme_step:
            return x.algebra.index
        if x.steps == (2,) and x.algebra.degree == 4:
            return 1 if x.algebra.index <= 2 else 2
        return None
    if isinstance(x, Quadric):
        return 2 if x.anisotropic else 1
    return None


def index_reduction_pn_qn(ind_A: int, n: int, ind_tensor: int) -> int:
    """Index of A over the function field of an n-dimensional quadric (n odd).

    ``ind_tensor`` is the index of A tensored with the even Clifford algebra
    of the quadratic form, supplied by the caller.
    """
    if n <= 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and > 1, got {n}")
    if ind_A < 1 or ind_tensor < 1:
        raise ValueError("indices must be positive")
    return min(ind_A, 2 ** ((n - 1) // 2) * ind_tensor)


# -- verdicts --------------------------------------------------------------

class Conclusion(str, Enum):
    VARIETIES_ISOMORPHIC = "VARIETIES_ISOMORPHIC"
    MOTIVES_ISOMORPHIC_VARIETIES_NOT = "MOTIVES_ISOMORPHIC_VARIETIES_NOT"
    MOTIVES_NOT_ISOMORPHIC = "MOTIVES_NOT_ISOMORPHIC"
    UNDECIDED = "UNDECIDED"

    @property
    def motives_isomorphic(self) -> bool | None:
        if self is Conclusion.UNDECIDED:
            return None
        return self is not Conclusion.MOTIVES_NOT_ISOMORPHIC


@dataclass(frozen=True)
class TraceEntry:
    rule: str
    citation: str
    facts: tuple[str, ...]


@dataclass(frozen=True)
class Verdict:
    conclusion: Conclusion
    trace: tuple[TraceEntry, ...]
    reason: str = ""

    @property
    def motives_isomorphic(self) -> bool | None:
        return self.conclusion.motives_isomorphic

    @property
    def deciding_rule(self) -> str | None:
        if self.conclusion is Conclusion.UNDECIDED or not self.trace:
            return None
        return self.trace[-1].rule


CITATIONS = {
    "R0": "rank-sequence criterion for split flag varieties (Köck 1991)",
    "R1": "CH_0 cokernel is a motivic invariant (Karpenko 2000)",
    "R2": "Severi-Brauer motivic criterion (Karpenko 2000)",
    "R3": "quadrics of odd rank or rank < 7 (Izhboldin 1998)",
    "R4": "twisted P^n vs Q^n, n odd: index reduction formula (Merkurjev-Panin-Wadsworth 1996)",
    "R5": "twisted C_n/P_l vs B_n/P_l, l odd: Tits indices (Tits 1966) and index reduction",
    "R6": "type A flags with a first or last step: isotropic decomposition "
          "(Chernousov-Gille-Merkurjev 2005) and Karpenko 2000",
    "R7": "SB_2 of degree 4: exceptional isomorphism A3 = D3 (Knus-Merkurjev-Rost-Tignol 1998)",
    "R8": "G2/P1 and G2/P2 twisted by one cocycle (Bonnet 2003)",
    "R9": "identical descriptors, or SB_{n_i}(A) = SB_{deg-n_i}(A^op)",
    "R10": "split varieties: motives are sums of Tate motives with the split rank sequence",
}

_C = Conclusion


def _class_relation(a: BrauerDescriptor, b: BrauerDescriptor) -> set[str]:
    """Subset of {"equal", "opposite"} relating A and A' as algebras."""
    if a.degree != b.degree:
        return set()
    if a.split and b.split:
        return {"equal", "opposite"}
    if a.class_id != b.class_id or a.split != b.split:
        return set()
    if a.exponent <= 2:
        return {"equal", "opposite"}
    return {"equal"} if a.op == b.op else {"opposite"}


def _sb_varieties_isomorphic(x: SBFlag, y: SBFlag) -> bool:
    # SB_{n_i}(A) = SB_{deg - n_i}(A^op)
    rel = _class_relation(x.algebra, y.algebra)
    return (x.steps == y.steps and "equal" in rel) or (x.dual_steps() == y.steps and "opposite" in rel)


def _canon_split(x: TwistedVariety) -> FlagDescriptor:
    return canonical_descriptor(split_model(x))


def _split_iso(x: TwistedVariety, y: TwistedVariety) -> Conclusion:
    return _C.VARIETIES_ISOMORPHIC if _canon_split(x) == _canon_split(y) else _C.MOTIVES_ISOMORPHIC_VARIETIES_NOT


def _describe_alg(a: BrauerDescriptor) -> str:
    op = "^op" if a.op else ""
    return f"{a.class_id}{op} (deg {a.degree}, ind {a.index}, exp {a.exponent})"


def _pair(x, y, kind):
    """(x, y) reordered so that the first has type ``kind``, or None."""
    if isinstance(x, kind):
        return x, y
    if isinstance(y, kind):
        return y, x
    return None


def _rule_sb(x, y):
    if not (isinstance(x, SBFlag) and isinstance(y, SBFlag) and x.is_severi_brauer and y.is_severi_brauer):
        return None
    rel = _class_relation(x.algebra, y.algebra)
    facts = [f"A = {_describe_alg(x.algebra)}", f"A' = {_describe_alg(y.algebra)}"]
    if not rel:
        return _C.MOTIVES_NOT_ISOMORPHIC, facts + ["A is neither A' nor A'^op"]
    if _sb_varieties_isomorphic(x, y):
        return _C.VARIETIES_ISOMORPHIC, facts + ["the Severi-Brauer varieties coincide"]
    return _C.MOTIVES_ISOMORPHIC_VARIETIES_NOT, facts + ["A' = A^op with A non-split of exponent > 2"]


def _rule_quadrics(x, y):
    if not (isinstance(x, Quadric) and isinstance(y, Quadric)):
        return None
    rank = x.dim + 2
    if not (rank % 2 == 1 or rank < 7):
        return None
    facts = [f"form rank {rank}"]
    same = (x.split and y.split) or x.form_id == y.form_id
    if same:
        return _C.VARIETIES_ISOMORPHIC, facts + ["quadrics isomorphic"]
    return _C.MOTIVES_NOT_ISOMORPHIC, facts + [f"forms {x.form_id!r} and {y.form_id!r} differ"]


def _rule_pn_qn(x, y):
    p = _pair(x, y, SBFlag)
    if p is None or not isinstance(p[1], Quadric):
        return None
    sb, q = p
    n = q.dim
    if not (sb.is_severi_brauer and n % 2 == 1 and n > 1 and sb.algebra.degree == n + 1):
        return None
    facts = [f"n = {n}", f"SB split: {sb.split}", f"quadric split: {q.split}"]
    if sb.split and q.split:
        return _split_iso(x, y), facts
    return _C.MOTIVES_NOT_ISOMORPHIC, facts + ["a non-trivial twist on either side"]


def _rule_cn_bn(x, y):
    if not (isinstance(x, BCForm) and isinstance(y, BCForm)):
        return None
    if {x.family, y.family} != {"B", "C"} or x.rank != y.rank or x.l != y.l:
        return None
    n, l = x.rank, x.l
    if not (l % 2 == 1 and 1 <= l < n):
        return None
    facts = [f"n = {n}, l = {l}", f"split: {x.split}, {y.split}"]
    if x.split and y.split:
        return _split_iso(x, y), facts
    return _C.MOTIVES_NOT_ISOMORPHIC, facts + ["a non-trivial twist on either side"]


_GOOD_EXPONENTS = {1, 2, 3, 4, 6}


def _rule_type_a_flags(x, y):
    if not (isinstance(x, SBFlag) and isinstance(y, SBFlag)):
        return None
    if x.algebra.degree != y.algebra.degree or x.algebra.degree < 3:
        return None
    if not (x.has_extreme_step and y.has_extreme_step):
        return None
    if x.algebra.exponent not in _GOOD_EXPONENTS or y.algebra.exponent not in _GOOD_EXPONENTS:
        return None
    rel = _class_relation(x.algebra, y.algebra)
    facts = [f"steps {x.steps} and {y.steps}", f"A = {_describe_alg(x.algebra)}", f"A' = {_describe_alg(y.algebra)}"]
    if not rel:
        return _C.MOTIVES_NOT_ISOMORPHIC, facts + ["A is neither A' nor A'^op"]
    if _sb_varieties_isomorphic(x, y):
        return _C.VARIETIES_ISOMORPHIC, facts
    return _C.MOTIVES_ISOMORPHIC_VARIETIES_NOT, facts + ["A = A' or A'^op, varieties differ"]


def _rule_sb2_deg4(x, y):
    if not (isinstance(x, SBFlag) and isinstance(y, SBFlag)):
        return None
    if not (x.steps == y.steps == (2,) and x.algebra.degree == y.algebra.degree == 4):
        return None
    rel = _class_relation(x.algebra, y.algebra)
    facts = [f"A = {_describe_alg(x.algebra)}", f"A' = {_describe_alg(y.algebra)}", "SB_2(A) = SB_2(A^op)"]
    if rel:
        return _C.VARIETIES_ISOMORPHIC, facts
    return _C.MOTIVES_NOT_ISOMORPHIC, facts + ["A is neither A' nor A'^op"]


def _g2_key(g: G2Form) -> str | None:
    return None if g.split else g.cocycle_id


def _rule_g2(x, y):
    if not (isinstance(x, G2Form) and isinstance(y, G2Form)):
        return None
    if _g2_key(x) != _g2_key(y):
        return None
    facts = [f"cocycle {'trivial' if x.split else x.cocycle_id}", f"parabolics {x.parabolic}, {y.parabolic}"]
    if x.parabolic == y.parabolic:
        return _C.VARIETIES_ISOMORPHIC, facts
    return _C.MOTIVES_ISOMORPHIC_VARIETIES_NOT, facts


def _rule_identical(x, y):
    if x == y:
        return _C.VARIETIES_ISOMORPHIC, ["descriptors are equal"]
    if isinstance(x, SBFlag) and isinstance(y, SBFlag) and _sb_varieties_isomorphic(x, y):
        return _C.VARIETIES_ISOMORPHIC, [f"steps {x.steps} and {y.steps} over A and A^op are dual"]
    return None


def _rule_both_split(x, y):
    if not (is_split(x) and is_split(y)):
        return None
    return _split_iso(x, y), ["both varieties split", "rank sequences equal"]


RULES = [
    ("R2", _rule_sb),
    ("R3", _rule_quadrics),
    ("R4", _rule_pn_qn),
    ("R5", _rule_cn_bn),
    ("R6", _rule_type_a_flags),
    ("R7", _rule_sb2_deg4),
    ("R8", _rule_g2),
    ("R9", _rule_identical),
    ("R10", _rule_both_split),
]


def _entry(rule: str, facts) -> TraceEntry:
    return TraceEntry(rule, CITATIONS[rule], tuple(facts))


def classify_pair(x: TwistedVariety, y: TwistedVariety) -> Verdict:
    """Decide whether M(X) = M(Y), and whether X = Y, by the first applicable rule."""
    trace: list[TraceEntry] = []

    px: RankSequence = generating_polynomial(split_model(x))
    py: RankSequence = generating_polynomial(split_model(y))
    seq_facts = [f"split rank sequences {px} and {py}"]
    if px != py:
        trace.append(_entry("R0", seq_facts + ["sequences differ"]))
        return Verdict(_C.MOTIVES_NOT_ISOMORPHIC, tuple(trace))
    trace.append(_entry("R0", seq_facts + ["sequences equal"]))

    cx, cy = chow0_cokernel(x), chow0_cokernel(y)
    fmt = lambda c: "unknown" if c is None else f"Z/{c}"
    co_facts = [f"cokernels {fmt(cx)} and {fmt(cy)}"]
    if cx is not None and cy is not None and cx != cy:
        trace.append(_entry("R1", co_facts + ["cokernels differ"]))
        return Verdict(_C.MOTIVES_NOT_ISOMORPHIC, tuple(trace))
    trace.append(_entry("R1", co_facts + ["no obstruction"]))

    for name, rule in RULES:
        hit = rule(x, y)
        if hit is not None:
            conclusion, facts = hit
            trace.append(_entry(name, facts))
            return Verdict(conclusion, tuple(trace))
    return Verdict(_C.UNDECIDED, tuple(trace), reason="no applicable rule")


# -- classification catalog --------------------------------------------------

class CatalogMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class CatalogCase:
    name: str
    x: TwistedVariety
    y: TwistedVariety
    expected: Conclusion
    rule: str | None = None
    in_classification: bool = True

    @property
    def dimension(self) -> int:
        return len(generating_polynomial(split_model(self.x))) - 1


def _alg(deg, ind, exp, cid="A", op=False):
    return validate_algebra(deg, ind, exp, op=op, class_id=cid)


def _sb(a, *steps):
    return SBFlag(a, steps)


def catalog_cases() -> list[CatalogCase]:
    """Concrete instances of every non-isomorphic pair with isomorphic motives
    in dimension <= 5, plus negative controls just outside the list."""
    mi = _C.MOTIVES_ISOMORPHIC_VARIETIES_NOT
    cases = []
    # X_s = Y_s: SB(A) vs SB(A^op), deg 3..6, exp > 2
    for deg, ind, exp in [(3, 3, 3), (4, 4, 4), (5, 5, 5), (6, 6, 6), (6, 3, 3)]:
        a = _alg(deg, ind, exp)
        cases.append(CatalogCase(f"SB(A) vs SB(A^op), deg {deg}, ind {ind}, exp {exp}", _sb(a, 1), _sb(a.opposite(), 1), mi, "R2"))
    a4 = _alg(4, 4, 4)
    cases.append(CatalogCase("SB_{1,2}(A) vs SB_{1,2}(A^op), deg = exp = 4", _sb(a4, 1, 2), _sb(a4.opposite(), 1, 2), mi, "R6"))
    # X_s != Y_s
    for a, tag in [(a4, "exp 4"), (_alg(4, 4, 2), "exp 2"), (_alg(4, 2, 2), "ind 2")]:
        cases.append(CatalogCase(f"SB_{{1,3}}(A) vs SB_{{1,2}}(A), deg 4, {tag}", _sb(a, 1, 3), _sb(a, 1, 2), mi, "R6"))
    cases.append(CatalogCase("SB_{1,3}(A) vs SB_{1,2}(A^op), deg 4, exp 4", _sb(a4, 1, 3), _sb(a4.opposite(), 1, 2), mi, "R6"))
    cases.append(CatalogCase("xi(G2/P1) vs xi(G2/P2), non-split", G2Form("xi", False, 1), G2Form("xi", False, 2), mi, "R8"))
    split4, split6 = _alg(4, 1, 1), _alg(6, 1, 1)
    cases.append(CatalogCase("P^3 vs Q^3, split", _sb(split4, 1), Quadric(3, "h3", split=True), mi, "R4"))
    cases.append(CatalogCase("P^5 vs Q^5, split", _sb(split6, 1), Quadric(5, "h5", split=True), mi, "R4"))
    cases.append(CatalogCase("P^5 vs split G2/P2", _sb(split6, 1), G2Form("trivial", True, 2), mi, "R10"))

    # controls: outside the list
    notiso, viso = _C.MOTIVES_NOT_ISOMORPHIC, _C.VARIETIES_ISOMORPHIC
    b = _alg(4, 4, 2, "B")
    cases += [
        CatalogCase("SB(A) vs SB(A^op), exp 2", _sb(b, 1), _sb(b.opposite(), 1), viso, "R2", False),
        CatalogCase("SB_{1,2}(A) vs SB_{1,2}(A^op), exp 2", _sb(b, 1, 2), _sb(b.opposite(), 1, 2), viso, "R6", False),
        CatalogCase("SB(A) vs SB(A'), unrelated classes", _sb(_alg(3, 3, 3, "A"), 1), _sb(_alg(3, 3, 3, "C"), 1), notiso, "R2", False),
        CatalogCase("twisted P^3 vs anisotropic Q^3", _sb(_alg(4, 4, 4), 1), Quadric(3, "q3", anisotropic=True), notiso, "R1", False),
        CatalogCase("twisted P^3 (ind 2) vs anisotropic Q^3", _sb(_alg(4, 2, 2), 1), Quadric(3, "q3", anisotropic=True), notiso, "R4", False),
        CatalogCase("twisted P^5 (ind 2) vs anisotropic Q^5", _sb(_alg(6, 2, 2), 1), Quadric(5, "q5", anisotropic=True), notiso, "R4", False),
        CatalogCase("SB_2(A) biquaternion vs split Q^4", _sb(b, 2), Quadric(4, "h4", split=True), notiso, "R1", False),
        CatalogCase("SB_2(A) vs SB_2(A^op), deg 4, exp 4", _sb(a4, 2), _sb(a4.opposite(), 2), viso, "R7", False),
        CatalogCase("split G2/P1 vs split G2/P2", G2Form("trivial", True, 1), G2Form("trivial", True, 2), mi, "R8", False),
        CatalogCase("twisted C3/P1 vs B3/P1", BCForm("C", 3, 1, "g", False), BCForm("B", 3, 1, "d", False), notiso, "R5", False),
    ]
    # dimension 4: P^4, Q^4, B2/B are pairwise distinguished by rank sequences
    dim4 = {
        "P^4": _sb(_alg(5, 1, 1), 1),
        "Q^4": Quadric(4, "h4", split=True),
        "B2/B": SplitVariety(FlagDescriptor.simple(SimpleType("B", 2), ())),
        "twisted P^4": _sb(_alg(5, 5, 5), 1),
        "twisted Q^4": _sb(_alg(4, 4, 4), 2),
    }
    names = list(dim4)
    for i, p in enumerate(names):
        for q in names[i + 1:]:
            if {p, q} in ({"P^4", "twisted P^4"}, {"Q^4", "twisted Q^4"}):
                continue
            cases.append(CatalogCase(f"{p} vs {q}", dim4[p], dim4[q], notiso, "R0", False))
    return cases


def classification_catalog() -> list[tuple[CatalogCase, Verdict]]:
    """Classify every catalog case; raise CatalogMismatch on the first wrong verdict."""
    out = []
    for case in catalog_cases():
        v = classify_pair(case.x, case.y)
        rule_ok = case.rule is None or v.deciding_rule == case.rule or (
            case.rule in ("R0", "R1") and v.trace[-1].rule == case.rule
        )
        if v.conclusion is not case.expected or not rule_ok:
            raise CatalogMismatch(
                f"catalog case {case.name!r}: expected {case.expected.value} via {case.rule}, "
                f"got {v.conclusion.value} via {v.trace[-1].rule if v.trace else None}"
            )
        out.append((case, v))
    return out
