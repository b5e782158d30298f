import pytest
from hypothesis import given, settings, strategies as st

from descriptor_gen import flip_op, random_variety, random_pairs
from motive_atlas.atlas import motives_equal_split
from motive_atlas.motive import FlagDescriptor, generating_polynomial
from motive_atlas.rootsys import SimpleType
from motive_atlas.twisted import (
    CITATIONS,
    RULES,
    BCForm,
    CatalogMismatch,
    Conclusion,
    G2Form,
    InvalidDescriptorError,
    Quadric,
    SBFlag,
    SplitVariety,
    catalog_cases,
    chow0_cokernel,
    classification_catalog,
    classify_pair,
    index_reduction_pn_qn,
    split_model,
    validate_algebra,
)

C = Conclusion


def sb(deg, ind, exp, *steps, op=False, cid="A"):
    return SBFlag(validate_algebra(deg, ind, exp, op=op, class_id=cid), steps)


# -- algebras ---------------------------------------------------------------

def test_validate_algebra_examples():
    a = validate_algebra(4, 4, 4, False)
    assert (a.degree, a.index, a.exponent, a.op) == (4, 4, 4, False)
    assert validate_algebra(4, 4, 2, True).op is False
    assert validate_algebra(3, 3, 3, True).op is True
    with pytest.raises(InvalidDescriptorError, match="index must divide degree"):
        validate_algebra(4, 3, 3)


@pytest.mark.parametrize("args,msg", [
    ((4, 4, 3), "exponent must divide index"),
    ((6, 6, 3), "prime"),
    ((0, 1, 1), "positive"),
])
def test_validate_algebra_errors(args, msg):
    with pytest.raises(InvalidDescriptorError, match=msg):
        validate_algebra(*args)


def test_opposite_is_involution():
    a = validate_algebra(5, 5, 5)
    assert a.opposite().op and a.opposite().opposite() == a


def test_sb_flag_step_validation():
    a = validate_algebra(4, 2, 2)
    for steps in [(), (0,), (4,), (2, 1), (1, 1)]:
        with pytest.raises(InvalidDescriptorError):
            SBFlag(a, steps)


def test_other_kind_validation():
    with pytest.raises(InvalidDescriptorError):
        Quadric(0, "q")
    with pytest.raises(InvalidDescriptorError):
        Quadric(3, "q", anisotropic=True, split=True)
    with pytest.raises(InvalidDescriptorError):
        G2Form("xi", False, 3)
    with pytest.raises(InvalidDescriptorError):
        BCForm("B", 3, 4, "g", False)
    with pytest.raises(InvalidDescriptorError):
        BCForm("D", 3, 1, "g", False)


# -- split models and cokernels ---------------------------------------------

def test_split_model_examples():
    assert split_model(sb(4, 4, 4, 1, 3)) == FlagDescriptor.simple(SimpleType("A", 3), {2})
    assert generating_polynomial(split_model(Quadric(4, "q"))) == (1, 1, 2, 1, 1)
    g = split_model(G2Form("xi", False, 2))
    assert g == FlagDescriptor.simple(SimpleType("G", 2), {1})
    assert generating_polynomial(g) == (1,) * 6


@pytest.mark.parametrize("n", range(1, 13))
def test_quadric_models_have_quadric_sequences(n):
    seq = generating_polynomial(split_model(Quadric(n, "q")))
    # Q^n: ones everywhere, with a 2 in the middle when n is even
    want = [1] * (n + 1)
    if n % 2 == 0:
        want[n // 2] = 2
    assert seq == tuple(want)


def test_chow0_examples():
    assert chow0_cokernel(sb(4, 4, 4, 1)) == 4
    assert chow0_cokernel(sb(4, 4, 2, 3)) == 4
    for n in (1, 3, 4, 9):
        assert chow0_cokernel(Quadric(n, "q", anisotropic=True)) == 2
    assert chow0_cokernel(Quadric(5, "q")) == 1
    assert chow0_cokernel(sb(4, 4, 2, 2)) == 2
    assert chow0_cokernel(sb(4, 2, 2, 2)) == 1
    assert chow0_cokernel(sb(5, 5, 5, 2)) is None
    assert chow0_cokernel(G2Form("trivial", True, 1)) == 1
    assert chow0_cokernel(G2Form("xi", False, 1)) is None


def test_index_reduction_examples():
    assert index_reduction_pn_qn(4, 3, 1) == 2
    for t in (1, 2, 5):
        assert index_reduction_pn_qn(1, 5, t) == 1
    assert index_reduction_pn_qn(8, 5, 2) == 8


@pytest.mark.parametrize("n", [1, 2, 4, 0, -3])
def test_index_reduction_rejects_bad_n(n):
    with pytest.raises(ValueError):
        index_reduction_pn_qn(4, n, 1)


# -- the rule engine --------------------------------------------------------

def test_classify_examples():
    a = validate_algebra(3, 3, 3)
    v = classify_pair(SBFlag(a, (1,)), SBFlag(a.opposite(), (1,)))
    assert v.conclusion is C.MOTIVES_ISOMORPHIC_VARIETIES_NOT and v.deciding_rule == "R2"

    v = classify_pair(sb(4, 4, 4, 1, 3), sb(4, 4, 4, 1, 2))
    assert v.conclusion is C.MOTIVES_ISOMORPHIC_VARIETIES_NOT

    v = classify_pair(sb(6, 1, 1, 1), Quadric(5, "h", split=True))
    assert v.motives_isomorphic is True

    v = classify_pair(Quadric(3, "q", anisotropic=True), sb(4, 4, 4, 1))
    assert v.conclusion is C.MOTIVES_NOT_ISOMORPHIC
    assert v.trace[-1].rule == "R1"
    assert "Z/2" in v.trace[-1].facts[0] and "Z/4" in v.trace[-1].facts[0]


def test_trace_always_starts_with_necessary_conditions():
    v = classify_pair(sb(3, 3, 3, 1), sb(3, 3, 3, 1, cid="B"))
    assert [e.rule for e in v.trace[:2]] == ["R0", "R1"]
    v = classify_pair(sb(3, 3, 3, 1), Quadric(4, "q"))
    assert [e.rule for e in v.trace] == ["R0"]


def test_undecided_has_reason():
    v = classify_pair(sb(5, 5, 5, 2), sb(5, 5, 5, 2, cid="B"))
    assert v.conclusion is C.UNDECIDED
    assert v.motives_isomorphic is None
    assert v.reason


def test_pn_qn_rule():
    v = classify_pair(sb(4, 2, 2, 1), Quadric(3, "q", anisotropic=True))
    assert v.deciding_rule == "R4" and v.conclusion is C.MOTIVES_NOT_ISOMORPHIC
    v = classify_pair(sb(4, 1, 1, 3), Quadric(3, "h", split=True))
    assert v.deciding_rule == "R4" and v.conclusion is C.MOTIVES_ISOMORPHIC_VARIETIES_NOT


def test_quadric_rule_uses_form_rank():
    # rank 8 forms (dim 6) are outside the rule, rank 7 forms (dim 5) inside
    v = classify_pair(Quadric(6, "a"), Quadric(6, "b"))
    assert v.conclusion is C.UNDECIDED
    v = classify_pair(Quadric(5, "a"), Quadric(5, "b"))
    assert v.deciding_rule == "R3" and v.conclusion is C.MOTIVES_NOT_ISOMORPHIC
    v = classify_pair(Quadric(4, "a"), Quadric(4, "a"))
    assert v.deciding_rule == "R3" and v.conclusion is C.VARIETIES_ISOMORPHIC


def test_bc_rule_only_for_odd_l_below_rank():
    v = classify_pair(BCForm("C", 3, 1, "g", True), BCForm("B", 3, 1, "d", True))
    assert v.deciding_rule == "R5" and v.conclusion is C.MOTIVES_ISOMORPHIC_VARIETIES_NOT
    v = classify_pair(BCForm("C", 4, 2, "g", False), BCForm("B", 4, 2, "d", False))
    assert v.deciding_rule != "R5"


def test_g2_rule():
    v = classify_pair(G2Form("xi", False, 1), G2Form("xi", False, 2))
    assert v.conclusion is C.MOTIVES_ISOMORPHIC_VARIETIES_NOT and v.deciding_rule == "R8"
    v = classify_pair(G2Form("trivial", True, 1), G2Form("trivial", True, 2))
    assert v.motives_isomorphic is True


def test_every_rule_has_a_citation():
    assert {name for name, _ in RULES} | {"R0", "R1"} == set(CITATIONS)
    assert all(CITATIONS.values())


def test_catalog_passes():
    done = classification_catalog()
    assert len(done) == len(catalog_cases())
    names = {c.name for c in catalog_cases()}
    assert "SB(A) vs SB(A^op), deg 5, ind 5, exp 5" in names
    assert "P^5 vs split G2/P2" in names


def test_catalog_contents():
    cases = catalog_cases()
    positives = [c for c in cases if c.in_classification]
    assert all(c.expected is C.MOTIVES_ISOMORPHIC_VARIETIES_NOT for c in positives)
    assert {c.dimension for c in positives} <= {2, 3, 4, 5}
    assert {c.x.algebra.degree for c in positives if isinstance(c.x, SBFlag) and c.rule == "R2"} == {3, 4, 5, 6}
    dim4 = [c for c in cases if c.dimension == 4]
    assert dim4 and all(not c.expected.motives_isomorphic for c in dim4 if c.rule == "R0")


def test_catalog_detects_wrong_expectation(monkeypatch):
    from motive_atlas import twisted
    real = twisted.catalog_cases

    def broken():
        cases = real()
        c = cases[0]
        return [type(c)(c.name, c.x, c.y, C.MOTIVES_NOT_ISOMORPHIC, c.rule)] + cases[1:]

    monkeypatch.setattr(twisted, "catalog_cases", broken)
    with pytest.raises(CatalogMismatch, match="SB"):
        twisted.classification_catalog()


def test_split_variety_pair():
    b2 = SplitVariety(FlagDescriptor.simple(SimpleType("B", 2), ()))
    c2 = SplitVariety(FlagDescriptor.simple(SimpleType("C", 2), ()))
    assert classify_pair(b2, c2).conclusion is C.VARIETIES_ISOMORPHIC


# -- properties -------------------------------------------------------------

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=300)
@given(seeds)
def test_symmetry_and_self(seed):
    import random
    rng = random.Random(seed)
    x, y = random_variety(rng), random_variety(rng)
    assert classify_pair(x, y).conclusion is classify_pair(y, x).conclusion
    assert classify_pair(x, x).motives_isomorphic is not False


@settings(max_examples=200)
@given(seeds)
def test_positive_verdicts_respect_necessary_conditions(seed):
    for x, y in random_pairs(seed, 20, pool_size=60):
        v = classify_pair(x, y)
        if v.motives_isomorphic:
            assert motives_equal_split(split_model(x), split_model(y))
            cx, cy = chow0_cokernel(x), chow0_cokernel(y)
            assert cx is None or cy is None or cx == cy


@settings(max_examples=200)
@given(seeds)
def test_flipping_both_sides(seed):
    for x, y in random_pairs(seed, 10, pool_size=60):
        assert classify_pair(flip_op(x), flip_op(y)).conclusion is classify_pair(x, y).conclusion


def test_duality_isomorphism_at_any_exponent():
    a = validate_algebra(5, 5, 5)
    v = classify_pair(SBFlag(a, (1, 2)), SBFlag(a.opposite(), (3, 4)))
    assert v.conclusion is C.VARIETIES_ISOMORPHIC and v.deciding_rule == "R9"
    v = classify_pair(SBFlag(a, (1, 2)), SBFlag(a.opposite(), (1, 2)))
    assert v.conclusion is C.UNDECIDED


def test_sb13_vs_sb23_goes_through_type_a_rule():
    a = validate_algebra(4, 4, 4)
    v = classify_pair(SBFlag(a, (1, 3)), SBFlag(a, (2, 3)))
    assert v.deciding_rule == "R6" and v.conclusion is C.MOTIVES_ISOMORPHIC_VARIETIES_NOT
