"""Irreducible literal-set classes, quotients, and reduced intents."""

import pytest
from hypothesis import given, settings

from conftest import contexts
from gcl import (
    BitSet,
    CapExceeded,
    FormalContext,
    IrredClass,
    LiteralSet,
    NotAGeneralExtent,
    eval_contextual,
    expr_to_str,
    irreducible_conjunctions,
    irreducible_disjunctions,
    is_member,
    quotient_class,
    simplified_intent,
    to_canonical,
)
from gcl.lattice import build_gcl


def lits(pos, neg, width=2):
    return LiteralSet(BitSet(pos, width), BitSet(neg, width))


def describe_all(cls, attributes):
    return tuple(m.describe(attributes) for m in cls.members)


# --- LiteralSet ---


def test_literal_set_basics():
    s = lits(0b01, 0b10)
    assert s.size == 2
    assert s.is_consistent()
    assert s.literals() == [(0, True), (1, False)]
    assert s.describe(("a", "b")) == "{a, !b}"
    assert s.flipped() == lits(0b10, 0b01)
    assert s.flipped().flipped() == s


def test_literal_set_inconsistent():
    s = lits(0b01, 0b01)
    assert not s.is_consistent()
    # positive pick comes before the negative one for the same attribute
    assert s.literals() == [(0, True), (0, False)]
    assert s.describe(("a", "b")) == "{a, !a}"


def test_literal_set_width_mismatch():
    with pytest.raises(ValueError, match="different widths"):
        LiteralSet(BitSet(0, 2), BitSet(0, 3))


def test_literal_set_subset():
    small = lits(0b01, 0b00)
    big = lits(0b01, 0b10)
    assert small.issubset(big)
    assert not big.issubset(small)
    assert lits(0b00, 0b10).issubset(big)
    assert not lits(0b10, 0b00).issubset(big)


def test_literal_set_exprs(t1):
    s = lits(0b01, 0b10)
    assert expr_to_str(s.conjunction(), t1.attributes) == "a & !b"
    assert expr_to_str(s.disjunction(), t1.attributes) == "a | !b"
    empty = lits(0, 0)
    assert expr_to_str(empty.conjunction(), t1.attributes) == "1"
    assert expr_to_str(empty.disjunction(), t1.attributes) == "0"


def test_irred_class_mode_validation():
    with pytest.raises(ValueError, match="unknown mode"):
        IrredClass(BitSet(0, 2), "both", ())


# --- class enumeration on the worked three-object context ---

CONJ_CLASSES = {
    0b000: ("{!a, !b}", "{a, !a}", "{b, !b}"),
    0b001: ("{!b}",),
    0b010: ("{a, b}",),
    0b011: ("{a}",),
    0b100: ("{!a}",),
    0b101: (),
    0b110: ("{b}",),
    0b111: ("{}",),
}

DISJ_CLASSES = {
    0b000: ("{}",),
    0b001: ("{!b}",),
    0b010: (),
    0b011: ("{a}",),
    0b100: ("{!a}",),
    0b101: ("{!a, !b}",),
    0b110: ("{b}",),
    0b111: ("{a, !a}", "{b, !b}", "{a, b}"),
}


@pytest.mark.parametrize("bits,expected", sorted(CONJ_CLASSES.items()))
def test_conjunction_classes(t1, bits, expected):
    cls = irreducible_conjunctions(t1, BitSet(bits, 3))
    assert cls.mode == "conjunction"
    assert cls.target == BitSet(bits, 3)
    assert describe_all(cls, t1.attributes) == expected


@pytest.mark.parametrize("bits,expected", sorted(DISJ_CLASSES.items()))
def test_disjunction_classes(t1, bits, expected):
    cls = irreducible_disjunctions(t1, BitSet(bits, 3))
    assert cls.mode == "disjunction"
    assert describe_all(cls, t1.attributes) == expected


def test_class_width_check(t1):
    with pytest.raises(ValueError, match="width 2"):
        irreducible_conjunctions(t1, BitSet(0, 2))


def test_negation_swap_worked(t1):
    # flipping every member of a conjunction class lands on the disjunction
    # class of the complementary extent, and vice versa
    for bits in range(8):
        xs = BitSet(bits, 3)
        conj_flipped = {
            m.flipped() for m in irreducible_conjunctions(t1, xs).members
        }
        disj_members = set(irreducible_disjunctions(t1, ~xs).members)
        assert conj_flipped == disj_members


# --- membership checks ---


def test_is_member_accepts(t1):
    assert is_member(t1, lits(0b01, 0), BitSet(0b011, 3), "conjunction")
    assert is_member(t1, lits(0b11, 0), BitSet(0b010, 3), "conjunction")
    assert is_member(t1, lits(0b01, 0), BitSet(0b011, 3), "disjunction")


def test_is_member_vacuous(t1):
    # sets with at most one pick are never reducible
    assert is_member(t1, lits(0, 0), BitSet(0b111, 3), "conjunction")
    assert is_member(t1, lits(0, 0), BitSet(0b000, 3), "disjunction")
    assert is_member(t1, lits(0, 0b10), BitSet(0b001, 3), "conjunction")


def test_is_member_wrong_extent(t1):
    assert not is_member(t1, lits(0b01, 0), BitSet(0b001, 3), "conjunction")


def test_is_member_reducible(t1):
    # a & !b describes {g1} but !b alone already does
    assert not is_member(t1, lits(0b01, 0b10), BitSet(0b001, 3), "conjunction")


def test_is_member_mode_validation(t1):
    with pytest.raises(ValueError, match="unknown mode"):
        is_member(t1, lits(0, 0), BitSet(0, 3), "meet")


# --- quotients ---


def test_quotient_same_class_is_identity(t1):
    cls = irreducible_disjunctions(t1, BitSet(0b111, 3))
    assert quotient_class(cls, cls).members == cls.members


def test_quotient_drops_factoring_members(t1):
    g2 = irreducible_conjunctions(t1, BitSet(0b010, 3))
    g12 = irreducible_conjunctions(t1, BitSet(0b011, 3))
    assert quotient_class(g2, g12).members == ()


def test_quotient_partial_drop(t1):
    top = irreducible_disjunctions(t1, BitSet(0b111, 3))
    g12 = irreducible_disjunctions(t1, BitSet(0b011, 3))
    q = quotient_class(top, g12)
    assert describe_all(q, t1.attributes) == ("{b, !b}",)


def test_quotient_ignores_empty_divisor(t1):
    # the empty literal set never divides anything out
    top = irreducible_conjunctions(t1, BitSet(0b111, 3))
    assert top.members == (lits(0, 0),)
    other = irreducible_conjunctions(t1, BitSet(0b001, 3))
    assert quotient_class(other, top).members == other.members


def test_quotient_mode_mismatch(t1):
    c = irreducible_conjunctions(t1, BitSet(0, 3))
    d = irreducible_disjunctions(t1, BitSet(0, 3))
    with pytest.raises(ValueError, match="mode mismatch"):
        quotient_class(c, d)


# --- reduced intents ---


@pytest.mark.parametrize(
    "bits,mode,text,ids",
    [
        (0b001, "grsp_dnf", "a & !a | !b", [0, 1]),
        (0b000, "grsp_dnf", "!a & !b | a & !a | b & !b", [0]),
        (0b111, "grsp_dnf", "!b | a | !a | b | 1", [0, 1, 2, 3]),
        (0b001, "gfcp_cnf", "!b & a", [1]),
        (0b111, "gfcp_cnf", "(a | !a) & (b | !b) & (a | b)", [1, 2, 3]),
        (0b000, "gfcp_cnf", "0 & !b & a & !a & b", []),
    ],
)
def test_simplified_intent_worked(t1, bits, mode, text, ids):
    expr = simplified_intent(t1, BitSet(bits, 3), mode)
    assert expr_to_str(expr, t1.attributes) == text
    assert to_canonical(expr, 2).ids() == ids


def test_simplified_intent_matches_bounds(t1):
    lat = build_gcl(t1)
    for node in lat.nodes:
        dnf = simplified_intent(t1, node.extent, "grsp_dnf")
        cnf = simplified_intent(t1, node.extent, "gfcp_cnf")
        assert to_canonical(dnf, 2) == node.grsp
        assert to_canonical(cnf, 2) == node.gfcp
        assert eval_contextual(t1, dnf) == node.extent
        assert eval_contextual(t1, cnf) == node.extent


def test_simplified_intent_rejects_non_block_union():
    ctx = FormalContext.from_table(
        ("g1", "g2", "g3"), ("a", "b"), ("X.", "X.", ".X")
    )
    with pytest.raises(NotAGeneralExtent, match="not a union of blocks"):
        simplified_intent(ctx, BitSet(0b001, 3), "grsp_dnf")


def test_simplified_intent_mode_validation(t1):
    with pytest.raises(ValueError, match="unknown mode"):
        simplified_intent(t1, BitSet(0, 3), "dnf")


def test_simplified_intent_width_check(t1):
    with pytest.raises(ValueError, match="width 4"):
        simplified_intent(t1, BitSet(0, 4), "grsp_dnf")


# --- caps ---


def test_attribute_cap(t1):
    with pytest.raises(CapExceeded, match="2 attributes exceed"):
        irreducible_conjunctions(t1, BitSet(0, 3), cap=1)
    with pytest.raises(CapExceeded, match="cap of 1"):
        simplified_intent(t1, BitSet(0, 3), "grsp_dnf", cap=1)
    wide = FormalContext(("g1",), tuple(f"m{j}" for j in range(11)), (0,))
    with pytest.raises(CapExceeded, match="11 attributes"):
        irreducible_disjunctions(wide, BitSet(0, 1))


# --- properties ---


@given(contexts(max_objects=4, max_attributes=3))
@settings(max_examples=40, deadline=None)
def test_members_pass_the_checker(ctx):
    for bits in range(1 << ctx.n_objects):
        xs = BitSet(bits, ctx.n_objects)
        for mode, enum in (
            ("conjunction", irreducible_conjunctions),
            ("disjunction", irreducible_disjunctions),
        ):
            for m in enum(ctx, xs).members:
                assert is_member(ctx, m, xs, mode)


@given(contexts(max_objects=4, max_attributes=3))
@settings(max_examples=40, deadline=None)
def test_flip_duality(ctx):
    for bits in range(1 << ctx.n_objects):
        xs = BitSet(bits, ctx.n_objects)
        flipped = {m.flipped() for m in irreducible_conjunctions(ctx, xs).members}
        assert flipped == set(irreducible_disjunctions(ctx, ~xs).members)
