"""Composite attributes: Boolean expressions over M and their canonical forms.

Closing the attribute set under negation, conjunction and disjunction
yields composite attributes.  Every composite attribute has a unique
canonical form: the set of minterms (full conjunctions, one polarity per
attribute) it covers.  Minterm ids encode polarity bitwise with attribute
0 as the least significant bit, so for M = (a, b) id 2 is the conjunction
(not a) and b.

Canonical forms are stored as truth tables packed into ints (bit t set
iff minterm t is covered), which makes the Boolean operations single int
ops; the id-set view is exposed for serialization and comparison.

Contextual evaluation maps an expression to its extent: attribute j maps
to its column, negation to complement in G, conjunction and disjunction
to intersection and union.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bitset import BitSet
from .context import FormalContext
from .errors import CapExceeded, ParseError

DEFAULT_CANONICAL_CAP = 20


# ---------------------------------------------------------------------------
# expression AST

class AttrExpr:
    """Base class for attribute expressions; nodes are immutable."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(AttrExpr):
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"negative attribute index {self.index}")


@dataclass(frozen=True)
class Not(AttrExpr):
    child: AttrExpr


@dataclass(frozen=True)
class And(AttrExpr):
    children: tuple[AttrExpr, ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("And needs at least one child")


@dataclass(frozen=True)
class Or(AttrExpr):
    children: tuple[AttrExpr, ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("Or needs at least one child")


@dataclass(frozen=True)
class _Const(AttrExpr):
    value: bool


TOP = _Const(True)
BOTTOM = _Const(False)


def conj(children) -> AttrExpr:
    """And over a sequence; empty means TOP, a singleton is unwrapped."""
    children = tuple(children)
    if not children:
        return TOP
    if len(children) == 1:
        return children[0]
    return And(children)


def disj(children) -> AttrExpr:
    """Or over a sequence; empty means BOTTOM, a singleton is unwrapped."""
    children = tuple(children)
    if not children:
        return BOTTOM
    if len(children) == 1:
        return children[0]
    return Or(children)


def literal(index: int, positive: bool) -> AttrExpr:
    return Var(index) if positive else Not(Var(index))


# ---------------------------------------------------------------------------
# contextual evaluation

def eval_contextual(ctx: FormalContext, expr: AttrExpr) -> BitSet:
    """The extent of expr in ctx."""
    return BitSet(_eval_bits(ctx, expr), ctx.n_objects)


def _eval_bits(ctx: FormalContext, expr: AttrExpr) -> int:
    full = (1 << ctx.n_objects) - 1
    if isinstance(expr, Var):
        if expr.index >= ctx.n_attributes:
            raise ValueError(
                f"attribute index {expr.index} out of range for {ctx.n_attributes} attributes"
            )
        return ctx.cols[expr.index]
    if isinstance(expr, Not):
        return full ^ _eval_bits(ctx, expr.child)
    if isinstance(expr, And):
        bits = full
        for c in expr.children:
            bits &= _eval_bits(ctx, c)
        return bits
    if isinstance(expr, Or):
        bits = 0
        for c in expr.children:
            bits |= _eval_bits(ctx, c)
        return bits
    if isinstance(expr, _Const):
        return full if expr.value else 0
    raise TypeError(f"not an attribute expression: {expr!r}")


# ---------------------------------------------------------------------------
# canonical forms

@dataclass(frozen=True)
class CanonicalForm:
    """The minterm set of a composite attribute over m_count attributes.

    Bit t of ``table`` is set iff minterm t is covered.  Two composite
    attributes are the same attribute exactly when their canonical forms
    are equal.
    """

    m_count: int
    table: int

    def __post_init__(self):
        if self.m_count < 0:
            raise ValueError("negative attribute count")
        if not 0 <= self.table < (1 << (1 << self.m_count)):
            raise ValueError(f"table does not fit {self.m_count} attributes")

    @classmethod
    def of(cls, m_count: int, ids) -> "CanonicalForm":
        table = 0
        size = 1 << m_count
        for t in ids:
            if not 0 <= t < size:
                raise ValueError(f"minterm id {t} out of range for {m_count} attributes")
            table |= 1 << t
        return cls(m_count, table)

    @property
    def minterms(self) -> frozenset[int]:
        return frozenset(self.ids())

    def ids(self) -> list[int]:
        return [t for t in range(1 << self.m_count) if (self.table >> t) & 1]

    def _check(self, other: "CanonicalForm") -> None:
        if self.m_count != other.m_count:
            raise ValueError(f"attribute count mismatch: {self.m_count} vs {other.m_count}")

    def __and__(self, other: "CanonicalForm") -> "CanonicalForm":
        self._check(other)
        return CanonicalForm(self.m_count, self.table & other.table)

    def __or__(self, other: "CanonicalForm") -> "CanonicalForm":
        self._check(other)
        return CanonicalForm(self.m_count, self.table | other.table)

    def __invert__(self) -> "CanonicalForm":
        return CanonicalForm(self.m_count, self.table ^ ((1 << (1 << self.m_count)) - 1))

    def __len__(self) -> int:
        return self.table.bit_count()

    def issubset(self, other: "CanonicalForm") -> bool:
        self._check(other)
        return self.table & ~other.table == 0

    def is_zero(self) -> bool:
        return self.table == 0

    def is_one(self) -> bool:
        return self.table == (1 << (1 << self.m_count)) - 1


@dataclass(frozen=True)
class Minterm:
    """One full conjunction: polarity bit j gives the sign of attribute j."""

    m_count: int
    id: int

    def __post_init__(self):
        if not 0 <= self.id < (1 << self.m_count):
            raise ValueError(f"minterm id {self.id} out of range for {self.m_count} attributes")

    @property
    def polarity(self) -> BitSet:
        return BitSet(self.id, self.m_count)

    def conjunction(self) -> AttrExpr:
        return conj(literal(j, (self.id >> j) & 1 == 1) for j in range(self.m_count))


def _guard_cap(m_count: int, cap: int) -> None:
    if m_count > cap:
        raise CapExceeded(
            f"{m_count} attributes exceed the canonical-form cap of {cap}"
        )


@lru_cache(maxsize=None)
def _var_table(index: int, m_count: int) -> int:
    # truth table of attribute `index` over all 2^m_count minterm ids:
    # alternating runs of 2^index zeros and ones
    half = 1 << index
    chunk = ((1 << half) - 1) << half
    reps = ((1 << (1 << m_count)) - 1) // ((1 << (2 * half)) - 1)
    return chunk * reps


def to_canonical(expr: AttrExpr, m_count: int, cap: int = DEFAULT_CANONICAL_CAP) -> CanonicalForm:
    """Canonical form of expr over attributes 0 .. m_count-1."""
    _guard_cap(m_count, cap)
    return CanonicalForm(m_count, _table_of(expr, m_count))


def _table_of(expr: AttrExpr, m_count: int) -> int:
    full = (1 << (1 << m_count)) - 1
    if isinstance(expr, Var):
        if expr.index >= m_count:
            raise ValueError(
                f"attribute index {expr.index} out of range for {m_count} attributes"
            )
        return _var_table(expr.index, m_count)
    if isinstance(expr, Not):
        return full ^ _table_of(expr.child, m_count)
    if isinstance(expr, And):
        table = full
        for c in expr.children:
            table &= _table_of(c, m_count)
        return table
    if isinstance(expr, Or):
        table = 0
        for c in expr.children:
            table |= _table_of(c, m_count)
        return table
    if isinstance(expr, _Const):
        return full if expr.value else 0
    raise TypeError(f"not an attribute expression: {expr!r}")


def canonical_to_expr(cf: CanonicalForm, mode: str) -> AttrExpr:
    """Rebuild an expression from a canonical form.

    mode "dnf": disjunction of the covered minterms (BOTTOM when none).
    mode "cnf": conjunction of one maxterm per missing minterm (TOP when
    all are covered); the maxterm for id t disjoins each attribute with
    the polarity opposite to t.
    """
    if mode == "dnf":
        return disj(Minterm(cf.m_count, t).conjunction() for t in cf.ids())
    if mode == "cnf":
        return conj(_maxterm(cf.m_count, t) for t in (~cf).ids())
    raise ValueError(f"unknown mode {mode!r}")


def _maxterm(m_count: int, id: int) -> AttrExpr:
    return disj(literal(j, (id >> j) & 1 == 0) for j in range(m_count))


def atoms_coatoms(m_count: int, cap: int = DEFAULT_CANONICAL_CAP):
    """All minterms in ascending id order, with their paired coatoms.

    The coatom paired with atom t is the disjunction of all literals of
    the opposite polarity, i.e. the negation of atom t.
    """
    _guard_cap(m_count, cap)
    atoms = [Minterm(m_count, t) for t in range(1 << m_count)]
    coatoms = [_maxterm(m_count, t) for t in range(1 << m_count)]
    return atoms, coatoms


def intrinsic_compare(
    e1: AttrExpr, e2: AttrExpr, m_count: int, cap: int = DEFAULT_CANONICAL_CAP
) -> str:
    """Order two expressions by minterm-set inclusion.

    Returns "equal", "less", "greater" or "incomparable".
    """
    _guard_cap(m_count, cap)
    t1 = _table_of(e1, m_count)
    t2 = _table_of(e2, m_count)
    if t1 == t2:
        return "equal"
    if t1 & ~t2 == 0:
        return "less"
    if t2 & ~t1 == 0:
        return "greater"
    return "incomparable"


# ---------------------------------------------------------------------------
# surface syntax: parsing and printing

_OPS = set("&|!()")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _OPS:
            tokens.append((ch, i))
            i += 1
        else:
            start = i
            while i < len(text) and not text[i].isspace() and text[i] not in _OPS:
                i += 1
            tokens.append((text[start:i], start))
    return tokens


def parse_expr(text: str, attributes) -> AttrExpr:
    """Parse infix query syntax: names, !, &, |, parentheses.

    Precedence is ! over & over |.  "0" and "1" denote BOTTOM and TOP
    unless an attribute carries that name.
    """
    index = {name: j for j, name in enumerate(attributes)}
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def where():
        return tokens[pos][1] + 1 if pos < len(tokens) else len(text) + 1

    def parse_or():
        nonlocal pos
        parts = [parse_and()]
        while peek() == "|":
            pos += 1
            parts.append(parse_and())
        return disj(parts)

    def parse_and():
        nonlocal pos
        parts = [parse_unary()]
        while peek() == "&":
            pos += 1
            parts.append(parse_unary())
        return conj(parts)

    def parse_unary():
        nonlocal pos
        if peek() == "!":
            pos += 1
            return Not(parse_unary())
        return parse_atom()

    def parse_atom():
        nonlocal pos
        tok = peek()
        if tok is None:
            raise ParseError(f"unexpected end of expression at column {where()}")
        if tok == "(":
            pos += 1
            inner = parse_or()
            if peek() != ")":
                raise ParseError(f"expected ')' at column {where()}")
            pos += 1
            return inner
        if tok in _OPS:
            raise ParseError(f"unexpected {tok!r} at column {where()}")
        pos += 1
        if tok in index:
            return Var(index[tok])
        if tok == "1":
            return TOP
        if tok == "0":
            return BOTTOM
        raise ParseError(f"unknown attribute {tok!r} at column {where() - len(tok)}")

    expr = parse_or()
    if pos < len(tokens):
        raise ParseError(f"unexpected {peek()!r} at column {where()}")
    return expr


def expr_to_str(expr: AttrExpr, attributes) -> str:
    """Render with the same syntax parse_expr accepts."""
    return _render(expr, attributes, 0)


def _render(expr: AttrExpr, attributes, level: int) -> str:
    # level: 0 = or-context, 1 = and-context, 2 = unary-context
    if isinstance(expr, Var):
        return attributes[expr.index]
    if isinstance(expr, _Const):
        return "1" if expr.value else "0"
    if isinstance(expr, Not):
        return "!" + _render(expr.child, attributes, 2)
    if isinstance(expr, And):
        body = " & ".join(_render(c, attributes, 1) for c in expr.children)
        return f"({body})" if level > 1 else body
    if isinstance(expr, Or):
        body = " | ".join(_render(c, attributes, 0) for c in expr.children)
        return f"({body})" if level > 0 else body
    raise TypeError(f"not an attribute expression: {expr!r}")
