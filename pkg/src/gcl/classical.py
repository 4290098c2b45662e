"""The two classical concept lattices and their recovery from the general one.

FCL concepts pair an intersection of attribute columns with the
attributes shared by all its objects; RSL concepts pair a union of
columns with the attributes whose column it swallows.  Both extent
families sit inside the block-union family, so every classical concept
also appears as a general node, and membership of a plain attribute in a
classical intent can be read off the node's canonical bounds alone:
m lies in the RSL intent of X iff the minterm set of m is inside the
disjunctive bound of X, and in the FCL intent iff the conjunctive bound
of X is inside the minterm set of m.  recover_classical exploits exactly
that, making it an independent route to the same lattices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import BitSet
from .context import FormalContext, box_of, intent_of
from .errors import CapExceeded
from .exprs import Var, to_canonical
from .irreducibles import DEFAULT_IRREDUCIBLES_CAP, LiteralSet, is_member
from .lattice import GclLattice


@dataclass(frozen=True)
class FclConcept:
    """extent = objects with every intent attribute; intent = their common row."""

    extent: BitSet
    intent: BitSet


@dataclass(frozen=True)
class RslConcept:
    """extent = union of the intent's columns; intent = columns inside extent."""

    extent: BitSet
    intent: BitSet


@dataclass(frozen=True)
class ClassicalLattice:
    kind: str
    context: FormalContext
    concepts: tuple
    hasse_edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.kind not in ("fcl", "rsl"):
            raise ValueError(f"unknown lattice kind {self.kind!r}")

    @property
    def sup(self):
        return self.concepts[-1]

    @property
    def inf(self):
        return self.concepts[0]


_SWEEP_LIMIT = 20


def _fcl_extents(ctx: FormalContext) -> list[int]:
    full = (1 << ctx.n_objects) - 1
    if ctx.n_attributes <= _SWEEP_LIMIT:
        found = set()
        for ys in range(1 << ctx.n_attributes):
            bits = full
            rest = ys
            while rest:
                low = rest & -rest
                bits &= ctx.cols[low.bit_length() - 1]
                rest ^= low
            found.add(bits)
        return sorted(found, key=lambda b: (b.bit_count(), b))
    return _closure(ctx, full, lambda a, b: a & b)


def _rsl_extents(ctx: FormalContext) -> list[int]:
    if ctx.n_attributes <= _SWEEP_LIMIT:
        found = set()
        for ys in range(1 << ctx.n_attributes):
            bits = 0
            rest = ys
            while rest:
                low = rest & -rest
                bits |= ctx.cols[low.bit_length() - 1]
                rest ^= low
            found.add(bits)
        return sorted(found, key=lambda b: (b.bit_count(), b))
    return _closure(ctx, 0, lambda a, b: a | b)


def _closure(ctx: FormalContext, seed: int, op) -> list[int]:
    # worklist closure of {seed} under combining with single columns
    found = {seed}
    todo = [seed]
    while todo:
        cur = todo.pop()
        for col in ctx.cols:
            new = op(cur, col)
            if new not in found:
                found.add(new)
                todo.append(new)
    return sorted(found, key=lambda b: (b.bit_count(), b))


def _hasse(extent_bits: list[int]) -> tuple[tuple[int, int], ...]:
    """Cover pairs (lower, upper) of the inclusion order, ascending."""
    n = len(extent_bits)
    edges = []
    for i in range(n):
        a = extent_bits[i]
        for j in range(n):
            b = extent_bits[j]
            if a == b or a & ~b:
                continue
            if not any(
                c != a and c != b and a & ~c == 0 and c & ~b == 0
                for c in extent_bits
            ):
                edges.append((i, j))
    return tuple(sorted(edges))


def build_fcl(ctx: FormalContext) -> ClassicalLattice:
    """Concepts (X, X^I) over all intersections of columns, G included."""
    ext_bits = _fcl_extents(ctx)
    concepts = tuple(
        FclConcept(ext := BitSet(bits, ctx.n_objects), intent_of(ctx, ext))
        for bits in ext_bits
    )
    return ClassicalLattice("fcl", ctx, concepts, _hasse(ext_bits))


def build_rsl(ctx: FormalContext) -> ClassicalLattice:
    """Concepts (X, X-box) over all unions of columns, the empty set included."""
    ext_bits = _rsl_extents(ctx)
    concepts = tuple(
        RslConcept(ext := BitSet(bits, ctx.n_objects), box_of(ctx, ext))
        for bits in ext_bits
    )
    return ClassicalLattice("rsl", ctx, concepts, _hasse(ext_bits))


def recover_classical(
    lat: GclLattice, kind: str, irreducibles_cap: int = DEFAULT_IRREDUCIBLES_CAP
) -> ClassicalLattice:
    """Rebuild a classical lattice from general nodes alone.

    Intents come from canonical-bound membership tests, extents are kept
    when they reproduce themselves from their own intent's columns.  When
    the attribute count is within the irreducibles cap, every selected
    attribute is additionally checked to be an irreducible one-literal
    description of its column, i.e. to appear in the quotient pools the
    bound decompositions draw from.
    """
    if kind not in ("fcl", "rsl"):
        raise ValueError(f"unknown lattice kind {kind!r}")
    ctx = lat.context
    m = ctx.n_attributes

    col_bits = [0] * m
    for b in lat.partition.blocks:
        for j in b.intent:
            col_bits[j] |= b.extent.bits

    var_tables = [to_canonical(Var(j), m).table for j in range(m)]
    check_pool = m <= irreducibles_cap

    keep = []
    for node in lat.nodes:
        if kind == "rsl":
            ys = [j for j in range(m) if var_tables[j] & ~node.grsp.table == 0]
            rebuilt = 0
            for j in ys:
                rebuilt |= col_bits[j]
        else:
            ys = [j for j in range(m) if node.gfcp.table & ~var_tables[j] == 0]
            rebuilt = (1 << ctx.n_objects) - 1
            for j in ys:
                rebuilt &= col_bits[j]
        if rebuilt != node.extent.bits:
            continue
        intent = BitSet.of(ys, m)
        if check_pool:
            mode = "conjunction" if kind == "rsl" else "disjunction"
            for j in ys:
                single = LiteralSet(BitSet(1 << j, m), BitSet(0, m))
                if not is_member(ctx, single, BitSet(col_bits[j], ctx.n_objects), mode):
                    raise AssertionError(
                        f"attribute {ctx.attributes[j]} missing from its own "
                        f"irreducible {mode} class"
                    )
        if kind == "rsl":
            keep.append(RslConcept(node.extent, intent))
        else:
            keep.append(FclConcept(node.extent, intent))

    keep.sort(key=lambda c: (len(c.extent), c.extent.bits))
    ext_bits = [c.extent.bits for c in keep]
    return ClassicalLattice(kind, ctx, tuple(keep), _hasse(ext_bits))
