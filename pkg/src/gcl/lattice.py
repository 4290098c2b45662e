"""Construction of the general concept lattice of a context.

Minterm t (one polarity choice per attribute) holds exactly on the
objects whose row equals t, so its extent is either empty or one whole
block of row-identical objects.  Consequences used throughout:

* the extents that carry concepts are exactly the unions of blocks
  (2^n_F of them for n_F blocks), and they form a Boolean algebra;
* the conjunctive bound (gfcp) of such an extent X is the set of block
  rows lying inside X, and the disjunctive bound (grsp) adds every
  minterm with empty extent on top;
* meet and join are intersection and union of extents, and the cover
  relation is "differs in exactly one block".

Each node therefore stores its block subset as an int id; node ids
double as indices into the lattice's node tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .bitset import BitSet
from .context import BlockPartition, FormalContext, blocks
from .errors import CapExceeded, NotAGeneralExtent
from .exprs import (
    DEFAULT_CANONICAL_CAP,
    AttrExpr,
    CanonicalForm,
    eval_contextual,
)

DEFAULT_NODE_CAP = 20


@dataclass(frozen=True)
class GeneralConcept:
    """A lattice node: an extent with its two canonical attribute bounds.

    grsp is the largest composite attribute whose extent is exactly the
    node's extent, gfcp the smallest; every composite attribute with this
    extent sits between them.
    """

    block_set: int
    extent: BitSet
    grsp: CanonicalForm
    gfcp: CanonicalForm


@dataclass(frozen=True)
class GclLattice:
    context: FormalContext
    partition: BlockPartition
    nodes: tuple[GeneralConcept, ...]
    hasse_edges: tuple[tuple[int, int], ...]
    zero_rho: CanonicalForm
    one_eta: CanonicalForm

    @property
    def sup(self) -> GeneralConcept:
        return self.nodes[-1]

    @property
    def inf(self) -> GeneralConcept:
        return self.nodes[0]

    @cached_property
    def _node_by_extent(self) -> dict:
        return {node.extent.bits: node for node in self.nodes}

    def node_of(self, xs: BitSet) -> GeneralConcept:
        """The node with extent xs; raises NotAGeneralExtent otherwise."""
        if xs.width != self.context.n_objects:
            raise ValueError(
                f"object set width {xs.width}, context has {self.context.n_objects} objects"
            )
        node = self._node_by_extent.get(xs.bits)
        if node is None:
            raise NotAGeneralExtent(
                f"{{{', '.join(self.context.object_names(xs))}}} is not a union of blocks"
            )
        return node


def _guard_caps(ctx: FormalContext, part: BlockPartition, node_cap: int, canonical_cap: int):
    if part.n_f > node_cap:
        raise CapExceeded(
            f"{part.n_f} blocks exceed the node cap of {node_cap} "
            f"(the lattice would need 2^{part.n_f} nodes)"
        )
    if ctx.n_attributes > canonical_cap:
        raise CapExceeded(
            f"{ctx.n_attributes} attributes exceed the canonical-form cap of {canonical_cap}"
        )


def _tables(ctx: FormalContext, part: BlockPartition) -> tuple[int, int]:
    """(realized, empty) minterm tables: block rows vs extent-free minterms."""
    realized = 0
    for row in part.intent_ids():
        realized |= 1 << row
    full = (1 << (1 << ctx.n_attributes)) - 1
    return realized, full ^ realized


def contextual_constants(
    ctx: FormalContext, canonical_cap: int = DEFAULT_CANONICAL_CAP
) -> tuple[CanonicalForm, CanonicalForm]:
    """(zero_rho, one_eta): the grsp of the empty extent and the gfcp of G.

    zero_rho collects every minterm with empty extent; one_eta is its
    complement, the minterms that occur as block rows.
    """
    part = blocks(ctx)
    _guard_caps(ctx, part, part.n_f, canonical_cap)
    realized, empty = _tables(ctx, part)
    m = ctx.n_attributes
    return CanonicalForm(m, empty), CanonicalForm(m, realized)


def extent_family(ctx: FormalContext, node_cap: int = DEFAULT_NODE_CAP) -> list[BitSet]:
    """All unions of blocks, in ascending block-set id order."""
    part = blocks(ctx)
    if part.n_f > node_cap:
        raise CapExceeded(
            f"{part.n_f} blocks exceed the node cap of {node_cap} "
            f"(the family would have 2^{part.n_f} members)"
        )
    exts = [b.extent.bits for b in part.blocks]
    out = []
    for ks in range(1 << part.n_f):
        bits = 0
        rest = ks
        while rest:
            low = rest & -rest
            bits |= exts[low.bit_length() - 1]
            rest ^= low
        out.append(BitSet(bits, ctx.n_objects))
    return out


def _concept(
    ctx: FormalContext, part: BlockPartition, block_set: int, empty_table: int
) -> GeneralConcept:
    ext = 0
    gfcp = 0
    rest = block_set
    while rest:
        low = rest & -rest
        k = low.bit_length() - 1
        ext |= part.blocks[k].extent.bits
        gfcp |= 1 << part.blocks[k].intent.bits
        rest ^= low
    m = ctx.n_attributes
    return GeneralConcept(
        block_set,
        BitSet(ext, ctx.n_objects),
        CanonicalForm(m, gfcp | empty_table),
        CanonicalForm(m, gfcp),
    )


def general_concept(
    ctx: FormalContext,
    xs: BitSet,
    node_cap: int = DEFAULT_NODE_CAP,
    canonical_cap: int = DEFAULT_CANONICAL_CAP,
) -> GeneralConcept:
    """The concept at extent xs; xs must be a union of blocks."""
    if xs.width != ctx.n_objects:
        raise ValueError(
            f"object set width {xs.width}, context has {ctx.n_objects} objects"
        )
    part = blocks(ctx)
    _guard_caps(ctx, part, node_cap, canonical_cap)
    block_set = 0
    covered = 0
    for k, b in enumerate(part.blocks):
        if b.extent.bits & ~xs.bits == 0:
            block_set |= 1 << k
            covered |= b.extent.bits
    if covered != xs.bits:
        raise NotAGeneralExtent(
            f"{{{', '.join(ctx.object_names(xs))}}} is not a union of blocks"
        )
    _, empty = _tables(ctx, part)
    return _concept(ctx, part, block_set, empty)


def build_gcl(
    ctx: FormalContext,
    node_cap: int = DEFAULT_NODE_CAP,
    canonical_cap: int = DEFAULT_CANONICAL_CAP,
) -> GclLattice:
    """Build the full lattice: one node per union of blocks.

    Node ids are block-set ints, so node i & node j indexes the meet and
    node i | node j the join.  Hasse edges connect nodes differing in
    exactly one block, listed as (lower, upper) pairs in ascending order.
    """
    part = blocks(ctx)
    _guard_caps(ctx, part, node_cap, canonical_cap)
    realized, empty = _tables(ctx, part)
    nf = part.n_f
    nodes = tuple(_concept(ctx, part, ks, empty) for ks in range(1 << nf))
    edges = tuple(
        (ks, ks | (1 << k))
        for ks in range(1 << nf)
        for k in range(nf)
        if not ks & (1 << k)
    )
    m = ctx.n_attributes
    return GclLattice(
        ctx, part, nodes, edges, CanonicalForm(m, empty), CanonicalForm(m, realized)
    )


# ---------------------------------------------------------------------------
# lattice operations

def leq(a: GeneralConcept, b: GeneralConcept) -> bool:
    """Order by extent inclusion (equivalently by either canonical bound)."""
    if a.extent.width != b.extent.width:
        raise ValueError("concepts come from different contexts")
    return a.block_set & ~b.block_set == 0


def meet(lat: GclLattice, a: GeneralConcept, b: GeneralConcept) -> GeneralConcept:
    return lat.nodes[a.block_set & b.block_set]


def join(lat: GclLattice, a: GeneralConcept, b: GeneralConcept) -> GeneralConcept:
    return lat.nodes[a.block_set | b.block_set]


def dagger(lat: GclLattice, a: GeneralConcept) -> GeneralConcept:
    """The conjugate node: complement extent, negated and swapped bounds.

    grsp of the image is the negation of gfcp of a and vice versa, so the
    map is an order-reversing involution.
    """
    full = (1 << lat.partition.n_f) - 1
    return lat.nodes[a.block_set ^ full]


def equivalent_class_membership(
    ctx: FormalContext, expr: AttrExpr, xs: BitSet
) -> bool:
    """Does expr belong to the attribute class of extent xs?"""
    return eval_contextual(ctx, expr) == xs
