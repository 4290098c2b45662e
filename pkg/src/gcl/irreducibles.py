"""Irreducible conjunctions and disjunctions of attribute literals.

A literal set picks attributes with a sign; both signs of one attribute
may appear (such a conjunction is constantly false, such a disjunction
constantly true, and both do occur as minimal descriptions of the empty
and the full extent).  A set is an irreducible conjunction for extent X
when its conjunction evaluates to X and removing any single literal
strictly grows the extent; dually a removal must strictly shrink it for
an irreducible disjunction.  Removing the only literal, or a literal
from the empty set, is not a removal, so sets of size at most one are
irreducible for whatever extent they evaluate to.

The quotient of one class by another removes the members that factor
through the divisor: a member is dropped iff some nonempty member of the
divisor class is a proper subset of it.  A class quotiented by itself is
unchanged, and single literals survive every quotient.

These classes assemble display forms of the two canonical bounds: the
disjunctive bound of X is the sum of the quotiented conjunction classes
of the sub-extents of X, the conjunctive bound dually the product of the
quotiented disjunction classes of its super-extents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bitset import BitSet
from .context import FormalContext, blocks
from .errors import CapExceeded, NotAGeneralExtent
from .exprs import AttrExpr, conj, disj, literal

DEFAULT_IRREDUCIBLES_CAP = 10

_MODES = ("conjunction", "disjunction")


@dataclass(frozen=True)
class LiteralSet:
    """Signed attribute picks: pos and neg are masks over M."""

    pos: BitSet
    neg: BitSet

    def __post_init__(self):
        if self.pos.width != self.neg.width:
            raise ValueError("pos and neg have different widths")

    @property
    def size(self) -> int:
        return len(self.pos) + len(self.neg)

    def is_consistent(self) -> bool:
        return self.pos.isdisjoint(self.neg)

    def literals(self) -> list[tuple[int, bool]]:
        """(attribute, sign) pairs, positive before negative per attribute."""
        out = []
        for j in range(self.pos.width):
            if j in self.pos:
                out.append((j, True))
            if j in self.neg:
                out.append((j, False))
        return out

    def flipped(self) -> "LiteralSet":
        return LiteralSet(self.neg, self.pos)

    def issubset(self, other: "LiteralSet") -> bool:
        return self.pos.issubset(other.pos) and self.neg.issubset(other.neg)

    def conjunction(self) -> AttrExpr:
        return conj(literal(j, sign) for j, sign in self.literals())

    def disjunction(self) -> AttrExpr:
        return disj(literal(j, sign) for j, sign in self.literals())

    def describe(self, attributes) -> str:
        body = ", ".join(
            ("" if sign else "!") + attributes[j] for j, sign in self.literals()
        )
        return "{" + body + "}"


@dataclass(frozen=True)
class IrredClass:
    """All irreducible literal sets of one mode sharing a target extent."""

    target: BitSet
    mode: str
    members: tuple[LiteralSet, ...]

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"unknown mode {self.mode!r}")


def _guard_cap(ctx: FormalContext, cap: int) -> None:
    if ctx.n_attributes > cap:
        raise CapExceeded(
            f"{ctx.n_attributes} attributes exceed the irreducibles cap of {cap}"
        )


def _literal_bits(ctx: FormalContext, j: int, sign: bool) -> int:
    full = (1 << ctx.n_objects) - 1
    return ctx.cols[j] if sign else full ^ ctx.cols[j]


def _set_extent_bits(ctx: FormalContext, lits: LiteralSet, mode: str) -> int:
    full = (1 << ctx.n_objects) - 1
    if mode == "conjunction":
        bits = full
        for j, sign in lits.literals():
            bits &= _literal_bits(ctx, j, sign)
    else:
        bits = 0
        for j, sign in lits.literals():
            bits |= _literal_bits(ctx, j, sign)
    return bits


def is_member(ctx: FormalContext, lits: LiteralSet, target: BitSet, mode: str) -> bool:
    """Is lits an irreducible set of the given mode for extent target?"""
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if _set_extent_bits(ctx, lits, mode) != target.bits:
        return False
    pairs = lits.literals()
    if len(pairs) <= 1:
        return True
    for j, sign in pairs:
        rest = LiteralSet(
            BitSet(lits.pos.bits & ~(1 << j) if sign else lits.pos.bits, lits.pos.width),
            BitSet(lits.neg.bits if sign else lits.neg.bits & ~(1 << j), lits.neg.width),
        )
        if _set_extent_bits(ctx, rest, mode) == target.bits:
            return False
    return True


@lru_cache(maxsize=32)
def _all_classes(ctx: FormalContext, mode: str) -> dict[int, tuple[LiteralSet, ...]]:
    """Extent bits -> irreducible members, over every signed subset of M."""
    m = ctx.n_attributes
    full = (1 << ctx.n_objects) - 1
    unit = full if mode == "conjunction" else 0
    pick = (lambda a, b: a & b) if mode == "conjunction" else (lambda a, b: a | b)

    lit_bits = [
        [_literal_bits(ctx, j, False), _literal_bits(ctx, j, True)] for j in range(m)
    ]
    found: dict[int, list[LiteralSet]] = {}
    for pos in range(1 << m):
        for neg in range(1 << m):
            chosen = [(j, 1) for j in range(m) if (pos >> j) & 1] + [
                (j, 0) for j in range(m) if (neg >> j) & 1
            ]
            exts = [lit_bits[j][s] for j, s in chosen]
            whole = unit
            for e in exts:
                whole = pick(whole, e)
            if len(exts) > 1:
                # prefix/suffix folds give every leave-one-out extent in O(n)
                n = len(exts)
                prefix = [unit] * (n + 1)
                for i in range(n):
                    prefix[i + 1] = pick(prefix[i], exts[i])
                suffix = [unit] * (n + 1)
                for i in range(n - 1, -1, -1):
                    suffix[i] = pick(suffix[i + 1], exts[i])
                if any(pick(prefix[i], suffix[i + 1]) == whole for i in range(n)):
                    continue
            found.setdefault(whole, []).append(
                LiteralSet(BitSet(pos, m), BitSet(neg, m))
            )
    return {
        ext: tuple(sorted(members, key=lambda s: (s.size, s.pos.bits, s.neg.bits)))
        for ext, members in found.items()
    }


def irreducible_conjunctions(
    ctx: FormalContext, xs: BitSet, cap: int = DEFAULT_IRREDUCIBLES_CAP
) -> IrredClass:
    """The irreducible conjunction class of extent xs (possibly empty)."""
    return _class_of(ctx, xs, "conjunction", cap)


def irreducible_disjunctions(
    ctx: FormalContext, xs: BitSet, cap: int = DEFAULT_IRREDUCIBLES_CAP
) -> IrredClass:
    """The irreducible disjunction class of extent xs (possibly empty)."""
    return _class_of(ctx, xs, "disjunction", cap)


def _class_of(ctx: FormalContext, xs: BitSet, mode: str, cap: int) -> IrredClass:
    if xs.width != ctx.n_objects:
        raise ValueError(
            f"object set width {xs.width}, context has {ctx.n_objects} objects"
        )
    _guard_cap(ctx, cap)
    members = _all_classes(ctx, mode).get(xs.bits, ())
    return IrredClass(xs, mode, members)


def quotient_class(c0: IrredClass, ci: IrredClass) -> IrredClass:
    """Members of c0 that do not factor through ci.

    A member is dropped iff some nonempty member of ci is a proper subset
    of its literal set.
    """
    if c0.mode != ci.mode:
        raise ValueError(f"mode mismatch: {c0.mode} vs {ci.mode}")
    divisors = [nu for nu in ci.members if nu.size > 0]
    kept = tuple(
        mu
        for mu in c0.members
        if not any(nu.size < mu.size and nu.issubset(mu) for nu in divisors)
    )
    return IrredClass(c0.target, c0.mode, kept)


def _survivors(
    ctx: FormalContext, mode: str, own_bits: int, divisor_bits: list[int]
) -> list[LiteralSet]:
    classes = _all_classes(ctx, mode)
    own = classes.get(own_bits, ())
    divisors = [
        nu for bits in divisor_bits for nu in classes.get(bits, ()) if nu.size > 0
    ]
    return [
        mu
        for mu in own
        if not any(nu.size < mu.size and nu.issubset(mu) for nu in divisors)
    ]


def simplified_intent(
    ctx: FormalContext, xs: BitSet, mode: str, cap: int = DEFAULT_IRREDUCIBLES_CAP
) -> AttrExpr:
    """Assemble a reduced expression for a canonical bound of extent xs.

    mode "grsp_dnf": sum, over the block-unions X0 inside xs, of the
    conjunction class of X0 quotiented by the classes of every block-union
    strictly between X0 and xs.  mode "gfcp_cnf" is the mirror image:
    product over the block-unions X0 containing xs of the quotiented
    disjunction classes.  The result always evaluates to xs and its
    canonical form equals the corresponding bound.
    """
    if mode not in ("grsp_dnf", "gfcp_cnf"):
        raise ValueError(f"unknown mode {mode!r}")
    if xs.width != ctx.n_objects:
        raise ValueError(
            f"object set width {xs.width}, context has {ctx.n_objects} objects"
        )
    _guard_cap(ctx, cap)
    part = blocks(ctx)
    ks = 0
    covered = 0
    for k, b in enumerate(part.blocks):
        if b.extent.bits & ~xs.bits == 0:
            ks |= 1 << k
            covered |= b.extent.bits
    if covered != xs.bits:
        raise NotAGeneralExtent(
            f"{{{', '.join(ctx.object_names(xs))}}} is not a union of blocks"
        )

    block_bits = [b.extent.bits for b in part.blocks]

    def union_of(sub: int) -> int:
        bits = 0
        while sub:
            low = sub & -sub
            bits |= block_bits[low.bit_length() - 1]
            sub ^= low
        return bits

    nf = part.n_f
    if mode == "grsp_dnf":
        terms = []
        for k0 in _submasks(ks):
            room = ks & ~k0
            between = [union_of(k0 | s) for s in _submasks(room) if s]
            for mu in _survivors(ctx, "conjunction", union_of(k0), between):
                terms.append(mu.conjunction())
        return disj(terms)

    terms = []
    outside = ((1 << nf) - 1) & ~ks
    for extra in _submasks(outside):
        k0 = ks | extra
        between = [union_of(ks | s) for s in _submasks(extra) if s != extra]
        for mu in _survivors(ctx, "disjunction", union_of(k0), between):
            terms.append(mu.disjunction())
    return conj(terms)


def _submasks(mask: int):
    """All submasks of mask, ascending."""
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == mask:
            return out
        sub = (sub - mask) & mask
