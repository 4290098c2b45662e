"""Brute-force certification of the lattice constructions.

Two independent routes are provided.  ``enumerate_mstar`` sweeps every
one of the 2^(2^|M|) composite attributes (as packed truth tables),
computes each extent from raw atom extents, groups the attributes into
classes by extent, and compares the class extremes against the builder's
canonical bounds.  ``verify_laws`` runs a registry of named laws: the
operator identities, the constructive decompositions of the bounds, the
order agreements, and the equality of the two routes to the classical
lattices.  Neither route reuses the builder's internals; extents are
recomputed from the incidence rows.

``random_context`` generates reproducible test contexts from a 64-bit
linear congruential generator so that law sweeps can be pinned to seeds.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property

from .bitset import BitSet
from .classical import build_fcl, build_rsl, recover_classical
from .context import (
    FormalContext,
    approx_box,
    approx_diamond,
    box_of,
    context_to_cxt,
    diamond_of,
    extent_of,
    intent_of,
)
from .errors import CapExceeded
from .exprs import CanonicalForm, Var, conj, disj, eval_contextual, to_canonical
from .irreducibles import (
    LiteralSet,
    irreducible_conjunctions,
    irreducible_disjunctions,
    is_member,
)
from .lattice import GclLattice, build_gcl, dagger

_SWEEP_OBJECT_CAP = 16
_SWEEP_ATTRIBUTE_CAP = 4
_EXHAUSTIVE_CAP = 12
_FAMILY_CAP = 10
_CLASS_SCAN_CAP = 8


@dataclass(frozen=True)
class LawResult:
    law: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class ClassSummary:
    """One attribute class: its extent, size and canonical extremes."""

    extent: BitSet
    size: int
    min_form: CanonicalForm
    max_form: CanonicalForm


@dataclass(frozen=True)
class OracleReport:
    digest: str
    n_objects: int
    n_attributes: int
    laws: tuple[LawResult, ...]
    classes: tuple[ClassSummary, ...] | None
    notes: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.laws)

    def failures(self) -> list[LawResult]:
        return [r for r in self.laws if not r.passed]

    def as_dict(self, ctx: FormalContext) -> dict:
        out = {
            "digest": self.digest,
            "objects": self.n_objects,
            "attributes": self.n_attributes,
            "passed": self.all_passed,
            "laws": [
                {"law": r.law, "passed": r.passed, "witness": r.witness}
                for r in self.laws
            ],
            "notes": list(self.notes),
        }
        if self.classes is not None:
            out["classes"] = [
                {
                    "extent": ctx.object_names(c.extent),
                    "size": c.size,
                    "min": c.min_form.ids(),
                    "max": c.max_form.ids(),
                }
                for c in self.classes
            ]
        return out


def context_digest(ctx: FormalContext) -> str:
    return hashlib.sha256(context_to_cxt(ctx).encode()).hexdigest()


# ---------------------------------------------------------------------------
# shared precomputation

class _Env:
    def __init__(self, ctx: FormalContext, lat: GclLattice):
        self.ctx = ctx
        self.lat = lat
        self.n = ctx.n_objects
        self.m = ctx.n_attributes
        self.full_g = (1 << self.n) - 1
        self.full_t = (1 << (1 << self.m)) - 1

    @cached_property
    def atom_ext(self) -> list[int]:
        """Extent bits of each minterm, straight from the rows."""
        ae = [0] * (1 << self.m)
        for i, row in enumerate(self.ctx.rows):
            ae[row] |= 1 << i
        return ae

    def eval_table(self, table: int) -> int:
        bits = 0
        while table:
            low = table & -table
            bits |= self.atom_ext[low.bit_length() - 1]
            table ^= low
        return bits

    @cached_property
    def obj_tables(self):
        """intent/box/diamond of every object subset, indexed by bits."""
        ctx = self.ctx
        intents, boxes, diamonds = [], [], []
        for bits in range(1 << self.n):
            xs = BitSet(bits, self.n)
            intents.append(intent_of(ctx, xs).bits)
            boxes.append(box_of(ctx, xs).bits)
            diamonds.append(diamond_of(ctx, xs).bits)
        return intents, boxes, diamonds

    @cached_property
    def attr_tables(self):
        """extent/box/diamond of every attribute subset, indexed by bits."""
        ctx = self.ctx
        extents, boxes, diamonds = [], [], []
        for bits in range(1 << self.m):
            ys = BitSet(bits, self.m)
            extents.append(extent_of(ctx, ys).bits)
            boxes.append(approx_box(ctx, ys).bits)
            diamonds.append(approx_diamond(ctx, ys).bits)
        return extents, boxes, diamonds

    def sweep_classes(self) -> dict[int, list[int]]:
        """extent bits -> [size, min table, max table] over all 2^(2^m) tables."""
        size = 1 << (1 << self.m)
        ext_of = [0] * size
        ae = self.atom_ext
        for f in range(1, size):
            low = f & -f
            ext_of[f] = ext_of[f ^ low] | ae[low.bit_length() - 1]
        grouped: dict[int, list[int]] = {}
        for f, ext in enumerate(ext_of):
            acc = grouped.get(ext)
            if acc is None:
                grouped[ext] = [1, f, f]
            else:
                acc[0] += 1
                acc[1] &= f
                acc[2] |= f
        return grouped

    def names(self, bits: int) -> str:
        xs = BitSet(bits, self.n)
        return "{" + ", ".join(self.ctx.object_names(xs)) + "}"


# ---------------------------------------------------------------------------
# the law registry

def _submasks(mask: int):
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def _law_triple_application(env: _Env):
    intents, boxes, diamonds = env.obj_tables
    extents, aboxes, adiamonds = env.attr_tables
    for x in range(1 << env.n):
        if intents[extents[intents[x]]] != intents[x]:
            return f"X={env.names(x)}: derivation not idempotent after three steps"
        if boxes[adiamonds[boxes[x]]] != boxes[x]:
            return f"X={env.names(x)}: box-diamond-box differs from box"
        if diamonds[aboxes[diamonds[x]]] != diamonds[x]:
            return f"X={env.names(x)}: diamond-box-diamond differs from diamond"
    for y in range(1 << env.m):
        if extents[intents[extents[y]]] != extents[y]:
            return f"Y=0x{y:x}: derivation not idempotent after three steps"
        if aboxes[diamonds[aboxes[y]]] != aboxes[y]:
            return f"Y=0x{y:x}: box-diamond-box differs from box"
        if adiamonds[boxes[adiamonds[y]]] != adiamonds[y]:
            return f"Y=0x{y:x}: diamond-box-diamond differs from diamond"
    return None


def _law_monotonicity(env: _Env):
    intents, boxes, diamonds = env.obj_tables
    extents, aboxes, adiamonds = env.attr_tables
    for x2 in range(1 << env.n):
        for x1 in _submasks(x2):
            if intents[x2] & ~intents[x1]:
                return f"{env.names(x1)} <= {env.names(x2)}: derivation not antitone"
            if boxes[x1] & ~boxes[x2]:
                return f"{env.names(x1)} <= {env.names(x2)}: box not monotone"
            if diamonds[x1] & ~diamonds[x2]:
                return f"{env.names(x1)} <= {env.names(x2)}: diamond not monotone"
    for y2 in range(1 << env.m):
        for y1 in _submasks(y2):
            if extents[y2] & ~extents[y1]:
                return f"Y1=0x{y1:x} <= Y2=0x{y2:x}: derivation not antitone"
            if aboxes[y1] & ~aboxes[y2]:
                return f"Y1=0x{y1:x} <= Y2=0x{y2:x}: box not monotone"
            if adiamonds[y1] & ~adiamonds[y2]:
                return f"Y1=0x{y1:x} <= Y2=0x{y2:x}: diamond not monotone"
    return None


def _law_complement_duality(env: _Env):
    _, boxes, diamonds = env.obj_tables
    _, aboxes, adiamonds = env.attr_tables
    full_m = (1 << env.m) - 1
    for x in range(1 << env.n):
        if diamonds[x] != full_m ^ boxes[env.full_g ^ x]:
            return f"X={env.names(x)}: diamond differs from complemented box"
        if boxes[x] != full_m ^ diamonds[env.full_g ^ x]:
            return f"X={env.names(x)}: box differs from complemented diamond"
    for y in range(1 << env.m):
        if adiamonds[y] != env.full_g ^ aboxes[full_m ^ y]:
            return f"Y=0x{y:x}: diamond differs from complemented box"
        if aboxes[y] != env.full_g ^ adiamonds[full_m ^ y]:
            return f"Y=0x{y:x}: box differs from complemented diamond"
    return None


def _law_rough_conjugates(env: _Env):
    ctx = env.ctx
    full_m = (1 << env.m) - 1
    for c in build_rsl(ctx).concepts:
        xc = BitSet(env.full_g ^ c.extent.bits, env.n)
        yc = BitSet(full_m ^ c.intent.bits, env.m)
        if diamond_of(ctx, xc) != yc:
            return f"X={env.names(c.extent.bits)}: complement pair is not diamond-closed"
        if approx_box(ctx, yc) != xc:
            return f"X={env.names(c.extent.bits)}: complement pair is not box-closed"
    return None


def _law_column_in_both(env: _Env):
    ctx = env.ctx
    fcl = {c.extent.bits for c in build_fcl(ctx).concepts}
    rsl = {c.extent.bits for c in build_rsl(ctx).concepts}
    for j in range(env.m):
        if ctx.cols[j] not in fcl:
            return f"column {ctx.attributes[j]} missing from the intersection lattice"
        if ctx.cols[j] not in rsl:
            return f"column {ctx.attributes[j]} missing from the union lattice"
    return None


def _law_concept_reconstruction(env: _Env):
    ctx = env.ctx
    for c in build_fcl(ctx).concepts:
        product = conj(Var(j) for j in c.intent)
        if eval_contextual(ctx, product).bits != c.extent.bits:
            return f"X={env.names(c.extent.bits)}: intent product misses the extent"
        if extent_of(ctx, c.intent) != c.extent:
            return f"X={env.names(c.extent.bits)}: intent does not derive the extent"
    for c in build_rsl(ctx).concepts:
        total = disj(Var(j) for j in c.intent)
        if eval_contextual(ctx, total).bits != c.extent.bits:
            return f"X={env.names(c.extent.bits)}: intent sum misses the extent"
        if box_of(ctx, c.extent) != c.intent:
            return f"X={env.names(c.extent.bits)}: extent does not box to the intent"
    return None


def _law_extent_fixpoint(env: _Env):
    for node in env.lat.nodes:
        if env.eval_table(node.grsp.table) != node.extent.bits:
            return f"X={env.names(node.extent.bits)}: grsp does not evaluate back"
        if env.eval_table(node.gfcp.table) != node.extent.bits:
            return f"X={env.names(node.extent.bits)}: gfcp does not evaluate back"
    return None


def _law_family_closure(env: _Env):
    exts = [node.extent.bits for node in env.lat.nodes]
    have = set(exts)
    if len(have) != len(exts):
        return "duplicate node extents"
    if len(have) != 1 << env.lat.partition.n_f:
        return f"{len(have)} extents for {env.lat.partition.n_f} blocks"
    for a in exts:
        if env.full_g ^ a not in have:
            return f"family not closed under complement at {env.names(a)}"
        for b in exts:
            if a | b not in have or a & b not in have:
                return f"family not closed at {env.names(a)}, {env.names(b)}"
    fcl = {c.extent.bits for c in build_fcl(env.ctx).concepts}
    rsl = {c.extent.bits for c in build_rsl(env.ctx).concepts}
    if not fcl <= have:
        return "an intersection-lattice extent escapes the family"
    if not rsl <= have:
        return "a union-lattice extent escapes the family"
    # transitive reduction of the inclusion order over node indices
    up = [0] * len(exts)
    down = [0] * len(exts)
    for i, a in enumerate(exts):
        for j, b in enumerate(exts):
            if i != j and a & ~b == 0:
                up[i] |= 1 << j
                down[j] |= 1 << i
    covers = set()
    for i in range(len(exts)):
        rest = up[i]
        while rest:
            low = rest & -rest
            rest ^= low
            j = low.bit_length() - 1
            if not up[i] & down[j]:
                covers.add((i, j))
    if covers != set(env.lat.hasse_edges):
        return "cover pairs differ from the recorded edges"
    return None


def _law_canonical_census(env: _Env):
    grouped = env.sweep_classes()
    total = sum(acc[0] for acc in grouped.values())
    if total != 1 << (1 << env.m):
        return f"class sizes sum to {total}"
    by_extent = {node.extent.bits: node for node in env.lat.nodes}
    if set(grouped) != set(by_extent):
        return "realized extents differ from the node extents"
    for ext, (size, low, high) in grouped.items():
        node = by_extent[ext]
        if low != node.gfcp.table:
            return f"X={env.names(ext)}: class minimum differs from gfcp"
        if high != node.grsp.table:
            return f"X={env.names(ext)}: class maximum differs from grsp"
    return None


def _law_intrinsic_order(env: _Env):
    size = 1 << (1 << env.m)
    ext_of = [0] * size
    ae = env.atom_ext
    for f in range(1, size):
        low = f & -f
        ext_of[f] = ext_of[f ^ low] | ae[low.bit_length() - 1]
    for f1 in range(size):
        e1 = ext_of[f1]
        for f2 in range(size):
            if f1 & ~f2 == 0 and e1 & ~ext_of[f2]:
                return f"tables 0x{f1:x} <= 0x{f2:x} but extents are not ordered"
    return None


def _law_dagger(env: _Env):
    lat = env.lat
    nodes = lat.nodes
    for a in nodes:
        image = dagger(lat, a)
        if dagger(lat, image) is not a:
            return f"X={env.names(a.extent.bits)}: conjugation is not an involution"
        if image.extent.bits != env.full_g ^ a.extent.bits:
            return f"X={env.names(a.extent.bits)}: conjugate extent is not the complement"
        if image.grsp.table != env.full_t ^ a.gfcp.table:
            return f"X={env.names(a.extent.bits)}: conjugate grsp is not the negated gfcp"
        if image.gfcp.table != env.full_t ^ a.grsp.table:
            return f"X={env.names(a.extent.bits)}: conjugate gfcp is not the negated grsp"
    full = len(nodes) - 1
    sets = [a.block_set for a in nodes]
    for ka in sets:
        for kb in sets:
            fwd = ka & ~kb == 0
            rev = (kb ^ full) & ~(ka ^ full) == 0
            if fwd != rev:
                return (
                    f"block sets 0x{ka:x} vs 0x{kb:x}: "
                    "conjugation does not reverse the order"
                )
    return None


def _law_bound_recursion(env: _Env):
    lat = env.lat
    nf = lat.partition.n_f
    full = (1 << nf) - 1
    for node in lat.nodes:
        ks = node.block_set
        if ks.bit_count() >= 2:
            union = 0
            for sub in _submasks(ks):
                if sub != ks:
                    union |= lat.nodes[sub].grsp.table
            if union != node.grsp.table:
                return f"X={env.names(node.extent.bits)}: grsp is not the union below"
        if (full ^ ks).bit_count() >= 2:
            inter = env.full_t
            for sub in _submasks(full ^ ks):
                if sub != 0:
                    inter &= lat.nodes[ks | sub].gfcp.table
            if inter != node.gfcp.table:
                return f"X={env.names(node.extent.bits)}: gfcp is not the intersection above"
    return None


def _law_block_cover(env: _Env):
    lat = env.lat
    nf = lat.partition.n_f
    full = (1 << nf) - 1
    for node in lat.nodes:
        ks = node.block_set
        if ks:
            union = 0
            for k in range(nf):
                if ks & (1 << k):
                    union |= lat.nodes[1 << k].grsp.table
            if union != node.grsp.table:
                return f"X={env.names(node.extent.bits)}: grsp is not the union of its blocks"
        if ks != full:
            inter = env.full_t
            for k in range(nf):
                if not ks & (1 << k):
                    inter &= lat.nodes[full ^ (1 << k)].gfcp.table
            if inter != node.gfcp.table:
                return (
                    f"X={env.names(node.extent.bits)}: "
                    "gfcp is not the intersection of its co-blocks"
                )
    return None


def _law_single_block(env: _Env):
    lat = env.lat
    nf = lat.partition.n_f
    full = (1 << nf) - 1
    rows = [b.intent.bits for b in lat.partition.blocks]
    if len(set(rows)) != nf:
        return "block rows are not distinct"
    for k in range(nf):
        node = lat.nodes[1 << k]
        if node.gfcp.table != 1 << rows[k]:
            return f"block {k}: gfcp is not its single row minterm"
        other = lat.nodes[full ^ (1 << k)]
        if other.grsp.table != env.full_t ^ (1 << rows[k]):
            return f"block {k}: complement grsp keeps the row minterm"
    return None


def _law_constants_decomposition(env: _Env):
    ctx = env.ctx
    lat = env.lat
    m = env.m
    empty = BitSet(0, env.n)
    g_all = BitSet(env.full_g, env.n)

    zero_members = irreducible_conjunctions(ctx, empty).members
    zero = to_canonical(disj(s.conjunction() for s in zero_members), m)
    if zero.table != lat.zero_rho.table:
        return "the empty-extent conjunction class does not sum to zero_rho"

    one_members = irreducible_disjunctions(ctx, g_all).members
    one = to_canonical(conj(s.disjunction() for s in one_members), m)
    if one.table != lat.one_eta.table:
        return "the full-extent disjunction class does not multiply to one_eta"

    nf = lat.partition.n_f
    full = (1 << nf) - 1
    for k in range(nf):
        block = lat.nodes[1 << k]
        base = irreducible_conjunctions(ctx, block.extent).members
        rho0 = to_canonical(disj(s.conjunction() for s in base), m)
        if rho0.table | lat.zero_rho.table != block.grsp.table:
            return f"block {k}: reduced sum plus zero_rho misses grsp"
        conode = lat.nodes[full ^ (1 << k)]
        cobase = irreducible_disjunctions(ctx, conode.extent).members
        eta0 = to_canonical(conj(s.disjunction() for s in cobase), m)
        if eta0.table & lat.one_eta.table != conode.gfcp.table:
            return f"block {k}: reduced product times one_eta misses gfcp"
    return None


def _law_order_agreement(env: _Env):
    triples = [
        (node.extent.bits, node.grsp.table, node.gfcp.table) for node in env.lat.nodes
    ]
    for ea, ra, fa in triples:
        for eb, rb, fb in triples:
            by_extent = ea & ~eb == 0
            if by_extent != (ra & ~rb == 0) or by_extent != (fa & ~fb == 0):
                return (
                    f"{env.names(ea)} vs {env.names(eb)}: "
                    "the three order criteria disagree"
                )
    return None


def _law_route_equality(env: _Env):
    for kind, builder in (("fcl", build_fcl), ("rsl", build_rsl)):
        direct = builder(env.ctx)
        recovered = recover_classical(env.lat, kind)
        if direct.concepts != recovered.concepts:
            return f"{kind}: recovered concepts differ from the direct build"
        if direct.hasse_edges != recovered.hasse_edges:
            return f"{kind}: recovered cover relation differs from the direct build"
    return None


def _law_literal_own_class(env: _Env):
    ctx = env.ctx
    for j in range(env.m):
        for sign in (True, False):
            bits = ctx.cols[j] if sign else env.full_g ^ ctx.cols[j]
            ext = BitSet(bits, env.n)
            single = LiteralSet(
                BitSet(1 << j if sign else 0, env.m),
                BitSet(0 if sign else 1 << j, env.m),
            )
            name = ("" if sign else "!") + ctx.attributes[j]
            if not is_member(ctx, single, ext, "conjunction"):
                return f"literal {name} missing from the conjunction class of its extent"
            if not is_member(ctx, single, ext, "disjunction"):
                return f"literal {name} missing from the disjunction class of its extent"
    return None


def _law_negation_swap(env: _Env):
    from .irreducibles import _all_classes

    ctx = env.ctx
    conj_classes = _all_classes(ctx, "conjunction")
    disj_classes = _all_classes(ctx, "disjunction")
    flipped = {
        env.full_g ^ ext: sorted(
            (s.flipped() for s in members), key=lambda s: (s.size, s.pos.bits, s.neg.bits)
        )
        for ext, members in disj_classes.items()
    }
    mirrored = {ext: list(members) for ext, members in conj_classes.items()}
    if flipped != mirrored:
        for ext in set(flipped) | set(mirrored):
            if flipped.get(ext) != mirrored.get(ext):
                return (
                    f"X={env.names(ext)}: negated disjunction class differs "
                    "from the conjunction class of the complement"
                )
    return None


def _needs_exhaustive(env: _Env):
    if env.n > _EXHAUSTIVE_CAP or env.m > _EXHAUSTIVE_CAP:
        return f"needs at most {_EXHAUSTIVE_CAP} objects and {_EXHAUSTIVE_CAP} attributes"
    return None


def _needs_family(env: _Env):
    if env.lat.partition.n_f > _FAMILY_CAP:
        return f"needs at most {_FAMILY_CAP} blocks"
    return None


def _needs_census(env: _Env):
    if env.m > 3 or env.n > _SWEEP_OBJECT_CAP:
        return f"needs at most 3 attributes and {_SWEEP_OBJECT_CAP} objects"
    return None


def _needs_classes(env: _Env):
    if env.m > _CLASS_SCAN_CAP:
        return f"needs at most {_CLASS_SCAN_CAP} attributes"
    return _needs_family(env)


LAWS: tuple[tuple, ...] = (
    ("triple-application", _needs_exhaustive, _law_triple_application),
    ("operator-monotonicity", _needs_exhaustive, _law_monotonicity),
    ("complement-duality", _needs_exhaustive, _law_complement_duality),
    ("rough-set-conjugates", _needs_exhaustive, _law_rough_conjugates),
    ("column-extent-in-both", _needs_exhaustive, _law_column_in_both),
    ("concept-reconstruction", _needs_exhaustive, _law_concept_reconstruction),
    ("extent-fixpoint", _needs_family, _law_extent_fixpoint),
    ("extent-family-closure", _needs_family, _law_family_closure),
    ("canonical-census", _needs_census, _law_canonical_census),
    ("intrinsic-order-soundness", _needs_census, _law_intrinsic_order),
    ("conjugation-involution", _needs_family, _law_dagger),
    ("bound-recursion", _needs_family, _law_bound_recursion),
    ("block-cover-decomposition", _needs_family, _law_block_cover),
    ("single-block-bounds", _needs_family, _law_single_block),
    ("constants-decomposition", _needs_classes, _law_constants_decomposition),
    ("order-criterion-agreement", _needs_family, _law_order_agreement),
    ("classical-route-equality", _needs_family, _law_route_equality),
    ("literal-own-class", None, _law_literal_own_class),
    ("negation-swap", _needs_classes, _law_negation_swap),
)

_POOL_NOTE = (
    "classical intents are checked for membership in the irreducible pools "
    "by inclusion; proper containment of the pools is reported, not asserted"
)


def verify_laws(ctx: FormalContext, lat: GclLattice | None = None) -> OracleReport:
    """Run every applicable law; skipped laws are listed in the notes."""
    if lat is None:
        lat = build_gcl(ctx)
    env = _Env(ctx, lat)
    results = []
    notes = [_POOL_NOTE]
    for name, needs, run in LAWS:
        reason = needs(env) if needs else None
        if reason is not None:
            notes.append(f"skipped {name}: {reason}")
            continue
        witness = run(env)
        results.append(LawResult(name, witness is None, witness))
    return OracleReport(
        context_digest(ctx),
        env.n,
        env.m,
        tuple(results),
        None,
        tuple(notes),
    )


def enumerate_mstar(ctx: FormalContext) -> OracleReport:
    """Classify all 2^(2^|M|) composite attributes by extent.

    Refused beyond 4 attributes or 16 objects.  The report carries one
    summary per class plus the structural checks: the sizes partition the
    sweep, the realized extents match the node extents, and each class's
    least and greatest tables are the builder's gfcp and grsp.
    """
    if ctx.n_attributes > _SWEEP_ATTRIBUTE_CAP:
        raise CapExceeded(
            f"{ctx.n_attributes} attributes exceed the sweep cap of {_SWEEP_ATTRIBUTE_CAP}"
        )
    if ctx.n_objects > _SWEEP_OBJECT_CAP:
        raise CapExceeded(
            f"{ctx.n_objects} objects exceed the sweep cap of {_SWEEP_OBJECT_CAP}"
        )
    lat = build_gcl(ctx)
    env = _Env(ctx, lat)
    grouped = env.sweep_classes()
    m = env.m

    laws = []
    total = sum(acc[0] for acc in grouped.values())
    laws.append(
        LawResult(
            "census-partition",
            total == 1 << (1 << m),
            None if total == 1 << (1 << m) else f"class sizes sum to {total}",
        )
    )
    node_exts = {node.extent.bits for node in lat.nodes}
    same = set(grouped) == node_exts
    laws.append(
        LawResult(
            "census-extent-family",
            same,
            None if same else "realized extents differ from the node extents",
        )
    )
    witness = None
    for ext, (size, low, high) in grouped.items():
        node = lat.node_of(BitSet(ext, env.n))
        if node.gfcp.table != low or node.grsp.table != high:
            witness = f"X={env.names(ext)}: class extremes differ from the bounds"
            break
    laws.append(LawResult("census-class-extremes", witness is None, witness))

    classes = tuple(
        ClassSummary(
            BitSet(ext, env.n),
            grouped[ext][0],
            CanonicalForm(m, grouped[ext][1]),
            CanonicalForm(m, grouped[ext][2]),
        )
        for ext in sorted(grouped, key=lambda b: (b.bit_count(), b))
    )
    return OracleReport(
        context_digest(ctx),
        env.n,
        env.m,
        tuple(laws),
        classes,
        (),
    )


# ---------------------------------------------------------------------------
# reproducible random contexts

_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1


def random_context(
    seed: int, n_objects: int, n_attributes: int, density: float
) -> FormalContext:
    """A reproducible random context.

    The cell stream is a 64-bit linear congruential generator,
    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64,
    started at the seed and stepped once per cell in row-major order
    (objects outer, attributes inner).  A cell is incident iff the top 53
    bits of the new state are below floor(density * 2^53), so equal seeds
    give bit-identical contexts on any platform.  Objects are named g1,
    g2, ... and attributes m1, m2, ...
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density {density} outside [0, 1]")
    if n_objects < 0 or n_attributes < 0:
        raise ValueError("negative dimensions")
    threshold = int(density * 9007199254740992.0)
    state = seed & _MASK64
    rows = []
    for _ in range(n_objects):
        bits = 0
        for j in range(n_attributes):
            state = (state * _LCG_MULT + _LCG_INC) & _MASK64
            if (state >> 11) < threshold:
                bits |= 1 << j
        rows.append(bits)
    return FormalContext(
        tuple(f"g{i + 1}" for i in range(n_objects)),
        tuple(f"m{j + 1}" for j in range(n_attributes)),
        tuple(rows),
    )
