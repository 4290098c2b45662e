"""General concept lattices over binary formal contexts.

A context assigns binary attributes to objects.  Rows partition the
objects into blocks; the unions of blocks form a Boolean family of
extents, and each extent is a general concept carrying two canonical
composite attributes as bounds (gfcp below, grsp above).  The package
builds that lattice, the classical intersection (fcl) and union (rsl)
lattices both directly and from the general lattice, the irreducible
literal-set classes behind reduced descriptions, and a brute-force
oracle that re-derives everything independently.
"""

from .bitset import BitSet
from .classical import (
    ClassicalLattice,
    FclConcept,
    RslConcept,
    build_fcl,
    build_rsl,
    recover_classical,
)
from .context import (
    Block,
    BlockPartition,
    FormalContext,
    approx_box,
    approx_diamond,
    blocks,
    box_of,
    context_to_cxt,
    diamond_of,
    extent_of,
    intent_of,
    parse_context,
)
from .errors import CapExceeded, GclError, NotAGeneralExtent, ParseError
from .exprs import (
    And,
    AttrExpr,
    BOTTOM,
    CanonicalForm,
    Minterm,
    Not,
    Or,
    TOP,
    Var,
    atoms_coatoms,
    canonical_to_expr,
    conj,
    disj,
    eval_contextual,
    expr_to_str,
    intrinsic_compare,
    literal,
    parse_expr,
    to_canonical,
)
from .irreducibles import (
    IrredClass,
    LiteralSet,
    irreducible_conjunctions,
    irreducible_disjunctions,
    is_member,
    quotient_class,
    simplified_intent,
)
from .lattice import (
    GclLattice,
    GeneralConcept,
    build_gcl,
    contextual_constants,
    dagger,
    equivalent_class_membership,
    extent_family,
    general_concept,
    join,
    leq,
    meet,
)
from .oracle import (
    ClassSummary,
    LawResult,
    OracleReport,
    context_digest,
    enumerate_mstar,
    random_context,
    verify_laws,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "AttrExpr",
    "BOTTOM",
    "BitSet",
    "Block",
    "BlockPartition",
    "CanonicalForm",
    "CapExceeded",
    "ClassSummary",
    "ClassicalLattice",
    "FclConcept",
    "FormalContext",
    "GclError",
    "GclLattice",
    "GeneralConcept",
    "IrredClass",
    "LawResult",
    "LiteralSet",
    "Minterm",
    "Not",
    "NotAGeneralExtent",
    "Or",
    "OracleReport",
    "ParseError",
    "RslConcept",
    "TOP",
    "Var",
    "approx_box",
    "approx_diamond",
    "atoms_coatoms",
    "blocks",
    "box_of",
    "build_fcl",
    "build_gcl",
    "build_rsl",
    "canonical_to_expr",
    "conj",
    "context_digest",
    "context_to_cxt",
    "contextual_constants",
    "dagger",
    "diamond_of",
    "disj",
    "enumerate_mstar",
    "equivalent_class_membership",
    "eval_contextual",
    "expr_to_str",
    "extent_family",
    "extent_of",
    "general_concept",
    "intent_of",
    "intrinsic_compare",
    "irreducible_conjunctions",
    "irreducible_disjunctions",
    "is_member",
    "join",
    "leq",
    "literal",
    "meet",
    "parse_context",
    "parse_expr",
    "quotient_class",
    "random_context",
    "recover_classical",
    "simplified_intent",
    "to_canonical",
    "verify_laws",
]
