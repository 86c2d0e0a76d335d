"""Partition arrows between finite ordinals, the generality of derivations,
and two faithful pictures of both: relations on function indices and
diagram algebras with exact rational coefficients."""

from .arrows import (
    CompositionResult,
    GenArrow,
    GluedRelation,
    all_arrows,
    compose,
    glued_closure,
    identity,
    make_arrow,
    render_arrow,
    transpose,
)
from .brauer import (
    BrauerAlgebraConfig,
    BrauerDiagram,
    BrauerElement,
    algebra_mul,
    all_diagrams,
    beta_as_relation,
    beta_matrix,
    boolean_product,
    diagram_mul,
    identity_diagram,
)
from .logic import (
    TypeCheckError,
    TypeMismatchError,
    generality,
    infer_fragment,
    proof_equal,
    type_of,
)
from .parsing import ParseError, format_formula, format_term, parse_formula, parse_term
from .relations import (
    DEFAULT_ENUMERATION_LIMIT,
    EnumerationLimitError,
    PFun,
    PairRelation,
    PropReport,
    RelArrow,
    TwoPointOrder,
    check_props,
    cone_char,
    fequal_set,
    fp_arrow,
    fs_set,
    rel_compose,
    rel_identity,
)
from .syntax import (
    ArrowTerm,
    Bot,
    Comp,
    Conj,
    Copair,
    Disj,
    Equation,
    Formula,
    Fragment,
    FromBot,
    Id,
    Inj1,
    Inj2,
    Join,
    Meet,
    Pair,
    Proj1,
    Proj2,
    PropVar,
    Refl,
    Sym,
    ToTop,
    Top,
    Trans,
    dual_formula,
    dual_term,
    occurrences,
)

__version__ = "0.1.0"
