"""Generalized Boolean operations, signed result sets, and height-based
probabilities on finite, not necessarily complete partial orders."""

from .errors import (
    AmbiguousBounds,
    BoundsViolation,
    CycleDetected,
    DegenerateConditional,
    DuplicateLabel,
    EmptyInput,
    EvalTypeError,
    InvalidLabel,
    OrdboolError,
    ParseError,
    SignedMisuse,
    TooManyAtoms,
    TooSmall,
    UnknownFixture,
    UnknownLabel,
)
from .poset import (
    BOT_LABEL,
    TOP_LABEL,
    CompareMode,
    ElemSet,
    Extreme,
    HtExtreme,
    Poset,
    Rel,
    below_filter,
    build_poset,
    extremes,
    extremes_by_height,
    height,
    member_set,
    order_rel,
    orthogonal,
    set_compare,
)
from .ops import (
    AltKind,
    Variant,
    alt_join,
    alt_meet,
    alt_neg1,
    join_all,
    meet_all,
    minus,
    neg_set,
    set_join,
    set_meet,
    set_minus,
)
from .signed import (
    Sign,
    SignedSet,
    signed_height,
    signed_join,
    signed_join_of,
    signed_meet,
    signed_meet_of,
    signed_neg,
    signed_neg_of,
)
from .measure import (
    MeasureKind,
    Rational,
    ht_of_set,
    indep_product,
    indep_threshold,
    mu,
    prob_max,
    prob_signed,
    prob_sum,
)
from .builders import (
    FIXTURE_NAMES,
    ValuedFactor,
    all_fixtures,
    builtin_fixture,
    powerset_lattice,
    random_poset,
    subset_family_poset,
    subset_label,
    valued_product,
)
from .oracle import (
    Mismatch,
    Query,
    Report,
    differential_check,
    lattice_oracle_check,
    law_check,
    naive_eval,
    run_query,
)
from .exprs import ProbValue, eval_expr, format_expr, format_value, parse_expr
from .textio import (
    PosetDoc,
    format_poset_text,
    parse_poset_text,
    poset_to_doc,
    render_dot,
)
from .cli import run_command

__version__ = "0.1.0"
