"""Well-scoped, well-typed lambda terms with a generic rename/subst traversal kit."""

from .kit import (
    Assignment,
    Embed,
    Family,
    compose,
    identity,
    lift_assignment,
    map_traverse,
    rename,
    renaming,
    single_subst,
    subst,
    substitution,
    successor,
    var_of,
)
from .syntax import (
    EMPTY,
    IOTA,
    PLAIN,
    App,
    ArgMismatch,
    Arrow,
    Base,
    CLam,
    Color,
    Judgment,
    Lam,
    LambdaError,
    NotAFunction,
    OutOfScope,
    ScopeTypeError,
    Var,
    arrow,
    erase,
    extend,
    lookup,
    synthesize,
    synthesize_colored,
    term_eq,
)
