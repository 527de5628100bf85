"""Strategic traversal over mini-language modules."""

from ._core import (
    AnalysisError,
    Coder,
    GuardFailed,
    Module,
    MultipleFociError,
    NoFocus,
    NoSuchAlias,
    SyntaxError,
    all_types,
    count_decls,
    de_bruijn,
    free_vars,
    free_vars_expr,
    inc_ints,
    inc_pairs,
    is_fresh_type,
    parse,
    pretty,
    run_cli,
    select_focus,
    select_type_focus,
    to_alias,
)

__all__ = [
    "AnalysisError",
    "Coder",
    "GuardFailed",
    "Module",
    "MultipleFociError",
    "NoFocus",
    "NoSuchAlias",
    "SyntaxError",
    "all_types",
    "count_decls",
    "de_bruijn",
    "free_vars",
    "free_vars_expr",
    "inc_ints",
    "inc_pairs",
    "is_fresh_type",
    "parse",
    "pretty",
    "run_cli",
    "select_focus",
    "select_type_focus",
    "to_alias",
]
