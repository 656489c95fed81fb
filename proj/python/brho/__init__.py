from ._core import (
    Error,
    NotFound,
    StepBudgetExceeded,
    TermSyntaxError,
    antirho_report,
    apply,
    canonical,
    canonical_text,
    equivalent,
    is_monomial,
    iterate,
    nodes,
    normal_form,
    rho,
    to_term,
    tree,
)

__all__ = [
    "Error",
    "NotFound",
    "StepBudgetExceeded",
    "TermSyntaxError",
    "antirho_report",
    "apply",
    "canonical",
    "canonical_text",
    "equivalent",
    "is_monomial",
    "iterate",
    "nodes",
    "normal_form",
    "rho",
    "to_term",
    "tree",
]
