"""Python interface to the O_n endomorphism toolkit."""

from ._core import (  # noqa: F401
    DecisionReport,
    Element,
    compose_endos,
    conjugate_by_bogolyubov,
    decide_diagonal_invariance,
    equals_within,
    f_level,
    gauge_act,
    is_diagonal,
    is_monomial,
    is_unitary,
    izumi_beta,
    izumi_unitary,
    lambda_apply,
    masa_equal,
    max_coeff_difference,
    oracle_direct_check,
    phi,
    standard_masa_invariance,
    sufficient_cor42,
    sufficient_prop45,
    u_tower,
    verify_izumi,
    weyl_commutes,
)

__all__ = [
    "DecisionReport",
    "Element",
    "compose_endos",
    "conjugate_by_bogolyubov",
    "decide_diagonal_invariance",
    "equals_within",
    "f_level",
    "gauge_act",
    "is_diagonal",
    "is_monomial",
    "is_unitary",
    "izumi_beta",
    "izumi_unitary",
    "lambda_apply",
    "masa_equal",
    "max_coeff_difference",
    "oracle_direct_check",
    "phi",
    "standard_masa_invariance",
    "sufficient_cor42",
    "sufficient_prop45",
    "u_tower",
    "verify_izumi",
    "weyl_commutes",
]
