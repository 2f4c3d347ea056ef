from .selection import BetaVector, GridLabel
from .records import InvariantRecord, Rational, format_rational, parse_rational
from .exact import (
    alpha, alpha_via_recurrence, beta_invariants, charge_split, commutator_norm_sum,
    complement, cp_invariants, g2_closed_forms, holomorphic_beta, reversal,
    rq_interaction_split,
)

__all__ = [
    "BetaVector", "GridLabel", "InvariantRecord", "Rational", "format_rational",
    "parse_rational", "alpha", "alpha_via_recurrence", "beta_invariants",
    "charge_split", "commutator_norm_sum", "complement", "cp_invariants",
    "g2_closed_forms", "holomorphic_beta", "reversal", "rq_interaction_split",
]
