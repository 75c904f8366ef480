"""Structure constants and commutator formulas of the Chevalley group of type G2."""

from ._core import (
    chain_p,
    commutator_formula,
    inner,
    reference_pairs,
    render_formula,
    roots,
    structure_constants,
    verify,
)

__all__ = [
    "chain_p",
    "commutator_formula",
    "inner",
    "reference_pairs",
    "render_formula",
    "roots",
    "structure_constants",
    "verify",
]
