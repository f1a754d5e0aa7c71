"""Pointwise finite dimensional persistence modules over finite posets.

Exact F_p linear algebra, decomposition into indecomposable summands, and the
block / barcode structure results, wrapped around the C++ core.
"""

from ._pmd import (
    Counterexample,
    Error,
    Module,
    barcode,
    blocks,
    decompose,
    extend,
    generate_intervals,
    interlevel,
    middle_exact,
    run,
    sublevel,
    zigzag_barcode,
)

__all__ = [
    "Counterexample",
    "Error",
    "Module",
    "barcode",
    "blocks",
    "decompose",
    "extend",
    "generate_intervals",
    "interlevel",
    "middle_exact",
    "run",
    "sublevel",
    "zigzag_barcode",
]
