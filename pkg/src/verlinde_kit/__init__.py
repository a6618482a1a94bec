"""Exact arithmetic in the Grothendieck ring of the Verlinde category Ver_p.

Fusion products, characters and the two Frobenius-Perron dimensions,
symmetric and exterior powers, the second Adams operation, invariant counts,
p-adic dimensions, and the expansion of SL_m alcove simples, all cross-checked
against a brute-force Jordan-block oracle over F_p.
"""

from .laurent import (
    Cyclotomic,
    IntegralityError,
    LaurentPoly,
    galois,
    gauss_binom,
    is_prime,
    quantum_int,
    to_cyclotomic,
    twice_trace,
)
from .ring import (
    ParitySplit,
    VerObj,
    character,
    dim_mod_p,
    fpdim,
    fpdim_rep,
    fuse,
    parity_split,
    sfpdim,
    sfpdim_rep,
)
from .powers import (
    adams2,
    classical_invariant_count,
    decompose_from_dims,
    decompose_terms,
    ext_power,
    ext_power_simple,
    invariant_dim,
    length_identity_holds,
    padic_dims,
    sfpdim_via_adams,
    sym_power,
    sym_power_simple,
    transcendence_degrees,
)
from .weyl import Weight, alcove_check, decompose_weyl, qweyl_dim, super_sign
from .jordan import (
    JordanType,
    jordan_ext,
    jordan_sym,
    jordan_tensor,
    jordan_type_of,
    negligible_quotient,
)
from .verify import VerifyConfig, run_verify

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "IntegralityError",
    "JordanType",
    "LaurentPoly",
    "ParitySplit",
    "VerObj",
    "VerifyConfig",
    "Weight",
    "adams2",
    "alcove_check",
    "character",
    "classical_invariant_count",
    "decompose_from_dims",
    "decompose_terms",
    "decompose_weyl",
    "dim_mod_p",
    "ext_power",
    "ext_power_simple",
    "fpdim",
    "fpdim_rep",
    "fuse",
    "galois",
    "gauss_binom",
    "invariant_dim",
    "is_prime",
    "jordan_ext",
    "jordan_sym",
    "jordan_tensor",
    "jordan_type_of",
    "length_identity_holds",
    "negligible_quotient",
    "padic_dims",
    "parity_split",
    "qweyl_dim",
    "quantum_int",
    "run_verify",
    "sfpdim",
    "sfpdim_rep",
    "sfpdim_via_adams",
    "super_sign",
    "sym_power",
    "sym_power_simple",
    "to_cyclotomic",
    "transcendence_degrees",
    "twice_trace",
    "__version__",
]
