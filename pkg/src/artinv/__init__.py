"""Exact invariants of artinian local algebras.

Build a quotient A = k[x_1..x_n]/I over Q or a prime field, then compute
Hilbert functions, socles, minimal generator counts, Rees and Dilworth
numbers, weak Lefschetz checks, and exactness verdicts with re-checkable
certificates. All arithmetic is exact.
"""

from .algebra import ArtinianAlgebra, Ideal, is_complete_intersection
from .errors import (
    ArtinvError,
    CapExceededError,
    InputError,
    InternalInvariantError,
    NotArtinianError,
)
from .fields import QQ, PrimeField, field_from_name
from .hilbert import OSequence, is_admissible, macaulay_bound
from .invariants import (
    DilworthResult,
    Exact,
    NotExact,
    ReesResult,
    Unknown,
    dilworth_bounds,
    dilworth_oracle,
    exactness,
    exactness_witness_search,
    has_weak_lefschetz_generic,
    mu,
    mu_quotient_check,
    rees_number,
    sum_of_variables_criterion,
    verify_verdict,
    weak_lefschetz,
)
from .presentation import (
    Presentation,
    build_algebra,
    build_registered_ideals,
    load_presentation,
    parse_presentation,
)

__version__ = "0.1.0"

__all__ = [
    "ArtinianAlgebra",
    "ArtinvError",
    "CapExceededError",
    "DilworthResult",
    "Exact",
    "Ideal",
    "InputError",
    "InternalInvariantError",
    "NotArtinianError",
    "NotExact",
    "OSequence",
    "Presentation",
    "PrimeField",
    "QQ",
    "ReesResult",
    "Unknown",
    "build_algebra",
    "build_registered_ideals",
    "dilworth_bounds",
    "dilworth_oracle",
    "exactness",
    "exactness_witness_search",
    "field_from_name",
    "has_weak_lefschetz_generic",
    "is_admissible",
    "is_complete_intersection",
    "load_presentation",
    "macaulay_bound",
    "mu",
    "mu_quotient_check",
    "parse_presentation",
    "rees_number",
    "sum_of_variables_criterion",
    "verify_verdict",
    "weak_lefschetz",
    "__version__",
]
