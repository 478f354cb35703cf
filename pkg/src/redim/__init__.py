"""Exact digit-interleaving bijections and transported vector spaces.

The library constructs explicit bijections between real tuple spaces of
different arities by interleaving digit groups of canonical repeating
decimal expansions, and uses them to carry the vector-space structure
of R^k onto the set of n-tuples, so that the resulting space has
dimension k.  All arithmetic is exact (arbitrary-precision fractions).
"""

from .atlas import (
    BijectionHandle,
    CLOSED_UNIT,
    HALFOPEN_UNIT,
    OPEN_UNIT,
    REALS,
    Space,
    closed_to_halfopen,
    compose,
    halfopen_to_open,
    identity_bijection,
    inverse,
    real_to_halfopen_unit,
    real_to_open_rational,
    real_tuples,
    semicircle_csv_rows,
    semicircle_points,
)
from .codec import (
    DigitGroup,
    GroupSequence,
    deinterleave,
    expansion_of_groups,
    interleave,
    segment,
)
from .errors import (
    ArityError,
    BasisError,
    CompositionError,
    DomainError,
    NonCanonicalError,
)
from .pairing import (
    RealTuple,
    build_phi,
    fold_tuple,
    pair_reals,
    pair_unit,
    unfold_tuple,
    unpair_reals,
    unpair_unit,
)
from .rational import (
    PeriodicExpansion,
    format_rational,
    from_expansion,
    minimal_split,
    normalize,
    parse_expansion,
    parse_rational,
    to_expansion,
)
from .transport import (
    CheckResult,
    KVector,
    TransportedSpace,
    VerificationReport,
    check_axioms,
    check_isomorphism,
    standard_space,
)

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "BasisError",
    "BijectionHandle",
    "CLOSED_UNIT",
    "CheckResult",
    "CompositionError",
    "DigitGroup",
    "DomainError",
    "GroupSequence",
    "HALFOPEN_UNIT",
    "KVector",
    "NonCanonicalError",
    "OPEN_UNIT",
    "PeriodicExpansion",
    "REALS",
    "RealTuple",
    "Space",
    "TransportedSpace",
    "VerificationReport",
    "build_phi",
    "check_axioms",
    "check_isomorphism",
    "closed_to_halfopen",
    "compose",
    "deinterleave",
    "expansion_of_groups",
    "fold_tuple",
    "format_rational",
    "from_expansion",
    "halfopen_to_open",
    "identity_bijection",
    "interleave",
    "inverse",
    "minimal_split",
    "normalize",
    "pair_reals",
    "pair_unit",
    "parse_expansion",
    "parse_rational",
    "real_to_halfopen_unit",
    "real_to_open_rational",
    "real_tuples",
    "segment",
    "semicircle_csv_rows",
    "semicircle_points",
    "standard_space",
    "to_expansion",
    "unfold_tuple",
    "unpair_reals",
    "unpair_unit",
]
