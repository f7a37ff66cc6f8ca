"""Exact verification of q-Morris type constant term identities with Macdonald polynomials."""
from .aflt import (
    AfltParams,
    QaPoly,
    RootSets,
    VerifyReport,
    build_integrand,
    lhs_value,
    poly_interpolate,
    rhs_aflt,
    rhs_qmorris,
    root_sets,
    verify_addpoints,
    verify_aflt,
    verify_qmorris,
    verify_recursion,
    verify_roots,
)
from .arith import RatFunc, qbinom, qpoch, qpoch_scalar, qpow
from .laurent import LaurentPoly
from .macdonald import mac_P, mac_Q, principal_spec
from .partitions import Partition, parse_partition

__all__ = [
    "AfltParams", "LaurentPoly", "Partition", "QaPoly", "RatFunc", "RootSets", "VerifyReport",
    "build_integrand", "lhs_value", "mac_P", "mac_Q", "parse_partition", "poly_interpolate",
    "principal_spec", "qbinom", "qpoch", "qpoch_scalar", "qpow", "rhs_aflt", "rhs_qmorris", "root_sets",
    "verify_addpoints", "verify_aflt", "verify_qmorris", "verify_recursion", "verify_roots",
]
