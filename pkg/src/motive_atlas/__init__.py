"""Chow-motive rank sequences of flag varieties and a decision procedure
for motivic isomorphism of twisted flag varieties."""

from .atlas import (
    CanonicalFlag,
    CoincidenceReport,
    canonicalize,
    coincidence_classes,
    enumerate_flags,
    motives_equal_split,
)
from .motive import FlagDescriptor, flag_dimension, generating_polynomial, poly_div_exact, poly_mul
from .rootsys import SimpleType, cartan_matrix, invariant_degrees, positive_roots, weyl_order
from .twisted import (
    BCForm,
    Conclusion,
    G2Form,
    Quadric,
    SBFlag,
    SplitVariety,
    Verdict,
    chow0_cokernel,
    classify_pair,
    index_reduction_pn_qn,
    split_model,
    validate_algebra,
)

__version__ = "0.1.0"
