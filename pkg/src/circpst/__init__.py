"""Perfect state transfer certification for weighted integral circulant graphs."""

from .numtheory import (
    DivisorSet,
    Factorization,
    euler_phi,
    factorize,
    gcd_class,
    mobius,
    proper_divisors,
    ramanujan,
    ramanujan_is_odd,
    ramanujan_oracle,
    valuation,
)
from .circulant import (
    ClassViolation,
    DivisorWeights,
    ExactSpectrum,
    NumericSpectrum,
    RowVector,
    collapse,
    expand,
    integrality_numeric,
    is_connected,
    spectrum_exact,
    spectrum_numeric,
)
from .pst import (
    FidelityTrace,
    Periodicity,
    PeriodicityVerdict,
    PstCertificate,
    PstReason,
    PstVerdict,
    fidelity,
    fidelity_trace,
    normalize_weights,
    periodicity_verdict,
    pq_condition,
    pst_verdict,
)
from .census import (
    CensusReport,
    DivisorPartition,
    construct_weighted,
    enumerate_unweighted,
    partition_divisors,
    two_divisor_count,
    two_divisor_verdict,
    unweighted_pst_predicate,
)

__all__ = [
    "DivisorSet",
    "Factorization",
    "euler_phi",
    "factorize",
    "gcd_class",
    "mobius",
    "proper_divisors",
    "ramanujan",
    "ramanujan_is_odd",
    "ramanujan_oracle",
    "valuation",
    "ClassViolation",
    "DivisorWeights",
    "ExactSpectrum",
    "NumericSpectrum",
    "RowVector",
    "collapse",
    "expand",
    "integrality_numeric",
    "is_connected",
    "spectrum_exact",
    "spectrum_numeric",
    "FidelityTrace",
    "Periodicity",
    "PeriodicityVerdict",
    "PstCertificate",
    "PstReason",
    "PstVerdict",
    "fidelity",
    "fidelity_trace",
    "normalize_weights",
    "periodicity_verdict",
    "pq_condition",
    "pst_verdict",
    "CensusReport",
    "DivisorPartition",
    "construct_weighted",
    "enumerate_unweighted",
    "partition_divisors",
    "two_divisor_count",
    "two_divisor_verdict",
    "unweighted_pst_predicate",
]

__version__ = "0.1.0"
