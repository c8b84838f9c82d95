"""Perfect state transfer: exact decision procedure and numeric oracle.

The decision is purely spectral and exact: PST exists in a weighted
integral circulant graph iff all adjacent eigenvalue gaps
lambda_{j+1} - lambda_j share one 2-adic valuation m, in which case the
transfer happens between antipodal vertices 0 and n/2 at time
t = 2*pi / 2^(m+1).  Every positive verdict is re-certified by the
floating-point fidelity oracle, which evaluates the transition
amplitude through the eigendecomposition character sum.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .circulant import (
    ClassViolation,
    DivisorWeights,
    RowVector,
    collapse,
    integrality_numeric,
    is_connected,
    spectrum_exact,
)
from .numtheory import valuation

FIDELITY_TOL = 1e-9


class PstReason(str, enum.Enum):
    OK = "Ok"
    DISCONNECTED = "Disconnected"
    ODD_ORDER = "OddOrder"
    EQUAL_ADJACENT_EIGENVALUES = "EqualAdjacentEigenvalues"
    VALUATION_MISMATCH = "ValuationMismatch"


@dataclass(frozen=True)
class PstCertificate:
    """Witness for a positive verdict.

    m is the common 2-adic valuation of the adjacent eigenvalue gaps,
    time = 2*pi / 2^(m+1) in radians, and fidelity is the oracle value
    |<source| exp(iAt) |target>| at that time.
    """

    m: int
    time: float
    source: int
    target: int
    fidelity: float


@dataclass(frozen=True)
class PstVerdict:
    exists: bool
    reason: PstReason
    certificate: PstCertificate | None = None

    def __post_init__(self):
        ok = self.reason is PstReason.OK
        if self.exists != ok or ok != (self.certificate is not None):
            raise ValueError("verdict fields are inconsistent")


class Periodicity(str, enum.Enum):
    PERIODIC = "Periodic"
    NOT_PERIODIC = "NotPeriodic"
    INDETERMINATE_ZERO_SUM = "IndeterminateZeroSum"


@dataclass(frozen=True)
class PeriodicityVerdict:
    status: Periodicity
    # Attached numeric integrality result, only for the zero-sum case
    # where the exact equivalence does not apply.
    numeric_integral: bool | None = None


def periodicity_verdict(row: RowVector, tol: float = 1e-6) -> PeriodicityVerdict:
    """Periodic iff integral iff class-constant, for nonzero weight sum.

    Rows whose entries sum to zero fall outside the equivalence; they get
    an indeterminate status with the numeric integrality check attached.
    """
    if row.c[0] != 0:
        raise ValueError("periodicity is defined for loopless rows only")
    if sum(row.c) == 0:
        return PeriodicityVerdict(
            Periodicity.INDETERMINATE_ZERO_SUM, integrality_numeric(row, tol)
        )
    if isinstance(collapse(row), ClassViolation):
        return PeriodicityVerdict(Periodicity.NOT_PERIODIC)
    return PeriodicityVerdict(Periodicity.PERIODIC)


def spectral_criterion(w: DivisorWeights) -> tuple[PstReason, int | None]:
    """Bare eigenvalue-gap test: all adjacent gaps share one 2-adic valuation.

    Returns (OK, m) on success, or the failing reason and None.  This is
    the spectral core of the decision; ``pst_verdict`` adds the
    connectivity and odd-order gates on top.
    """
    lam = spectrum_exact(w).values
    gaps = [lam[j + 1] - lam[j] for j in range(w.n - 1)]
    if any(g == 0 for g in gaps):
        return PstReason.EQUAL_ADJACENT_EIGENVALUES, None
    vals = {valuation(2, g) for g in gaps}
    if len(vals) != 1:
        return PstReason.VALUATION_MISMATCH, None
    return PstReason.OK, vals.pop()


def pst_verdict(w: DivisorWeights) -> PstVerdict:
    """Decide PST existence and build a certified witness on success."""
    if not is_connected(w):
        return PstVerdict(False, PstReason.DISCONNECTED)
    if all((w.n // d) % 2 == 1 for d in w.weights):
        return PstVerdict(False, PstReason.ODD_ORDER)
    reason, m = spectral_criterion(w)
    if reason is not PstReason.OK:
        return PstVerdict(False, reason)
    t = 2.0 * math.pi / 2 ** (m + 1)
    cert = PstCertificate(
        m=m,
        time=t,
        source=0,
        target=w.n // 2,
        fidelity=fidelity(w, 0, w.n // 2, t),
    )
    return PstVerdict(True, PstReason.OK, cert)


def pq_condition(w: DivisorWeights, a: int, p: int, q: int) -> bool:
    """Exact rational check of (p/q)(lambda_{j+1} - lambda_j) + a/n in Z."""
    if q < 1 or math.gcd(p, q) != 1:
        raise ValueError("p/q must be in lowest terms with q >= 1")
    if not 1 <= a <= w.n - 1:
        raise ValueError(f"vertex a must lie in [1, {w.n - 1}]")
    lam = spectrum_exact(w).values
    shift = Fraction(a, w.n)
    ratio = Fraction(p, q)
    return all(
        (ratio * (lam[j + 1] - lam[j]) + shift).denominator == 1
        for j in range(w.n - 1)
    )


def fidelity(w: DivisorWeights, a: int, b: int, t: float) -> float:
    """|<a| exp(iAt) |b>| via the circulant eigendecomposition.

    Uses the exact integer spectrum; no matrix exponential is formed.
    """
    if not (0 <= a < w.n and 0 <= b < w.n):
        raise ValueError("vertex indices out of range")
    lam = np.array(spectrum_exact(w).values, dtype=float)
    l_idx = np.arange(w.n)
    phases = lam * t + 2.0 * np.pi * l_idx * (a - b) / w.n
    amp = float(abs(np.exp(1j * phases).sum())) / w.n
    return min(max(amp, 0.0), 1.0)


@dataclass(frozen=True)
class FidelityTrace:
    times: tuple[float, ...]
    values: tuple[float, ...]


def fidelity_trace(
    w: DivisorWeights, a: int, b: int, t_max: float, steps: int
) -> FidelityTrace:
    """Fidelity sampled on a uniform grid of `steps` points over [0, t_max]."""
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    times = tuple(t_max * k / (steps - 1) for k in range(steps))
    return FidelityTrace(times, tuple(fidelity(w, a, b, t) for t in times))


def normalize_weights(w: DivisorWeights) -> tuple[DivisorWeights, int]:
    """Divide out the largest common power of two from the weights.

    PST existence is invariant under doubling all weights, so the odd
    normal form is the natural representative; returns (w / 2^k, k).
    """
    if not w.weights:
        raise ValueError("cannot normalize all-zero weights")
    k = min(valuation(2, c) for c in w.weights.values())
    reduced = DivisorWeights(w.n, {d: c >> k for d, c in w.weights.items()})
    return reduced, k
