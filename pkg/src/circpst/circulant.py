"""Weighted circulant graphs: data model, integrality, and spectra.

Two representations coexist.  ``RowVector`` is the interchange form (the
first row of the circulant adjacency matrix); ``DivisorWeights`` is the
canonical form for integral graphs, one integer weight per proper
divisor of n, constant on each gcd class.  ``collapse`` moves from row
to weights exactly when the row is class-constant, which is the
integrality characterization for integer-weight circulants.

Spectra come in an exact integer variant (through Ramanujan sums) and a
numeric variant (direct character sum); the two are independent routes
and the suite checks them against each other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .numtheory import euler_phi, proper_divisors, ramanujan

_OVERFLOW_BOUND = 2**62


@dataclass(frozen=True)
class RowVector:
    """First row (c_0, ..., c_{n-1}) of a circulant adjacency matrix.

    In graph mode (digraph=False) the row must be loopless (c_0 = 0) and
    symmetric (c_i = c_{n-i}); digraph mode lifts both constraints.
    """

    n: int
    c: tuple[int, ...]
    digraph: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if len(self.c) != self.n:
            raise ValueError(f"row length {len(self.c)} != n = {self.n}")
        if not self.digraph:
            if self.c[0] != 0:
                raise ValueError("graph mode requires a loopless row (c_0 = 0)")
            for i in range(1, self.n):
                if self.c[i] != self.c[self.n - i]:
                    raise ValueError(
                        f"graph mode requires c_{i} = c_{self.n - i}, "
                        f"got {self.c[i]} != {self.c[self.n - i]}"
                    )


@dataclass(frozen=True)
class DivisorWeights:
    """Integer weight c_d per proper divisor d of n; missing keys mean 0."""

    n: int
    weights: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        clean = {}
        for d in sorted(self.weights):
            if d < 1 or d >= self.n or self.n % d != 0:
                raise ValueError(f"{d} is not a proper divisor of {self.n}")
            w = int(self.weights[d])
            if w != 0:
                clean[d] = w
        object.__setattr__(self, "weights", clean)

    def weight(self, d: int) -> int:
        return self.weights.get(d, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.weights))

    def physical(self) -> bool:
        """Whether all weights are nonnegative coupling strengths."""
        return all(w > 0 for w in self.weights.values())


@dataclass(frozen=True)
class ClassViolation:
    """Witness that a row is not constant on the gcd class of ``divisor``."""

    divisor: int
    index_a: int
    index_b: int


@dataclass(frozen=True)
class ExactSpectrum:
    n: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class NumericSpectrum:
    n: int
    values: tuple[complex, ...]


def expand(w: DivisorWeights) -> RowVector:
    """Row vector with c_i = weights[gcd(i, n)]; symmetric by construction."""
    c = [0] * w.n
    for i in range(1, w.n):
        c[i] = w.weight(math.gcd(i, w.n))
    return RowVector(w.n, tuple(c))


def collapse(row: RowVector) -> DivisorWeights | ClassViolation:
    """Recover divisor weights, or witness the first gcd class that varies."""
    if row.c[0] != 0:
        raise ValueError("collapse requires a loopless row (c_0 = 0)")
    weights = {}
    for d in proper_divisors(row.n):
        members = [k for k in range(d, row.n, d) if math.gcd(k, row.n) == d]
        first = members[0]
        for k in members[1:]:
            if row.c[k] != row.c[first]:
                return ClassViolation(d, first, k)
        weights[d] = row.c[first]
    return DivisorWeights(row.n, weights)


def overflow_bound(w: DivisorWeights) -> int:
    """Upper bound on |lambda_j|: sum over d of |c_d| * phi(n/d)."""
    return sum(abs(c) * euler_phi(w.n // d) for d, c in w.weights.items())


def spectrum_exact(w: DivisorWeights) -> ExactSpectrum:
    """Exact integer eigenvalues lambda_j = sum_d c_d * c(j, n/d)."""
    if overflow_bound(w) >= _OVERFLOW_BOUND:
        raise OverflowError(
            f"eigenvalue bound {overflow_bound(w)} exceeds 2^62; refusing to wrap"
        )
    items = sorted(w.weights.items())
    values = tuple(
        sum(c * ramanujan(j, w.n // d) for d, c in items) for j in range(w.n)
    )
    return ExactSpectrum(w.n, values)


def spectrum_numeric(row: RowVector) -> NumericSpectrum:
    """Eigenvalues by direct character sum; digraph rows allowed."""
    n = row.n
    omega = [cmath.exp(2j * cmath.pi * k / n) for k in range(n)]
    values = tuple(
        sum(row.c[i] * omega[(j * i) % n] for i in range(n) if row.c[i] != 0)
        for j in range(n)
    )
    return NumericSpectrum(n, values)


def is_connected(w: DivisorWeights) -> bool:
    """gcd of n and every divisor with nonzero weight equals 1."""
    if not w.weights:
        return False
    return math.gcd(w.n, *w.weights) == 1


def integrality_numeric(row: RowVector, tol: float) -> bool:
    """Whether every numeric eigenvalue is within tol of a real integer."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    for lam in spectrum_numeric(row).values:
        if abs(lam.imag) > tol or abs(lam.real - round(lam.real)) > tol:
            return False
    return True
