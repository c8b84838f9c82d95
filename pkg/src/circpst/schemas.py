"""Pydantic request/response models shared by the HTTP service and the CLI.

The graph-spec document is the wire form of a graph: order n plus
exactly one of `divisor_weights` (divisor -> weight, decimal string
keys) or `row` (the full first row), with an optional mode flag.  The
JSON form of every response is canonical and round-trips losslessly.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, model_validator

from .circulant import ClassViolation, DivisorWeights, RowVector, collapse, expand


class GraphSpec(BaseModel):
    n: int
    divisor_weights: dict[str, int] | None = None
    row: list[int] | None = None
    mode: Literal["graph", "digraph"] = "graph"

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.divisor_weights is None) == (self.row is None):
            raise ValueError("specify exactly one of divisor_weights or row")
        if self.divisor_weights is not None and self.mode == "digraph":
            raise ValueError("digraph mode requires the row form")
        return self

    def to_row(self) -> RowVector:
        if self.row is not None:
            return RowVector(self.n, tuple(self.row), digraph=self.mode == "digraph")
        return expand(self.to_weights())

    def to_weights(self) -> DivisorWeights:
        if self.divisor_weights is not None:
            return DivisorWeights(
                self.n, {int(d): c for d, c in self.divisor_weights.items()}
            )
        got = collapse(self.to_row())
        if isinstance(got, ClassViolation):
            raise ValueError(
                f"row is not constant on the gcd class of divisor "
                f"{got.divisor} (indices {got.index_a}, {got.index_b}); "
                f"the graph is not integral"
            )
        return got

    @classmethod
    def from_weights(cls, w: DivisorWeights) -> "GraphSpec":
        return cls(n=w.n, divisor_weights={str(d): c for d, c in sorted(w.weights.items())})


class SpectrumRequest(BaseModel):
    graph: GraphSpec
    check: bool = False
    tolerance: float = 1e-8


class SpectrumResponse(BaseModel):
    command: Literal["spectrum"] = "spectrum"
    n: int
    kind: Literal["exact", "numeric"]
    exact: list[int] | None = None
    numeric: list[tuple[float, float]] | None = None
    all_real: bool
    check_passed: bool | None = None


class TraceRequest(BaseModel):
    t_max: float
    steps: int


class TraceModel(BaseModel):
    times: list[float]
    values: list[float]


class CertificateModel(BaseModel):
    m: int
    time: float
    time_over_2pi: str
    source: int
    target: int
    fidelity: float


class PstRequest(BaseModel):
    graph: GraphSpec
    trace: TraceRequest | None = None


class PstResponse(BaseModel):
    command: Literal["pst"] = "pst"
    n: int
    exists: bool
    reason: str
    certificate: CertificateModel | None = None
    trace: TraceModel | None = None


class FidelityRequest(BaseModel):
    graph: GraphSpec
    a: int
    b: int
    time: float | None = None
    trace: TraceRequest | None = None

    @model_validator(mode="after")
    def _time_or_trace(self):
        if (self.time is None) == (self.trace is None):
            raise ValueError("specify exactly one of time or trace")
        return self


class FidelityResponse(BaseModel):
    command: Literal["fidelity"] = "fidelity"
    n: int
    a: int
    b: int
    time: float | None = None
    fidelity: float | None = None
    trace: TraceModel | None = None


class CensusRequest(BaseModel):
    n: int


class CensusResponse(BaseModel):
    command: Literal["census"] = "census"
    n: int
    predicate_hits: list[list[int]]
    spectral_hits: list[list[int]]
    weightable_count: int
    predicted_weightable: int | None = None
    two_divisor_count: int | None = None
    predicted_two_divisor: int | None = None
    consistent: bool


class ConstructRequest(BaseModel):
    n: int
    a: int = 1
    filler: int = 4
    base: list[int] | None = None


class ConstructResponse(BaseModel):
    command: Literal["construct"] = "construct"
    graph: GraphSpec
    verdict: PstResponse
