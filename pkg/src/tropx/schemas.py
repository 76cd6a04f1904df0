"""Pydantic request/response models for the HTTP service.

Matrices and vectors travel as grids of scalar tokens ("3", "-2.5",
"7/2", "-inf") so exactness survives the wire format.
"""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field

from .matrices import TropMatrix
from .scalars import parse_scalar


class MatrixRequest(BaseModel):
    matrix: List[List[str]] = Field(..., description="rows of scalar tokens")
    verify: bool = False

    def to_matrix(self) -> TropMatrix:
        return TropMatrix([[parse_scalar(t) for t in row] for row in self.matrix])


class ExpRequest(MatrixRequest):
    steps: bool = False


class PeriodRequest(MatrixRequest):
    cap: Optional[int] = Field(None, gt=0)


class VectorMatrixRequest(MatrixRequest):
    vector: List[str]

    def to_vector(self) -> TropMatrix:
        return TropMatrix.column([parse_scalar(t) for t in self.vector])


class OrbitRequest(VectorMatrixRequest):
    max_steps: int = Field(64, gt=0)
    include_states: bool = False


class ScalarRequest(BaseModel):
    op: str = Field(..., pattern="^(exp|log)$")
    value: str


class ExpResponse(BaseModel):
    matrix: List[List[str]]
    order_bound: Optional[int] = None
    terms_used: Optional[int] = None


class SpectrumResponse(BaseModel):
    lambda_: str = Field(..., alias="lambda")
    critical_nodes: List[int]
    critical_edges: List[List[int]]
    cyclicities: List[int]
    period: int

    model_config = {"populate_by_name": True}


class EigenvectorEntry(BaseModel):
    node: int
    v: List[str]


class EigResponse(BaseModel):
    lambda_: str = Field(..., alias="lambda")
    vectors: List[EigenvectorEntry]

    model_config = {"populate_by_name": True}


class PeriodResponse(BaseModel):
    p: int
    k0: int
    lambda_: str = Field(..., alias="lambda")
    robust: bool

    model_config = {"populate_by_name": True}


class DivisibilityEntry(BaseModel):
    component: List[int]
    cycle_lengths: List[int]
    divides: bool


class RobustResponse(BaseModel):
    lambda_: str = Field(..., alias="lambda")
    period: int
    robust: bool
    exp_robust_sufficient: bool
    divisibility: List[DivisibilityEntry]

    model_config = {"populate_by_name": True}


class GenOrderResponse(BaseModel):
    order: Optional[int]
    lambda_: str = Field(..., alias="lambda")

    model_config = {"populate_by_name": True}


class OrbitResponse(BaseModel):
    entry: Optional[int]
    order: Optional[int]
    stable: bool
    states: Optional[List[List[str]]] = None


class ScalarResponse(BaseModel):
    input: str
    op: str
    result: str
