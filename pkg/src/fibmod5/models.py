"""Request and response models for the verification service.

Response documents follow one wire rule everywhere: every numeric leaf is a
decimal string, with exact rationals rendered as "num/den".  That keeps
arbitrary-precision integers, rationals and high-precision floats lossless
through JSON and makes reports byte-reproducible.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Literal, Optional

import mpmath as mp
from pydantic import BaseModel, Field, field_validator

_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")

FLOAT_DIGITS = 25


def parse_range(text: str) -> tuple[int, int]:
    """Parse an inclusive 'a..b' range; both bounds may be negative."""
    m = _RANGE_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad range {text!r}: expected 'a..b'")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def mpf_str(v: mp.mpf) -> str:
    return mp.nstr(v, FLOAT_DIGITS)


class FamilyInfo(BaseModel):
    id: str
    kind: Literal["exact", "numeric", "series"]
    anchor: str
    description: str
    n_min: Optional[int] = None
    uses_t: Optional[bool] = None
    uses_gibonacci: Optional[bool] = None
    scale: Optional[int] = None


class FamilyListResponse(BaseModel):
    families: list[FamilyInfo]


class VerifyRequest(BaseModel):
    """Run configuration for a verification sweep."""

    select: list[str] = Field(default_factory=lambda: ["*"], min_length=1)
    n_range: str = "1..50"
    t_range: str = "-10..10"
    gib_seeds: list[str] = Field(default_factory=lambda: ["0,1", "2,1", "3,7", "-2,5"],
                                 min_length=1)
    terms: int = Field(default=60, ge=1)
    tol: Optional[float] = Field(default=None, gt=0)
    series_tol: float = Field(default=1e-10, gt=0)
    series_m: list[int] = Field(default_factory=lambda: [0, 1, 2])
    workers: int = Field(default=1, ge=1)
    format: Literal["json", "csv", "text"] = "json"

    @field_validator("n_range", "t_range")
    @classmethod
    def _range_ok(cls, v: str) -> str:
        parse_range(v)
        return v

    @field_validator("series_m")
    @classmethod
    def _m_ok(cls, v: list[int]) -> list[int]:
        if any(m < 0 for m in v):
            raise ValueError("series m values must be non-negative")
        return v


class CounterexampleModel(BaseModel):
    n: str
    t: str
    clause: str
    lhs: str
    rhs: str


class FamilyReport(BaseModel):
    family_id: str
    gib: Optional[str] = None
    n_range: str
    t_range: str
    checked: str
    passed: str
    ok: bool
    first_counterexample: Optional[CounterexampleModel] = None


class NumericRecord(BaseModel):
    check_id: str
    n: str
    t: Optional[str] = None
    x: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    abs_error: Optional[str] = None
    tol: str
    passed: Optional[bool] = None
    skipped: bool = False
    skip_reason: Optional[str] = None


class SeriesReport(BaseModel):
    family: str
    m: str
    terms: str
    tol: str
    expected_symbol: str
    expected: str
    partial_sum: str
    abs_error: str
    tail_bound: str
    tail_ok: bool
    passed: bool
    resolution: Optional[str] = None


class VerifyReport(BaseModel):
    run_config: VerifyRequest
    families: list[FamilyReport]
    numeric: list[NumericRecord]
    series: list[SeriesReport]

    @property
    def ok(self) -> bool:
        return (all(f.ok for f in self.families)
                and all(r.passed or r.skipped for r in self.numeric)
                and all(s.passed for s in self.series))


class EvalRequest(BaseModel):
    family_id: str
    n: int
    t: int = 0
    gib: Optional[str] = None


class EvalTerm(BaseModel):
    coefficient: str
    sequence: str
    index: str
    value: str
    contribution: str


class EvalClause(BaseModel):
    label: str
    terms: list[EvalTerm]
    lhs: str
    rhs_arm: str
    rhs: str
    equal: bool


class EvalResponse(BaseModel):
    family_id: str
    n: str
    t: str
    gib: Optional[str] = None
    clauses: list[EvalClause]


class SeriesRequest(BaseModel):
    family: str
    m: int = Field(default=0, ge=0)
    terms: int = Field(default=40, ge=1)
    tol: float = Field(default=1e-10, gt=0)


class SeriesRow(BaseModel):
    terms: str
    partial_sum: str
    abs_error: str


class SeriesResponse(BaseModel):
    report: SeriesReport
    rows: list[SeriesRow]
