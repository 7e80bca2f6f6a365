"""Verification service: plain handler functions plus the FastAPI app.

The handlers are ordinary functions over the pydantic models so they can be
called in-process (the CLI default) or over HTTP.  Reports are assembled in
sorted id order whatever the execution schedule, so a given request always
produces byte-identical JSON.
"""
from __future__ import annotations

from fnmatch import fnmatchcase
from typing import Optional

import mpmath as mp
from fastapi import FastAPI, HTTPException
from pydantic import ValidationError

from . import bernoulli, catalog, trigcheck
from .models import (
    CounterexampleModel,
    EvalClause,
    EvalRequest,
    EvalResponse,
    EvalTerm,
    FamilyInfo,
    FamilyListResponse,
    FamilyReport,
    NumericRecord,
    SeriesReport,
    SeriesRequest,
    SeriesResponse,
    SeriesRow,
    VerifyReport,
    VerifyRequest,
    frac_str,
    mpf_str,
    parse_range,
)
from .sequences import GibonacciParams

SERIES_ANCHORS = {
    "last1": "Closing series 1",
    "last2": "Closing series 2",
    "series1-ber": "Bernoulli series theorem 1, fourth arm",
    "series2-ber": "Bernoulli series theorem 1, fifth arm",
    "series1-ber2": "Bernoulli series theorem 2, fourth arm",
    "series2-ber2": "Bernoulli series theorem 2, fifth arm",
}

SERIES_DESCRIPTIONS = {
    "last1": "sum (-1)^k/(2k)! (pi/5)^(2k), k >= 1, with limit -beta^2/2",
    "last2": "sum (-1)^k 2^(2k+1)/(2k)! (pi/5)^(2k), k >= 1, with limit sqrt5*beta",
    "series1-ber": "odd-Bernoulli series at 5m/2 + 3/2 with pi^(2k)/25^k weights; limit (-1)^m alpha",
    "series2-ber": "odd-Bernoulli series at 5m/2 + 2 with pi^(2k)/25^k weights; limit (-1)^m alpha",
    "series1-ber2": "odd-Bernoulli series at 5m/2 + 3/2 with 9^k pi^(2k)/25^k weights; limit (-1)^m beta",
    "series2-ber2": "odd-Bernoulli series at 5m/2 + 2, printed with 25^-k weights; claimed limit (-1)^m beta",
}


def _select(patterns: list[str], ids: list[str]) -> list[str]:
    return [i for i in ids if any(fnmatchcase(i, p) for p in patterns)]


def _selection(patterns: list[str], registry: Optional[dict] = None
               ) -> tuple[list[str], list[str], list[str]]:
    reg = catalog.REGISTRY if registry is None else registry
    exact = _select(patterns, sorted(reg))
    numeric = _select(patterns, sorted(trigcheck.CHECK_IDS))
    series = _select(patterns, sorted(bernoulli.SERIES_IDS))
    if not exact and not numeric and not series:
        raise catalog.ParameterError(f"selection {patterns!r} matches nothing")
    return exact, numeric, series


def run_list(patterns: Optional[list[str]] = None,
             registry: Optional[dict] = None) -> FamilyListResponse:
    reg = catalog.REGISTRY if registry is None else registry
    pats = patterns or ["*"]
    exact, numeric, series = _selection(pats, reg)
    infos = [
        FamilyInfo(id=f.id, kind="exact", anchor=f.anchor, description=f.description,
                   n_min=f.n_min, uses_t=f.uses_t, uses_gibonacci=f.uses_gibonacci,
                   scale=f.scale)
        for f in (reg[i] for i in exact)
    ]
    infos += [
        FamilyInfo(id=i, kind="numeric", anchor=trigcheck.CHECK_ANCHORS[i],
                   description=trigcheck.CHECK_DESCRIPTIONS[i], n_min=1)
        for i in numeric
    ]
    infos += [
        FamilyInfo(id=i, kind="series", anchor=SERIES_ANCHORS[i],
                   description=SERIES_DESCRIPTIONS[i])
        for i in series
    ]
    infos.sort(key=lambda f: f.id)
    return FamilyListResponse(families=infos)


def _family_report(rep: catalog.VerificationReport) -> FamilyReport:
    cex = None
    if rep.first_counterexample is not None:
        c = rep.first_counterexample
        cex = CounterexampleModel(n=str(c.n), t=str(c.t), clause=c.clause,
                                  lhs=frac_str(c.lhs), rhs=frac_str(c.rhs))
    return FamilyReport(
        family_id=rep.family_id,
        gib=str(rep.gib) if rep.gib is not None else None,
        n_range=f"{rep.n_range[0]}..{rep.n_range[1]}",
        t_range=f"{rep.t_range[0]}..{rep.t_range[1]}",
        checked=str(rep.checked),
        passed=str(rep.passed),
        ok=rep.ok,
        first_counterexample=cex,
    )


def _numeric_record(r: trigcheck.NumericCheck) -> NumericRecord:
    return NumericRecord(
        check_id=r.check_id,
        n=str(r.n),
        t=None if r.t is None else str(r.t),
        x=None if r.x is None else mpf_str(r.x),
        lhs=None if r.lhs is None else mpf_str(r.lhs),
        rhs=None if r.rhs is None else mpf_str(r.rhs),
        abs_error=None if r.abs_error is None else mpf_str(r.abs_error),
        tol=mpf_str(r.tol),
        passed=r.passed,
        skipped=r.skipped,
        skip_reason=r.skip_reason,
    )


def _series_report(out: bernoulli.SeriesOutcome) -> SeriesReport:
    return SeriesReport(
        family=out.target.family,
        m=str(out.target.m),
        terms=str(out.terms),
        tol=mpf_str(mp.mpf(out.tol)),
        expected_symbol=out.expected_symbol,
        expected=mpf_str(out.expected),
        partial_sum=mpf_str(out.partial),
        abs_error=mpf_str(out.abs_error),
        tail_bound=mpf_str(out.tail_bound),
        tail_ok=out.tail_ok,
        passed=out.passed,
        resolution=out.resolution,
    )


def run_verify(req: VerifyRequest, registry: Optional[dict] = None) -> VerifyReport:
    """Run the selected exact families, numeric checks and series targets."""
    reg = catalog.REGISTRY if registry is None else registry
    exact_ids, numeric_ids, series_ids = _selection(req.select, reg)
    n_range = parse_range(req.n_range)
    t_range = parse_range(req.t_range)
    try:
        seeds = [GibonacciParams.parse(s) for s in req.gib_seeds]
    except ValueError as exc:
        raise catalog.ParameterError(str(exc)) from None

    families: list[FamilyReport] = []
    for fid in exact_ids:
        fam = reg[fid]
        if fam.uses_gibonacci:
            for seed in seeds:
                families.append(_family_report(
                    catalog.verify_family(fam, n_range, t_range, seed, workers=req.workers)))
        else:
            families.append(_family_report(
                catalog.verify_family(fam, n_range, t_range, workers=req.workers)))

    numeric: list[NumericRecord] = []
    if numeric_ids and n_range[0] < 1:
        raise catalog.ParameterError("numeric checks need n >= 1")
    for cid in numeric_ids:
        for rec in trigcheck.run_check(cid, n_range, t_range, tol_base=req.tol):
            numeric.append(_numeric_record(rec))

    series: list[SeriesReport] = []
    for sid in series_ids:
        ms = req.series_m if sid not in ("last1", "last2") else [0]
        for m in ms:
            out = bernoulli.series_verify(bernoulli.SeriesTarget(sid, m), req.terms,
                                          req.series_tol)
            series.append(_series_report(out))

    return VerifyReport(run_config=req, families=families, numeric=numeric, series=series)


def run_eval(req: EvalRequest, registry: Optional[dict] = None) -> EvalResponse:
    """Single-point audit: term-by-term LHS breakdown and the chosen RHS arm."""
    reg = catalog.REGISTRY if registry is None else registry
    if req.family_id not in reg:
        raise catalog.ParameterError(f"unknown family id: {req.family_id}")
    fam = reg[req.family_id]
    g = None
    if req.gib is not None:
        try:
            g = GibonacciParams.parse(req.gib)
        except ValueError as exc:
            raise catalog.ParameterError(str(exc)) from None

    clauses = []
    for ci, cl in enumerate(fam.clauses):
        rows = catalog.term_breakdown(fam, req.n, req.t, g, clause=ci)
        lhs = catalog.eval_lhs(fam, req.n, req.t, g, clause=ci)
        rhs = catalog.eval_rhs(fam, req.n, req.t, g, clause=ci)
        clauses.append(EvalClause(
            label=cl.label,
            terms=[EvalTerm(coefficient=frac_str(c), sequence=s, index=str(i),
                            value=str(v), contribution=frac_str(p))
                   for c, s, i, v, p in rows],
            lhs=frac_str(lhs),
            rhs_arm=fam.arm(req.n),
            rhs=frac_str(rhs),
            equal=lhs == rhs,
        ))
    return EvalResponse(family_id=fam.id, n=str(req.n), t=str(req.t),
                        gib=str(g) if g else None, clauses=clauses)


def run_series(req: SeriesRequest) -> SeriesResponse:
    """Convergence table plus verdict for one series target."""
    try:
        target = bernoulli.SeriesTarget(req.family, req.m)
    except ValueError as exc:
        raise catalog.ParameterError(str(exc)) from None
    out = bernoulli.series_verify(target, req.terms, req.tol)
    corrected = bool(out.resolution and "required" in out.resolution)
    rows = bernoulli.series_table(target, req.terms, corrected=corrected)
    return SeriesResponse(
        report=_series_report(out),
        rows=[SeriesRow(terms=str(k), partial_sum=mpf_str(p), abs_error=mpf_str(e))
              for k, p, e in rows],
    )


# --------------------------------------------------------------------------
# HTTP surface

app = FastAPI(
    title="fibmod5",
    description="Exact verification service for binomial Fibonacci/Lucas sum "
                "identities keyed on the upper limit mod 5.",
    version="0.1.0",
)


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.get("/families", response_model=FamilyListResponse)
def families(select: str = "*") -> FamilyListResponse:
    try:
        return run_list(select.split(","))
    except catalog.ParameterError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


@app.post("/verify", response_model=VerifyReport)
def verify(req: VerifyRequest) -> VerifyReport:
    try:
        return run_verify(req)
    except (catalog.ParameterError, ValidationError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


@app.post("/eval", response_model=EvalResponse)
def eval_point(req: EvalRequest) -> EvalResponse:
    try:
        return run_eval(req)
    except catalog.ParameterError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


@app.post("/series", response_model=SeriesResponse)
def series(req: SeriesRequest) -> SeriesResponse:
    try:
        return run_series(req)
    except catalog.ParameterError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None
