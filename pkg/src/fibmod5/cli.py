"""Command-line client for the verification service.

The CLI only parses flags, builds the request models, dispatches them (in
process by default, or to a running service with --server) and formats the
response.  Exit codes: 0 all checks passed, 1 at least one counterexample or
convergence failure, 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
from typing import Optional

from pydantic import ValidationError

from .catalog import ParameterError
from .models import (
    EvalRequest,
    EvalResponse,
    FamilyListResponse,
    SeriesRequest,
    SeriesResponse,
    VerifyReport,
    VerifyRequest,
)
from .service import run_eval, run_list, run_series, run_verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("FIBMOD5_WORKERS", "1")))
    except ValueError:
        return 1


class _Remote:
    """Minimal HTTP client mirroring the in-process handlers."""

    def __init__(self, base_url: str):
        import httpx

        self._client = httpx.Client(base_url=base_url, timeout=600.0)

    def list(self, patterns: list[str]) -> FamilyListResponse:
        r = self._client.get("/families", params={"select": ",".join(patterns)})
        self._raise_usage(r)
        return FamilyListResponse.model_validate_json(r.text)

    def verify(self, req: VerifyRequest) -> VerifyReport:
        r = self._client.post("/verify", json=req.model_dump(mode="json"))
        self._raise_usage(r)
        return VerifyReport.model_validate_json(r.text)

    def eval(self, req: EvalRequest) -> EvalResponse:
        r = self._client.post("/eval", json=req.model_dump(mode="json"))
        self._raise_usage(r)
        return EvalResponse.model_validate_json(r.text)

    def series(self, req: SeriesRequest) -> SeriesResponse:
        r = self._client.post("/series", json=req.model_dump(mode="json"))
        self._raise_usage(r)
        return SeriesResponse.model_validate_json(r.text)

    @staticmethod
    def _raise_usage(r) -> None:
        if r.status_code >= 400:
            raise ParameterError(f"server rejected request ({r.status_code}): {r.text}")


def _emit_json(model) -> None:
    sys.stdout.write(model.model_dump_json(indent=2) + "\n")


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _cmd_list(args) -> int:
    patterns = args.patterns or ["*"]
    if args.server:
        resp = _Remote(args.server).list(patterns)
    else:
        resp = run_list(patterns)
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["id", "kind", "anchor", "description"])
        for f in resp.families:
            w.writerow([f.id, f.kind, f.anchor, f.description])
    else:
        for f in resp.families:
            print(f"{f.id:18} {f.kind:8} {f.anchor:38} {f.description}")
    return EXIT_OK


def _build_verify_request(args) -> VerifyRequest:
    select = args.family if args.family else ["*"]
    if args.all:
        select = ["*"]
    return VerifyRequest(
        select=select,
        n_range=args.n,
        t_range=args.t,
        gib_seeds=args.gib or ["0,1", "2,1", "3,7", "-2,5"],
        terms=args.terms,
        tol=args.tol,
        workers=args.workers,
        format=args.format,
    )


def _print_verify_text(report: VerifyReport) -> None:
    for f in report.families:
        tag = "ok  " if f.ok else "FAIL"
        seed = f" gib={f.gib}" if f.gib else ""
        line = f"[{tag}] {f.family_id}{seed}: {f.passed}/{f.checked} over n {f.n_range}, t {f.t_range}"
        if f.first_counterexample:
            c = f.first_counterexample
            line += f"  first counterexample at (n={c.n}, t={c.t}, {c.clause}): {c.lhs} != {c.rhs}"
        print(line)
    by_check: dict[str, list] = {}
    for r in report.numeric:
        by_check.setdefault(r.check_id.split("/")[0], []).append(r)
    for cid in sorted(by_check):
        rs = by_check[cid]
        failed = [r for r in rs if r.passed is False]
        skipped = [r for r in rs if r.skipped]
        tag = "ok  " if not failed else "FAIL"
        print(f"[{tag}] {cid}: {len(rs) - len(failed) - len(skipped)}/{len(rs)} passed, "
              f"{len(skipped)} skipped")
        for r in failed[:3]:
            print(f"       at n={r.n} t={r.t} x={r.x}: |{r.lhs} - {r.rhs}| = {r.abs_error} > {r.tol}")
    for s in report.series:
        tag = "ok  " if s.passed else "FAIL"
        extra = f"  [{s.resolution}]" if s.resolution else ""
        print(f"[{tag}] {s.family} m={s.m}: partial={s.partial_sum} vs {s.expected_symbol}, "
              f"|err|={s.abs_error} (tail {s.tail_bound}){extra}")
    print("PASS" if report.ok else "FAIL")


def _print_verify_csv(report: VerifyReport) -> None:
    w = _csv_writer()
    w.writerow(["section", "id", "gib", "n", "t", "x", "checked", "passed",
                "lhs", "rhs", "abs_error", "tol", "status", "detail"])
    for f in report.families:
        detail = ""
        if f.first_counterexample:
            c = f.first_counterexample
            detail = f"n={c.n} t={c.t} clause={c.clause} lhs={c.lhs} rhs={c.rhs}"
        w.writerow(["family", f.family_id, f.gib or "", f.n_range, f.t_range, "",
                    f.checked, f.passed, "", "", "", "", "ok" if f.ok else "fail", detail])
    for r in report.numeric:
        status = "skip" if r.skipped else ("pass" if r.passed else "fail")
        w.writerow(["numeric", r.check_id, "", r.n, r.t or "", r.x or "", "", "",
                    r.lhs or "", r.rhs or "", r.abs_error or "", r.tol, status,
                    r.skip_reason or ""])
    for s in report.series:
        status = "pass" if s.passed else "fail"
        w.writerow(["series", s.family, "", s.m, "", "", s.terms, "",
                    s.partial_sum, s.expected, s.abs_error, s.tol, status,
                    s.resolution or ""])


def _cmd_verify(args) -> int:
    req = _build_verify_request(args)
    if args.server:
        report = _Remote(args.server).verify(req)
    else:
        report = run_verify(req)
    if args.format == "json":
        _emit_json(report)
    elif args.format == "csv":
        _print_verify_csv(report)
    else:
        _print_verify_text(report)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_eval(args) -> int:
    req = EvalRequest(family_id=args.family_id, n=args.n, t=args.t, gib=args.gib)
    if args.server:
        resp = _Remote(args.server).eval(req)
    else:
        resp = run_eval(req)
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["clause", "coefficient", "sequence", "index", "value", "contribution"])
        for cl in resp.clauses:
            for t in cl.terms:
                w.writerow([cl.label, t.coefficient, t.sequence, t.index, t.value, t.contribution])
            w.writerow([cl.label, "", "", "", "lhs", cl.lhs])
            w.writerow([cl.label, "", "", "", "rhs", cl.rhs])
    else:
        seed = f" gib={resp.gib}" if resp.gib else ""
        print(f"{resp.family_id} at n={resp.n}, t={resp.t}{seed}")
        for cl in resp.clauses:
            if len(resp.clauses) > 1:
                print(f"  clause {cl.label}:")
            for t in cl.terms:
                print(f"    {t.coefficient:>24} * {t.sequence}({t.index}) "
                      f"= {t.coefficient} * {t.value} -> {t.contribution}")
            print(f"  LHS = {cl.lhs}")
            print(f"  RHS = {cl.rhs}  (arm: {cl.rhs_arm})")
            print(f"  {'equal' if cl.equal else 'NOT EQUAL'}")
    ok = all(cl.equal for cl in resp.clauses)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_series(args) -> int:
    req = SeriesRequest(family=args.family, m=args.m, terms=args.terms, tol=args.tol)
    if args.server:
        resp = _Remote(args.server).series(req)
    else:
        resp = run_series(req)
    rep = resp.report
    if args.format == "json":
        _emit_json(resp)
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["terms", "partial_sum", "abs_error"])
        for row in resp.rows:
            w.writerow([row.terms, row.partial_sum, row.abs_error])
    else:
        for row in resp.rows:
            print(f"  K={row.terms:>4}  partial={row.partial_sum:>34}  |err|={row.abs_error}")
        extra = f"\n  note: {rep.resolution}" if rep.resolution else ""
        print(f"{rep.family} (m={rep.m}): expected {rep.expected_symbol} = {rep.expected}")
        print(f"  after {rep.terms} terms: |err| = {rep.abs_error}, tail bound {rep.tail_bound}"
              + extra)
        print("PASS" if rep.passed else
              ("FAIL (tail bound above tol; increase --terms)" if not rep.tail_ok else "FAIL"))
    if not rep.tail_ok:
        return EXIT_FAIL
    return EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("fibmod5.service:app", host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fibmod5",
        description="Exact verification of binomial Fibonacci/Lucas sum identities "
                    "keyed on the upper limit mod 5.",
    )
    p.add_argument("--server", help="base URL of a running service; default runs in-process")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = {"choices": ["json", "csv", "text"], "default": "text"}

    lp = sub.add_parser("list", help="list identity families, numeric checks and series")
    lp.add_argument("patterns", nargs="*", help="id globs, e.g. 'gib-*'")
    lp.add_argument("--format", **fmt)
    lp.set_defaults(fn=_cmd_list)

    vp = sub.add_parser("verify", help="sweep families and checks over an (n, t) grid")
    vp.add_argument("--all", action="store_true", help="select everything")
    vp.add_argument("--family", action="append", help="id glob (repeatable)")
    vp.add_argument("--n", default="1..50", help="inclusive n range a..b")
    vp.add_argument("--t", default="-10..10", help="inclusive t range a..b")
    vp.add_argument("--gib", action="append", help="gibonacci seeds a,b (repeatable)")
    vp.add_argument("--terms", type=int, default=60, help="series term count")
    vp.add_argument("--tol", type=float, default=None, help="numeric tolerance base override")
    vp.add_argument("--workers", type=int, default=_default_workers())
    vp.add_argument("--format", **fmt)
    vp.set_defaults(fn=_cmd_verify)

    ep = sub.add_parser("eval", help="term-by-term audit of one family at one point")
    ep.add_argument("family_id")
    ep.add_argument("n", type=int)
    ep.add_argument("t", type=int, nargs="?", default=0)
    ep.add_argument("--gib", help="gibonacci seeds a,b")
    ep.add_argument("--format", **fmt)
    ep.set_defaults(fn=_cmd_eval)

    sp = sub.add_parser("series", help="convergence table for one series target")
    sp.add_argument("family", help="one of: last1 last2 series1-ber series2-ber "
                                   "series1-ber2 series2-ber2")
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--terms", type=int, default=40)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--format", **fmt)
    sp.set_defaults(fn=_cmd_series)

    rp = sub.add_parser("serve", help="run the HTTP service")
    rp.add_argument("--host", default="127.0.0.1")
    rp.add_argument("--port", type=int, default=8000)
    rp.set_defaults(fn=_cmd_serve)

    return p


def _glue_negative_ranges(argv: list[str]) -> list[str]:
    # argparse reads "-50..50" as a flag; fold range/seed values that start
    # with a minus into their option token ("--t", "-50..50" -> "--t=-50..50").
    out: list[str] = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in ("--n", "--t", "--gib") and nxt is not None and nxt.startswith("-"):
            out.append(f"{tok}={nxt}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative_ranges(sys.argv[1:] if argv is None else argv))
    try:
        return args.fn(args)
    except (ParameterError, ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
