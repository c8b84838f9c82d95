"""Thin command-line client over the service layer.

Each subcommand builds a request model, runs it through the same
handlers the HTTP service uses (in-process by default, or against a
remote server with --server), and renders the response as text or as
the canonical JSON wire form.

Exit codes: 0 success, 1 usage or parse error, 2 internal cross-check
failure (spectrum --check mismatch, census inconsistency).
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx
from pydantic import ValidationError

from . import service
from .schemas import (
    CensusRequest,
    ConstructRequest,
    FidelityRequest,
    GraphSpec,
    PstRequest,
    SpectrumRequest,
    TraceRequest,
)

USAGE_ERROR = 1
CROSSCHECK_ERROR = 2


def _read_graph(path: str | None) -> GraphSpec:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return GraphSpec.model_validate_json(text)


def _dispatch(args, endpoint: str, request) -> dict:
    if args.server:
        resp = httpx.post(
            args.server.rstrip("/") + endpoint,
            json=json.loads(request.model_dump_json()),
            timeout=600.0,
        )
        if resp.status_code >= 400:
            raise ValueError(f"server rejected request: {resp.text}")
        return resp.json()
    handler = {
        "/spectrum": service.compute_spectrum,
        "/pst": service.compute_pst,
        "/fidelity": service.compute_fidelity,
        "/census": service.compute_census,
        "/construct": service.compute_construct,
    }[endpoint]
    return json.loads(handler(request).model_dump_json())


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _spectrum_text(out: dict) -> list[str]:
    lines = [f"n = {out['n']}  spectrum ({out['kind']})"]
    if out["kind"] == "exact":
        lines.append("  " + " ".join(str(v) for v in out["exact"]))
    else:
        for j, (re, im) in enumerate(out["numeric"]):
            flag = "" if abs(im) <= 1e-8 else "  (non-real)"
            lines.append(f"  lambda_{j} = {re:+.10f} {im:+.10f}i{flag}")
        if not out["all_real"]:
            lines.append("  spectrum has non-real entries")
    if out.get("check_passed") is not None:
        lines.append(f"  exact-vs-numeric check: {'ok' if out['check_passed'] else 'MISMATCH'}")
    return lines


def _pst_text(out: dict) -> list[str]:
    lines = [f"n = {out['n']}  PST: {out['reason']}"]
    cert = out.get("certificate")
    if cert:
        lines += [
            f"  m        = {cert['m']}",
            f"  time     = {cert['time']:.12f} rad  (t/2pi = {cert['time_over_2pi']})",
            f"  endpoints= ({cert['source']}, {cert['target']})",
            f"  fidelity = {cert['fidelity']:.12f}",
        ]
    if out.get("trace"):
        lines.append("  t, fidelity:")
        for t, v in zip(out["trace"]["times"], out["trace"]["values"]):
            lines.append(f"    {t:.6f}  {v:.9f}")
    return lines


def _census_text(out: dict) -> list[str]:
    lines = [
        f"n = {out['n']}  census",
        f"  predicate hits : {len(out['predicate_hits'])}",
        f"  spectral hits  : {len(out['spectral_hits'])}",
    ]
    for hit in out["predicate_hits"]:
        lines.append(f"    D = {hit}")
    lines.append(
        f"  weightable sets: {out['weightable_count']}"
        + (
            f" (predicted {out['predicted_weightable']})"
            if out["predicted_weightable"] is not None
            else ""
        )
    )
    if out["two_divisor_count"] is not None:
        lines.append(
            f"  two-divisor families: {out['two_divisor_count']} "
            f"(predicted {out['predicted_two_divisor']})"
        )
    lines.append(f"  consistent: {out['consistent']}")
    return lines


def _fidelity_text(out: dict) -> list[str]:
    if out.get("fidelity") is not None:
        return [
            f"n = {out['n']}  fidelity({out['a']} -> {out['b']}, "
            f"t = {out['time']:.9f}) = {out['fidelity']:.12f}"
        ]
    lines = [f"n = {out['n']}  fidelity trace ({out['a']} -> {out['b']})"]
    for t, v in zip(out["trace"]["times"], out["trace"]["values"]):
        lines.append(f"  {t:.6f}  {v:.9f}")
    return lines


def _construct_text(out: dict) -> list[str]:
    lines = [
        "constructed graph spec:",
        "  " + json.dumps(out["graph"]),
    ]
    return lines + _pst_text(out["verdict"])


def cmd_spectrum(args) -> int:
    req = SpectrumRequest(graph=_read_graph(args.input), check=args.check)
    out = _dispatch(args, "/spectrum", req)
    _emit(args, out, _spectrum_text(out))
    return CROSSCHECK_ERROR if out.get("check_passed") is False else 0


def cmd_pst(args) -> int:
    trace = None
    if args.trace is not None:
        trace = TraceRequest(t_max=args.trace[0], steps=int(args.trace[1]))
    req = PstRequest(graph=_read_graph(args.input), trace=trace)
    out = _dispatch(args, "/pst", req)
    _emit(args, out, _pst_text(out))
    return 0


def cmd_census(args) -> int:
    out = _dispatch(args, "/census", CensusRequest(n=args.n))
    _emit(args, out, _census_text(out))
    return 0 if out["consistent"] else CROSSCHECK_ERROR


def cmd_construct(args) -> int:
    req = ConstructRequest(n=args.n, a=args.a, filler=args.filler, base=args.base)
    out = _dispatch(args, "/construct", req)
    _emit(args, out, _construct_text(out))
    return 0


def cmd_fidelity(args) -> int:
    trace = None
    if args.trace is not None:
        trace = TraceRequest(t_max=args.trace[0], steps=int(args.trace[1]))
    req = FidelityRequest(
        graph=_read_graph(args.input),
        a=args.a,
        b=args.b,
        time=args.time,
        trace=trace,
    )
    out = _dispatch(args, "/fidelity", req)
    _emit(args, out, _fidelity_text(out))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run(service.app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circpst",
        description="Perfect state transfer certification for weighted "
        "integral circulant graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_input=True):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--server", help="base URL of a running service; "
                       "default is in-process execution")
        if graph_input:
            p.add_argument("--input", help="graph-spec JSON file ('-' = stdin)")

    p = sub.add_parser("spectrum", help="exact or numeric eigenvalues")
    common(p)
    p.add_argument("--check", action="store_true",
                   help="cross-validate exact vs numeric spectra")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("pst", help="decide PST and print the certificate")
    common(p)
    p.add_argument("--trace", nargs=2, type=float, metavar=("T_MAX", "STEPS"),
                   help="append a fidelity trace over [0, T_MAX]")
    p.set_defaults(func=cmd_pst)

    p = sub.add_parser("census", help="enumerate divisor sets for one order")
    common(p, graph_input=False)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("construct", help="build a PST-supporting weighting")
    common(p, graph_input=False)
    p.add_argument("n", type=int)
    p.add_argument("--a", type=int, choices=[1, 2], default=1,
                   help="anchor selector: odd weight goes to n/2^a")
    p.add_argument("--filler", type=int, default=4)
    p.add_argument("--base", type=int, nargs="*", default=None,
                   help="divisor set to weight (default: all proper divisors)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("fidelity", help="transition amplitude at a time or on a grid")
    common(p)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--time", type=float, default=None)
    p.add_argument("--trace", nargs=2, type=float, metavar=("T_MAX", "STEPS"))
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ValidationError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
