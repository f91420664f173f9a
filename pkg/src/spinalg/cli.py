"""Command-line driver: seeded claim audits plus decompose/compose utilities.

Exit status is 0 when every gating claim passes, 1 when one fails (or a
decomposition is rejected), and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .algebra import AlgebraElement, LinearOperator, algebra_from_name
from .automorphism import aut_from_images
from .claims import GROUPS, REGISTRY, RunContext, claims_for, run_claim, sample_automorphism
from .errors import SpinAlgError
from .grassmann import GrassmannAutFactors, compose_factors, decompose_aut
from .spin import SAMPLE_KINDS, SpinAutFactors, compose_spin_factors, decompose_spin_aut, spin_aut_from_images

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read_json(path: str):
    try:
        raw = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        return json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from exc


# --------------------------------------------------------------------------
# verify


def _run_claims(claims, ctx: RunContext, jobs: int, timings: bool) -> list:
    def one(claim):
        t0 = time.perf_counter()
        rep = run_claim(claim, ctx)
        if timings:
            rep["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
        return rep

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(one, claims))
    else:
        reports = [one(c) for c in claims]
    return sorted(reports, key=lambda r: r["claim_id"])


def _text_report(reports) -> str:
    lines = []
    for r in reports:
        line = f"{r['status'].upper():<9}{r['claim_id']:<40}{r['anchor']}"
        if "elapsed_ms" in r:
            line += f"  [{r['elapsed_ms']} ms]"
        lines.append(line)
        if r["status"] != "pass" and r["witness"] is not None:
            lines.append("         witness: " + json.dumps(r["witness"], sort_keys=True, ensure_ascii=False))
    counts = {s: sum(r["status"] == s for r in reports) for s in ("pass", "fail", "recorded")}
    lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['recorded']} recorded")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    ctx = RunContext(seed=args.seed, samples=args.samples, backend=args.backend, tol=args.tol)
    reports = _run_claims(claims_for(args.target), ctx, args.jobs, args.timings)
    text = _dump(reports) if args.format == "json" else _text_report(reports)
    _emit(text, args.out)
    return EXIT_FAIL if any(r["status"] == "fail" for r in reports) else EXIT_OK


def cmd_report(args) -> int:
    rows = [
        {"claim_id": c.claim_id, "group": c.group, "anchor": c.anchor, "gating": not c.recorded}
        for c in sorted(REGISTRY, key=lambda c: c.claim_id)
    ]
    if args.format == "json":
        text = _dump(rows)
    else:
        text = "".join(
            f"{r['claim_id']:<40}{'gating' if r['gating'] else 'recorded':<10}{r['anchor']}\n" for r in rows
        )
    _emit(text, args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# decompose / compose / sample


def _factors_json(factors) -> dict:
    if isinstance(factors, SpinAutFactors):
        return {"algebra": "spin", "factors": factors.to_json()}
    return {"algebra": factors.algebra.name, "factors": factors.to_json()}


def _operator_from_input(obj) -> LinearOperator:
    """Accept ``{"algebra", "matrix"}`` or ``{"algebra", "images"}``."""
    try:
        alg = algebra_from_name(obj["algebra"])
        if "images" in obj:
            images = [AlgebraElement.from_json({"algebra": alg.name, **_coeffs(x)}) for x in obj["images"]]
            if alg.is_spin:
                # images of e1 and e2; e3 and e4 follow from the plus involution
                if len(images) != 2:
                    raise ValueError("spin automorphisms take the images of e1 and e2")
                return spin_aut_from_images(images)
            if len(images) != alg.n:
                raise ValueError(f"expected {alg.n} generator images")
            return aut_from_images(alg, images)
        if "matrix" in obj:
            return LinearOperator.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed automorphism JSON: {exc}") from exc
    raise UsageError('automorphism JSON needs "matrix" or "images"')


def _coeffs(x):
    return {"coeffs": x["coeffs"]} if "coeffs" in x else {"coeffs": x}


def cmd_decompose(args) -> int:
    op = _operator_from_input(_read_json(args.input))
    factors = decompose_spin_aut(op) if op.algebra.is_spin else decompose_aut(op)
    _emit(_dump(_factors_json(factors)), args.out)
    return EXIT_OK


def cmd_compose(args) -> int:
    obj = _read_json(args.input)
    try:
        if obj["algebra"] == "spin":
            op = compose_spin_factors(SpinAutFactors.from_json(obj["factors"]))
        else:
            op = compose_factors(GrassmannAutFactors.from_json(obj["factors"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed factor JSON: {exc}") from exc
    _emit(_dump(op.to_json()), args.out)
    return EXIT_OK


def cmd_sample(args) -> int:
    try:
        factors = sample_automorphism(args.kind, args.seed, args.index, args.algebra)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = _factors_json(factors)
    if args.operator:
        op = compose_spin_factors(factors) if isinstance(factors, SpinAutFactors) else compose_factors(factors)
        payload = op.to_json()
    _emit(_dump(payload), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spinalg", description="Exact spin-algebra audits and automorphism tools.")
    sub = p.add_subparsers(dest="command", required=True)

    def output_flags(sp):
        sp.add_argument("--format", choices=("json", "text"), default="text")
        sp.add_argument("--out", help="write the report to this file instead of stdout")

    v = sub.add_parser("verify", help="run seeded claim audits")
    v.add_argument("target", choices=GROUPS + ("all",))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=_positive_int, default=100)
    v.add_argument("--backend", choices=("exact", "float"), default="exact")
    v.add_argument("--tol", type=float, default=1e-9, help="float backend only: display cutoff for tiny values")
    v.add_argument("--jobs", type=_positive_int, default=1)
    v.add_argument("--timings", action="store_true", help="add elapsed_ms to each claim (breaks byte identity)")
    output_flags(v)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="list every claim with its anchor")
    output_flags(r)
    r.set_defaults(func=cmd_report)

    d = sub.add_parser("decompose", help="factor an automorphism given as JSON")
    d.add_argument("--in", dest="input", required=True, help="JSON file, or - for stdin")
    d.add_argument("--out")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("compose", help="rebuild an automorphism from factor JSON")
    c.add_argument("--in", dest="input", required=True, help="JSON file, or - for stdin")
    c.add_argument("--out")
    c.set_defaults(func=cmd_compose)

    s = sub.add_parser("sample", help="draw seeded automorphism factors")
    s.add_argument("--kind", choices=SAMPLE_KINDS, default="full")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--index", type=int, default=0)
    s.add_argument("--algebra", default="spin", help="spin or grassmann:N")
    s.add_argument("--operator", action="store_true", help="emit the composed operator instead of factors")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sample)
    return p


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpinAlgError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
