"""Command-line interface.

Exit codes: a decided verdict (true or false) exits 0; a refuted theorem
check, an invalid certificate, or a domain error exits 1; malformed
usage exits 2.

Stdout is deterministic for a fixed argv and cache state, except for the
elapsed_ms field of --json reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .decomp import decompose_even, decompose_odd
from .errors import PotseqError
from .extremal import build_lower_bound, sigma_lower_bound
from .graphs import graph_from_text, graph_to_text, realize
from .potential import (
    TargetPattern,
    certificate_errors,
    is_potentially,
    make_kp11,
)
from .sequences import degree_sum, enumerate_graphical, format_sequence, is_graphical, parse_sequence
from .thresholds import (
    VerdictStore,
    compute_sigma,
    verify_conjectured_sigma,
    verify_k311_thresholds,
)
from .witness import (
    AttachStep,
    BaseCaseStep,
    EarlyContainmentStep,
    FallbackStep,
    InterchangeStep,
    SeededCliqueStep,
    find_k311_realization,
)

CACHE_ENV = "POTSEQ_CACHE_DIR"


@dataclass
class RunReport:
    command: str
    inputs: dict
    outcome: str
    value: dict | None = None
    artifacts: list[str] = field(default_factory=list)
    elapsed_ms: int = 0


@dataclass
class Handled:
    outcome: str  # "pass", "fail", or "value"
    value: dict
    lines: list[str]
    artifacts: list[str] = field(default_factory=list)


def _parse_target(spec: str | None, path: str | None) -> TargetPattern:
    if (spec is None) == (path is None):
        raise PotseqError("give exactly one of --target or --target-file")
    if spec is not None:
        kind, sep, arg = spec.partition(":")
        if kind == "kp11" and sep:
            try:
                return make_kp11(int(arg))
            except ValueError:
                raise PotseqError(f"bad target spec {spec!r}") from None
        raise PotseqError(f"unknown target spec {spec!r}; use kp11:P or --target-file")
    return TargetPattern(graph_from_text(Path(path).read_text()))


def _store_for(args, target: TargetPattern, n: int) -> VerdictStore | None:
    root = args.cache_dir or os.environ.get(CACHE_ENV)
    return VerdictStore(root, target, n) if root else None


def _embedding_lines(embedding: dict[int, int]) -> list[str]:
    return [f"H:{h} -> G:{embedding[h]}" for h in sorted(embedding)]


def _certificate_text(graph, embedding) -> str:
    return graph_to_text(graph) + "".join(f"{line}\n" for line in _embedding_lines(embedding))


def _parse_certificate(text: str):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise PotseqError("empty certificate")
    try:
        _, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise PotseqError(f"bad certificate header {lines[0]!r}") from None
    graph = graph_from_text("\n".join(lines[: 1 + m]))
    embedding: dict[int, int] = {}
    for ln in lines[1 + m :]:
        try:
            left, right = ln.split("->")
            h = int(left.strip().removeprefix("H:"))
            g = int(right.strip().removeprefix("G:"))
        except ValueError:
            raise PotseqError(f"bad embedding line {ln!r}") from None
        embedding[h] = g
    return graph, embedding


def _format_trace_step(step) -> str:
    if isinstance(step, BaseCaseStep):
        return "base-case: solved by the exact engine"
    if isinstance(step, SeededCliqueStep):
        return "seed-clique: realization with K4 on the top four slots"
    if isinstance(step, EarlyContainmentStep):
        return f"early: {step.note}"
    if isinstance(step, InterchangeStep):
        rem = " ".join(f"{u}-{v}" for u, v in step.removed)
        ins = " ".join(f"{u}-{v}" for u, v in step.inserted)
        return f"interchange: case={step.case} removed=[{rem}] inserted=[{ins}]"
    if isinstance(step, AttachStep):
        to = ",".join(str(v) for v in step.attached_to)
        return f"attach: degree={step.removed_degree} to=[{to}]"
    if isinstance(step, FallbackStep):
        return f"fallback: {step.reason}"
    return f"step: {step!r}"


# ---------------------------------------------------------------- handlers


def _handle_seq_check(args) -> Handled:
    seq = parse_sequence(args.sequence)
    ok = is_graphical(seq)
    value = {
        "sequence": format_sequence(seq),
        "n": len(seq),
        "sum": degree_sum(seq),
        "graphical": ok,
    }
    lines = [
        f"sequence: {value['sequence']}",
        f"n: {value['n']}",
        f"sum: {value['sum']}",
        f"graphical: {'true' if ok else 'false'}",
    ]
    return Handled("value", value, lines)


def _handle_seq_realize(args) -> Handled:
    seq = parse_sequence(args.sequence)
    g = realize(seq)
    text = graph_to_text(g)
    return Handled("value", {"graph": text}, text.splitlines())


def _handle_seq_enumerate(args) -> Handled:
    seqs = [format_sequence(s) for s in enumerate_graphical(args.n, args.sum)]
    return Handled("value", {"n": args.n, "sum": args.sum, "sequences": seqs}, list(seqs))


def _handle_decomp(args) -> Handled:
    dec = decompose_even(args.m) if args.kind == "even" else decompose_odd(args.m)
    lines: list[str] = []
    parts_json = []
    for role, edges in dec.parts:
        lines.append(role)
        lines.append(f"{dec.n} {len(edges)}")
        ordered = sorted(edges)
        lines.extend(f"{u} {v}" for u, v in ordered)
        parts_json.append({"role": role, "edges": [[u, v] for u, v in ordered]})
    return Handled("value", {"n": dec.n, "parts": parts_json}, lines)


def _handle_extremal_bound(args) -> Handled:
    bound = sigma_lower_bound(args.p, args.n)
    return Handled("value", {"p": args.p, "n": args.n, "bound": bound}, [str(bound)])


def _handle_extremal_build(args) -> Handled:
    inst = build_lower_bound(args.p, args.n)
    seq_text = format_sequence(inst.sequence)
    graph_text = graph_to_text(inst.witness_graph)
    value = {
        "p": inst.p,
        "n": inst.n,
        "bound": inst.bound,
        "sequence": seq_text,
        "sum": degree_sum(inst.sequence),
        "graph": graph_text,
    }
    if args.emit == "sequence":
        lines = [seq_text]
    elif args.emit == "graph":
        lines = graph_text.splitlines()
    else:
        lines = [
            f"p: {inst.p}",
            f"n: {inst.n}",
            f"bound: {inst.bound}",
            f"sequence: {seq_text}",
            f"sum: {degree_sum(inst.sequence)}",
            "graph:",
            *graph_text.splitlines(),
        ]
    return Handled("value", value, lines)


def _handle_potential_check(args) -> Handled:
    seq = parse_sequence(args.sequence)
    target = _parse_target(args.target, args.target_file)
    verdict = is_potentially(seq, target)
    value = {
        "sequence": format_sequence(seq),
        "target": target.cache_key,
        "potentially": verdict.answer,
    }
    lines = [
        f"sequence: {value['sequence']}",
        f"target: {value['target']}",
        f"potentially: {'true' if verdict.answer else 'false'}",
    ]
    artifacts: list[str] = []
    if verdict.answer:
        cert_text = _certificate_text(verdict.certificate, verdict.embedding)
        value["certificate"] = cert_text
        lines.append("certificate:")
        lines.extend(cert_text.splitlines())
        if args.out:
            Path(args.out).write_text(cert_text)
            artifacts.append(args.out)
    return Handled("value", value, lines, artifacts)


def _handle_sigma_compute(args) -> Handled:
    target = _parse_target(args.target, args.target_file)
    store = _store_for(args, target, args.n)
    progress = _stderr_progress(args)
    result = compute_sigma(target, args.n, jobs=args.jobs, store=store, progress=progress)
    exceptions = [
        {"sequence": format_sequence(seq), "sum": s} for seq, s in result.exceptions
    ]
    value = {
        "target": target.cache_key,
        "n": result.n,
        "sigma": result.sigma_value,
        "max_sum_checked": result.max_sum_checked,
        "exceptions": exceptions,
    }
    lines = [
        f"target: {value['target']}",
        f"n: {result.n}",
        f"sigma: {result.sigma_value}",
        f"max-sum-checked: {result.max_sum_checked}",
        f"exceptions: {len(exceptions)}",
    ]
    lines.extend(f"exception: {e['sequence']} sum={e['sum']}" for e in exceptions)
    return Handled("value", value, lines)


def _handle_sigma_verify_theorem2(args) -> Handled:
    report = verify_k311_thresholds(
        args.n,
        jobs=args.jobs,
        store=_store_for(args, make_kp11(3), args.n),
        progress=_stderr_progress(args),
    )
    high = report.result.exceptions_with_sum_at_least(22) if args.n == 6 else []
    value = {
        "n": report.n,
        "expected": report.expected,
        "computed": report.result.sigma_value,
        "passed": report.passed,
    }
    lines = [
        f"n: {report.n}",
        f"expected-sigma: {report.expected}",
        f"computed-sigma: {report.result.sigma_value}",
    ]
    if args.n == 6:
        listed = ",".join(format_sequence(s) for s in high) or "(none)"
        lines.append(f"exceptions-at-or-above-22: {listed}")
        value["exceptions_at_or_above_22"] = [format_sequence(s) for s in high]
    lines.append(f"result: {'pass' if report.passed else 'fail'}")
    return Handled("pass" if report.passed else "fail", value, lines)


def _handle_sigma_verify_conjecture(args) -> Handled:
    target = make_kp11(args.p)
    ok = verify_conjectured_sigma(
        args.p,
        args.n,
        max_n=args.max_n,
        jobs=args.jobs,
        store=_store_for(args, target, args.n),
        progress=_stderr_progress(args),
    )
    bound = sigma_lower_bound(args.p, args.n)
    value = {"p": args.p, "n": args.n, "lower_bound": bound, "passed": ok}
    lines = [
        f"p: {args.p}",
        f"n: {args.n}",
        f"lower-bound: {bound}",
        f"result: {'pass' if ok else 'fail'}",
    ]
    return Handled("pass" if ok else "fail", value, lines)


def _handle_witness(args) -> Handled:
    seq = parse_sequence(args.sequence)
    result = find_k311_realization(seq)
    cert_text = _certificate_text(result.graph, result.embedding)
    value = {
        "sequence": format_sequence(seq),
        "certificate": cert_text,
        "diverged": result.diverged,
    }
    lines = [f"sequence: {value['sequence']}", "graph:"]
    lines.extend(graph_to_text(result.graph).splitlines())
    lines.append("embedding:")
    lines.extend(_embedding_lines(result.embedding))
    if args.trace:
        lines.append("trace:")
        lines.extend(_format_trace_step(s) for s in result.trace)
        value["trace"] = [_format_trace_step(s) for s in result.trace]
    artifacts: list[str] = []
    if args.out:
        Path(args.out).write_text(cert_text)
        artifacts.append(args.out)
    return Handled("value", value, lines, artifacts)


def _handle_verify_certificate(args) -> Handled:
    seq = parse_sequence(args.seq)
    target = _parse_target(args.target, args.target_file)
    graph, embedding = _parse_certificate(Path(args.certificate).read_text())
    problems = certificate_errors(seq, target, graph, embedding)
    value = {
        "sequence": format_sequence(seq),
        "target": target.cache_key,
        "valid": not problems,
        "problems": problems,
    }
    lines = [f"certificate: {'valid' if not problems else 'invalid'}"]
    lines.extend(f"problem: {p}" for p in problems)
    return Handled("pass" if not problems else "fail", value, lines)


def _stderr_progress(args):
    if not args.progress:
        return None

    def report(s: int, count: int, failures: int) -> None:
        print(f"sum={s} sequences={count} failures={failures}", file=sys.stderr)

    return report


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="potseq",
        description="Potentially K_{p,1,1}-graphic sequences: thresholds, witnesses, certificates.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON run report")
    parser.add_argument(
        "--cache-dir",
        default=None,
        help=f"verdict cache directory (default: ${CACHE_ENV} if set)",
    )
    parser.add_argument("--jobs", type=int, default=1, help="parallel verdict workers")
    parser.add_argument(
        "--progress", action="store_true", help="print sweep progress to stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="degree-sequence operations")
    seq_sub = seq.add_subparsers(dest="subcommand", required=True)
    p = seq_sub.add_parser("check", help="graphicality and degree sum")
    p.add_argument("sequence")
    p.set_defaults(handler=_handle_seq_check, command_name="seq check")
    p = seq_sub.add_parser("realize", help="Havel-Hakimi realization")
    p.add_argument("sequence")
    p.set_defaults(handler=_handle_seq_realize, command_name="seq realize")
    p = seq_sub.add_parser("enumerate", help="all graphical sequences with a given sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sum", type=int, required=True)
    p.set_defaults(handler=_handle_seq_enumerate, command_name="seq enumerate")

    dec = sub.add_parser("decomp", help="complete-graph decompositions")
    dec_sub = dec.add_subparsers(dest="subcommand", required=True)
    p = dec_sub.add_parser("even", help="K_{2m}: one-factor plus spanning cycles")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_handle_decomp, kind="even", command_name="decomp even")
    p = dec_sub.add_parser("odd", help="K_{2m+1}: spanning cycles")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_handle_decomp, kind="odd", command_name="decomp odd")

    ext = sub.add_parser("extremal", help="lower-bound constructions")
    ext_sub = ext.add_subparsers(dest="subcommand", required=True)
    p = ext_sub.add_parser("bound", help="the degree-sum lower bound")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_handle_extremal_bound, command_name="extremal bound")
    p = ext_sub.add_parser("build", help="extremal sequence and witness realization")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=("graph", "sequence", "both"), default="both")
    p.set_defaults(handler=_handle_extremal_build, command_name="extremal build")

    pot = sub.add_parser("potential", help="potentially-target decisions")
    pot_sub = pot.add_subparsers(dest="subcommand", required=True)
    p = pot_sub.add_parser("check", help="decide and certify")
    p.add_argument("sequence")
    p.add_argument("--target", default=None, help="target spec, e.g. kp11:3")
    p.add_argument("--target-file", default=None, help="graph text file")
    p.add_argument("--out", default=None, help="write the certificate here")
    p.set_defaults(handler=_handle_potential_check, command_name="potential check")

    sig = sub.add_parser("sigma", help="exact threshold sweeps")
    sig_sub = sig.add_subparsers(dest="subcommand", required=True)
    p = sig_sub.add_parser("compute", help="full sweep for a target")
    p.add_argument("--target", default=None, help="target spec, e.g. kp11:3")
    p.add_argument("--target-file", default=None)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_handle_sigma_compute, command_name="sigma compute")
    p = sig_sub.add_parser("verify-theorem2", help="check the exact K_{3,1,1} table")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_handle_sigma_verify_theorem2, command_name="sigma verify-theorem2")
    p = sig_sub.add_parser("verify-conjecture", help="computed sigma vs the bound formula")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(handler=_handle_sigma_verify_conjecture, command_name="sigma verify-conjecture")

    wit = sub.add_parser("witness", help="constructive realizations")
    wit_sub = wit.add_subparsers(dest="subcommand", required=True)
    p = wit_sub.add_parser("k311", help="realization containing K_{3,1,1}")
    p.add_argument("sequence")
    p.add_argument("--trace", action="store_true", help="print the construction steps")
    p.add_argument("--out", default=None, help="write the certificate here")
    p.set_defaults(handler=_handle_witness, command_name="witness k311")

    p = sub.add_parser("verify-certificate", help="re-validate an emitted certificate")
    p.add_argument("certificate", help="certificate file: graph text plus embedding lines")
    p.add_argument("--seq", required=True)
    p.add_argument("--target", default=None)
    p.add_argument("--target-file", default=None)
    p.set_defaults(handler=_handle_verify_certificate, command_name="verify-certificate")

    return parser


def dispatch(argv: list[str]) -> int:
    """Parse argv, run the command, print its output; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    started = time.monotonic()
    try:
        handled = args.handler(args)
    except PotseqError as exc:
        if args.json:
            report = RunReport(
                command=args.command_name,
                inputs=_echo_inputs(args),
                outcome="fail",
                value={"error": str(exc)},
                elapsed_ms=int((time.monotonic() - started) * 1000),
            )
            print(json.dumps(report.__dict__))
        else:
            print(f"error: {exc}")
        return 1
    elapsed = int((time.monotonic() - started) * 1000)
    if args.json:
        report = RunReport(
            command=args.command_name,
            inputs=_echo_inputs(args),
            outcome=handled.outcome,
            value=handled.value,
            artifacts=handled.artifacts,
            elapsed_ms=elapsed,
        )
        print(json.dumps(report.__dict__))
    else:
        for line in handled.lines:
            print(line)
    return 0 if handled.outcome in ("pass", "value") else 1


def _echo_inputs(args) -> dict:
    skip = {"handler", "command_name", "json", "kind", "command", "subcommand", "progress"}
    return {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in skip and v is not None and not callable(v)
    }


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
