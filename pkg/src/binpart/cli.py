"""Command-line front end.

Problem files are line-oriented::

    ring: x, y, z
    ideal: (x-z)^2, 3*x - y - 2*z
    option seed = 1

Commands: ``bin`` (binomial part of the Laurent extension), ``decide``
(does the ideal contain a binomial), ``monomial``, ``tropspan`` and
``oracle`` (brute force up to ``--degree``).  Reports are plain text,
or one JSON object with ``--json``; ``--no-timing`` drops the
wall-clock field so identical inputs give byte-identical reports.

Exit codes: 0 success; 1 input error; 2 soft warning, meaning the
reported answer relies on a completeness flag that is not certified
(a ``decide`` that answers True is certified by its witness and exits
0 regardless of the flag).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .config import CERTIFIED, EXHAUSTED, PipelineConfig
from .groebner import IdealHandle, saturate_by_variables
from .pipeline import (
    binomial_part_laurent,
    brute_force_binomials,
    contains_binomial,
    contains_monomial,
)
from .poly import PolyParseError, parse_poly
from .rings import Ring
from .tropical import tropical_span


class InputError(ValueError):
    pass


@dataclass
class ProblemFile:
    ring_names: tuple[str, ...]
    generators: tuple[str, ...]
    options: dict = field(default_factory=dict)


def parse_problem_file(text: str) -> ProblemFile:
    ring_names = None
    generators: tuple[str, ...] = ()
    options: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring:"):
            names = [s.strip() for s in line[len("ring:"):].split(",")]
            names = [s for s in names if s]
            if not names:
                raise InputError(f"line {lineno}: empty ring declaration")
            ring_names = tuple(names)
        elif line.startswith("ideal:"):
            body = line[len("ideal:"):].strip()
            generators = tuple(s.strip() for s in body.split(",") if s.strip())
        elif line.startswith("option"):
            body = line[len("option"):].strip()
            if "=" not in body:
                raise InputError(f"line {lineno}: option lines are 'option key = value'")
            key, value = body.split("=", 1)
            options[key.strip()] = value.strip()
        else:
            raise InputError(f"line {lineno}: unrecognized directive {line.split(':')[0]!r}")
    if ring_names is None:
        raise InputError("missing 'ring:' line")
    return ProblemFile(ring_names, generators, options)


_OPTION_KEYS = {
    "seed": ("seed", int),
    "fallback-bound": ("fallback_bound", int),
    "precision-bits": ("precision_start_bits", int),
    "witness-degree-cap": ("witness_degree_cap", int),
}


def build_config(problem: ProblemFile, args) -> PipelineConfig:
    values = {}
    for key, raw in problem.options.items():
        if key == "degree":
            continue
        if key not in _OPTION_KEYS:
            raise InputError(f"unknown option {key!r}")
        name, conv = _OPTION_KEYS[key]
        try:
            values[name] = conv(raw)
        except ValueError:
            raise InputError(f"option {key!r}: bad value {raw!r}") from None
    if args.seed is not None:
        values["seed"] = args.seed
    if args.fallback_bound is not None:
        values["fallback_bound"] = args.fallback_bound
    if args.precision_bits is not None:
        values["precision_start_bits"] = args.precision_bits
    return PipelineConfig(**values)


def _build_ideal(problem: ProblemFile) -> IdealHandle:
    try:
        ring = Ring(problem.ring_names)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    gens = []
    for idx, expr in enumerate(problem.generators, start=1):
        try:
            gens.append(parse_poly(expr, ring))
        except PolyParseError as exc:
            raise InputError(f"generator {idx}: {exc}") from None
    return IdealHandle(ring, gens)


def _frac(x) -> str:
    return str(x)


def run_command(command: str, problem: ProblemFile, config: PipelineConfig, degree):
    """Execute one command; returns (report dict, exit code)."""
    I = _build_ideal(problem)
    report = {
        "command": command,
        "ring": list(problem.ring_names),
        "generators": list(problem.generators),
        "options": dict(problem.options),
        "seed": config.seed,
    }
    code = 0
    if command == "bin":
        res = binomial_part_laurent(I, config)
        report.update({
            "status": res.status,
            "lattice_basis": [list(r) for r in res.lattice_basis],
            "lambdas": [_frac(l) for l in res.lambdas],
            "generators_found": [str(g) for g in res.generators],
            "completeness": res.completeness,
            "certificates": list(res.certificates),
        })
        if res.completeness != CERTIFIED:
            code = 2
    elif command == "decide":
        ans, witness, res = contains_binomial(I, config)
        report.update({
            "contains_binomial": ans,
            "witness": str(witness) if witness is not None else None,
            "status": res.status,
            "lattice_basis": [list(r) for r in res.lattice_basis],
            "lambdas": [_frac(l) for l in res.lambdas],
            "generators_found": [str(g) for g in res.generators],
            "completeness": res.completeness,
            "certificates": list(res.certificates),
        })
        if not ans and res.completeness != CERTIFIED:
            code = 2
    elif command == "monomial":
        report["contains_monomial"] = contains_monomial(I)
    elif command == "tropspan":
        span = tropical_span(saturate_by_variables(I), config)
        report.update({
            "span_basis": [list(v) for v in span.vectors],
            "completeness": span.completeness,
        })
        if span.completeness == EXHAUSTED:
            code = 2
    elif command == "oracle":
        if degree is None:
            raise InputError("oracle requires --degree")
        found = brute_force_binomials(I, degree)
        report.update({
            "degree": degree,
            "binomials": [{"u": list(b.u), "v": list(b.v), "lambda": _frac(b.lam)}
                          for b in found],
        })
    else:
        raise InputError(f"unknown command {command!r}")
    return report, code


def format_text(report: dict) -> str:
    lines = [f"command: {report['command']}",
             f"ring: {', '.join(report['ring'])}",
             f"ideal: {', '.join(report['generators']) or '0'}"]
    for key, value in sorted(report.get("options", {}).items()):
        lines.append(f"option: {key} = {value}")
    lines.append(f"seed: {report['seed']}")
    simple = [
        ("status", "status"),
        ("contains_binomial", "contains binomial"),
        ("contains_monomial", "contains monomial"),
        ("witness", "witness"),
        ("completeness", "completeness"),
        ("degree", "degree"),
    ]
    for key, label in simple:
        if key in report and report[key] is not None:
            lines.append(f"{label}: {report[key]}")
    if report.get("lattice_basis"):
        lines.append("lattice basis:")
        for row, lam in zip(report["lattice_basis"], report["lambdas"]):
            lines.append(f"  {' '.join(map(str, row))}   lambda = {lam}")
    if report.get("generators_found"):
        lines.append("generators:")
        for g, cert in zip(report["generators_found"], report["certificates"]):
            lines.append(f"  {g}   [normal form 0: {'yes' if cert else 'NO'}]")
    if "span_basis" in report:
        lines.append("span basis:")
        for row in report["span_basis"]:
            lines.append(f"  {' '.join(map(str, row))}")
        if not report["span_basis"]:
            lines.append("  (empty)")
    if "binomials" in report:
        lines.append(f"binomials found: {len(report['binomials'])}")
        for b in report["binomials"]:
            lines.append(f"  u = {' '.join(map(str, b['u']))}, "
                         f"v = {' '.join(map(str, b['v']))}, lambda = {b['lambda']}")
    if "elapsed_seconds" in report:
        lines.append(f"elapsed: {report['elapsed_seconds']:.3f}s")
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def main(argv=None) -> int:
    parser = _Parser(prog="binpart",
                     description="binomial detection in polynomial ideals")
    parser.add_argument("command",
                        choices=("bin", "decide", "monomial", "tropspan", "oracle"))
    parser.add_argument("file", help="problem file (ring/ideal/option lines)")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--degree", type=int, default=None,
                        help="degree bound for the oracle command")
    parser.add_argument("--fallback-bound", type=int, default=None)
    parser.add_argument("--precision-bits", type=int, default=None)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--no-timing", action="store_true")
    try:
        args = parser.parse_args(argv)
        with open(args.file) as fh:
            problem = parse_problem_file(fh.read())
        if args.degree is None and "degree" in problem.options:
            args.degree = int(problem.options["degree"])
        config = build_config(problem, args)
        start = time.monotonic()
        report, code = run_command(args.command, problem, config, args.degree)
        if not args.no_timing:
            report["elapsed_seconds"] = time.monotonic() - start
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(format_text(report), end="")
    return code


if __name__ == "__main__":
    sys.exit(main())
