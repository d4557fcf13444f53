"""Command-line front end.

    weylcoh series     --group g2 [--m 2] [--max-degree N]
    weylcoh verify     --group sp2 [--relations stated|completed]
    weylcoh invariants --group su3 --degree 2

Every subcommand accepts ``--output {text,json}``, ``--seed N`` and
``--out PATH``.  Exit status: 0 on success, 1 when a verification check fails
or an internal inconsistency is detected, 2 on bad flags.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional

from .algebra import canonical_group, make_context
from .invariants import DEFAULT_MAX_DEGREE, invariant_basis, poincare_series, series_string
from .presentation import RELATION_SETS, verify_theorem
from .weyl import InternalInconsistency


@dataclass(frozen=True)
class RunConfig:
    command: str
    group: str
    m: int = 2
    max_degree: Optional[int] = None
    degree: Optional[int] = None
    output: str = "text"
    seed: int = 0
    relations: str = "stated"
    out: Optional[str] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        return cls(**d)

    def to_argv(self) -> List[str]:
        argv = [self.command, "--group", self.group.lower(), "--m", str(self.m),
                "--output", self.output, "--seed", str(self.seed)]
        if self.max_degree is not None:
            argv += ["--max-degree", str(self.max_degree)]
        if self.degree is not None:
            argv += ["--degree", str(self.degree)]
        if self.command == "verify":
            argv += ["--relations", self.relations]
        if self.out is not None:
            argv += ["--out", self.out]
        return argv


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylcoh", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--group", required=True, type=str.lower, choices=["su3", "sp2", "g2"])
        p.add_argument("--m", type=_positive, default=2, help="number of torus factors")
        p.add_argument("--output", choices=["text", "json"], default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("series", help="Poincare series of the invariant ring")
    common(p)
    p.add_argument("--max-degree", type=_nonneg)

    p = sub.add_parser("verify", help="check the ring presentation (m=2)")
    common(p)
    p.add_argument("--max-degree", type=_nonneg)
    p.add_argument("--relations", choices=sorted(RELATION_SETS), default="stated")

    p = sub.add_parser("invariants", help="echelonized invariant basis in one degree")
    common(p)
    p.add_argument("--degree", type=_nonneg, required=True)
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command, group=canonical_group(ns.group), m=ns.m,
        max_degree=getattr(ns, "max_degree", None), degree=getattr(ns, "degree", None),
        output=ns.output, seed=ns.seed, relations=getattr(ns, "relations", "stated"), out=ns.out,
    )


def cmd_series(cfg: RunConfig):
    ctx = make_context(cfg.group, cfg.m)
    max_degree = DEFAULT_MAX_DEGREE[cfg.group] if cfg.max_degree is None else cfg.max_degree
    coeffs = poincare_series(ctx, max_degree)
    report = {"group": cfg.group, "m": cfg.m, "max_degree": max_degree, "series": coeffs}
    text = "\n".join([
        f"group {cfg.group}, m={cfg.m}, degrees 0..{max_degree}",
        f"series: {series_string(coeffs)}",
        "coefficients: " + " ".join(map(str, coeffs)),
    ])
    return 0, report, text


def cmd_verify(cfg: RunConfig):
    rep = verify_theorem(cfg.group, cfg.m, cfg.max_degree, cfg.relations, cfg.seed)
    report = rep.to_dict()
    lines = [f"group {rep.group}, m={rep.m}, relations: {rep.relation_set}",
             f"series: {series_string(rep.series)}",
             "coefficients: " + " ".join(map(str, rep.series)),
             "presented: " + " ".join(map(str, rep.presented_series))]
    for c in rep.checks:
        lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    lines.append("degree  invariant  presented  span")
    for d, i, p, s in rep.dimension_table:
        lines.append(f"{d:6d}  {i:9d}  {p:9d}  {s:4d}")
    lines.append(f"verdict: {'true' if rep.verdict else 'false'}")
    return (0 if rep.verdict else 1), report, "\n".join(lines)


def cmd_invariants(cfg: RunConfig):
    ctx = make_context(cfg.group, cfg.m)
    basis = invariant_basis(ctx, cfg.degree)
    rendered = [str(v) for v in basis.vectors]
    report = {"group": cfg.group, "m": cfg.m, "degree": cfg.degree,
              "dimension": basis.dimension, "basis": rendered}
    text = "\n".join([f"group {cfg.group}, m={cfg.m}, degree {cfg.degree}: dimension {basis.dimension}"]
                     + [f"  {s}" for s in rendered])
    return 0, report, text


COMMANDS = {"series": cmd_series, "verify": cmd_verify, "invariants": cmd_invariants}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if cfg.command == "verify" and cfg.m != 2:
        print("error: verification requires m=2", file=stderr)
        return 2
    try:
        code, report, text = COMMANDS[cfg.command](cfg)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=stderr)
        return 1
    body = json.dumps(report, indent=2) if cfg.output == "json" else text
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body, file=stdout)
    if code and cfg.command == "verify":
        failed = [c["name"] for c in report["checks"] if not c["pass"]]
        print("failed checks: " + "; ".join(failed), file=stderr)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
