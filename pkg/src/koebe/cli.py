"""Command-line front end.

    koebe coeffs  (--dss N | --suffridge n j)
    koebe trace   (--dss N | --suffridge n j) [--samples S]
    koebe certify N
    koebe compare N_max
    koebe sweep   N_from N_to [--jobs J]

Every subcommand accepts --format {json,csv,text}, --out PATH, --grid G and
--max-depth D. Exit status: 0 ok / certified / degenerate, 1 refuted,
2 usage error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .certify import DEFAULT_MAX_DEPTH, Verdict, certify_univalence
from .polyfamilies import FamilySpec, eval_complex
from .radii import COMPARISON_COLUMNS, DEFAULT_GRID, MIN_GRID, comparison_table

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

SWEEP_MAX_N = 200
MIN_TRACE_SAMPLES = 16

DEFAULT_FORMATS = {
    "coeffs": "csv",
    "trace": "csv",
    "certify": "json",
    "compare": "csv",
    "sweep": "csv",
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    grid: int = DEFAULT_GRID
    max_depth: int = DEFAULT_MAX_DEPTH
    format: str = "json"
    out: str | None = None

    def __post_init__(self):
        if self.grid < MIN_GRID:
            raise UsageError(f"--grid must be >= {MIN_GRID}")
        if not 1 <= self.max_depth <= 60:
            raise UsageError("--max-depth must lie in [1, 60]")
        if self.format not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.format!r}")


# -- serialization ---------------------------------------------------------------


def fmt_num(x) -> str:
    """17 significant digits, enough to round-trip any binary64; missing values are empty."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return f"{x:.17g}"


def _json_str(s: str) -> str:
    return json.dumps(s)


def to_json(obj, indent: int = 2, _level: int = 0) -> str:
    """Deterministic JSON with 17-significant-digit floats and sorted keys."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, (bool, int, float)):
        return fmt_num(obj)
    if isinstance(obj, str):
        return _json_str(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{_json_str(str(k))}: {to_json(obj[k], indent, _level + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(fmt_num(v) for v in obj) + "]"
        items = [pad + to_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalars
        return to_json(obj.item(), indent, _level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def csv_lines(header: Sequence[str] | None, rows: Sequence[Sequence]) -> list[str]:
    lines = [",".join(header)] if header else []
    for row in rows:
        lines.append(",".join(v if isinstance(v, str) else fmt_num(v) for v in row))
    return lines


def text_table(header: Sequence[str], rows: Sequence[Sequence]) -> list[str]:
    cells = [list(header)] + [[v if isinstance(v, str) else fmt_num(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def _emit(text: str, cfg: RunConfig):
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------


def cmd_coeffs(family: FamilySpec, cfg: RunConfig) -> int:
    p = family.polynomial()
    coeffs = list(p.coeffs)
    if cfg.format == "json":
        body = to_json({"family": family.as_dict(), "degree": p.degree, "coeffs": coeffs})
    elif cfg.format == "csv":
        body = ",".join(fmt_num(c) for c in coeffs)
    else:
        body = "\n".join(
            [f"# {family.label()}  degree {p.degree}"] + [f"a{k} = {fmt_num(c)}" for k, c in enumerate(coeffs)]
        )
    _emit(body, cfg)
    return EXIT_OK


TRACE_COLUMNS = ("t", "re", "im", "abs")


def trace_rows(family: FamilySpec, samples: int) -> list[tuple[float, float, float, float]]:
    p = family.polynomial()
    rows = []
    for i in range(samples + 1):
        t = 2 * math.pi * i / samples
        w = eval_complex(p, complex(math.cos(t), math.sin(t)))
        rows.append((t, w.real, w.imag, abs(w)))
    return rows


def cmd_trace(family: FamilySpec, samples: int, cfg: RunConfig) -> int:
    if samples < MIN_TRACE_SAMPLES:
        raise UsageError(f"--samples must be >= {MIN_TRACE_SAMPLES}")
    rows = trace_rows(family, samples)
    if cfg.format == "json":
        body = to_json(
            {
                "family": family.as_dict(),
                "samples": samples,
                "columns": list(TRACE_COLUMNS),
                "rows": [list(r) for r in rows],
            }
        )
    elif cfg.format == "csv":
        body = "\n".join(csv_lines(TRACE_COLUMNS, rows))
    else:
        body = "\n".join(text_table(TRACE_COLUMNS, rows))
    _emit(body, cfg)
    return EXIT_OK


def _verdict_exit(verdict: Verdict) -> int:
    if verdict in (Verdict.CERTIFIED, Verdict.DEGENERATE):
        return EXIT_OK
    if verdict is Verdict.REFUTED:
        return EXIT_REFUTED
    return EXIT_INCONCLUSIVE


def cmd_certify(N: int, cfg: RunConfig) -> int:
    if N < 1:
        raise UsageError("N must be >= 1")
    report = certify_univalence(N, max_depth=cfg.max_depth)
    if cfg.format == "json":
        body = to_json({"N": N, **report.as_dict()})
    else:
        header = ("N", "method", "verdict", "margin", "exploratory")
        rows = [(N, "combined", report.verdict.value, report.margin, report.exploratory)]
        rows += [(N, c.method.value, c.verdict.value, c.margin, report.exploratory) for c in report.components]
        if cfg.format == "csv":
            body = "\n".join(csv_lines(header, rows))
        else:
            lines = text_table(header, rows)
            if report.note:
                lines.append(f"note: {report.note}")
            body = "\n".join(lines)
    _emit(body, cfg)
    return _verdict_exit(report.verdict)


def cmd_compare(N_max: int, cfg: RunConfig) -> int:
    if N_max < 2:
        raise UsageError("N_max must be >= 2")
    table = comparison_table(N_max, grid=cfg.grid)
    if cfg.format == "json":
        body = to_json({"rows": [r.as_dict() for r in table]})
    else:
        rows = [tuple(r.as_dict()[c] for c in COMPARISON_COLUMNS) for r in table]
        lines = csv_lines(COMPARISON_COLUMNS, rows) if cfg.format == "csv" else text_table(COMPARISON_COLUMNS, rows)
        body = "\n".join(lines)
    _emit(body, cfg)
    return EXIT_OK


SWEEP_COLUMNS = ("N", "verdict", "sturm", "interval_bisection", "hand_certificate", "margin", "exploratory")


def sweep_row(N: int, max_depth: int = DEFAULT_MAX_DEPTH) -> dict:
    try:
        report = certify_univalence(N, max_depth=max_depth)
    except (ArithmeticError, ValueError) as exc:
        # numerical breakdown at high degree is a per-row outcome, not a crash
        return {
            "N": N,
            "verdict": Verdict.INCONCLUSIVE.value,
            "methods": {},
            "margin": None,
            "exploratory": N > 6,
            "note": f"numerical failure: {exc}",
        }
    return {
        "N": N,
        "verdict": report.verdict.value,
        "methods": {c.method.value: c.verdict.value for c in report.components},
        "margin": report.margin,
        "exploratory": report.exploratory,
        "note": report.note,
    }


def _sweep_worker(args):
    return sweep_row(*args)


def cmd_sweep(N_from: int, N_to: int, cfg: RunConfig, jobs: int = 1) -> int:
    if not 2 <= N_from <= N_to <= SWEEP_MAX_N:
        raise UsageError(f"need 2 <= N_from <= N_to <= {SWEEP_MAX_N}")
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    tasks = [(N, cfg.max_depth) for N in range(N_from, N_to + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_worker, tasks))
    else:
        rows = [_sweep_worker(t) for t in tasks]
    if cfg.format == "json":
        body = to_json({"from": N_from, "to": N_to, "rows": rows})
    else:
        flat = []
        for r in rows:
            m = r["methods"]
            hand = m.get("discriminant_shift") or m.get("square_completion") or "n/a"
            flat.append(
                (
                    r["N"],
                    r["verdict"],
                    m.get("sturm", "n/a"),
                    m.get("interval_bisection", "n/a"),
                    hand,
                    r["margin"],
                    r["exploratory"],
                )
            )
        lines = csv_lines(SWEEP_COLUMNS, flat) if cfg.format == "csv" else text_table(SWEEP_COLUMNS, flat)
        body = "\n".join(lines)
    _emit(body, cfg)
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------------


def _common_options(parser: argparse.ArgumentParser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("json", "csv", "text"), default=default)
    parser.add_argument("--out", metavar="PATH", default=default)
    parser.add_argument("--grid", type=int, default=argparse.SUPPRESS if suppress else DEFAULT_GRID)
    parser.add_argument(
        "--max-depth", dest="max_depth", type=int, default=argparse.SUPPRESS if suppress else DEFAULT_MAX_DEPTH
    )


def _family_options(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--dss", type=int, metavar="N", help="DSS polynomial P_N")
    group.add_argument("--suffridge", type=int, nargs=2, metavar=("n", "j"), help="Suffridge polynomial S_{n,j}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="koebe", description="Extremal univalent polynomials and Koebe radii.")
    parser.add_argument("--version", action="version", version=f"koebe {__version__}")
    _common_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="coefficient list a_0 .. a_deg")
    _family_options(p)
    _common_options(p, suppress=True)

    p = sub.add_parser("trace", help="boundary curve p(e^{it}) for t in [0, 2pi]")
    _family_options(p)
    p.add_argument("--samples", type=int, default=1024)
    _common_options(p, suppress=True)

    p = sub.add_parser("certify", help="certify R'_N > 0 on (-1, 1)")
    p.add_argument("N", type=int)
    _common_options(p, suppress=True)

    p = sub.add_parser("compare", help="DSS vs Suffridge minimum modulus, N = 2 .. N_max")
    p.add_argument("N_max", type=int)
    _common_options(p, suppress=True)

    p = sub.add_parser("sweep", help="certification summary over a range of N (exploratory above 6)")
    p.add_argument("N_from", type=int)
    p.add_argument("N_to", type=int)
    p.add_argument("--jobs", type=int, default=1)
    _common_options(p, suppress=True)
    return parser


def _family_from_args(args) -> FamilySpec:
    if args.dss is not None:
        return FamilySpec.dss(args.dss)
    n, j = args.suffridge
    return FamilySpec.suffridge(n, j)


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            grid=args.grid,
            max_depth=args.max_depth,
            format=args.format or DEFAULT_FORMATS[args.command],
            out=args.out,
        )
        if args.command == "coeffs":
            return cmd_coeffs(_family_from_args(args), cfg)
        if args.command == "trace":
            return cmd_trace(_family_from_args(args), args.samples, cfg)
        if args.command == "certify":
            return cmd_certify(args.N, cfg)
        if args.command == "compare":
            return cmd_compare(args.N_max, cfg)
        return cmd_sweep(args.N_from, args.N_to, cfg, jobs=args.jobs)
    except (UsageError, ValueError) as exc:
        print(f"koebe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
