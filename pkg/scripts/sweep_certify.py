"""Certification sweep over a range of degrees, with per-method verdicts and timing.

Degrees above 6 are exploratory: a Certified row there is a computation,
not a published result.

    python3 scripts/sweep_certify.py --n-from 2 --n-to 40 --jobs 4
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from koebe.certify import DEFAULT_MAX_DEPTH, certify_univalence


@dataclass(frozen=True)
class SweepConfig:
    n_from: int = 2
    n_to: int = 30
    max_depth: int = DEFAULT_MAX_DEPTH
    jobs: int = 1


def timed_row(args: tuple[int, int]) -> tuple:
    N, max_depth = args
    start = time.perf_counter()
    report = certify_univalence(N, max_depth=max_depth)
    elapsed = time.perf_counter() - start
    methods = ";".join(f"{c.method.value}={c.verdict.value}" for c in report.components)
    reason = next((c.detail.get("reason", "") for c in report.components if c.detail.get("reason")), "")
    return N, report.verdict.value, methods, report.margin, report.exploratory, reason, elapsed


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-from", type=int, default=SweepConfig.n_from)
    parser.add_argument("--n-to", type=int, default=SweepConfig.n_to)
    parser.add_argument("--max-depth", type=int, default=SweepConfig.max_depth)
    parser.add_argument("--jobs", type=int, default=SweepConfig.jobs)
    cfg = SweepConfig(**vars(parser.parse_args(argv)))
    if not 1 <= cfg.n_from <= cfg.n_to:
        parser.error("need 1 <= n-from <= n-to")

    tasks = [(N, cfg.max_depth) for N in range(cfg.n_from, cfg.n_to + 1)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            rows = list(pool.map(timed_row, tasks))
    else:
        rows = [timed_row(t) for t in tasks]

    print("N,verdict,methods,margin,exploratory,reason,seconds")
    for N, verdict, methods, margin, exploratory, reason, elapsed in rows:
        margin_text = "" if margin is None else f"{margin:.6g}"
        print(f"{N},{verdict},{methods},{margin_text},{str(exploratory).lower()},{reason},{elapsed:.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
