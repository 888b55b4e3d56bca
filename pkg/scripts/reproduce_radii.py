"""Radius table: closed-form DSS radii against Suffridge circle minima.

    python3 scripts/reproduce_radii.py --n-max 12 --out radii.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import asdict, dataclass

from koebe.radii import COMPARISON_COLUMNS, DEFAULT_GRID, comparison_table


@dataclass(frozen=True)
class RadiiConfig:
    n_max: int = 8
    grid: int = DEFAULT_GRID
    out: str | None = None


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=RadiiConfig.n_max)
    parser.add_argument("--grid", type=int, default=RadiiConfig.grid)
    parser.add_argument("--out")
    cfg = RadiiConfig(**vars(parser.parse_args(argv)))

    rows = [r.as_dict() for r in comparison_table(cfg.n_max, cfg.grid)]
    handle = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    try:
        writer = csv.DictWriter(handle, fieldnames=COMPARISON_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if cfg.out:
            handle.close()
    print(f"# config {asdict(cfg)}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
