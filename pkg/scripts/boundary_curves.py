"""Write boundary-curve CSVs p(e^{it}), t in [0, 2pi], for external plotting.

One file per polynomial, named after the family (P_5.csv, S_3,1.csv, ...).

    python3 scripts/boundary_curves.py --dss 3 4 5 6 --suffridge 3 5 --samples 2048 --out-dir curves
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

from koebe.cli import TRACE_COLUMNS, trace_rows
from koebe.polyfamilies import FamilySpec


@dataclass(frozen=True)
class CurveConfig:
    dss: tuple[int, ...] = (3, 4, 5, 6)
    suffridge: tuple[int, ...] = (3, 4, 5, 6)
    samples: int = 2048
    out_dir: Path = field(default_factory=lambda: Path("curves"))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dss", type=int, nargs="*", default=list(CurveConfig.dss))
    parser.add_argument("--suffridge", type=int, nargs="*", default=list(CurveConfig.suffridge), help="n, with j = 1")
    parser.add_argument("--samples", type=int, default=CurveConfig.samples)
    parser.add_argument("--out-dir", type=Path, default=Path("curves"))
    args = parser.parse_args(argv)
    cfg = CurveConfig(tuple(args.dss), tuple(args.suffridge), args.samples, args.out_dir)

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    families = [FamilySpec.dss(N) for N in cfg.dss] + [FamilySpec.suffridge(n, 1) for n in cfg.suffridge]
    for family in families:
        path = cfg.out_dir / f"{family.label()}.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(TRACE_COLUMNS)
            writer.writerows((f"{v:.17g}" for v in row) for row in trace_rows(family, cfg.samples))
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
