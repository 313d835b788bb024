#!/usr/bin/env python3
"""Run the full verification battery over the standard designs.

Exhaustively sweeps the small designs, samples the larger ones, and runs the
brute-force oracle cross-check where enumeration is feasible.  Use --quick
for a fast subset, --parallel to spread sweep work over processes.
"""

import argparse
import sys
import time

from triembed.designs import gen_cayley_latin, gen_sts, latin_to_triple_system
from triembed.oracle import (
    SweepMode,
    cross_check_single_face,
    format_oracle_report,
    format_sweep_report,
    sweep_orientations,
)

FULL_PLAN = [
    ("sts3", lambda: gen_sts(3), SweepMode(exhaustive=True)),
    ("sts7", lambda: gen_sts(7), SweepMode(exhaustive=True)),
    ("sts9", lambda: gen_sts(9), SweepMode(exhaustive=True)),
    ("sts13", lambda: gen_sts(13), SweepMode(samples=1000, seed=1)),
    ("sts15", lambda: gen_sts(15), SweepMode(samples=500, seed=1)),
    ("ls1", lambda: latin_to_triple_system(gen_cayley_latin(1)), SweepMode(exhaustive=True)),
    ("ls3", lambda: latin_to_triple_system(gen_cayley_latin(3)), SweepMode(exhaustive=True)),
    ("ls5", lambda: latin_to_triple_system(gen_cayley_latin(5)), SweepMode(samples=500, seed=1)),
    ("ls7", lambda: latin_to_triple_system(gen_cayley_latin(7)), SweepMode(samples=200, seed=1)),
]

QUICK_PLAN = [
    ("sts7", lambda: gen_sts(7), SweepMode(exhaustive=True)),
    ("ls3", lambda: latin_to_triple_system(gen_cayley_latin(3)), SweepMode(exhaustive=True)),
]

ORACLE_DESIGNS = [("sts3", lambda: gen_sts(3)), ("sts7", lambda: gen_sts(7))]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="small subset only")
    parser.add_argument("--parallel", type=int, default=1)
    parser.add_argument("--skip-oracle", action="store_true")
    args = parser.parse_args()

    plan = QUICK_PLAN if args.quick else FULL_PLAN
    failures = 0
    for name, make, mode in plan:
        ts = make()
        t0 = time.perf_counter()
        report = sweep_orientations(ts, mode, design_id=name, parallel=args.parallel)
        wall = time.perf_counter() - t0
        sys.stdout.write(format_sweep_report(report))
        print(f"# {name}: {wall:.2f}s")
        failures += len(report.failures)

    if not args.skip_oracle:
        for name, make in ORACLE_DESIGNS:
            t0 = time.perf_counter()
            report = cross_check_single_face(make(), design_id=name)
            wall = time.perf_counter() - t0
            sys.stdout.write(format_oracle_report(report))
            print(f"# {name} oracle: {wall:.2f}s")
            if not report.ok:
                failures += 1

    print(f"# total failures: {failures}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
