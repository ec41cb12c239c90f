"""Run the exhaustive law suites and write a per-law report.

    python scripts/run_law_sweep.py --suite all --out sweep.jsonl
"""

import argparse
import time
from pathlib import Path

from scopekit.enumerate import DEFAULT_BUDGET, EnumBudget
from scopekit.laws import SUITES, render_machine, render_text


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", choices=["all", *SUITES], default="all")
    for name, default in DEFAULT_BUDGET.__dict__.items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    ap.add_argument("--out", type=Path, help="also write JSON lines here")
    args = ap.parse_args()

    budget = EnumBudget(**{k: getattr(args, k) for k in DEFAULT_BUDGET.__dict__})
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        start = time.perf_counter()
        part = SUITES[name](budget)
        print(render_text(part))
        print(f"-- {name}: {time.perf_counter() - start:.1f} s\n", flush=True)
        reports += part
    if args.out:
        args.out.write_text(render_machine(reports) + "\n")
    failed = [r.law for r in reports if not r.ok]
    print("all laws hold" if not failed else f"FAILED: {', '.join(failed)}")


if __name__ == "__main__":
    main()
