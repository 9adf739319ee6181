"""Run the property suite over several seeds and tabulate where converses were refuted."""

import argparse
import time

from adfsolve.metatheory import GenConfig, run_suite


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--no-fixtures", action="store_true")
    args = ap.parse_args()

    rows: dict[str, list[str]] = {}
    for seed in range(args.seeds):
        cfg = GenConfig(n_statements=args.n, trials=args.trials, seed=seed)
        start = time.perf_counter()
        reports = run_suite(cfg, use_fixtures=not args.no_fixtures)
        print(f"seed {seed}: {sum(r.ok for r in reports)}/{len(reports)} as expected "
              f"({time.perf_counter() - start:.1f} s)")
        for r in reports:
            cell = f"{r.status}@{r.trials}" + ("" if r.ok else "!")
            rows.setdefault(r.name, []).append(cell)

    width = max(map(len, rows))
    print()
    print("property".ljust(width), *(f"seed {s}".ljust(14) for s in range(args.seeds)))
    for name, cells in rows.items():
        print(name.ljust(width), *(c.ljust(14) for c in cells))


if __name__ == "__main__":
    main()
