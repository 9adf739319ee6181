"""Compare the solver with the brute-force oracle on random instances of growing size."""

import argparse
import time

from adfsolve import Semantics, enumerate_semantics
from adfsolve.metatheory import GenConfig, trial_instances
from adfsolve.oracle import GammaTable, semantics_bruteforce


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'n':>2} {'solver s':>9} {'oracle s':>9} {'mismatch':>8}")
    for n in range(1, args.max_n + 1):
        cfg = GenConfig(n_statements=n, min_statements=n, trials=args.trials, seed=args.seed)
        adfs = list(trial_instances(cfg))
        t0 = time.perf_counter()
        fast = [{s: enumerate_semantics(a, s) for s in Semantics} for a in adfs]
        t1 = time.perf_counter()
        slow = []
        for a in adfs:
            table = GammaTable(a)
            slow.append({s: semantics_bruteforce(a, s, table=table) for s in Semantics})
        t2 = time.perf_counter()
        bad = sum(f != s for f, s in zip(fast, slow))
        print(f"{n:>2} {t1 - t0:>9.2f} {t2 - t1:>9.2f} {bad:>8}")


if __name__ == "__main__":
    main()
