"""Run every randomized invariant suite over a range of seeds and summarize violations."""

import argparse
import time
from dataclasses import dataclass

from braidwrench.suites import SUITES, run_suite


@dataclass
class Config:
    seeds: int = 5
    count: int = 200


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=Config.seeds)
    ap.add_argument("--count", type=int, default=Config.count)
    a = ap.parse_args()
    cfg = Config(a.seeds, a.count)

    bad = 0
    for name in sorted(SUITES):
        t0 = time.perf_counter()
        viol = []
        for seed in range(cfg.seeds):
            viol += run_suite(name, seed, cfg.count).violations
        bad += len(viol)
        print(f"{name:<8} {cfg.seeds * cfg.count:>6} cases  {len(viol):>3} violations  {time.perf_counter() - t0:6.1f}s")
        for v in viol[:5]:
            print("   ", v)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
