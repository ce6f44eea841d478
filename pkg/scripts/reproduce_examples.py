"""Print the twist coefficient, floor, writhe and index verdict for the worked example braids."""

import argparse
import time
from dataclasses import dataclass

from braidwrench import braid
from braidwrench.braid_index import index_certificate
from braidwrench.dehornoy import dehornoy_floor
from braidwrench.fdtc import fdtc


@dataclass
class Config:
    max_n: int = 5
    max_m: int = 5
    max_k: int = 3


def example_braids(cfg: Config):
    for n in range(2, cfg.max_n + 1):
        for m in range(2, cfg.max_m + 1):
            yield f"beta_nm({n},{m})", braid.beta_nm(n, m)
    for k in range(1, cfg.max_k + 1):
        yield f"elrifai_K({k})", braid.elrifai_K(k)
        yield f"elrifai_L({k})", braid.elrifai_L(k)
    yield "s1 s2 s3 s3", braid.BraidWord(4, (1, 2, 3, 3))
    yield "s1 s2 s3 s4 s1 s2", braid.BraidWord(5, (1, 2, 3, 4, 1, 2))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    ap.add_argument("--max-k", type=int, default=Config.max_k)
    a = ap.parse_args()
    cfg = Config(a.max_n, a.max_m, a.max_k)

    print(f"{'braid':<20} {'n':>2} {'len':>4} {'wr':>4} {'floor':>5} {'fdtc':>6}  {'verdict':<34} {'sec':>6}")
    for name, w in example_braids(cfg):
        t0 = time.perf_counter()
        om = fdtc(w)
        m = dehornoy_floor(w)
        cert = index_certificate(w, omega=om)
        om = om.value
        dt = time.perf_counter() - t0
        verdict = cert.verdict.value + (f"/{cert.rule.value}" if cert.rule else "")
        print(f"{name:<20} {w.strands:>2} {len(w):>4} {braid.writhe(w):>4} {m:>5} {str(om):>6}  {verdict:<34} {dt:6.3f}")


if __name__ == "__main__":
    main()
