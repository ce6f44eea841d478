"""Dump homogenized Upsilon curves as exact-rational CSV files, one per braid."""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from braidwrench.cli import pl_csv
from braidwrench.parse import parse_braid
from braidwrench.upsilon import homogenized_upsilon, torus_upsilon

DEFAULT_WORDS = ["(s1 s2)^3", "s1 s2 s3 s3", "s1 s2 s3 s4 s1 s2", "s1 S2", "(s1 s2 s1 s1)^2 s2"]


@dataclass
class Config:
    out_dir: Path = Path("hu_out")
    samples: int = 21
    words: list[str] = field(default_factory=lambda: list(DEFAULT_WORDS))
    torus: list[tuple[int, int]] = field(default_factory=lambda: [(3, 1), (4, 1), (5, 2)])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("words", nargs="*", help="braid words (defaults to a small showcase)")
    ap.add_argument("--out-dir", type=Path, default=Config.out_dir)
    ap.add_argument("--samples", type=int, default=Config.samples)
    a = ap.parse_args()
    cfg = Config(a.out_dir, a.samples)
    if a.words:
        cfg.words = a.words
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    for i, text in enumerate(cfg.words):
        w = parse_braid(text).word
        hu = homogenized_upsilon(w)
        path = cfg.out_dir / f"braid_{i:02d}.csv"
        path.write_text(pl_csv(hu.fn, cfg.samples) + "\n")
        print(f"{path}: {text!r} n={w.strands} wr={hu.writhe} fdtc={hu.omega.value} slopes={[str(s) for s in hu.fn.slopes]}")
    for n, k in cfg.torus:
        path = cfg.out_dir / f"torus_{n}_{n * k + 1}.csv"
        path.write_text(pl_csv(torus_upsilon(n, k), cfg.samples) + "\n")
        print(f"{path}: T({n},{n * k + 1})")


if __name__ == "__main__":
    main()
