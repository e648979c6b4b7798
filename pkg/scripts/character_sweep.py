#!/usr/bin/env python3
"""Cross-validate the three induced-character pipelines on random words:
the quotient-module trace, the quotient fixed-point count, and the
good-word enumeration over the full group.

Example:
    python scripts/character_sweep.py --n 5 --cases 100 --max-len 6
"""

import argparse
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from heckelab.hecke import bott_samelson_product  # noqa: E402
from heckelab.parabolic import (  # noqa: E402
    bott_samelson_character, good_word_character, induced_character,
)


@dataclass(frozen=True)
class SweepConfig:
    n: int = 4
    cases: int = 200
    max_len: int = 6
    seed: int = 0


def run(cfg: SweepConfig) -> int:
    rng = random.Random(cfg.seed)
    gens = list(range(1, cfg.n))
    bad = 0
    start = time.perf_counter()
    for case in range(cfg.cases):
        k = rng.randint(0, cfg.max_len)
        sigma = tuple(rng.choice(gens) for _ in range(k))
        J = frozenset(rng.sample(gens, rng.randint(0, cfg.n - 1)))
        fixed = bott_samelson_character(sigma, J, cfg.n)
        good = good_word_character(sigma, J, cfg.n)
        trace = induced_character(bott_samelson_product(sigma, cfg.n), J)
        if not (fixed == good == trace):
            bad += 1
            print(f"MISMATCH sigma={sigma} J={sorted(J)}: "
                  f"fixed={fixed} good={good} trace={trace}")
    elapsed = time.perf_counter() - start
    print(f"{cfg.cases} cases over S_{cfg.n}, words up to {cfg.max_len}: "
          f"{cfg.cases - bad} agree ({elapsed:.2f}s)")
    return bad


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--cases", type=int, default=200)
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bad = run(SweepConfig(args.n, args.cases, args.max_len, args.seed))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
