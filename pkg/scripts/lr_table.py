"""Schur coefficients of skew Young intervals [mu, nu], one line per interval.

For these intervals the coefficients are Littlewood-Richardson numbers, so
the output doubles as an LR table.
"""

import argparse
from dataclasses import dataclass

from chainform.builders import young_interval
from chainform.corpus import young_pairs
from chainform.symfunc import schur_expansion


@dataclass
class Config:
    max_size: int = 5
    skip_straight: bool = False


def fmt(parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


def main(cfg: Config) -> None:
    for mu, nu in young_pairs(cfg.max_size):
        if cfg.skip_straight and not mu:
            continue
        coeffs = schur_expansion(young_interval(mu, nu))
        terms = " + ".join(f"{c} s{fmt(lam)}" if c != 1 else f"s{fmt(lam)}" for lam, c in coeffs.items())
        print(f"{fmt(nu)}/{fmt(mu)}: {terms}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=Config.max_size)
    ap.add_argument("--skip-straight", action="store_true", help="omit intervals with empty mu")
    args = ap.parse_args()
    main(Config(args.max_size, args.skip_straight))
