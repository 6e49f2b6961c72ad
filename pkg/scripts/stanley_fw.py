"""F of weak-order intervals [1, w]: the Stanley symmetric function of w.

Prints the number of reduced words and, when symmetric, the Schur expansion.
"""

import argparse
from dataclasses import dataclass
from itertools import permutations

from chainform.builders import inversions, weak_order_interval
from chainform.generating import fp
from chainform.poset import maximal_chains
from chainform.qsym import render_qsym
from chainform.symfunc import m_to_schur, is_symmetric, render_sym


@dataclass
class Config:
    n: int = 4
    basis: str = "s"


def main(cfg: Config) -> None:
    for w in permutations(range(1, cfg.n + 1)):
        if inversions(w) > 8:
            continue
        P = weak_order_interval(w)
        F = fp(P)
        sym = is_symmetric(F)
        if cfg.basis == "M" or sym is None:
            shown = render_qsym(F)
        else:
            shown = render_sym(m_to_schur(sym) if cfg.basis == "s" else sym)
        n_words = sum(1 for _ in maximal_chains(P))
        print(f"{''.join(map(str, w))}  len={inversions(w)}  words={n_words}  {shown}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=Config.n)
    ap.add_argument("--basis", choices=["M", "m", "s"], default=Config.basis)
    args = ap.parse_args()
    main(Config(args.n, args.basis))
