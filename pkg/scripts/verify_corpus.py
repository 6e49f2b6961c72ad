"""Run every identity check over the built-in corpus and tabulate the outcomes."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from chainform.corpus import corpus
from chainform.verify import run_checks


@dataclass
class Config:
    n_random: int = 20
    seed: int = 20240611
    verbose: bool = False


def main(cfg: Config) -> int:
    start = time.perf_counter()
    tally: dict[str, Counter] = {}
    failures = []
    named = corpus(cfg.n_random, cfg.seed)
    for name, P in named:
        for check, status in run_checks(P):
            tally.setdefault(check, Counter())[status] += 1
            if status == "FAIL":
                failures.append((name, check))
            if cfg.verbose:
                print(f"{name:<24} {check:<24} {status}")
    print(f"{len(named)} posets in {time.perf_counter() - start:.1f}s")
    print(f"{'check':<24} {'PASS':>5} {'FAIL':>5} {'SKIP':>5}")
    for check, c in tally.items():
        print(f"{check:<24} {c['PASS']:>5} {c['FAIL']:>5} {c['SKIP']:>5}")
    for name, check in failures:
        print(f"FAIL {name}: {check}")
    return 1 if failures else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-random", type=int, default=Config.n_random)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    raise SystemExit(main(Config(args.n_random, args.seed, args.verbose)))
