"""The chain-descent quasi-symmetric function ``F_P`` of an edge-labeled poset.

Three routes are available and must agree:

* ``via_M``      sum of ``f_I(P) M_alpha(I)`` over compositions of the rank,
* ``via_dF``     sum of ``d_I(P) F_{I,n}``,
* ``via_chains`` sum of ``F_{D(rho),n}`` over maximal chains, streamed.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .poset import LabeledPoset, descent_set, flag_stats, iter_chains, product
from .qsym import QSymExpr, comp_from_set, compositions, mul, set_from_comp

METHODS = ("via_M", "via_dF", "via_chains")


def _chain_descents(P: LabeledPoset, start: int, first_label: int) -> Counter:
    counts: Counter = Counter()
    for chain in iter_chains(P, start):
        counts[descent_set((first_label,) + chain.word)] += 1
    return counts


def _chain_descents_job(args):
    return _chain_descents(*args)


def chain_descent_counts(P: LabeledPoset, threads: int = 1) -> Counter:
    """Descent set -> number of maximal chains, by walking every chain.

    With ``threads > 1`` the subtrees under the bottom's covers are walked in
    worker processes; the merge is a sum, so the result does not depend on
    scheduling.
    """
    if P.rank == 0:
        return Counter({(): 1})
    jobs = [(P, y, lab) for y, lab in P.up[P.bottom]]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_chain_descents_job, jobs))
    else:
        parts = [_chain_descents(*job) for job in jobs]
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    return total


def fp(P: LabeledPoset, method: str = "via_chains", basis: str = "M", threads: int = 1) -> QSymExpr:
    n = P.rank
    if method == "via_M":
        f = flag_stats(P).f
        out = QSymExpr({alpha: f[set_from_comp(alpha)] for alpha in compositions(n)}, "M")
    elif method == "via_dF":
        stats = flag_stats(P)
        out = QSymExpr({comp_from_set(I, n): c for I, c in stats.d.items()}, "F")
    elif method == "via_chains":
        counts = chain_descent_counts(P, threads)
        out = QSymExpr({comp_from_set(I, n): c for I, c in counts.items()}, "F")
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return out.in_basis(basis)


def fp_product_check(P: LabeledPoset, Q: LabeledPoset) -> bool:
    return fp(product(P, Q)) == mul(fp(P), fp(Q))


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("CHAINFORM_THREADS", "1")))
    except ValueError:
        return 1
