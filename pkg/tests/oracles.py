"""Brute-force reference computations.

Nothing here imports the algorithms under test; each oracle works straight
from a definition on raw cover lists, words, or tableaux fillings.
"""

from collections import Counter
from itertools import combinations, permutations, product


def raw_chains(covers, n_elems):
    """Label words of all maximal chains, by DFS over a plain cover list."""
    up = {x: [] for x in range(n_elems)}
    has_lower = set()
    for u, v, lab in covers:
        up[u].append((v, lab))
        has_lower.add(v)
    (bottom,) = [x for x in range(n_elems) if x not in has_lower]
    words = []

    def dfs(x, word):
        if not up[x]:
            words.append(tuple(word))
        for y, lab in up[x]:
            dfs(y, word + [lab])

    dfs(bottom, [])
    return words


def descents(word):
    return frozenset(j + 1 for j in range(len(word) - 1) if word[j] > word[j + 1])


def all_subsets(n):
    ground = range(1, n)
    return [frozenset(c) for k in range(max(n, 1)) for c in combinations(ground, k)]


def brute_f(words, n):
    """J -> number of words whose descent set lies in J."""
    ds = [descents(w) for w in words]
    return {J: sum(1 for D in ds if D <= J) for J in all_subsets(n)}


def brute_d(words, n):
    counts = Counter(descents(w) for w in words)
    return {I: counts.get(I, 0) for I in all_subsets(n)}


def poset_words(P):
    return raw_chains(P.covers, P.n_elems)


def as_tuple_keys(table):
    return {tuple(sorted(k)): v for k, v in table.items()}


def comp_to_set(alpha):
    out, s = [], 0
    for a in alpha[:-1]:
        s += a
        out.append(s)
    return frozenset(out)


def all_compositions(n):
    if n == 0:
        return [()]
    out = []
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            pts = (0, *cuts, n)
            out.append(tuple(b - a for a, b in zip(pts, pts[1:])))
    return out


def weak_compositions(n, length):
    if length == 0:
        return [()] if n == 0 else []
    return [(a,) + rest for a in range(n + 1) for rest in weak_compositions(n - a, length - 1)]


def convolution_f(fP, rkP, fQ, rkQ, alpha):
    """Sum over componentwise splittings alpha = beta + gamma (zero parts allowed,
    then dropped) of f_beta(P) f_gamma(Q)."""
    total = 0
    for beta in weak_compositions(rkP, len(alpha)):
        gamma = tuple(a - b for a, b in zip(alpha, beta))
        if any(g < 0 for g in gamma):
            continue
        b = tuple(p for p in beta if p)
        g = tuple(p for p in gamma if p)
        total += fP[comp_to_set(b)] * fQ[comp_to_set(g)]
    return total


def monomial_poly(alpha, k):
    """M_alpha in k variables, from its definition."""
    out = Counter()
    for idx in combinations(range(k), len(alpha)):
        e = [0] * k
        for i, a in zip(idx, alpha):
            e[i] = a
        out[tuple(e)] += 1
    return out


def reduced_words(w):
    """All words i_1..i_l with s_{i_l} ... s_{i_1} = w and l = inv(w).

    Applying s_i on the left swaps the values i and i+1."""
    n = len(w)
    length = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    found = []
    for word in product(range(1, n), repeat=length):
        u = list(range(1, n + 1))
        for i in word:
            u = [i + 1 if a == i else i if a == i + 1 else a for a in u]
        if tuple(u) == tuple(w):
            found.append(word)
    return sorted(found)


def _cells(outer, inner=()):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]


def _semistandard(filling):
    for (r, c), v in filling.items():
        if (r, c + 1) in filling and filling[r, c + 1] < v:
            return False
        if (r + 1, c) in filling and filling[r + 1, c] <= v:
            return False
    return True


def brute_kostka(lam, mu):
    cells = _cells(lam)
    k = len(mu)
    count = 0
    for values in product(range(1, k + 1), repeat=len(cells)):
        if any(values.count(i + 1) != mu[i] for i in range(k)):
            continue
        if _semistandard(dict(zip(cells, values))):
            count += 1
    return count


def brute_lr(mu, nu, lam):
    """c^nu_{mu,lam}: semistandard fillings of nu/mu with content lam whose
    reading word (rows right to left, top to bottom) is a lattice word."""
    cells = _cells(nu, mu)
    if len(cells) != sum(lam):
        return 0
    k = len(lam)
    count = 0
    for values in product(range(1, k + 1), repeat=len(cells)):
        if any(values.count(i + 1) != lam[i] for i in range(k)):
            continue
        filling = dict(zip(cells, values))
        if not _semistandard(filling):
            continue
        order = sorted(cells, key=lambda rc: (rc[0], -rc[1]))
        seen = Counter()
        ok = True
        for rc in order:
            v = filling[rc]
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                ok = False
                break
        count += ok
    return count


def partitions_of(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    return [(a,) + rest for a in range(min(n, largest), 0, -1) for rest in partitions_of(n - a, a)]


def brute_label_equivalent(P, Q, interval_f):
    """Try every bijection; ``interval_f(poset, x, y)`` gives the f-table of [x, y]."""
    if P.n_elems != Q.n_elems:
        return False
    n = P.n_elems

    def leq_table(R):
        reach = {x: {x} for x in range(n)}
        changed = True
        while changed:
            changed = False
            for u, v, _ in R.covers:
                for x in range(n):
                    if u in reach[x] and v not in reach[x]:
                        reach[x].add(v)
                        changed = True
        return reach

    lp, lq = leq_table(P), leq_table(Q)
    for sigma in permutations(range(n)):
        if all((y in lp[x]) == (sigma[y] in lq[sigma[x]]) for x in range(n) for y in range(n)):
            if all(interval_f(P, x, y) == interval_f(Q, sigma[x], sigma[y])
                   for x in range(n) for y in lp[x]):
                return True
    return False


def antipode_closed_form(alpha):
    """S(M_alpha) = (-1)^len(alpha) * sum of M_beta over coarsenings beta of reversed alpha."""
    rev = tuple(reversed(alpha))
    n = sum(rev)
    cuts = comp_to_set(rev)
    out = {}
    for k in range(len(cuts) + 1):
        for keep in combinations(sorted(cuts), k):
            pts = (0, *keep, n)
            beta = tuple(b - a for a, b in zip(pts, pts[1:])) if n else ()
            out[beta] = (-1) ** len(alpha)
    return out
