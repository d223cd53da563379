"""Brute-force ground truth, kept independent of the constructive code paths.

* ``min_switches``: 0/1 shortest path from e to ē over the whole weak order
  of S_N, layered by inversion count.
* ``enumerate_sequences`` / ``count_sequences``: every maximal chain, by DFS
  and by a memoised recursive count.
* ``all_pairs_diameter``: skeleton built from scratch, all-pairs BFS.
* ``ksets_bruteforce``: k-subsets tested for strict line separability with
  exact integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from . import limits
from .circseq import GateSet
from .errors import BudgetExceeded, DegenerateConfiguration, InvalidInput
from .perm_core import CircularSequence, n_bar

__all__ = [
    "min_switches", "enumerate_sequences", "count_sequences",
    "reduced_word_count_formula", "all_pairs_diameter", "ksets_bruteforce",
]


# -- 0/1 shortest path on the weak order -------------------------------------

class _WeakOrder:
    """All of S_N with ascent-swap edges grouped by source inversion count."""

    def __init__(self, n: int):
        self.n = n
        perms = np.array(list(permutations(range(n))), dtype=np.int8)  # lexicographic
        radix = np.array([n ** (n - 1 - i) for i in range(n)], dtype=np.int64)
        keys = perms.astype(np.int64) @ radix  # increasing, since rows are lexicographic
        inv = np.zeros(len(perms), dtype=np.int32)
        for a in range(n):
            for b in range(a + 1, n):
                inv += perms[:, a] > perms[:, b]
        self.identity = 0
        self.reverse = len(perms) - 1
        self.levels = []  # levels[L] = [(src, dst) per position j]
        by_level = [np.nonzero(inv == L)[0] for L in range(n_bar(n) + 1)]
        for nodes in by_level[:-1]:
            edges = []
            for j in range(n - 1):
                src = nodes[perms[nodes, j] < perms[nodes, j + 1]]
                a = perms[src, j].astype(np.int64)
                b = perms[src, j + 1].astype(np.int64)
                dst_keys = keys[src] + (b - a) * radix[j] + (a - b) * radix[j + 1]
                edges.append((src, np.searchsorted(keys, dst_keys)))
            self.levels.append(edges)
        self.size = len(perms)


@lru_cache(maxsize=4)
def _weak_order(n: int) -> _WeakOrder:
    return _WeakOrder(n)


def min_switches(gs: GateSet) -> int:
    """Exact minimum over all circular sequences of the number of gate switches."""
    limits.check("oracle_max_n", gs.n, "oracle N")
    wo = _weak_order(gs.n)
    weight = [1 if j + 1 in gs.y else 0 for j in range(gs.n - 1)]
    big = np.iinfo(np.int32).max // 2
    dist = np.full(wo.size, big, dtype=np.int32)
    dist[wo.identity] = 0
    for edges in wo.levels:
        for j, (src, dst) in enumerate(edges):
            np.minimum.at(dist, dst, dist[src] + weight[j])
    return int(dist[wo.reverse])


# -- maximal chains ----------------------------------------------------------

def enumerate_sequences(n: int) -> Iterator[CircularSequence]:
    """Every circular sequence on ``n`` elements, lexicographic in switch positions."""
    if n < 2:
        raise InvalidInput(f"N must be at least 2, got {n}")
    limits.check("enumerate_max_n", n, "enumeration N")
    total = n_bar(n)
    word = list(range(1, n + 1))
    path: list[int] = []

    def dfs():
        if len(path) == total:
            yield CircularSequence.from_positions(n, path)
            return
        for j in range(n - 1):
            if word[j] < word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                path.append(j + 1)
                yield from dfs()
                path.pop()
                word[j], word[j + 1] = word[j + 1], word[j]

    yield from dfs()


def count_sequences(n: int) -> int:
    """Number of circular sequences, by memoised recursion over permutations."""

    @lru_cache(maxsize=None)
    def chains(w: tuple) -> int:
        ascents = [j for j in range(n - 1) if w[j] < w[j + 1]]
        if not ascents:
            return 1
        return sum(chains(w[:j] + (w[j + 1], w[j]) + w[j + 2:]) for j in ascents)

    return chains(tuple(range(1, n + 1)))


def reduced_word_count_formula(n: int) -> int:
    """Closed form for the number of maximal chains (staircase hook lengths)."""
    denom = 1
    for i in range(1, n):
        denom *= (2 * i - 1) ** (n - i)
    return math.factorial(n_bar(n)) // denom


# -- all-pairs diameter ------------------------------------------------------

def all_pairs_diameter(c) -> int:
    """Largest BFS distance over all vertex pairs of P(c)."""
    base = tuple(t for t, k in enumerate(c.parts, 1) for _ in range(k))
    count = math.factorial(len(base))
    for k in c.parts:
        count //= math.factorial(k)
    limits.check("all_pairs_max_vertices", count, f"vertex count of P({c})")
    verts = sorted(set(permutations(base)))
    index = {v: i for i, v in enumerate(verts)}
    rows, cols = [], []
    for v, i in index.items():
        for a in range(len(v)):
            for b in range(a + 1, len(v)):
                if abs(v[a] - v[b]) == 1:
                    w = list(v)
                    w[a], w[b] = w[b], w[a]
                    rows.append(i)
                    cols.append(index[tuple(w)])
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(verts), len(verts)))
    best = 0
    for start in range(0, len(verts), 512):
        sources = np.arange(start, min(start + 512, len(verts)))
        dist = shortest_path(adj, method="D", unweighted=True, indices=sources)
        if np.isinf(dist).any():
            raise AssertionError(f"skeleton of P({c}) is disconnected")
        best = max(best, int(dist.max()))
    return best


# -- k-set separability ------------------------------------------------------

def _integer_points(points) -> list[tuple[int, int]]:
    denom = 1
    for x, y in points:
        denom = math.lcm(denom, Fraction(x).denominator, Fraction(y).denominator)
    return [(int(Fraction(x) * denom), int(Fraction(y) * denom)) for x, y in points]


def _candidate_orders(pts):
    """Yield (side, order) for every symbolic direction u = w + eps*w'.

    ``w`` runs over the normals of all point pairs and ``w'`` over the two
    perpendicular nudges; any nonempty open cone of separating normals has a
    boundary ray among the ``w`` and contains one of its nudges. ``side`` is the
    sign of u's x-component: -1 for directions swept by the rotating line
    (left sets), +1 for the opposite half-turn (right sets).
    """
    for a, b in combinations(range(len(pts)), 2):
        dx, dy = pts[b][0] - pts[a][0], pts[b][1] - pts[a][1]
        for w in ((-dy, dx), (dy, -dx)):
            for w2 in ((dx, dy), (-dx, -dy)):
                keys = sorted(
                    ((p[0] * w[0] + p[1] * w[1], p[0] * w2[0] + p[1] * w2[1]), i)
                    for i, p in enumerate(pts)
                )
                order = [i for _, i in reversed(keys)]
                side = -1 if w[0] < 0 else 1
                yield side, order


def ksets_bruteforce(points, k: int) -> tuple[int, int, int]:
    """``(f_l, f_r, f)`` for the k-sets of a planar configuration.

    ``points`` is a ``PointConfig`` or any sequence of rational pairs.
    """
    pts = _integer_points(getattr(points, "points", points))
    n = len(pts)
    if not 1 <= k <= (n - 1) // 2:
        raise InvalidInput(f"k={k} outside 1..{(n - 1) // 2}")
    if math.comb(n, k) > limits.LIMITS.kset_max_subsets:
        raise BudgetExceeded(f"C({n},{k}) subsets exceed kset_max_subsets={limits.LIMITS.kset_max_subsets}")
    for a, b in combinations(range(n), 2):
        if pts[a][1] == pts[b][1]:
            raise DegenerateConfiguration(f"points {a + 1} and {b + 1} share a y-coordinate")
    for a, b, c in combinations(range(n), 3):
        (ax, ay), (bx, by), (cx, cy) = pts[a], pts[b], pts[c]
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
            raise DegenerateConfiguration(f"points {a + 1}, {b + 1}, {c + 1} are collinear")

    left_sets, right_sets = set(), set()
    for side, order in _candidate_orders(pts):
        (left_sets if side < 0 else right_sets).add(frozenset(order[:k]))
    f_l = f_r = f = 0
    for subset in combinations(range(n), k):
        s = frozenset(subset)
        is_l, is_r = s in left_sets, s in right_sets
        f_l += is_l
        f_r += is_r
        f += is_l or is_r
    return f_l, f_r, f
