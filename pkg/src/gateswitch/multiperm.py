"""Multipermutohedra P(M) for M = {1^k1, ..., n^kn}.

Vertices are words over ``1..n`` containing ``k_t`` copies of ``t``; two
vertices are adjacent when they differ by exchanging a coordinate holding
``t`` with one holding ``t + 1``. The skeleton is explored on packed integer
keys (4 bits per coordinate, big-endian, so key order is word order) with
numpy frontier BFS.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from . import limits
from .circseq import GateSet, theorem1_bounds
from .errors import InvalidInput
from .perm_core import Permutation

__all__ = [
    "Composition", "HRow", "HRepresentation", "composition_from_gates",
    "parse_composition", "vertex_from_permutation", "neighbors", "distance",
    "diameter", "diameter_bounds", "closed_form_diameter", "h_representation",
    "vertex_count", "enumerate_vertices", "skeleton", "compositions",
]

VertexWord = tuple[int, ...]


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise InvalidInput(f"composition {self.parts} needs at least two parts")
        if any(k <= 0 for k in self.parts):
            raise InvalidInput(f"composition {self.parts} has a non-positive part")
        limits.check("max_n", self.n, "composition size N")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Composition":
        return cls(tuple(int(k) for k in parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def num_values(self) -> int:
        return len(self.parts)

    @property
    def gates(self) -> tuple[int, ...]:
        """Partial sums ``y_1 < ... < y_{n-1}``."""
        out, acc = [], 0
        for k in self.parts[:-1]:
            acc += k
            out.append(acc)
        return tuple(out)

    def gate_set(self) -> GateSet:
        return GateSet(self.n, self.gates)

    def block_of(self) -> tuple[int, ...]:
        """Block index of each position 1..N (0-based list)."""
        return tuple(t for t, k in enumerate(self.parts, 1) for _ in range(k))

    def base_word(self) -> VertexWord:
        """a_e = (1^k1, 2^k2, ...)."""
        return self.block_of()

    def degree(self) -> int:
        return sum(a * b for a, b in zip(self.parts, self.parts[1:]))

    def __str__(self):
        return ",".join(map(str, self.parts))


def parse_composition(text: str) -> Composition:
    try:
        return Composition.of(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise InvalidInput(f"bad composition {text!r}") from None


def composition_from_gates(gs: GateSet) -> Composition:
    cuts = (0,) + gs.y + (gs.n,)
    return Composition(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def compositions(n: int, min_parts: int = 2):
    """All compositions of ``n`` with at least ``min_parts`` parts, in gate-set order."""
    for g in range(min_parts - 1, n):
        for ys in combinations(range(1, n), g):
            cuts = (0,) + ys + (n,)
            yield Composition(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def vertex_count(c: Composition) -> int:
    out = math.factorial(c.n)
    for k in c.parts:
        out //= math.factorial(k)
    return out


def vertex_from_permutation(sigma: Permutation, c: Composition) -> VertexWord:
    """Coordinate ``sigma(m)`` receives the block index of ``m``."""
    if sigma.n != c.n:
        raise InvalidInput(f"permutation has N={sigma.n}, composition has N={c.n}")
    blocks = c.block_of()
    coords = [0] * c.n
    for m, pos in enumerate(sigma.word):
        coords[pos - 1] = blocks[m]
    return tuple(coords)


def _check_word(v: Sequence[int], c: Composition) -> VertexWord:
    v = tuple(int(a) for a in v)
    if sorted(v) != list(c.base_word()):
        raise InvalidInput(f"{v} is not a vertex of P({c})")
    return v


def neighbors(v: Sequence[int], c: Optional[Composition] = None) -> set[VertexWord]:
    """Words reached by exchanging a ``t`` coordinate with a ``t+1`` coordinate."""
    v = tuple(v)
    if c is not None:
        _check_word(v, c)
    out = set()
    for i in range(len(v)):
        for j in range(len(v)):
            if v[j] == v[i] + 1:
                w = list(v)
                w[i], w[j] = w[j], w[i]
                out.add(tuple(w))
    return out


# -- packed skeleton ---------------------------------------------------------

def _all_words(c: Composition) -> np.ndarray:
    """Every vertex word as rows of a (V, N) uint8 array, values 1..n."""
    n = c.n
    words = np.zeros((1, n), dtype=np.uint8)
    free = n
    for t, k in enumerate(c.parts, 1):
        choice = np.array(list(combinations(range(free), k)), dtype=np.intp)
        free_idx = np.nonzero(words == 0)[1].reshape(len(words), free)
        cols = free_idx[:, choice].reshape(-1, k)
        words = np.repeat(words, len(choice), axis=0)
        words[np.arange(len(words))[:, None], cols] = t
        free -= k
    return words


def _pack(words: np.ndarray) -> np.ndarray:
    n = words.shape[1]
    weights = np.array([1 << (4 * (n - 1 - i)) for i in range(n)], dtype=np.uint64)
    return ((words.astype(np.uint64) - np.uint64(1)) * weights).sum(axis=1, dtype=np.uint64)


class Skeleton:
    """Vertex table and neighbor lists of one multipermutohedron."""

    def __init__(self, c: Composition):
        self.composition = c
        words = _all_words(c)
        keys = _pack(words)
        order = np.argsort(keys, kind="stable")
        self.words = words[order]
        self.keys = keys[order]
        self.nbr = self._neighbor_table()

    def __len__(self):
        return len(self.keys)

    def _neighbor_table(self) -> np.ndarray:
        c, words, keys = self.composition, self.words, self.keys
        n, deg, size = c.n, c.degree(), len(keys)
        weights = [np.uint64(1 << (4 * (n - 1 - i))) for i in range(n)]
        src_parts, dst_parts = [], []
        for i in range(n):
            for j in range(i + 1, n):
                a = words[:, i].astype(np.int16)
                b = words[:, j].astype(np.int16)
                rows = np.nonzero(np.abs(a - b) == 1)[0]
                if not len(rows):
                    continue
                ka = a[rows].astype(np.uint64) - np.uint64(1)
                kb = b[rows].astype(np.uint64) - np.uint64(1)
                # uint64 arithmetic wraps, and the true result is in range
                new = keys[rows] - ka * weights[i] - kb * weights[j] + kb * weights[i] + ka * weights[j]
                src_parts.append(rows)
                dst_parts.append(np.searchsorted(keys, new))
        src = np.concatenate(src_parts)
        dst = np.concatenate(dst_parts)
        order = np.argsort(src, kind="stable")
        table = dst[order].reshape(size, deg)
        return table.astype(np.int32 if size < 2**31 else np.int64)

    def index(self, word: Sequence[int]) -> int:
        key = _pack(np.asarray([word], dtype=np.uint8))[0]
        i = int(np.searchsorted(self.keys, key))
        if i >= len(self.keys) or self.keys[i] != key:
            raise InvalidInput(f"{tuple(word)} is not a vertex of P({self.composition})")
        return i

    def word(self, i: int) -> VertexWord:
        return tuple(int(a) for a in self.words[i])

    def bfs(self, source: int, target: Optional[int] = None) -> np.ndarray:
        """Distances from ``source`` (-1 = not reached). Stops once ``target`` is labelled."""
        dist = np.full(len(self.keys), -1, dtype=np.int32)
        dist[source] = 0
        frontier = np.array([source])
        level = 0
        while len(frontier) and (target is None or dist[target] < 0):
            level += 1
            cand = self.nbr[frontier].ravel()
            cand = np.unique(cand[dist[cand] < 0])
            dist[cand] = level
            frontier = cand
        return dist


@lru_cache(maxsize=64)
def _skeleton_cached(c: Composition) -> Skeleton:
    return Skeleton(c)


def skeleton(c: Composition) -> Skeleton:
    limits.check("max_vertices", vertex_count(c), f"vertex count of P({c})")
    return _skeleton_cached(c)


def enumerate_vertices(c: Composition) -> list[VertexWord]:
    sk = skeleton(c)
    return [sk.word(i) for i in range(len(sk))]


def distance(u: Sequence[int], v: Sequence[int], c: Composition) -> int:
    u, v = _check_word(u, c), _check_word(v, c)
    if u == v:
        return 0
    sk = skeleton(c)
    t = sk.index(v)
    return int(sk.bfs(sk.index(u), t)[t])


@lru_cache(maxsize=4096)
def _diameter(c: Composition) -> int:
    sk = skeleton(c)
    base = c.base_word()
    src, dst = sk.index(base), sk.index(base[::-1])
    return int(sk.bfs(src, dst)[dst])


def diameter(c: Composition) -> int:
    """Skeleton diameter, computed as d(a_e, a_ē) by single-source BFS."""
    limits.check("max_vertices", vertex_count(c), f"vertex count of P({c})")
    return _diameter(c)


def diameter_bounds(c: Composition) -> tuple[int, int]:
    return theorem1_bounds(c.gate_set())


def closed_form_diameter(c: Composition) -> Optional[int]:
    """Exact diameter for two or three parts; ``None`` otherwise."""
    k = c.parts
    if len(k) == 2:
        return min(k)
    if len(k) == 3:
        n = c.n
        x = [min(g, n - g) for g in c.gates]
        if k[0] != k[2]:
            return x[0] + x[1]
        return 2 * k[0] + 1
    return None


# -- inequality description --------------------------------------------------

@dataclass(frozen=True)
class HRow:
    subset: tuple[int, ...]  # 1-based coordinate indices, sorted
    rhs: int

    def to_text(self) -> str:
        return f"x({','.join(map(str, self.subset))}) >= {self.rhs}"

    def holds(self, point: Sequence[int]) -> bool:
        return sum(point[i - 1] for i in self.subset) >= self.rhs


@dataclass(frozen=True)
class HRepresentation:
    n: int
    total: int  # x(1..N) = total
    rows: tuple[HRow, ...]

    def to_text(self) -> str:
        head = f"x({','.join(map(str, range(1, self.n + 1)))}) = {self.total}"
        return "\n".join([head] + [r.to_text() for r in self.rows]) + "\n"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "equality": {"S": list(range(1, self.n + 1)), "rhs": self.total},
            "inequalities": [{"S": list(r.subset), "rhs": r.rhs} for r in self.rows],
        }

    def contains(self, point: Sequence[int]) -> bool:
        return sum(point) == self.total and all(r.holds(point) for r in self.rows)


def h_representation(c: Composition, values: Optional[Sequence[int]] = None) -> HRepresentation:
    """Equality plus one row per proper nonempty subset (2^N - 2 rows, unpruned).

    ``values`` replaces the standard values 1..n by any increasing sequence.
    """
    n = c.n
    limits.check("hrep_max_n", n, "H-representation size N")
    if values is None:
        values = range(1, c.num_values + 1)
    values = list(values)
    if len(values) != c.num_values or any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidInput(f"need {c.num_values} strictly increasing values, got {values}")
    a = [values[t - 1] for t in c.block_of()]
    prefix = [0]
    for v in a:
        prefix.append(prefix[-1] + v)
    rows = [
        HRow(subset, prefix[size])
        for size in range(1, n)
        for subset in combinations(range(1, n + 1), size)
    ]
    return HRepresentation(n, prefix[-1], tuple(rows))
