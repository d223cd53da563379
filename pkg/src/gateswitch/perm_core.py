"""Permutation words, ascent swaps and circular sequences.

Positions and values are 1-based throughout: a permutation of size ``N`` is
stored as the tuple ``(w(1), ..., w(N))``. A *switch* at position ``j``
exchanges the entries at positions ``j`` and ``j + 1`` and is only legal on an
ascent, so every switch adds exactly one inversion.

>>> seq = CircularSequence.from_positions(3, [1, 2, 1])
>>> [str(p) for p in seq.permutations]
['1 2 3', '2 1 3', '2 3 1', '3 2 1']
>>> switch_counts(seq)
(2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import limits
from .errors import InvalidInput, InvalidSequence, NotAnAscent

__all__ = [
    "Permutation", "SwitchEvent", "CircularSequence", "ValidationReport",
    "identity", "reverse", "apply_ascent_swap", "validate_sequence",
    "switch_counts", "n_bar", "sequence_to_text", "sequence_from_text",
]


def n_bar(n: int) -> int:
    """Number of switches in a circular sequence on ``n`` elements."""
    return n * (n - 1) // 2


@dataclass(frozen=True, slots=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        n = len(self.word)
        if n < 1:
            raise InvalidInput("empty permutation")
        limits.check("max_n", n, "permutation size N")
        if sorted(self.word) != list(range(1, n + 1)):
            raise InvalidInput(f"{self.word} is not a permutation of 1..{n}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(int(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.word)

    def __getitem__(self, j: int) -> int:
        """Entry at 1-based position ``j``."""
        if not 1 <= j <= len(self.word):
            raise IndexError(j)
        return self.word[j - 1]

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return " ".join(map(str, self.word))

    def position_of(self, value: int) -> int:
        return self.word.index(value) + 1

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.word)
        for pos, v in enumerate(self.word, 1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    def reversed(self) -> "Permutation":
        """``w(N) ... w(1)``; the vertex farthest from ``w`` on a multipermutohedron."""
        return Permutation(self.word[::-1])

    def inversions(self) -> int:
        w = self.word
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def is_ascent(self, j: int) -> bool:
        return 1 <= j < len(self.word) and self.word[j - 1] < self.word[j]


@dataclass(frozen=True, slots=True)
class SwitchEvent:
    """One switch: at ``step`` (1-based) the values ``low < high`` at
    positions ``position`` and ``position + 1`` were exchanged."""

    step: int
    position: int
    low: int
    high: int

    def to_text(self) -> str:
        return f"{self.step} {self.position} {self.low} {self.high}"


def identity(n: int) -> Permutation:
    if n < 2:
        raise InvalidInput(f"N must be at least 2, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def reverse(n: int) -> Permutation:
    if n < 2:
        raise InvalidInput(f"N must be at least 2, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def apply_ascent_swap(p: Permutation, j: int) -> Permutation:
    n = len(p.word)
    if not 1 <= j <= n - 1:
        raise InvalidInput(f"position {j} outside 1..{n - 1}")
    w = p.word
    if w[j - 1] > w[j]:
        raise NotAnAscent(f"descent at position {j} of {p}: {w[j - 1]} > {w[j]}")
    return Permutation(w[: j - 1] + (w[j], w[j - 1]) + w[j + 1:])


@dataclass(frozen=True)
class CircularSequence:
    permutations: tuple[Permutation, ...]
    events: tuple[SwitchEvent, ...]

    @property
    def n(self) -> int:
        return self.permutations[0].n

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(e.position for e in self.events)

    def __len__(self):
        return len(self.permutations)

    @classmethod
    def from_positions(cls, n: int, positions: Iterable[int]) -> "CircularSequence":
        """Replay switch positions from the identity. Raises on a descent."""
        p = identity(n)
        perms = [p]
        events = []
        for step, j in enumerate(positions, 1):
            p = apply_ascent_swap(p, j)
            perms.append(p)
            events.append(SwitchEvent(step, j, p[j + 1], p[j]))
        return cls(tuple(perms), tuple(events))

    @classmethod
    def from_permutations(cls, words: Iterable[Sequence[int] | Permutation]) -> "CircularSequence":
        """Wrap an explicit chain, deriving events for as long as consecutive
        words differ by one adjacent transposition. Use ``validate_sequence``
        to check the result."""
        perms = tuple(w if isinstance(w, Permutation) else Permutation.of(w) for w in words)
        events = []
        for step in range(1, len(perms)):
            j = _single_adjacent_swap(perms[step - 1], perms[step])
            if j is None:
                break
            a, b = perms[step - 1][j], perms[step - 1][j + 1]
            events.append(SwitchEvent(step, j, min(a, b), max(a, b)))
        return cls(perms, tuple(events))


def _single_adjacent_swap(p: Permutation, q: Permutation) -> Optional[int]:
    if p.n != q.n:
        return None
    diff = [i for i in range(p.n) if p.word[i] != q.word[i]]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return None
    i = diff[0]
    if p.word[i] != q.word[i + 1] or p.word[i + 1] != q.word[i]:
        return None
    return i + 1


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violation: Optional[str] = None  # short machine-readable kind
    step: Optional[int] = None
    message: str = "valid circular sequence"

    def raise_if_invalid(self):
        if not self.valid:
            raise InvalidSequence(self)


def _bad(kind: str, message: str, step: Optional[int] = None) -> ValidationReport:
    return ValidationReport(False, kind, step, message)


def validate_sequence(seq: CircularSequence) -> ValidationReport:
    """Check every circular-sequence invariant; report the first violation."""
    perms = seq.permutations
    if not perms:
        return _bad("length", "empty sequence")
    n = perms[0].n
    if n < 2:
        return _bad("size", f"N must be at least 2, got {n}")
    for step, p in enumerate(perms):
        if p.n != n:
            return _bad("size", f"permutation {step} has size {p.n}, expected {n}", step)
    if perms[0] != identity(n):
        return _bad("start", f"sequence starts at {perms[0]}, not the identity", 0)
    if len(perms) != n_bar(n) + 1:
        return _bad("length", f"expected {n_bar(n) + 1} permutations, got {len(perms)}")

    seen = set()
    for step in range(1, len(perms)):
        prev, cur = perms[step - 1], perms[step]
        j = _single_adjacent_swap(prev, cur)
        if j is None:
            return _bad("non-adjacent", f"step {step}: {prev} -> {cur} is not an adjacent transposition", step)
        if not prev.is_ascent(j):
            return _bad("descent", f"step {step}: swap at position {j} of {prev} undoes an inversion", step)
        pair = (prev[j], prev[j + 1])
        if pair in seen:  # cannot happen once every swap is an ascent; kept as a guard
            return _bad("repeated-pair", f"step {step}: pair {pair} swapped twice", step)
        seen.add(pair)
        if step - 1 < len(seq.events):
            ev = seq.events[step - 1]
            if (ev.step, ev.position, ev.low, ev.high) != (step, j, pair[0], pair[1]):
                return _bad("event-mismatch", f"step {step}: recorded event {ev.to_text()} disagrees with the permutations", step)
    if len(seq.events) != len(perms) - 1:
        return _bad("event-mismatch", f"{len(seq.events)} events for {len(perms) - 1} steps")
    if perms[-1] != reverse(n):
        return _bad("end", f"sequence ends at {perms[-1]}, not the reverse", len(perms) - 1)
    return ValidationReport(True)


def switch_counts(seq: CircularSequence) -> tuple[int, ...]:
    """``(s_1, ..., s_{N-1})``: number of switches at each position."""
    validate_sequence(seq).raise_if_invalid()
    counts = [0] * (seq.n - 1)
    for ev in seq.events:
        counts[ev.position - 1] += 1
    return tuple(counts)


def sequence_to_text(seq: CircularSequence) -> str:
    lines = [str(p) for p in seq.permutations]
    lines.append("")
    lines.extend(ev.to_text() for ev in seq.events)
    return "\n".join(lines) + "\n"


def sequence_from_text(text: str) -> CircularSequence:
    """Parse the dump written by ``sequence_to_text``.

    The event block, if present, is ignored on input: events are rederived
    from the permutations so a hand-edited file cannot smuggle in a mismatch.
    """
    block = text.strip().split("\n\n", 1)[0]
    words = []
    for line in block.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            try:
                words.append(tuple(int(t) for t in line.split()))
            except ValueError:
                raise InvalidInput(f"bad permutation line {line!r}") from None
    return CircularSequence.from_permutations(words)
