"""Resource budgets for the factorial-size engines.

Defaults can be overridden by the ``GATESWITCH_BUDGET`` environment variable,
a comma separated list of ``name=value`` pairs, e.g.
``GATESWITCH_BUDGET="oracle_max_n=10,max_vertices=8000000"``.
"""

from __future__ import annotations

import dataclasses
import os

from .errors import BudgetExceeded, InvalidInput

ENV_VAR = "GATESWITCH_BUDGET"


@dataclasses.dataclass
class Limits:
    max_n: int = 16  # permutation width; vertex words pack 4 bits per coordinate
    oracle_max_n: int = 9  # 0/1 shortest path over all of S_N
    enumerate_max_n: int = 5
    max_vertices: int = 4_000_000  # skeleton BFS
    all_pairs_max_vertices: int = 5040
    hrep_max_n: int = 12
    kset_max_subsets: int = 200_000


def _from_env() -> Limits:
    limits = Limits()
    raw = os.environ.get(ENV_VAR, "").strip()
    if raw:
        apply_overrides(limits, raw)
    return limits


def apply_overrides(limits: Limits, raw: str) -> None:
    names = {f.name for f in dataclasses.fields(Limits)}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in names:
            raise InvalidInput(f"bad budget override {item!r}; known names: {sorted(names)}")
        try:
            setattr(limits, key, int(value))
        except ValueError:
            raise InvalidInput(f"budget {key} must be an integer, got {value!r}") from None


LIMITS = _from_env()


def check(name: str, value: int, what: str) -> None:
    cap = getattr(LIMITS, name)
    if value > cap:
        raise BudgetExceeded(f"{what} = {value} exceeds budget {name}={cap}")
