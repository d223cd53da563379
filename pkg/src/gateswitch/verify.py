"""Invariant suites behind ``gateswitch verify``.

Each suite returns a ``SuiteResult``; failures carry enough context to
reproduce the offending case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import ksets, multiperm, oracle
from .circseq import GateSet, count_switches, gate_profile, theorem1_bounds, two_phase_construction
from .perm_core import Permutation, n_bar, validate_sequence


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        self.failures.append(message)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "verdict": "pass" if self.passed else "fail",
            "checked": self.checked,
            "failures": self.failures[:20],
        }


def gate_sets(n: int):
    for g in range(1, n):
        for ys in combinations(range(1, n), g):
            yield GateSet(n, ys)


def theorem1(max_n: int = 8, **_) -> SuiteResult:
    res = SuiteResult("theorem1")
    for n in range(2, max_n + 1):
        for gs in gate_sets(n):
            lo, hi = theorem1_bounds(gs)
            m = oracle.min_switches(gs)
            res.checked += 1
            if not lo <= m <= hi:
                res.fail(f"N={n} y={gs.y}: s(y)={m} outside [{lo},{hi}]")
    return res


def construct(max_n: int = 8, **_) -> SuiteResult:
    res = SuiteResult("construct")
    for n in range(2, max_n + 1):
        for gs in gate_sets(n):
            built = two_phase_construction(gs)
            res.checked += 1
            report = validate_sequence(built.sequence)
            if not report.valid:
                res.fail(f"N={n} y={gs.y}: {report.message}")
                continue
            lo, hi = theorem1_bounds(gs)
            total = count_switches(built.sequence, gs).total
            first, second = built.phase_tallies()
            prof = gate_profile(gs)
            if not lo <= total <= hi:
                res.fail(f"N={n} y={gs.y}: {total} gate switches outside [{lo},{hi}]")
            if second.bad:
                res.fail(f"N={n} y={gs.y}: {second.bad} bad switches in phase 2")
            if first.bad > prof.l * prof.r:
                res.fail(f"N={n} y={gs.y}: phase 1 has {first.bad} bad switches > l*r")
    return res


def bridge(max_n: int = 8, **_) -> SuiteResult:
    res = SuiteResult("bridge")
    for n in range(2, max_n + 1):
        for c in multiperm.compositions(n):
            d = multiperm.diameter(c)
            m = oracle.min_switches(c.gate_set())
            res.checked += 1
            if d != m:
                res.fail(f"<{c}>: diameter {d} != min switches {m}")
    return res


def prop31(max_n: int = 6, seeds: int = 20, **_) -> SuiteResult:
    res = SuiteResult("prop31")
    rng = random.Random(0)
    for n in range(2, max_n + 1):
        for c in multiperm.compositions(n):
            sk = multiperm.skeleton(c)
            base = c.base_word()
            d_rev = multiperm.diameter(c)
            ecc = int(sk.bfs(sk.index(base)).max())
            res.checked += 1
            if ecc != d_rev:
                res.fail(f"<{c}>: eccentricity of a_e is {ecc}, d(e, ē) = {d_rev}")
            if n <= 7 and oracle.all_pairs_diameter(c) != d_rev:
                res.fail(f"<{c}>: all-pairs diameter differs from d(e, ē) = {d_rev}")
            for _ in range(seeds):
                word = list(range(1, n + 1))
                rng.shuffle(word)
                sigma = Permutation(tuple(word))
                u = multiperm.vertex_from_permutation(sigma, c)
                v = multiperm.vertex_from_permutation(sigma.reversed(), c)
                if multiperm.distance(u, v, c) != d_rev:
                    res.fail(f"<{c}>: d(a_σ, a_σ̄) != d(e, ē) for σ={sigma}")
    return res


def prop35(max_n: int = 10, **_) -> SuiteResult:
    res = SuiteResult("prop35")
    for n in range(2, max_n + 1):
        for c in multiperm.compositions(n):
            if c.num_values > 3:
                continue
            res.checked += 1
            closed, d = multiperm.closed_form_diameter(c), multiperm.diameter(c)
            if closed != d:
                res.fail(f"<{c}>: closed form {closed} != BFS {d}")
    return res


def permutohedron(max_n: int = 7, **_) -> SuiteResult:
    res = SuiteResult("permutohedron")
    for n in range(2, max_n + 1):
        res.checked += 1
        d = multiperm.diameter(multiperm.Composition((1,) * n))
        if d != n_bar(n):
            res.fail(f"N={n}: diameter {d} != {n_bar(n)}")
    return res


def enumeration(max_n: int = 5, **_) -> SuiteResult:
    res = SuiteResult("enumeration")
    for n in range(2, max_n + 1):
        res.checked += 1
        listed = 0
        for seq in oracle.enumerate_sequences(n):
            listed += 1
            if not validate_sequence(seq).valid:
                res.fail(f"N={n}: enumerated an invalid sequence {seq.positions}")
        counted = oracle.count_sequences(n)
        formula = oracle.reduced_word_count_formula(n)
        if not listed == counted == formula:
            res.fail(f"N={n}: DFS {listed}, recursion {counted}, formula {formula}")
    return res


def _configs(max_n: int, seeds: int, min_n: int = 3):
    span = max_n - min_n + 1
    for seed in range(seeds):
        yield seed, ksets.random_configuration(min_n + seed % span, seed)


def ksets_suite(max_n: int = 10, seeds: int = 100, **_) -> SuiteResult:
    res = SuiteResult("ksets")
    for seed, X in _configs(max_n, seeds):
        counts = ksets.kset_counts(X)
        res.checked += 1
        if sum(counts.switches) != n_bar(X.n):
            res.fail(f"seed {seed}: switch total {sum(counts.switches)} != C(N,2)")
        for k, kc in counts.per_k.items():
            if kc.f_left + kc.f_right != kc.f + 2:
                res.fail(f"seed {seed} k={k}: f_l + f_r != f + 2")
            brute = oracle.ksets_bruteforce(X, k)
            if brute != (kc.f_left, kc.f_right, kc.f):
                res.fail(f"seed {seed} k={k}: sweep {kc} vs oracle {brute}")
    return res


def sandwich(max_n: int = 9, seeds: int = 50, **_) -> SuiteResult:
    res = SuiteResult("sandwich")
    for seed, X in _configs(max_n, seeds):
        counts = ksets.kset_counts(X)
        brute = {k: oracle.ksets_bruteforce(X, k) for k in counts.per_k}
        for spec in ksets.all_specs(X.n):
            res.checked += 1
            rep = ksets.sandwich_check(X, spec, counts)
            direct = (sum(brute[k][2] for k in spec.L & spec.R)
                      + sum(brute[k][0] for k in spec.L - spec.R)
                      + sum(brute[k][1] for k in spec.R - spec.L))
            if not rep.ok or direct != rep.f_lr_switches:
                res.fail(f"seed {seed} N={X.n} L={sorted(spec.L)} R={sorted(spec.R)}: "
                         f"{rep.lower} <= {rep.middle} <= {rep.upper}, "
                         f"f_LR {rep.f_lr}/{rep.f_lr_switches}/oracle {direct}")
    return res


def gon(max_n: int = 9, max_k: int = 3, **_) -> SuiteResult:
    res = SuiteResult("gon")
    for k in range(1, max_k + 1):
        for n in range(2 * k + 1, max_n + 1):
            res.checked += 1
            X = ksets.gon_configuration(k, n)
            f = ksets.kset_counts(X)[k].f
            floor = multiperm.diameter(multiperm.Composition((k, n - 2 * k, k)))
            if not f == 2 * k + 1 == floor:
                res.fail(f"k={k} N={n}: f(k)={f}, diam<k,N-2k,k>={floor}")
    return res


SUITES = {
    "theorem1": theorem1,
    "construct": construct,
    "bridge": bridge,
    "prop31": prop31,
    "prop35": prop35,
    "permutohedron": permutohedron,
    "enumeration": enumeration,
    "ksets": ksets_suite,
    "sandwich": sandwich,
    "gon": gon,
}


def run(name: str, max_n=None, seeds=None) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    kwargs = {}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if seeds is not None:
        kwargs["seeds"] = seeds
    return [SUITES[n](**kwargs) for n in names]
