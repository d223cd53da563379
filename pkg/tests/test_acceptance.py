"""Acceptance criteria. Each test records one [PASS]/[FAIL] line in the summary."""

import random
from itertools import combinations
from math import comb

from gateswitch import ksets, multiperm, oracle
from gateswitch.circseq import (
    GateSet, count_switches, theorem1_bounds, two_phase_construction,
)
from gateswitch.multiperm import Composition
from gateswitch.perm_core import Permutation, validate_sequence


def gate_sets(max_n):
    for n in range(2, max_n + 1):
        for g in range(1, n):
            for ys in combinations(range(1, n), g):
                yield GateSet(n, ys)


def test_01_switch_bounds_exhaustive(criterion):
    bad, checked = [], 0
    for gs in gate_sets(8):
        lo, hi = theorem1_bounds(gs)
        m = oracle.min_switches(gs)
        checked += 1
        if not lo <= m <= hi:
            bad.append((gs.n, gs.y, m, lo, hi))
    criterion("1 oracle s(y) within [sum x, sum x + l*r], N<=8", not bad and checked == 247,
              f"{checked} gate sets, {len(bad)} outside" + (f", first {bad[0]}" if bad else ""))


def test_02_construction(criterion):
    bad = []
    for gs in gate_sets(8):
        seq = two_phase_construction(gs).sequence
        report = validate_sequence(seq)
        if not report.valid or count_switches(seq, gs).total > theorem1_bounds(gs)[1]:
            bad.append((gs.n, gs.y, report.message))
    built = two_phase_construction(GateSet.of(8, [1, 4, 6, 7]))
    tally = count_switches(built.sequence, built.gates).total
    endpoint = str(built.phase1_endpoint)
    ok = not bad and tally == 11 and endpoint == "3 4 5 2 6 1 8 7"
    criterion("2 two-phase sequences valid and within upper bound; worked example", ok,
              f"{len(bad)} failures; example tally {tally}, phase-1 endpoint {endpoint}")


def test_03_bridge_identity(criterion):
    bad, checked = [], 0
    for n in range(2, 9):
        for c in multiperm.compositions(n):
            d, m = multiperm.diameter(c), oracle.min_switches(c.gate_set())
            checked += 1
            if d != m:
                bad.append((c.parts, d, m))
    criterion("3 diam P(M) equals minimum gate switches, N<=8", not bad,
              f"{checked} compositions, {len(bad)} mismatches" + (f", first {bad[0]}" if bad else ""))


def test_04_farthest_vertex(criterion):
    rng = random.Random(2024)
    bad, checked = [], 0
    for n in range(2, 7):
        for c in multiperm.compositions(n):
            sk = multiperm.skeleton(c)
            base = c.base_word()
            dist = sk.bfs(sk.index(base))
            d_rev = int(dist[sk.index(base[::-1])])
            if int(dist.max()) != d_rev or oracle.all_pairs_diameter(c) != d_rev:
                bad.append((c.parts, "reverse not farthest"))
            for _ in range(20):
                w = list(range(1, n + 1))
                rng.shuffle(w)
                sigma = Permutation(tuple(w))
                u = multiperm.vertex_from_permutation(sigma, c)
                v = multiperm.vertex_from_permutation(sigma.reversed(), c)
                checked += 1
                if multiperm.distance(u, v, c) != d_rev:
                    bad.append((c.parts, sigma.word))
    criterion("4 a_ē is farthest from a_e; d(a_σ, a_σ̄) constant, N<=6", not bad,
              f"{checked} random σ checked, {len(bad)} failures")


def test_05_closed_forms(criterion):
    bad, checked = [], 0
    for n in range(2, 11):
        for c in multiperm.compositions(n):
            if c.num_values > 3:
                continue
            checked += 1
            if multiperm.closed_form_diameter(c) != multiperm.diameter(c):
                bad.append(c.parts)
    named = {(2, 3): 2, (2, 3, 2): 5, (1, 2, 1): 3}
    named_ok = all(multiperm.diameter(Composition(p)) == d for p, d in named.items())
    criterion("5 two- and three-part closed forms match BFS, N<=10", not bad and named_ok,
              f"{checked} compositions, {len(bad)} mismatches")


def test_06_permutohedron(criterion):
    got = {n: multiperm.diameter(Composition((1,) * n)) for n in range(2, 8)}
    criterion("6 permutohedron diameter C(N,2), N<=7",
              all(d == comb(n, 2) for n, d in got.items()), str(got))


def test_07_fixture_121(criterion):
    c = Composition((1, 2, 1))
    verts = multiperm.enumerate_vertices(c)
    rows = len(multiperm.h_representation(c).rows)
    d = multiperm.diameter(c)
    nbrs = multiperm.neighbors((1, 2, 2, 3), c)
    expected = {(2, 1, 2, 3), (2, 2, 1, 3), (1, 3, 2, 2), (1, 2, 3, 2)}
    ok = len(verts) == 12 and rows == 14 and d == 3 and nbrs == expected
    criterion("7 P({1,2,2,3}): 12 vertices, 14 rows, diameter 3, four neighbors", ok,
              f"{len(verts)} vertices, {rows} rows, diameter {d}, {len(nbrs)} neighbors")


def test_08_enumeration_counts(criterion):
    listed = [sum(1 for _ in oracle.enumerate_sequences(n)) for n in range(2, 6)]
    counted = [oracle.count_sequences(n) for n in range(2, 6)]
    criterion("8 sequence counts 1, 2, 16, 768 by DFS and recursion",
              listed == counted == [1, 2, 16, 768], f"DFS {listed}, recursion {counted}")


def test_09_kset_identities(criterion):
    bad = []
    for seed in range(100):
        X = ksets.random_configuration(3 + seed % 8, seed)
        counts = ksets.kset_counts(X)
        if sum(counts.switches) != comb(X.n, 2):
            bad.append((seed, "switch total"))
        for k, kc in counts.per_k.items():
            if kc.f_left + kc.f_right != kc.f + 2:
                bad.append((seed, k, "f_l + f_r"))
            if oracle.ksets_bruteforce(X, k) != (kc.f_left, kc.f_right, kc.f):
                bad.append((seed, k, "oracle"))
    criterion("9 k-set identities and sweep = brute force, 100 configurations N<=10", not bad,
              f"{len(bad)} failures" + (f", first {bad[0]}" if bad else ""))


def test_10_sandwich(criterion):
    bad, checked = [], 0
    for seed in range(50):
        X = ksets.random_configuration(3 + seed % 7, 1000 + seed)
        counts = ksets.kset_counts(X)
        brute = {k: oracle.ksets_bruteforce(X, k) for k in counts.per_k}
        for spec in ksets.all_specs(X.n):
            checked += 1
            rep = ksets.sandwich_check(X, spec, counts)
            per_k_sum = (sum(brute[k][2] for k in spec.L & spec.R)
                         + sum(brute[k][0] for k in spec.L - spec.R)
                         + sum(brute[k][1] for k in spec.R - spec.L))
            if not (rep.lower_ok and rep.upper_ok) or not per_k_sum == rep.f_lr == rep.f_lr_switches:
                bad.append((seed, sorted(spec.L), sorted(spec.R), rep.lower, rep.middle, rep.upper))
    criterion("10 sandwich bounds hold, per-k and switch-vector sums agree, N<=9", not bad,
              f"{checked} (configuration, spec) pairs, {len(bad)} failures")


def test_11_gon(criterion):
    bad, checked = [], 0
    for k in range(1, 4):
        for n in range(2 * k + 1, 10):
            X = ksets.gon_configuration(k, n)
            f = ksets.kset_counts(X)[k].f
            brute = oracle.ksets_bruteforce(X, k)[2]
            d = multiperm.diameter(Composition((k, n - 2 * k, k)))
            checked += 1
            if not f == brute == 2 * k + 1 == d:
                bad.append((k, n, f, brute, d))
    f5 = ksets.kset_counts(ksets.gon_configuration(2, 5))[2].f
    criterion("11 gon configuration has f(k) = 2k+1 = diam <k,N-2k,k>, k<=3, N<=9",
              not bad and f5 == 5, f"{checked} cases, {len(bad)} failures; (k=2, N=5) f={f5}")
