#!/usr/bin/env python3
"""Regenerate tests/data/srg276.g6, a strongly regular graph (276,140,58,84).

Points of the extended Golay code plus the 253 octads through one fixed point
give a regular two-graph on 276 vertices (Seidel eigenvalues 55 and -5).
A local search finds a +-1 eigenvector d for -5; switching the Seidel matrix by
diag(d) then gives an SRG.

usage: make_srg276.py OUT.g6 [--seed N]
"""
import argparse
import math

import networkx as nx
import numpy as np


def golay_octads():
    q = {(i * i) % 23 for i in range(1, 23)}
    base = [1 if j == 0 or j in q else 0 for j in range(23)]
    rows = [[base[(j - s) % 23] for j in range(23)] for s in range(23)]
    rows = [r + [sum(r) % 2] for r in rows]
    rows.append([1] * 24)
    basis = []
    for r in rows:
        v = int("".join(map(str, r)), 2)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    assert len(basis) == 12
    return [w for w in words if bin(w).count("1") == 8]


def seidel_matrix():
    hept = [[i for i in range(1, 24) if (w >> i) & 1] for w in golay_octads() if w & 1]
    assert len(hept) == 253
    n = 23 + len(hept)
    a = np.zeros((n, n), dtype=np.int64)
    for j, h in enumerate(hept):
        for p in h:
            a[p - 1, 23 + j] = a[23 + j, p - 1] = 1
    sets = [set(h) for h in hept]
    for x in range(253):
        for y in range(x + 1, 253):
            if len(sets[x] & sets[y]) == 1:
                a[23 + x, 23 + y] = a[23 + y, 23 + x] = 1
    return np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - 2 * a


def find_eigenvector(s, seed):
    # minimise |(S + 5I) d|^2 over d in {+-1}^n by annealing single flips.
    # (S + 5I)^2 = 60 (S + 5I), so flipping d_i changes the norm by 1200 - 240 d_i r_i
    n = len(s)
    c = s + 5 * np.eye(n, dtype=np.int64)
    rng = np.random.default_rng(seed)
    for _ in range(500):
        d = rng.choice([-1, 1], n)
        r = c @ d
        f = int(r @ r)
        t = 2000.0
        for _ in range(200000):
            i = rng.integers(n)
            delta = int(1200 - 240 * d[i] * r[i])
            if delta <= 0 or rng.random() < math.exp(-delta / t):
                r -= 2 * d[i] * c[:, i]
                d[i] = -d[i]
                f += delta
            t = max(t * 0.9995, 1.0)
            if f == 0:
                return d
    raise SystemExit("no eigenvector found, try another seed")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    s = seidel_matrix()
    d = find_eigenvector(s, args.seed)
    s2 = (d[:, None] * s) * d[None, :]
    n = len(s)
    a = (1 - np.eye(n, dtype=np.int64) - s2) // 2
    a2 = a @ a
    k = int(a.sum(1)[0])
    assert (a.sum(1) == k).all()
    lam = {int(a2[i, j]) for i in range(n) for j in range(n) if i != j and a[i, j]}
    mu = {int(a2[i, j]) for i in range(n) for j in range(n) if i != j and not a[i, j]}
    print(f"({n},{k},{lam},{mu})")
    with open(args.out, "wb") as fh:
        fh.write(nx.to_graph6_bytes(nx.from_numpy_array(a), header=False))


if __name__ == "__main__":
    main()
