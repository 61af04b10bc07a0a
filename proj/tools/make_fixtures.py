#!/usr/bin/env python3
"""Regenerate the graph6 fixture corpora under fixtures/.

Unlabeled graph classes are taken from the networkx graph atlas (all graphs
on up to 7 vertices).  Larger classes are produced by degree-constrained
labeled enumeration (subcubic, n = 8) or by random regular sampling
(cubic n = 8, 10; 4-regular n = 8, 9), deduplicated up to isomorphism and
checked against the known class counts.

Usage: python3 tools/make_fixtures.py [outdir]
"""

import itertools
import random
import sys
from pathlib import Path

import networkx as nx

# OEIS A002851 (connected cubic) and A006820 (connected 4-regular).
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}
QUARTIC_COUNTS = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16}


def to_g6(g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def atlas(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


class IsoBucket:
    def __init__(self):
        self.buckets = {}

    def add(self, g):
        key = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
        reps = self.buckets.setdefault(key, [])
        for h in reps:
            if nx.is_isomorphic(g, h):
                return False
        reps.append(g.copy())
        return True

    def graphs(self):
        out = [g for reps in self.buckets.values() for g in reps]
        out.sort(key=lambda g: (g.number_of_edges(), to_g6(g)))
        return out


def sample_regular(degree, n, expected, seed=7, max_samples=400000):
    rng = random.Random(seed)
    bucket = IsoBucket()
    found = 0
    for _ in range(max_samples):
        g = nx.random_regular_graph(degree, n, seed=rng.randrange(1 << 30))
        if nx.is_connected(g) and bucket.add(g):
            found += 1
            if found == expected:
                break
    graphs = bucket.graphs()
    if len(graphs) != expected:
        raise SystemExit(f"{degree}-regular n={n}: found {len(graphs)}, expected {expected}")
    return graphs


def enumerate_degree_fixed(n, degrees):
    """All labeled graphs where vertex v has degree degrees[v]."""
    pairs = list(itertools.combinations(range(n), 2))
    need = list(degrees)
    chosen = []

    def rec(idx):
        if idx == len(pairs):
            if not any(need):
                yield list(chosen)
            return
        u, v = pairs[idx]
        # vertex u has no later pairs once v passes n-1 for its row
        if need[u] > 0 and need[v] > 0:
            need[u] -= 1
            need[v] -= 1
            chosen.append((u, v))
            yield from rec(idx + 1)
            chosen.pop()
            need[u] += 1
            need[v] += 1
        # skipping this pair must leave enough later pairs for u
        remaining_u = sum(1 for (a, b) in pairs[idx + 1:] if a == u or b == u)
        if need[u] <= remaining_u:
            yield from rec(idx + 1)

    yield from rec(0)


def subcubic_mindeg2(n):
    bucket = IsoBucket()
    for threes in range(0, n + 1, 2):
        degrees = [3] * threes + [2] * (n - threes)
        for edges in enumerate_degree_fixed(n, degrees):
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if nx.is_connected(g):
                bucket.add(g)
    return bucket.graphs()


def write(path, graphs):
    path.write_text("".join(to_g6(g) + "\n" for g in graphs))
    print(f"{path.name}: {len(graphs)} graphs")


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures"
    out.mkdir(parents=True, exist_ok=True)

    cubic = []
    for n, count in CUBIC_COUNTS.items():
        if n <= 7:
            gs = [g for g in atlas(n) if nx.is_connected(g) and all(d == 3 for _, d in g.degree())]
            assert len(gs) == count, (n, len(gs))
        else:
            gs = sample_regular(3, n, count)
        cubic += gs
    write(out / "cubic_connected_n4-10.g6", cubic)

    quartic = []
    for n, count in QUARTIC_COUNTS.items():
        if n <= 7:
            gs = [g for g in atlas(n) if nx.is_connected(g) and all(d == 4 for _, d in g.degree())]
            assert len(gs) == count, (n, len(gs))
        else:
            gs = sample_regular(4, n, count)
        quartic += gs
    write(out / "quartic_connected_n5-9.g6", quartic)

    n7 = [g for g in atlas(7) if nx.is_connected(g) and min(d for _, d in g.degree()) >= 2]
    write(out / "connected_n7_mindeg2.g6", n7)

    subcubic = []
    for n in range(4, 9):
        gs = subcubic_mindeg2(n)
        if n <= 7:
            ref = [g for g in atlas(n) if nx.is_connected(g)
                   and 2 <= min(d for _, d in g.degree()) and max(d for _, d in g.degree()) <= 3]
            assert len(ref) == len(gs), (n, len(ref), len(gs))
        subcubic += gs
    write(out / "subcubic_mindeg2_n4-8.g6", subcubic)


if __name__ == "__main__":
    main()
