import random
from itertools import combinations, product

import pytest

from wgcount.graph import Graph, family, parse_graph

INTRO = parse_graph('{"m": 5, "edges": [[0, 1], [1, 2], [0, 3], [0, 4]]}')
FIVE_CYCLE_CHORD = parse_graph('{"m": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4],[0,2]]}')

FAMILY_LABELS = (
    ["null"]
    + [f"path:{k}" for k in range(1, 6)]
    + [f"cycle:{k}" for k in range(1, 7)]
    + [f"complete:{t}" for t in range(0, 6)]
    + [f"star:{t}" for t in range(0, 5)]
    + [f"discrete:{t}" for t in range(0, 5)]
    + ["biclique:1,1", "biclique:1,3", "biclique:2,2", "biclique:2,3", "biclique:3,3"]
    + [f"hypercube:{d}" for d in range(0, 3)]
    + ["octahedron", "grid:2,2", "grid:2,3"]
)


def random_graphs(count=50, max_m=6, seed=20240607):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        m = rng.randint(1, max_m)
        edges = tuple(e for e in combinations(range(m), 2) if rng.random() < 0.45)
        out.append(Graph(m, edges, f"random-{i}"))
    return out


def corpus():
    graphs = [family(*_split(lab)) for lab in FAMILY_LABELS]
    return graphs + [INTRO, FIVE_CYCLE_CHORD] + random_graphs()


def _split(label):
    name, _, args = label.partition(":")
    return (name, *(int(a) for a in args.split(","))) if args else (name,)


CORPUS = corpus()


def corpus_id(g):
    return g.label or str(g)


def naive_count(g, n, lower=0, upper=None, edge_bound=None):
    """Product enumeration, independent of both counting engines."""
    upper = n if upper is None else upper
    edge_bound = n if edge_bound is None else edge_bound
    total = 0
    for a in product(range(lower, upper + 1), repeat=g.m):
        if all(a[i] + a[j] <= edge_bound for i, j in g.edges):
            total += 1
    return total


def independent_sets(g):
    adj = g.adjacency()
    total = 0
    for mask in range(1 << g.m):
        members = [v for v in range(g.m) if mask >> v & 1]
        if all(u not in adj[v] for u, v in combinations(members, 2)):
            total += 1
    return total


@pytest.fixture(scope="session")
def corpus_gfs():
    from wgcount.genfun import rho
    return {g: rho(g, method="elim") for g in CORPUS}
