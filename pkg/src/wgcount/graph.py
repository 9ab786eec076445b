"""Simple undirected graphs, the family DSL, and structural helpers."""
from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional


class GraphError(ValueError):
    """Malformed graph text or an invalid vertex/edge specification."""


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices ``0..m-1``.

    Edges are normalized to ``(i, j)`` with ``i < j`` and kept sorted.
    Self-loops, duplicate edges and out-of-range endpoints are rejected.
    """

    m: int
    edges: tuple = ()
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {self.m!r}")
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} does not have two endpoints")
            i, j = e
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j)):
                raise GraphError(f"edge {e!r} has non-integer endpoints")
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            i, j = min(i, j), max(i, j)
            if i < 0 or j >= self.m:
                raise GraphError(f"edge ({i}, {j}) has an endpoint outside 0..{self.m - 1}")
            if (i, j) in seen:
                raise GraphError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def adjacency(self) -> tuple:
        nbrs = [set() for _ in range(self.m)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    def to_document(self) -> dict:
        return {"m": self.m, "edges": [list(e) for e in self.edges]}

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = [(i + self.m, j + self.m) for i, j in other.edges]
        return Graph(self.m + other.m, self.edges + tuple(shifted))

    def add_edge(self, i: int, j: int) -> "Graph":
        return Graph(self.m, self.edges + ((i, j),))

    def __str__(self) -> str:
        if self.label:
            return self.label
        return json.dumps(self.to_document(), separators=(",", ":"))


@dataclass(frozen=True)
class EliminationPlan:
    order: tuple
    width: int


FAMILIES = ("null", "path", "cycle", "complete", "star", "discrete",
            "biclique", "hypercube", "octahedron", "grid")

_ARITY = {
    "null": 0, "octahedron": 0,
    "path": 1, "cycle": 1, "complete": 1, "star": 1, "discrete": 1, "hypercube": 1,
    "biclique": 2, "grid": 2,
}
_MIN_PARAM = {"path": 1, "cycle": 1, "grid": 1}

_DSL = re.compile(r"^([a-z]+)(?::(-?\d+(?:,-?\d+)*))?$")


def family(name: str, *params: int) -> Graph:
    """Build a named graph from the family DSL vocabulary."""
    if name not in _ARITY:
        raise GraphError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    if len(params) != _ARITY[name]:
        raise GraphError(f"family {name!r} takes {_ARITY[name]} parameter(s), got {len(params)}")
    lo = _MIN_PARAM.get(name, 0)
    for p in params:
        if not isinstance(p, int) or p < lo:
            raise GraphError(f"family {name!r} needs integer parameters >= {lo}, got {p!r}")
    label = name + (":" + ",".join(map(str, params)) if params else "")

    if name == "null":
        return Graph(0, (), label)
    if name == "octahedron":
        # K_{2,2,2}: opposite pairs (0,1), (2,3), (4,5) are the only non-edges
        edges = [(i, j) for i, j in combinations(range(6), 2) if i // 2 != j // 2]
        return Graph(6, tuple(edges), label)
    if name in ("biclique", "grid"):
        p, q = params
        if name == "biclique":
            edges = [(i, p + j) for i in range(p) for j in range(q)]
            return Graph(p + q, tuple(edges), label)
        edges = []
        for r in range(p):
            for c in range(q):
                v = r * q + c
                if c + 1 < q:
                    edges.append((v, v + 1))
                if r + 1 < p:
                    edges.append((v, v + q))
        return Graph(p * q, tuple(edges), label)

    (k,) = params
    if name == "path":
        return Graph(k, tuple((i, i + 1) for i in range(k - 1)), label)
    if name == "cycle":
        if k <= 2:
            return Graph(k, tuple((i, i + 1) for i in range(k - 1)), label)
        return Graph(k, tuple((i, (i + 1) % k) for i in range(k)), label)
    if name == "complete":
        return Graph(k, tuple(combinations(range(k), 2)), label)
    if name == "star":
        return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)), label)
    if name == "discrete":
        return Graph(k, (), label)
    # hypercube
    size = 1 << k
    edges = [(v, v | (1 << b)) for v in range(size) for b in range(k) if not v & (1 << b)]
    return Graph(size, tuple(edges), label)


def parse_family(text: str) -> Graph:
    match = _DSL.match(text.strip())
    if not match:
        raise GraphError(f"malformed family expression {text!r}")
    name, args = match.groups()
    params = tuple(int(a) for a in args.split(",")) if args else ()
    return family(name, *params)


def parse_graph(text: str) -> Graph:
    """Parse a JSON graph document (``{"m": .., "edges": [[i, j], ..]}``) or a DSL string."""
    stripped = text.strip()
    if not stripped.startswith("{"):
        return parse_family(stripped)
    try:
        doc = json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph document: {exc}") from None
    if not isinstance(doc, dict) or "m" not in doc:
        raise GraphError("graph document needs an integer field 'm'")
    edges = doc.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise GraphError("'edges' must be an array of 2-element integer arrays")
    return Graph(doc["m"], tuple(tuple(e) for e in edges), doc.get("label"))


def is_bipartite(g: Graph) -> tuple[bool, list]:
    """Return ``(True, coloring)`` or ``(False, odd_cycle)`` as a vertex sequence."""
    adj = g.adjacency()
    color = [-1] * g.m
    parent = [-1] * g.m
    depth = [0] * g.m
    for root in range(g.m):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(adj[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return False, _odd_cycle(u, v, parent, depth)
    return True, color


def _odd_cycle(u: int, v: int, parent: list, depth: list) -> list:
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    # left ends at the common ancestor; walk back down to v
    cycle = left + right[-2::-1]
    k = cycle.index(min(cycle))
    cycle = cycle[k:] + cycle[:k]
    if cycle[-1] < cycle[1]:
        cycle = cycle[:1] + cycle[:0:-1]
    return cycle


def components(g: Graph) -> list[tuple[Graph, tuple]]:
    """Connected components, each with the tuple of original vertex indices."""
    adj = g.adjacency()
    seen = [False] * g.m
    out = []
    for root in range(g.m):
        if seen[root]:
            continue
        seen[root] = True
        stack, members = [root], []
        while stack:
            u = stack.pop()
            members.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        members.sort()
        index = {v: i for i, v in enumerate(members)}
        edges = tuple((index[i], index[j]) for i, j in g.edges if i in index)
        out.append((Graph(len(members), edges), tuple(members)))
    return out


def elimination_order(g: Graph) -> EliminationPlan:
    """Greedy min-degree elimination with fill-in; ties go to the smaller index."""
    adj = [set(s) for s in g.adjacency()]
    alive = set(range(g.m))
    order, width = [], 0
    while alive:
        v = min(alive, key=lambda u: (len(adj[u]), u))
        nbrs = adj[v]
        width = max(width, len(nbrs))
        for a in nbrs:
            adj[a] |= nbrs
            adj[a].discard(a)
            adj[a].discard(v)
        alive.remove(v)
        order.append(v)
        adj[v] = set()
    return EliminationPlan(tuple(order), width)
