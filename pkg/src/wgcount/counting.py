"""Counting bounded weight assignments.

WG(n) is the number of ``a`` in ``{0..n}^m`` with ``a[i] + a[j] <= n`` on every
edge.  Two engines compute it: an exhaustive depth-first search (the oracle)
and sum-product variable elimination along an :class:`EliminationPlan`.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import EliminationPlan, Graph, components, elimination_order

DEFAULT_MAX_STATES = 10**7
DEFAULT_MAX_TABLE = 10**8

METHODS = ("auto", "brute", "elim")


class CostLimitError(RuntimeError):
    """The requested computation exceeds a configured size ceiling."""


@dataclass(frozen=True)
class CountQuery:
    graph: Graph
    n: int
    region: str = "closure"  # or "interior"


def count_brute(g: Graph, n: int, max_states: int = DEFAULT_MAX_STATES) -> int:
    if n < 0:
        raise ValueError("weight bound must be nonnegative")
    return _brute(g, n, n, max_states)


def _brute(g: Graph, top: int, edge_bound: int, max_states: int) -> int:
    """Assignments in {0..top}^m with a[i] + a[j] <= edge_bound on edges."""
    m = g.m
    if m == 0:
        return 1
    if top < 0:
        return 0
    if (top + 1) ** m > max_states:
        raise CostLimitError(
            f"brute force needs {(top + 1) ** m} assignments, above max-states {max_states}; "
            "use the elimination engine")
    adj = g.adjacency()
    earlier = [sorted(u for u in adj[v] if u < v) for v in range(m)]
    weights = [0] * m
    last = m - 1

    def walk(v: int) -> int:
        hi = top
        for u in earlier[v]:
            cap = edge_bound - weights[u]
            if cap < hi:
                hi = cap
        if hi < 0:
            return 0
        if v == last:
            return hi + 1
        total = 0
        for a in range(hi + 1):
            weights[v] = a
            total += walk(v + 1)
        return total

    return walk(0)


def count_elim(g: Graph, n: int, plan: Optional[EliminationPlan] = None,
               max_table: int = DEFAULT_MAX_TABLE) -> int:
    if n < 0:
        raise ValueError("weight bound must be nonnegative")
    return _elim(g, n, n, plan, max_table)


def _elim(g: Graph, top: int, edge_bound: int, plan: Optional[EliminationPlan],
          max_table: int) -> int:
    if g.m == 0:
        return 1
    if top < 0:
        return 0
    if plan is None:
        plan = elimination_order(g)
    if sorted(plan.order) != list(range(g.m)):
        raise ValueError("elimination order is not a permutation of the vertices")
    position = {v: i for i, v in enumerate(plan.order)}
    total = 1
    for sub, members in components(g):
        sub_order = tuple(sorted(range(sub.m), key=lambda i: position[members[i]]))
        total *= _elim_connected(sub, top, edge_bound, sub_order, max_table)
        if total == 0:
            break
    return total


def _elim_connected(g: Graph, top: int, edge_bound: int, order: tuple, max_table: int) -> int:
    size = top + 1
    if g.m == 1:
        return size
    # every partial table entry is bounded by size**m, so int64 is exact below 2**62
    dtype = np.int64 if size ** g.m < 2**62 else object
    values = np.arange(size)
    edge_table = (values[:, None] + values[None, :] <= edge_bound).astype(dtype)
    factors = [((i, j), edge_table) for i, j in g.edges]
    result = 1
    for v in order:
        bucket = [f for f in factors if v in f[0]]
        factors = [f for f in factors if v not in f[0]]
        if not bucket:
            result *= size
            continue
        scope = sorted({u for s, _ in bucket for u in s})
        if size ** len(scope) > max_table:
            raise CostLimitError(
                f"elimination table of {size ** len(scope)} entries exceeds max-table {max_table}")
        product = None
        for s, table in bucket:
            expanded = _expand(table, s, scope)
            product = expanded if product is None else product * expanded
        product = np.broadcast_to(product, (size,) * len(scope))
        reduced = product.sum(axis=scope.index(v))
        rest = tuple(u for u in scope if u != v)
        if rest:
            factors.append((rest, reduced))
        else:
            result *= int(reduced)
            if result == 0:
                return 0
    return int(result)


def _expand(table: np.ndarray, scope: tuple, target: list) -> np.ndarray:
    """View ``table`` (axes labelled by ``scope``) broadcastable over ``target``."""
    present = sorted(scope, key=target.index)
    table = np.transpose(table, [scope.index(u) for u in present])
    shape = [table.shape[present.index(u)] if u in present else 1 for u in target]
    return table.reshape(shape)


def count_interior(g: Graph, n: int, method: str = "auto",
                   max_states: int = DEFAULT_MAX_STATES) -> int:
    """Points with 1 <= a[i] <= n-1 and a[i] + a[j] <= n-1 on edges."""
    if n < 1:
        raise ValueError("interior counts need n >= 1")
    # shift a -> a - 1: a in {0..n-2}, a[i] + a[j] <= n-3
    return _dispatch(g, n - 2, n - 3, method, max_states)


def _dispatch(g: Graph, top: int, edge_bound: int, method: str, max_states: int) -> int:
    if method not in METHODS:
        raise ValueError(f"unknown counting method {method!r}")
    if method == "brute" or (method == "auto" and (max(top, 0) + 1) ** g.m <= max_states):
        return _brute(g, top, edge_bound, max_states)
    return _elim(g, top, edge_bound, None, DEFAULT_MAX_TABLE)


def count_auto(g: Graph, n: int, method: str = "auto",
               max_states: int = DEFAULT_MAX_STATES) -> int:
    """WG(n) with the engine picked by estimated cost (brute iff (n+1)^m <= max_states)."""
    if n < 0:
        raise ValueError("weight bound must be nonnegative")
    return _dispatch(g, n, n, method, max_states)


def count(query: CountQuery, method: str = "auto", max_states: int = DEFAULT_MAX_STATES) -> int:
    if query.region == "closure":
        return count_auto(query.graph, query.n, method, max_states)
    if query.region == "interior":
        return count_interior(query.graph, query.n, method, max_states)
    raise ValueError(f"unknown region {query.region!r}")


def series(g: Graph, terms: int, method: str = "auto",
           max_states: int = DEFAULT_MAX_STATES, workers: int = 1) -> list[int]:
    """[WG(0), ..., WG(terms-1)]; entries may be evaluated on worker threads."""
    if terms < 1:
        raise ValueError("series needs at least one term")
    if workers <= 1:
        return [count_auto(g, n, method, max_states) for n in range(terms)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda n: count_auto(g, n, method, max_states), range(terms)))
