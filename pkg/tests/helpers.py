"""Shared test oracles, written independently of the library internals."""

from __future__ import annotations

import random
from itertools import permutations

from xorkron import Graph, new_graph


def naive_cross_like(k: Graph, p: int, q: int) -> bool:
    """Reference membership check: plain loops over an edge set dictionary."""
    edges = {frozenset(e) for e in k.edges()}

    def adj(u: int, v: int) -> bool:
        return frozenset((u, v)) in edges

    for u in range(p * q):
        for v in range(u + 1, p * q):
            if not adj(u, v):
                continue
            i, j = divmod(u, q)
            i2, j2 = divmod(v, q)
            if i == i2 or j == j2:
                return False
            if not adj(i * q + j2, i2 * q + j):
                return False
    return True


def brute_valid_labelings(k: Graph, p: int, q: int) -> list[tuple[tuple[int, int], ...]]:
    """Every cell assignment (over all (pq)! bijections) that certifies k.

    Only usable for pq <= 6 or so; this is the ground truth the search and
    its canonical labeling are pinned against.
    """
    all_cells = [(i, j) for i in range(p) for j in range(q)]
    found = []
    for assignment in permutations(all_cells):
        if _assignment_valid(k, assignment, q):
            found.append(tuple(assignment))
    return found


def _assignment_valid(k: Graph, cells, q: int) -> bool:
    position = {cell: v for v, cell in enumerate(cells)}
    for u, v in k.edges():
        i, j = cells[u]
        i2, j2 = cells[v]
        if i == i2 or j == j2:
            return False
        if not k.has_edge(position[(i, j2)], position[(i2, j)]):
            return False
    return True


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return new_graph(n, edges)


def random_nontrivial(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    """Random graph guaranteed to have at least one edge."""
    while True:
        g = random_graph(rng, n, density)
        if g.edge_count:
            return g


def dense_rows(g: Graph) -> list[list[int]]:
    return [[(row >> c) & 1 for c in range(g.n)] for row in g.rows]
