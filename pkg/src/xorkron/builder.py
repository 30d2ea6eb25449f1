"""Constructive embedding: any graph g yields a certified member on g.n^2 vertices.

For each edge {i, j} of g the built graph carries the cross pair
{(i,i),(j,j)} and {(i,j),(j,i)} on the n x n grid. The diagonal cells then
induce a copy of g, each edge contributes one off-diagonal K2, and everything
else stays isolated: g disjoint-union m K2 disjoint-union (n^2 - n - 2m) K1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graphs import Graph, standard_graph
from .membership import GridLabeling, GridShape, graph_from_quadruples

CANONICAL_ORDER_LIMIT = 8


@dataclass(frozen=True)
class ComponentSummary:
    """Multiset of (order, edge count, degree sequence) over the components.

    entries are sorted; orders must add up to total_vertices.
    """

    total_vertices: int
    entries: tuple[tuple[int, int, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        if sum(order for order, _, _ in self.entries) != self.total_vertices:
            raise ValueError("component orders do not sum to the vertex count")


def component_summary(g: Graph) -> ComponentSummary:
    entries = []
    for comp in g.components():
        sub = g.induced(comp)
        entries.append((sub.n, sub.edge_count, sub.degree_sequence()))
    return ComponentSummary(g.n, tuple(sorted(entries)))


def build_ppt_graph(g: Graph) -> tuple[Graph, GridLabeling]:
    """Member of shape (n, n) whose grid diagonal carries a copy of g.

    Returns the graph together with the identity labeling certifying where
    the grid cells sit. Needs n >= 2 so the shape is a valid grid.
    """
    n = g.n
    if n < 2:
        raise ValueError(f"construction needs at least 2 vertices, got {n}")
    shape = GridShape(n, n)
    quads = [(u, v, u, v) for u, v in g.edges()]
    return graph_from_quadruples(shape, quads), GridLabeling.identity(shape)


def verify_components(h: Graph, g: Graph) -> bool:
    """True iff h decomposes as g plus one K2 per edge of g plus isolated rest.

    Components are compared exactly, by canonical form up to isomorphism, so
    every component must have order at most CANONICAL_ORDER_LIMIT.
    """
    n, m = g.n, g.edge_count
    isolated = n * n - n - 2 * m
    if h.n != n * n or isolated < 0:
        return False
    expected = [canonical_form(g.induced(comp)) for comp in g.components()]
    expected.extend([canonical_form(standard_graph("complete", 2))] * m)
    expected.extend([canonical_form(standard_graph("edgeless", 1))] * isolated)
    actual = [canonical_form(h.induced(comp)) for comp in h.components()]
    return sorted(expected) == sorted(actual)


def canonical_form(g: Graph) -> tuple[int, int]:
    """(order, least packed adjacency over all vertex permutations).

    Equal forms mean isomorphic graphs. Brute force over permutations, so
    only orders up to CANONICAL_ORDER_LIMIT are accepted.
    """
    if g.n > CANONICAL_ORDER_LIMIT:
        raise ValueError(f"canonical form by permutation scan handles order <= {CANONICAL_ORDER_LIMIT}")
    edges = list(g.edges())
    best: int | None = None
    for perm in permutations(range(g.n)):
        acc = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            acc |= 1 << (a * g.n + b)
            acc |= 1 << (b * g.n + a)
        if best is None or acc < best:
            best = acc
    return (g.n, 0 if best is None else best)
