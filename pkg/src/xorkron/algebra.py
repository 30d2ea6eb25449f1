"""Tensor products of graphs and XOR combination of edge sets."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .graphs import Graph


class TensorSummand(NamedTuple):
    """A factor pair whose tensor product contributes one XOR summand."""

    left: Graph
    right: Graph


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Tensor (Kronecker) product: (i, j) ~ (i', j') iff i ~ i' and j ~ j'.

    Vertex (i, j) of the product is index i * h.n + j, so the adjacency
    matrix is the Kronecker product of the factor matrices.
    """
    p, q = g.n, h.n
    rows = [0] * (p * q)
    for i in range(p):
        gi = g.rows[i]
        for j in range(q):
            hj = h.rows[j]
            if not hj:
                continue
            acc = 0
            m = gi
            while m:
                i2 = (m & -m).bit_length() - 1
                m &= m - 1
                acc |= hj << (i2 * q)
            rows[i * q + j] = acc
    return Graph(p * q, rows)


def two_sum(g: Graph, h: Graph) -> Graph:
    """XOR of edge sets on a shared vertex set (symmetric difference)."""
    if g.n != h.n:
        raise ValueError(f"2-sum needs equal vertex counts, got {g.n} and {h.n}")
    return Graph(g.n, [a ^ b for a, b in zip(g.rows, h.rows)])


def tensor_elementary(p: int, q: int, i: int, i2: int, j: int, j2: int) -> Graph:
    """The two-edge graph on the p*q grid with edges {(i,j),(i2,j2)} and {(i,j2),(i2,j)}.

    Requires i < i2 and j < j2; equality in either coordinate would make the
    two grid points collinear and the cross degenerate.
    """
    if not (0 <= i < i2 < p):
        raise ValueError(f"need 0 <= i < i2 < p, got i={i}, i2={i2}, p={p}")
    if not (0 <= j < j2 < q):
        raise ValueError(f"need 0 <= j < j2 < q, got j={j}, j2={j2}, q={q}")
    rows = [0] * (p * q)
    a, b = i * q + j, i2 * q + j2
    c, d = i * q + j2, i2 * q + j
    rows[a] |= 1 << b
    rows[b] |= 1 << a
    rows[c] |= 1 << d
    rows[d] |= 1 << c
    return Graph(p * q, rows)


def tensor_2sum(summands: Sequence[TensorSummand]) -> Graph:
    """XOR together the tensor products of the given factor pairs.

    All left factors must share one vertex count and all right factors
    another, and every factor needs at least one edge.
    """
    if not summands:
        raise ValueError("need at least one summand")
    p = summands[0].left.n
    q = summands[0].right.n
    rows = [0] * (p * q)
    for k, (g, h) in enumerate(summands):
        if g.n != p or h.n != q:
            raise ValueError(
                f"summand {k} has factor sizes ({g.n}, {h.n}), expected ({p}, {q})"
            )
        if g.edge_count == 0 or h.edge_count == 0:
            raise ValueError(f"summand {k} has an edgeless factor")
        prod = tensor_product(g, h)
        rows = [a ^ b for a, b in zip(rows, prod.rows)]
    return Graph(p * q, rows)
