"""Blockwise partial transpose of square 0/1 matrices and the fixed-point test."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class BlockMatrix:
    """Square 0/1 matrix of order n viewed as a p x p grid of q x q blocks.

    Rows are bit-packed ints; bit c of rows[r] is entry (r, c).
    """

    n: int
    p: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError(f"block grid size must be positive, got {self.p}")
        if self.n % self.p:
            raise ValueError(f"block size p={self.p} does not divide order n={self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for r, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {r} has bits outside 0..{self.n - 1}")

    @property
    def q(self) -> int:
        return self.n // self.p

    def entry(self, r: int, c: int) -> int:
        return (self.rows[r] >> c) & 1

    @staticmethod
    def from_graph(g: Graph, p: int) -> BlockMatrix:
        return BlockMatrix(g.n, p, g.rows)


def partial_transpose(m: BlockMatrix) -> BlockMatrix:
    """Transpose each q x q block in place on the p x p block grid.

    Entry (s1*q + r1, s2*q + r2) of the result is entry (s1*q + r2, s2*q + r1)
    of the input: block positions stay put, block contents transpose.
    """
    q = m.q
    rows = [0] * m.n
    for s1 in range(m.p):
        for r1 in range(q):
            acc = 0
            for s2 in range(m.p):
                for r2 in range(q):
                    acc |= m.entry(s1 * q + r2, s2 * q + r1) << (s2 * q + r2)
            rows[s1 * q + r1] = acc
    return BlockMatrix(m.n, m.p, tuple(rows))


def ppt_test(k: Graph, p: int) -> bool:
    """True iff the adjacency matrix equals its blockwise partial transpose.

    Needs p >= 2 and p dividing the vertex count; graphs composed by XOR of
    tensor products with a size-p left factor always pass, but passing does
    not certify membership.
    """
    if p < 2:
        raise ValueError(f"partial-transpose test needs p >= 2, got {p}")
    if k.n % p:
        raise ValueError(f"p={p} does not divide the vertex count {k.n}")
    m = BlockMatrix.from_graph(k, p)
    return partial_transpose(m).rows == m.rows


def format_matrix_text(rows: tuple[int, ...] | list[int], n: int) -> str:
    """One line of n '0'/'1' characters per row; bit c prints at column c."""
    return "\n".join("".join(str((row >> c) & 1) for c in range(n)) for row in rows) + "\n"


def parse_matrix_text(text: str) -> tuple[int, tuple[int, ...]]:
    """Inverse of format_matrix_text; returns (n, rows). Rows must be square."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    n = len(lines)
    rows = []
    for r, ln in enumerate(lines):
        if len(ln) != n:
            raise ValueError(f"row {r} has {len(ln)} columns, expected {n}")
        if set(ln) - {"0", "1"}:
            raise ValueError(f"row {r} has characters other than 0/1")
        rows.append(sum((1 << c) for c, ch in enumerate(ln) if ch == "1"))
    return n, tuple(rows)
