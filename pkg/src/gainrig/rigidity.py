"""Symmetric frameworks, orbit matrices and rigidity verdicts.

A Framework pairs a gain graph (the quotient under an order-n rotation about
the origin) with one representative position per vertex orbit and a norm.
Gains name the identity (+1) and the half turn (-1), so graphs with a -1
gain need even group order.  The covering framework has vertex copies
(v, t) at the t-th rotation image of p_v; a quotient edge (u, v, gain) lifts
to the covering edges {(u, t), (v, t + shift(gain))}.

Character-indexed orbit matrices: for character index j, the gain -1 acts by
the scalar (-1)^j (always real), and its rotation is -I, so the row of edge
(u, v, gain) with support covector phi is
    +phi on u's columns,  -chi_j(gain) * (phi o tau(gain)) on v's columns,
which for gain -1 is +(-1)^j * phi on v.  A loop row is (1 + (-1)^j) * phi:
doubled for even j, zero for odd j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .graph import Edge, GainGraph
from .linalg import matrix_rank
from .norms import ConeBoundary, LpNorm, Norm, NormError, PolyhedralNorm, ZeroVector

Point = tuple


class FrameworkError(ValueError):
    pass


class NotWellPositioned(FrameworkError):
    pass


@dataclass(frozen=True)
class Framework:
    graph: GainGraph
    positions: tuple[Point, ...]
    norm: Norm
    group_order: int = 2

    def __post_init__(self):
        g, n = self.graph, self.group_order
        if len(self.positions) != g.n:
            raise FrameworkError("one position per vertex orbit required")
        d = self.norm.dimension
        if any(len(p) != d for p in self.positions):
            raise FrameworkError(f"positions must have dimension {d}")
        if n < 1:
            raise FrameworkError("group order must be positive")
        if n % 2 == 1 and any(e.gain == -1 for e in g.edges):
            raise FrameworkError(
                "half-turn gains require even group order"
            )
        if any(all(c == 0 for c in p) for p in self.positions):
            raise FrameworkError("no vertex may sit at the rotation centre")
        pts = set()
        for p in self.positions:
            for q in (tuple(p), tuple(-c for c in p)):
                if q in pts:
                    raise FrameworkError("covering positions must be distinct")
            pts.add(tuple(p))
            if n % 2 == 0:
                pts.add(tuple(-c for c in p))

    def edge_delta(self, e: Edge) -> tuple:
        """Difference vector of the representative covering edge of e."""
        pu, pv = self.positions[e.u], self.positions[e.v]
        if e.gain == -1:
            pv = tuple(-c for c in pv)
        return tuple(a - b for a, b in zip(pu, pv))


def well_positioned(fw: Framework) -> bool:
    for e in fw.graph.edges:
        try:
            fw.norm.support_covector(fw.edge_delta(e))
        except NormError:
            return False
    return True


def edge_covectors(fw: Framework) -> list[tuple]:
    """Support covector per edge orbit; raises if not well-positioned."""
    out = []
    for e in fw.graph.edges:
        try:
            out.append(fw.norm.support_covector(fw.edge_delta(e)))
        except (ZeroVector, ConeBoundary) as exc:
            raise NotWellPositioned(f"edge {e.as_list()}: {exc}") from exc
    return out


def _rotation(order: int, t: int):
    """Matrix of the t-th power of the 2D rotation by 2*pi/order; exact for
    orders 1, 2, 4, floating point otherwise."""
    t %= order
    quarter = {
        0: ((1, 0), (0, 1)),
        1: ((0, -1), (1, 0)),
        2: ((-1, 0), (0, -1)),
        3: ((0, 1), (-1, 0)),
    }
    if order == 1:
        return quarter[0]
    if order == 2:
        return quarter[0] if t == 0 else quarter[2]
    if order == 4:
        return quarter[t]
    ang = 2.0 * math.pi * t / order
    c, s = math.cos(ang), math.sin(ang)
    return ((c, -s), (s, c))


def _apply(mat, p):
    return tuple(sum(row[i] * p[i] for i in range(len(p))) for row in mat)


def covering_rigidity_matrix(fw: Framework) -> list[list]:
    """Plain rigidity matrix of the order-n covering framework.

    Covering vertex (v, t) sits at the t-th rotation image of p_v and maps
    to column block v * n + t; a gain of -1 shifts the copy index by n / 2.
    Duplicate lifted edges (loops close up after n/2 shifts) are deduplicated.
    """
    g, n = fw.graph, fw.group_order
    d = fw.norm.dimension
    if d != 2 and n > 1:
        raise FrameworkError("rotational covering only supported in the plane")
    pos = {
        (v, t): _apply(_rotation(n, t), fw.positions[v])
        for v in range(g.n)
        for t in range(n)
    }
    shift = {1: 0, -1: n // 2}
    lifted = set()
    for e in g.edges:
        for t in range(n):
            a = (e.u, t)
            b = (e.v, (t + shift[e.gain]) % n)
            lifted.add(frozenset((a, b)) if a != b else frozenset((a,)))
    col = {(v, t): (v * n + t) * d for v in range(g.n) for t in range(n)}
    rows = []
    for pair in sorted(lifted, key=lambda s: sorted(s)):
        pts = sorted(pair)
        if len(pts) == 1:
            raise FrameworkError("degenerate covering edge")
        a, b = pts
        delta = tuple(x - y for x, y in zip(pos[a], pos[b]))
        try:
            phi = fw.norm.support_covector(delta)
        except (ZeroVector, ConeBoundary) as exc:
            raise NotWellPositioned(f"covering edge {a}-{b}: {exc}") from exc
        row = [0] * (g.n * n * d)
        for i in range(d):
            row[col[a] + i] += phi[i]
            row[col[b] + i] -= phi[i]
        rows.append(row)
    return rows


def orbit_matrix(fw: Framework, j: int) -> list[list]:
    """Character-j orbit matrix: |E0| rows by d*|V0| columns."""
    n = fw.group_order
    if not 0 <= j < n:
        raise FrameworkError(f"character index {j} out of range for order {n}")
    d = fw.norm.dimension
    g = fw.graph
    chi_minus = (-1) ** j  # character value on the half turn
    rows = []
    for e, phi in zip(g.edges, edge_covectors(fw)):
        row = [0] * (d * g.n)
        # +phi on u; -chi(gain) * (phi o tau(gain)) on v, where tau(-1) = -I.
        vcoef = -1 if e.gain == 1 else chi_minus
        for i in range(d):
            row[d * e.u + i] += phi[i]
            row[d * e.v + i] += vcoef * phi[i]
        rows.append(row)
    return rows


def trivial_dim(n: int, j: int, d: int = 2) -> int:
    """Dimension of the character-j space of trivial (translational) motions
    for an order-n rotation, minimal rigid-motion space of dimension d."""
    if n < 1 or d < 2 or not 0 <= j < n:
        raise FrameworkError("need n >= 1, d >= 2, 0 <= j < n")
    dim = d - 2 if j == 0 else 0
    if j % n == 1 % n:
        dim += 1
    if j % n == (n - 1) % n:
        dim += 1
    return dim


@dataclass(frozen=True)
class RigidityReport:
    character: int
    rank: int
    edge_count: int
    dof: int  # d * |V0|
    trivial: int
    full: bool
    rigid: bool
    independent: bool
    isostatic: bool

    @property
    def flex_dim(self) -> int:
        return self.dof - self.rank

    def describe(self) -> str:
        verdict = (
            "isostatic" if self.isostatic
            else "rigid (dependent)" if self.rigid
            else "independent (flexible)" if self.independent
            else "flexible and dependent"
        )
        return (
            f"character {self.character}: rank {self.rank}, "
            f"{self.edge_count} edge orbits, {self.dof} dof, "
            f"trivial dim {self.trivial} -> {verdict}"
        )


def analyse(fw: Framework, j: int) -> RigidityReport:
    rows = orbit_matrix(fw, j)
    rank = matrix_rank(rows) if rows else 0
    d = fw.norm.dimension
    g = fw.graph
    triv = trivial_dim(fw.group_order, j, d)
    dof = d * g.n
    rigid = rank == dof - triv
    independent = rank == len(g.edges)
    return RigidityReport(
        character=j,
        rank=rank,
        edge_count=len(g.edges),
        dof=dof,
        trivial=triv,
        full=True,  # automatic for the supported (minimal) norms
        rigid=rigid,
        independent=independent,
        isostatic=rigid and independent and len(g.edges) == dof - triv,
    )
