"""Simple graphs over ring elements: zero-divisor graphs and the
complemented / uniquely-complemented machinery.

Two vertices are *orthogonal* when they are adjacent and share no common
neighbor (the edge lies in no triangle); they are *similar* when they are
non-adjacent with identical neighborhoods. A graph is *complemented* when
every vertex has an orthogonal partner, and *uniquely complemented* when
additionally all orthogonal partners of a vertex are pairwise similar.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Mapping

import numpy as np

from .errors import ImproperIdealError, UnknownVertexError
from .ideals import Ideal
from .rings import FiniteRing, zero_divisors


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


class SimpleGraph:
    """Undirected loop-free graph on integer vertex keys with display labels.

    Vertices are kept in ascending key order, which makes every exported
    artifact byte-deterministic. Immutable after construction.
    """

    def __init__(self, vertices: Iterable[int], labels: Mapping[int, str], edges, name: str = ""):
        vs = sorted(int(v) for v in vertices)
        if len(vs) != len(set(vs)):
            raise ValueError("duplicate vertex keys")
        self.name = str(name)
        self.vertices = tuple(vs)
        self.labels = {v: str(labels[v]) for v in vs}
        nbrs: dict[int, set[int]] = {v: set() for v in vs}
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError("self-loops are not allowed")
            if a not in nbrs or b not in nbrs:
                raise UnknownVertexError(f"edge ({a},{b}) uses an unknown vertex")
            nbrs[a].add(b)
            nbrs[b].add(a)
        self._nbrs = {v: frozenset(s) for v, s in nbrs.items()}
        self._complements: dict[int, tuple[int, ...]] | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._nbrs.values()) // 2

    def edge_list(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self.vertices for b in sorted(self._nbrs[a]) if a < b]

    def has_vertex(self, v: int) -> bool:
        return v in self._nbrs

    def _require(self, v: int) -> None:
        if v not in self._nbrs:
            raise UnknownVertexError(f"vertex {v!r} is not in the graph")

    def neighbors(self, v: int) -> frozenset[int]:
        self._require(v)
        return self._nbrs[v]

    def adjacent(self, a: int, b: int) -> bool:
        self._require(a)
        self._require(b)
        return b in self._nbrs[a]

    def are_orthogonal(self, a: int, b: int) -> bool:
        """Adjacent with no common neighbor."""
        self._require(a)
        self._require(b)
        if a == b:
            raise ValueError("orthogonality needs two distinct vertices")
        return b in self._nbrs[a] and not (self._nbrs[a] & self._nbrs[b])

    def are_similar(self, a: int, b: int) -> bool:
        """Non-adjacent with identical neighborhoods; a vertex is similar to itself."""
        self._require(a)
        self._require(b)
        if a == b:
            return True
        return b not in self._nbrs[a] and self._nbrs[a] == self._nbrs[b]

    def complements(self, a: int) -> tuple[int, ...]:
        """All vertices orthogonal to ``a``, ascending."""
        self._require(a)
        if self._complements is None:
            comp: dict[int, list[int]] = {v: [] for v in self.vertices}
            for x, y in self.edge_list():
                if not (self._nbrs[x] & self._nbrs[y]):
                    comp[x].append(y)
                    comp[y].append(x)
            self._complements = {v: tuple(sorted(ws)) for v, ws in comp.items()}
        return self._complements[a]

    def is_complemented(self) -> bool:
        """Every vertex has an orthogonal partner (vacuously true when empty)."""
        return all(self.complements(v) for v in self.vertices)

    def is_uniquely_complemented(self) -> bool:
        """Complemented, and the complements of each vertex are pairwise similar."""
        for a in self.vertices:
            comp = self.complements(a)
            if not comp:
                return False
            for b, c in itertools.combinations(comp, 2):
                if not self.are_similar(b, c):
                    return False
        return True

    def is_complete(self) -> tuple[bool, int]:
        """(all distinct pairs adjacent, vertex count) -- i.e. whether this is K^n."""
        n = len(self.vertices)
        return (self.edge_count == n * (n - 1) // 2, n)

    def is_connected(self) -> tuple[bool, int | None]:
        """(connected, diameter); the empty graph counts as connected with diameter 0."""
        if not self.vertices:
            return True, 0
        diameter = 0
        for s in self.vertices:
            dist = {s: 0}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._nbrs[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            if len(dist) < len(self.vertices):
                return False, None
            diameter = max(diameter, max(dist.values()))
        return True, diameter

    def to_dot(self) -> str:
        lines = [f"graph {_dot_quote(self.name)} {{"]
        for v in self.vertices:
            lines.append(f"  {_dot_quote(self.labels[v])};")
        for a, b in self.edge_list():
            lines.append(f"  {_dot_quote(self.labels[a])} -- {_dot_quote(self.labels[b])};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return {
            "vertices": [self.labels[v] for v in self.vertices],
            "edges": [[pos[a], pos[b]] for a, b in self.edge_list()],
        }

    def __repr__(self) -> str:
        return f"SimpleGraph({self.name!r}, vertices={self.vertex_count}, edges={self.edge_count})"


def gamma(r: FiniteRing) -> SimpleGraph:
    """The zero-divisor graph: vertices are the nonzero zero-divisors,
    distinct x and y adjacent exactly when x*y = 0."""
    verts = sorted(zero_divisors(r).members - {r.zero})
    varr = np.asarray(verts, dtype=np.intp)
    edges: list[tuple[int, int]] = []
    if verts:
        sub = r.mul_table[np.ix_(varr, varr)] == r.zero
        ii, jj = np.nonzero(np.triu(sub, 1))
        edges = [(int(varr[i]), int(varr[j])) for i, j in zip(ii.tolist(), jj.tolist())]
    labels = {v: r.element_names[v] for v in verts}
    return SimpleGraph(verts, labels, edges, name=f"Gamma({r.spec})")


def gamma_ideal(r: FiniteRing, i: Ideal) -> SimpleGraph:
    """The ideal-based zero-divisor graph: vertices are the x outside I
    with x*y in I for some y outside I; distinct x and y adjacent exactly
    when x*y lands in I. Coincides with ``gamma`` at the zero ideal."""
    if not i.is_proper:
        raise ImproperIdealError("the ideal-based graph needs a proper ideal")
    in_i = np.zeros(r.order, dtype=bool)
    in_i[list(i.members)] = True
    prod_in = in_i[r.mul_table]
    outside = ~in_i
    has_partner = (prod_in & outside[None, :]).any(axis=1)
    varr = np.flatnonzero(outside & has_partner)
    sub = prod_in[np.ix_(varr, varr)]
    ii, jj = np.nonzero(np.triu(sub, 1))
    edges = [(int(varr[i]), int(varr[j])) for i, j in zip(ii.tolist(), jj.tolist())]
    verts = varr.tolist()
    labels = {v: r.element_names[v] for v in verts}
    gens = i.generators if i.generators else (r.zero,)
    name = f"Gamma_{{{','.join(str(g) for g in gens)}}}({r.spec})"
    return SimpleGraph(verts, labels, edges, name=name)
