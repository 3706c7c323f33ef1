"""Bouquets and the Cayley-Serre multigraphs X(Z/l^n Z, S, i_n) above them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InsufficientPrecision, ParseError
from .seeds import SeedSpec


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph; ``edges`` maps ``(u, v)`` with ``u <= v`` to a multiplicity."""
    vertex_count: int
    edges: dict = field(hash=False)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        clean = {}
        for (u, v), m in self.edges.items():
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                key = (min(u, v), max(u, v))
                clean[key] = clean.get(key, 0) + m
        object.__setattr__(self, "edges", dict(sorted(clean.items())))

    def multiplicity(self, u, v) -> int:
        return self.edges.get((min(u, v), max(u, v)), 0)

    def edge_count(self) -> int:
        return sum(self.edges.values())

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for (u, v), m in self.edges.items():
            deg[u] += m
            deg[v] += m
        return deg

    def neighbours(self) -> list[list[int]]:
        adj = [[] for _ in range(self.vertex_count)]
        for (u, v) in self.edges:
            if u != v:
                adj[u].append(v)
                adj[v].append(u)
        return adj


def bouquet(t: int) -> Multigraph:
    if t < 1:
        raise ValueError("a bouquet needs at least one loop")
    return Multigraph(1, {(0, 0): t})


def reduce_seed(seed, ell: int, n: int) -> int:
    """Image of the seed in Z/l^n Z."""
    if n == 0:
        return 0
    try:
        return seed.resolve(ell, n).residue
    except ArithmeticError as exc:
        raise InsufficientPrecision(f"cannot reduce {seed} mod {ell}^{n}: {exc}") from exc


def build_cayley_serre(spec: SeedSpec, n: int) -> Multigraph:
    """Level-n graph: vertices Z/l^n, one edge {v, v + i_n(s)} per vertex and seed."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    size = spec.prime ** n
    edges = {}
    for s in spec.seeds:
        c = reduce_seed(s, spec.prime, n)
        for v in range(size):
            w = (v + c) % size
            key = (v, w) if v <= w else (w, v)
            edges[key] = edges.get(key, 0) + 1
    return Multigraph(size, edges)


def laplacian(g: Multigraph) -> list[list[int]]:
    """Degree minus adjacency; loops contribute nothing."""
    n = g.vertex_count
    L = [[0] * n for _ in range(n)]
    for (u, v), m in g.edges.items():
        if u == v:
            continue
        L[u][v] -= m
        L[v][u] -= m
        L[u][u] += m
        L[v][v] += m
    return L


def is_connected(g: Multigraph) -> bool:
    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    adj = g.neighbours()
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return all(seen)


def write_edge_list(g: Multigraph) -> str:
    lines = [f"vertices {g.vertex_count}"]
    lines += [f"{u} {v} {m}" for (u, v), m in g.edges.items()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Multigraph:
    count = None
    edges = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if count is None:
            if len(parts) != 2 or parts[0] != "vertices":
                raise ParseError("expected header 'vertices <count>'", lineno)
            count = int(parts[1])
            continue
        if len(parts) != 3:
            raise ParseError("expected 'u v m'", lineno)
        u, v, m = map(int, parts)
        key = (min(u, v), max(u, v))
        edges[key] = edges.get(key, 0) + m
    if count is None:
        raise ParseError("empty edge list")
    return Multigraph(count, edges)
