"""Exact densest-subgraph computation via parametric minimum cuts.

Feasibility of "is there a subgraph denser than num/den?" reduces to a
max-flow instance with integer capacities, so the whole search stays in
exact arithmetic: binary search over Fraction thresholds narrows the
optimum to an interval shorter than 1/n^2, inside which at most one
achievable density exists, and the final witness is re-measured exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, components, density


class FlowNetwork:
    """Dinic max-flow on integer capacities, with residual-side extraction."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> None:
        if capacity < 0:
            raise ValueError("capacity must be nonnegative")
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for e in self.head[v]:
                u = self.to[e]
                if self.cap[e] > 0 and level[u] < 0:
                    level[u] = level[v] + 1
                    q.append(u)
        return level

    def max_flow(self, s: int, t: int) -> int:
        if s == t:
            raise ValueError("source equals sink")
        to, cap, head = self.to, self.cap, self.head
        total = 0
        while True:
            level = self._levels(s)
            if level[t] < 0:
                return total
            it = [0] * self.n
            path: list[int] = []  # edge indices from s to the current vertex
            v = s
            while True:
                if v == t:
                    pushed = min(cap[e] for e in path)
                    for e in path:
                        cap[e] -= pushed
                        cap[e ^ 1] += pushed
                    total += pushed
                    for i, e in enumerate(path):
                        if cap[e] == 0:
                            del path[i:]
                            break
                    v = to[path[-1]] if path else s
                    continue
                advanced = False
                while it[v] < len(head[v]):
                    e = head[v][it[v]]
                    u = to[e]
                    if cap[e] > 0 and level[u] == level[v] + 1:
                        path.append(e)
                        v = u
                        advanced = True
                        break
                    it[v] += 1
                if not advanced:
                    if v == s:
                        break
                    level[v] = -1
                    e = path.pop()
                    v = to[e ^ 1]

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from s in the residual graph (a min cut side)."""
        seen = {s}
        q = deque([s])
        while q:
            v = q.popleft()
            for e in self.head[v]:
                u = self.to[e]
                if self.cap[e] > 0 and u not in seen:
                    seen.add(u)
                    q.append(u)
        return seen


@dataclass(frozen=True)
class DensestResult:
    subgraph: tuple[int, ...]
    density: Fraction
    connected_variant: tuple[int, ...]


def has_subgraph_denser_than(
    g: Graph, threshold: Fraction | int
) -> tuple[int, ...] | None:
    """A vertex set of density strictly above threshold, or None.

    Standard cut construction: source feeds each positive edge 2w*den,
    edges feed their endpoints unbounded, each vertex pays num to the sink.
    A cut below 2W*den leaves a witness on the source side.
    """
    threshold = Fraction(threshold)
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    pos = [
        (u, v, g.weights[i] if g.weighted else 1)
        for i, (u, v) in enumerate(g.edges)
        if not g.weighted or g.weights[i] > 0
    ]
    if not pos:
        return None
    num, den = threshold.numerator, threshold.denominator
    total_w = sum(w for _, _, w in pos)
    source = 0
    sink = 1 + g.n + len(pos)
    net = FlowNetwork(sink + 1)
    inf = 2 * total_w * den + 1
    for i, (u, v, w) in enumerate(pos):
        enode = 1 + g.n + i
        net.add_edge(source, enode, 2 * w * den)
        net.add_edge(enode, 1 + u, inf)
        net.add_edge(enode, 1 + v, inf)
    for v in range(g.n):
        net.add_edge(1 + v, sink, num)
    flow = net.max_flow(source, sink)
    if flow >= 2 * total_w * den:
        return None
    side = net.source_side(source)
    witness = tuple(v for v in range(g.n) if (1 + v) in side)
    assert witness, "feasible cut must leave vertices on the source side"
    return witness


def densest_subgraph(g: Graph) -> DensestResult:
    """The exact maximum-density vertex set, plus a connected one matching it.

    Every connected component of a maximizer is itself a maximizer, so the
    connected variant (the component holding the smallest vertex) has the
    same density.
    """
    witness = has_subgraph_denser_than(g, 0)
    if witness is None:
        raise ValueError("density maximization undefined at zero edges")
    lo = Fraction(0)
    hi = Fraction(max(g.total_weight, 1))
    resolution = Fraction(1, g.n * g.n)
    while hi - lo > resolution:
        mid = (lo + hi) / 2
        found = has_subgraph_denser_than(g, mid)
        if found is None:
            hi = mid
        else:
            lo = mid
            witness = found
    best = density(g, witness)
    assert best.denominator <= g.n
    assert has_subgraph_denser_than(g, best) is None
    connected = components(g, witness)[0]
    assert density(g, connected) == best
    return DensestResult(subgraph=witness, density=best, connected_variant=connected)


def densest_connected_subgraph(g: Graph) -> tuple[int, ...]:
    """A connected vertex set attaining the global maximum density."""
    return densest_subgraph(g).connected_variant
