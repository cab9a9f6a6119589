"""Undirected graph primitives shared by every solver in the package.

Vertex sets travel as sorted tuples so identical inputs give identical
outputs everywhere. Induced subgraphs are vertex masks (``within=``)
against a host Graph, not copies: the solvers re-induce constantly and
copying would dominate their runtime. Density comparisons are exact
rationals (`fractions.Fraction`); no float ever drives a decision.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable


class EdgeListError(ValueError):
    """Edge-list parse failure carrying a 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class Graph:
    """Immutable simple undirected graph, optionally integer-weighted.

    Edges are normalized to (u, v) with u < v and stored sorted. Adjacency
    lists are sorted tuples, which fixes every traversal order in the
    package (BFS visits neighbors in ascending id).
    """

    __slots__ = ("n", "edges", "weights", "_adj", "_weight_of", "_wdeg")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        weights: Iterable[int] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        if weights is None:
            wlist = None
            norm.sort()
        else:
            wlist = list(weights)
            if len(wlist) != len(norm):
                raise ValueError("need exactly one weight per edge")
            for w in wlist:
                if not isinstance(w, int) or w < 0:
                    raise ValueError("edge weights must be nonnegative integers")
            pairs = sorted(zip(norm, wlist))
            norm = [e for e, _ in pairs]
            wlist = [w for _, w in pairs]
        seen = set()
        for e in norm:
            if e in seen:
                raise ValueError(f"duplicate edge {e[0]}-{e[1]}")
            seen.add(e)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = tuple(norm)
        self.weights = tuple(wlist) if wlist is not None else None
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        if wlist is None:
            self._weight_of = {e: 1 for e in norm}
        else:
            self._weight_of = dict(zip(norm, wlist))
        wdeg = [0] * n
        for (u, v), w in self._weight_of.items():
            wdeg[u] += w
            wdeg[v] += w
        self._wdeg = tuple(wdeg)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    @property
    def total_weight(self) -> int:
        """Sum of edge weights; equals m when unweighted."""
        return sum(self._weight_of.values())

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def weighted_degree(self, v: int) -> int:
        return self._wdeg[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._weight_of

    def edge_weight(self, u: int, v: int) -> int:
        """Weight of edge uv (1 on unweighted graphs). Errors if absent."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._weight_of[key]
        except KeyError:
            raise ValueError(f"no edge {u}-{v}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.n, self.edges, self.weights))

    def __repr__(self) -> str:
        tag = ", weighted" if self.weighted else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"


def _member_set(g: Graph, within) -> set[int]:
    if within is None:
        return set(range(g.n))
    members = set(within)
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"unknown vertex {v}")
    return members


def induced_weight(g: Graph, s: Iterable[int]) -> int:
    """Total weight of edges with both ends in s (edge count if unweighted)."""
    ss = set(s)
    total = 0
    weight = g.edge_weight
    for v in ss:
        for u in g.neighbors(v):
            if u > v and u in ss:
                total += weight(v, u)
    return total


def density(g: Graph, s: Iterable[int] | None = None) -> Fraction:
    """Exact density 2*w(E(s))/|s| of the subgraph induced by s (default: all of g)."""
    members = _member_set(g, s)
    if not members:
        raise ValueError("empty subgraph has no density")
    return Fraction(2 * induced_weight(g, members), len(members))


def count_edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges with one end in a and the other in b (disjoint sets)."""
    aset, bset = set(a), set(b)
    if aset & bset:
        raise ValueError("edge boundary requires disjoint sets")
    return sum(1 for v in aset for u in g.neighbors(v) if u in bset)


def is_removable(g: Graph, v: int, within: Iterable[int] | None = None) -> bool:
    """True iff deleting v strictly raises the density, i.e. d(v) < sigma/2.

    Both sides are compared by integer cross-multiplication:
    d(v) * |V| < w(E), using weighted degrees on weighted graphs.
    """
    members = _member_set(g, within)
    if v not in members:
        raise ValueError(f"vertex {v} not in the graph")
    if len(members) < 2:
        raise ValueError("removability needs at least two vertices")
    if within is None:
        deg = g.weighted_degree(v)
        total = g.total_weight
    else:
        deg = sum(g.edge_weight(v, u) for u in g.neighbors(v) if u in members)
        total = induced_weight(g, members)
    return deg * len(members) < total


def components(g: Graph, s: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Connected components of g[s], each sorted, ordered by smallest member."""
    members = _member_set(g, s)
    out = []
    unseen = set(members)
    for start in sorted(members):
        if start not in unseen:
            continue
        comp = {start}
        unseen.discard(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u in unseen:
                    unseen.discard(u)
                    comp.add(u)
                    queue.append(u)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph, s: Iterable[int] | None = None) -> bool:
    members = _member_set(g, s)
    if not members:
        return False
    return len(components(g, members)) == 1


def cut_vertices(g: Graph, within: Iterable[int] | None = None) -> tuple[int, ...]:
    """Articulation vertices of the (connected) induced graph, sorted.

    Iterative lowlink DFS; errors if the induced graph is disconnected.
    """
    members = _member_set(g, within)
    if not members:
        raise ValueError("graph is empty")
    restrict = within is not None
    root = min(members)
    disc: dict[int, int] = {root: 0}
    low = {root: 0}
    cuts: set[int] = set()
    counter = 1
    root_children = 0

    def neighbors_in(v):
        if not restrict:
            return g.neighbors(v)
        return [u for u in g.neighbors(v) if u in members]

    frames = [(root, -1, iter(neighbors_in(root)))]
    while frames:
        v, parent, it = frames[-1]
        pushed = False
        for u in it:
            if u == parent:
                continue
            if u in disc:
                if disc[u] < low[v]:
                    low[v] = disc[u]
            else:
                disc[u] = low[u] = counter
                counter += 1
                if v == root:
                    root_children += 1
                frames.append((u, v, iter(neighbors_in(u))))
                pushed = True
                break
        if not pushed:
            frames.pop()
            if frames:
                pv = frames[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if pv != root and low[v] >= disc[pv]:
                    cuts.add(pv)
    if len(disc) != len(members):
        raise ValueError("graph is disconnected")
    if root_children >= 2:
        cuts.add(root)
    return tuple(sorted(cuts))


def densest_component_after(
    g: Graph, v: int, within: Iterable[int] | None = None
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Densest component of g - v, plus the same set with v re-attached.

    v must be a cut vertex of the (connected) graph; density ties go to the
    component containing the smallest vertex id.
    """
    members = _member_set(g, within)
    if v not in members:
        raise ValueError(f"vertex {v} not in the graph")
    rest = members - {v}
    comps = components(g, rest)
    if len(comps) < 2:
        raise ValueError(f"vertex {v} is not a cut vertex")
    best = comps[0]
    best_d = density(g, best)
    for comp in comps[1:]:
        d = density(g, comp)
        if d > best_d:
            best, best_d = comp, d
    return best, tuple(sorted(best + (v,)))


def _bfs_fill(g: Graph, seed: set[int], target: int, members: set[int]) -> set[int]:
    # Breadth-first growth, neighbors in ascending id; queue starts sorted.
    chosen = set(seed)
    queue = deque(sorted(chosen))
    while queue and len(chosen) < target:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u in chosen or u not in members:
                continue
            chosen.add(u)
            queue.append(u)
            if len(chosen) == target:
                break
    if len(chosen) < target:
        raise ValueError("cannot grow the set to the requested size")
    return chosen


def expand_to_k(
    g: Graph, s: Iterable[int], k: int, within: Iterable[int] | None = None
) -> tuple[int, ...]:
    """Grow connected g[s] to exactly k vertices by BFS, ids ascending."""
    members = _member_set(g, within)
    sset = set(s)
    if not sset:
        raise ValueError("cannot expand an empty set")
    if not sset <= members:
        raise ValueError("seed set leaves the graph")
    if len(sset) > k:
        raise ValueError(f"seed has {len(sset)} vertices, more than k={k}")
    if k > len(members):
        raise ValueError(f"k={k} exceeds the graph size {len(members)}")
    return tuple(sorted(_bfs_fill(g, sset, k, members)))


def j_attachment(
    g: Graph, s: Iterable[int], j: int, within: Iterable[int] | None = None
) -> tuple[int, ...]:
    """j outside vertices maximizing the edge boundary into s.

    Vertices are ranked by neighbor count into s (ties: smaller id). When
    zero-count vertices are needed the remainder is grown breadth-first from
    everything picked so far, so each choice keeps a neighbor among s or the
    earlier picks: if g[s] is connected, so is the union. The result
    satisfies |members| * [s, picked] >= j * [s, everything outside s].
    """
    members = _member_set(g, within)
    sset = set(s)
    if not sset:
        raise ValueError("attachment needs a nonempty base set")
    if not sset <= members:
        raise ValueError("base set leaves the graph")
    if not 1 <= j <= len(members) - len(sset):
        raise ValueError(f"j={j} out of range 1..{len(members) - len(sset)}")
    counts = {}
    for v in members:
        if v in sset:
            continue
        c = sum(1 for u in g.neighbors(v) if u in sset)
        if c:
            counts[v] = c
    ranked = sorted(counts, key=lambda v: (-counts[v], v))
    if j <= len(ranked):
        return tuple(sorted(ranked[:j]))
    base = sset | set(ranked)
    grown = _bfs_fill(g, base, len(base) + (j - len(ranked)), members)
    return tuple(sorted(grown - sset))


def parse_edge_list(text: str) -> Graph:
    """Parse the package's edge-list format.

    Line 1 is ``n m`` or ``n m weighted``; the next m lines are ``u v`` or
    ``u v w`` with 0-based vertex ids and nonnegative integer weights.
    Violations raise EdgeListError with the offending line number.
    """
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise EdgeListError(1, "expected header 'n m' or 'n m weighted'")
    head = lines[0].split()
    if len(head) not in (2, 3) or (len(head) == 3 and head[2] != "weighted"):
        raise EdgeListError(1, "expected header 'n m' or 'n m weighted'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError(1, "vertex and edge counts must be integers") from None
    if n < 0 or m < 0:
        raise EdgeListError(1, "counts must be nonnegative")
    weighted = len(head) == 3
    fields = 3 if weighted else 2
    edges: list[tuple[int, int]] = []
    weights: list[int] = []
    seen: set[tuple[int, int]] = set()
    for i in range(m):
        lineno = i + 2
        if lineno > len(lines):
            raise EdgeListError(lineno, f"expected {m} edges, file ends after {i}")
        tok = lines[lineno - 1].split()
        if len(tok) != fields:
            raise EdgeListError(lineno, f"expected {fields} fields, got {len(tok)}")
        try:
            vals = [int(t) for t in tok]
        except ValueError:
            raise EdgeListError(lineno, "fields must be integers") from None
        u, v = vals[0], vals[1]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(lineno, f"vertex id out of range 0..{n - 1}")
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListError(lineno, f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
        if weighted:
            if vals[2] < 0:
                raise EdgeListError(lineno, "weight must be nonnegative")
            weights.append(vals[2])
    for lineno in range(m + 2, len(lines) + 1):
        if lines[lineno - 1].strip():
            raise EdgeListError(lineno, f"unexpected content after {m} edges")
    return Graph(n, edges, weights if weighted else None)


def format_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; output round-trips to an equal Graph."""
    head = f"{g.n} {g.m} weighted" if g.weighted else f"{g.n} {g.m}"
    lines = [head]
    for idx, (u, v) in enumerate(g.edges):
        if g.weighted:
            lines.append(f"{u} {v} {g.weights[idx]}")
        else:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
