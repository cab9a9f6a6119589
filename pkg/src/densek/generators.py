"""Instance generators with hand-checkable optima, plus a portable PRNG.

Every generator is deterministic in its arguments: the random families use
xorshift64* (update rule below) rather than a platform RNG, so a seed
reproduces the same instance anywhere, and the structured families lay
vertices out in a documented order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .graph import Graph, components, density, save_edge_list

_MASK = (1 << 64) - 1


class Xorshift64Star:
    """xorshift64* generator.

    State update, all arithmetic mod 2^64:
        x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27
    and each step outputs x * 0x2545F4914F6CDD1D (mod 2^64). A zero seed is
    replaced by 0x9E3779B97F4A7C15 so the state never sticks at zero.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = (seed & _MASK) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK

    def bernoulli(self, p: float) -> bool:
        """True with probability p: compares the top 53 bits to floor(p * 2^53)."""
        return (self.next_u64() >> 11) < int(p * (1 << 53))

    def next_below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


@dataclass(frozen=True)
class GapInstance:
    """A generated graph bundled with what is known about its optima.

    known_opt_density is the exact unconstrained optimum for the EX1A/EX1B
    families and a certified lower bound for PLANTED (the planted block's
    own density). known_connected_density is None when nothing is claimed.
    """

    graph: Graph
    k: int
    known_opt_density: Fraction
    known_connected_density: Fraction | None
    family: str
    params: dict[str, Any]

    def save(self, path) -> Path:
        return save_instance(
            self.graph,
            path,
            family=self.family,
            params=self.params,
            k=self.k,
            known_opt=self.known_opt_density,
            known_connected=self.known_connected_density,
        )


def example1a(ell: int) -> GapInstance:
    """ell cliques of size ell chained by long paths; n = ell**3, k = ell**2.

    Clique i occupies ids [i*ell, (i+1)*ell); consecutive cliques are joined
    through a path with ell**2 interior vertices attached at each clique's
    lowest id. The densest k-subgraph gap between unconstrained (clique
    union) and connected solutions grows like ell/3.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    edges = []
    for i in range(ell):
        base = i * ell
        for u in range(ell):
            for v in range(u + 1, ell):
                edges.append((base + u, base + v))
    interior0 = ell * ell
    for i in range(ell - 1):
        inner = range(interior0 + i * ell * ell, interior0 + (i + 1) * ell * ell)
        chain = [i * ell, *inner, (i + 1) * ell]
        edges.extend(
            (a, b) if a < b else (b, a) for a, b in zip(chain, chain[1:])
        )
    graph = Graph(ell**3, edges)
    if ell == 2:
        # the clique union (two disjoint edges, density 1) is beaten by a
        # 4-vertex subtree with 3 edges; enumeration fixes the optimum
        known_opt = Fraction(3, 2)
    else:
        known_opt = Fraction(ell - 1)
    known_connected = Fraction(ell * (ell - 1) + 2 * (ell * ell - ell), ell * ell)
    return GapInstance(
        graph=graph,
        k=ell * ell,
        known_opt_density=known_opt,
        known_connected_density=known_connected,
        family="EX1A",
        params={"ell": ell},
    )


def example1b(ell: int) -> GapInstance:
    """Weighted spider: ell rays of ell edges; only the pendant edges weigh 1.

    n = ell**2 + 1, k = 2*ell. The heaviest k-subgraph is the set of pendant
    edges (weighted density 1); any connected k-subgraph reaches at most one
    pendant edge (weighted density 1/ell). Center is vertex 0; ray i runs
    through ids [1 + i*ell, 1 + (i+1)*ell).
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    edges = []
    weights = []
    for i in range(ell):
        chain = [0, *range(1 + i * ell, 1 + (i + 1) * ell)]
        for a, b in zip(chain, chain[1:]):
            edges.append((a, b))
            weights.append(0)
        weights[-1] = 1  # pendant edge of the ray
    graph = Graph(ell * ell + 1, edges, weights)
    return GapInstance(
        graph=graph,
        k=2 * ell,
        known_opt_density=Fraction(1),
        known_connected_density=Fraction(1, ell),
        family="EX1B",
        params={"ell": ell},
    )


def gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) draw; a disconnected draw is truncated to its largest component.

    Pairs are sampled in lexicographic order from one xorshift64* stream, so
    (n, p, seed) pins the instance. Truncation relabels vertices densely,
    preserving relative order; callers can detect it by the shrunken n.
    Raises if the result has no edges.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = Xorshift64Star(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.bernoulli(p)
    ]
    if not edges:
        raise ValueError("generated graph has no edges")
    graph = Graph(n, edges)
    comps = components(graph)
    if len(comps) == 1:
        return graph
    keep = max(comps, key=len)  # first maximum: lowest smallest-id wins ties
    relabel = {v: i for i, v in enumerate(keep)}
    kept_edges = [
        (relabel[u], relabel[v]) for u, v in graph.edges if u in relabel and v in relabel
    ]
    return Graph(len(keep), kept_edges)


def planted(n: int, k: int, p_in: float, p_out: float, seed: int) -> GapInstance:
    """G(n, p_out) background with a G(k, p_in) block on vertices 0..k-1.

    The block's density is recorded as a certified lower bound on the best
    k-subgraph density (not claimed optimal). A disconnected draw is made
    connected by chaining one edge between component representatives, which
    cannot invalidate the bound.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    for p in (p_in, p_out):
        if not 0.0 <= p <= 1.0:
            raise ValueError("probabilities must lie in [0, 1]")
    rng = Xorshift64Star(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            p = p_in if v < k else p_out
            if rng.bernoulli(p):
                edges.append((u, v))
    graph = Graph(n, edges)
    comps = components(graph)
    if len(comps) > 1:
        for left, right in zip(comps, comps[1:]):
            edges.append((left[0], right[0]))
        graph = Graph(n, edges)
    return GapInstance(
        graph=graph,
        k=k,
        known_opt_density=density(graph, range(k)),
        known_connected_density=None,
        family="PLANTED",
        params={"n": n, "k": k, "p_in": p_in, "p_out": p_out, "seed": seed},
    )


def sidecar_path(path) -> Path:
    return Path(path).with_suffix(".json")


def save_instance(
    graph: Graph,
    path,
    *,
    family: str,
    params: dict[str, Any],
    k: int | None = None,
    known_opt: Fraction | None = None,
    known_connected: Fraction | None = None,
) -> Path:
    """Write the edge-list file plus the JSON sidecar describing it."""
    path = Path(path)
    save_edge_list(graph, path)
    meta = {
        "family": family,
        "params": params,
        "k": k,
        "known_opt_num": known_opt.numerator if known_opt is not None else None,
        "known_opt_den": known_opt.denominator if known_opt is not None else None,
        "known_connected_num": (
            known_connected.numerator if known_connected is not None else None
        ),
        "known_connected_den": (
            known_connected.denominator if known_connected is not None else None
        ),
    }
    side = sidecar_path(path)
    side.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    return side


def load_sidecar(path) -> dict[str, Any] | None:
    side = sidecar_path(path)
    if not side.exists():
        return None
    return json.loads(side.read_text(encoding="utf-8"))
