"""Approximation algorithms for the densest connected k-subgraph.

Every routine returns exactly k vertices inducing a connected subgraph and
recomputes the achieved density as an exact Fraction. Deterministic
throughout: all ties break toward smaller vertex ids, and candidate scans
run in ascending id order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .densest import densest_connected_subgraph
from .graph import (
    Graph,
    components,
    cut_vertices,
    densest_component_after,
    density,
    expand_to_k,
    induced_weight,
    is_connected,
    j_attachment,
)

ALG1 = "ALG1"
ALG3 = "ALG3"
ALG4 = "ALG4"
HUB = "HUB"
WGREEDY = "WGREEDY"
COMBINED = "COMBINED"
_TAGS = frozenset({ALG1, ALG3, ALG4, HUB, WGREEDY, COMBINED})


@dataclass(frozen=True)
class Solution:
    """A connected k-subgraph plus the algorithm tag that produced it."""

    vertices: tuple[int, ...]
    density: Fraction
    algorithm: str
    k: int

    def as_record(self, elapsed_ms: float | None = None) -> dict:
        record = {
            "algorithm": self.algorithm,
            "k": self.k,
            "vertices": list(self.vertices),
            "density_num": self.density.numerator,
            "density_den": self.density.denominator,
        }
        if elapsed_ms is not None:
            record["elapsed_ms"] = elapsed_ms
        return record


def _make_solution(g: Graph, vertices: Iterable[int], tag: str, k: int) -> Solution:
    # Central validity gate: every algorithm's output passes through here.
    vs = tuple(sorted(vertices))
    if tag not in _TAGS:
        raise ValueError(f"unknown algorithm tag {tag!r}")
    if len(vs) != k or len(set(vs)) != k:
        raise ValueError(f"expected {k} distinct vertices, got {vs}")
    if not is_connected(g, vs):
        raise ValueError("solution subgraph is not connected")
    return Solution(vertices=vs, density=density(g, vs), algorithm=tag, k=k)


def _check_even_input(g: Graph, k: int) -> None:
    if g.weighted:
        raise ValueError("this algorithm accepts unweighted graphs only")
    if not 2 <= k <= g.n:
        raise ValueError(f"k={k} out of range 2..{g.n}")
    if k % 2:
        raise ValueError(f"k={k} must be even")
    if not is_connected(g):
        raise ValueError("input graph must be connected")


def _view(g: Graph, within: Iterable[int] | None) -> set[int]:
    if within is None:
        return set(range(g.n))
    view = set(within)
    if not view:
        raise ValueError("empty vertex view")
    if any(not 0 <= v < g.n for v in view):
        raise ValueError("view contains out-of-range vertices")
    return view


def _degrees_in(g: Graph, view: set[int]) -> dict[int, int]:
    return {v: sum(1 for u in g.neighbors(v) if u in view) for v in view}


def _removable_in(view: set[int], deg: dict[int, int], edges: int) -> list[int]:
    # v is removable iff deleting it strictly raises density:
    # 2(m - d(v))/(s - 1) > 2m/s  <=>  d(v) * s < m.
    size = len(view)
    return sorted(v for v in view if deg[v] * size < edges)


def prc1(g: Graph, k: int, within: Iterable[int] | None = None) -> tuple[int, ...]:
    """Half-sized BFS seed plus a half-sized attachment, on peel-stable input.

    Requires a connected view larger than k with no removable vertex; the
    output keeps at least a k/(4*size) share of the view's density.
    """
    if g.weighted:
        raise ValueError("prc1 accepts unweighted graphs only")
    if k < 2 or k % 2:
        raise ValueError(f"k={k} must be even and at least 2")
    view = _view(g, within)
    if len(view) <= k:
        raise ValueError("prc1 needs a vertex view strictly larger than k")
    if not is_connected(g, view):
        raise ValueError("prc1 needs a connected vertex view")
    edges = induced_weight(g, view)
    if _removable_in(view, _degrees_in(g, view), edges):
        raise ValueError("prc1 input must have no removable vertex")
    half = k // 2
    seed = expand_to_k(g, [min(view)], half, within=view)
    attachment = j_attachment(g, seed, half, within=view)
    return tuple(sorted(set(seed) | set(attachment)))


@dataclass(frozen=True)
class Prc2State:
    """Intermediate sets of one contraction run, for invariant checks."""

    surviving: tuple[int, ...]
    removable: tuple[int, ...]
    block_sizes: dict[int, int]
    seed: tuple[int, ...]
    seed_with_blocks: tuple[int, ...]
    seed_with_attachment: tuple[int, ...]


def prc2(
    g: Graph,
    k: int,
    within: Iterable[int] | None = None,
    state_log: list[Prc2State] | None = None,
) -> tuple[int, ...]:
    """Contract dense sides behind their cut vertices, then rebuild k vertices.

    Requires a connected view larger than k where removable vertices exist
    but every one of them guards a dense side smaller than k.
    """
    if g.weighted:
        raise ValueError("prc2 accepts unweighted graphs only")
    if k < 2 or k % 2:
        raise ValueError(f"k={k} must be even and at least 2")
    view = _view(g, within)
    size = len(view)
    if size <= k:
        raise ValueError("prc2 needs a vertex view strictly larger than k")
    if not is_connected(g, view):
        raise ValueError("prc2 needs a connected vertex view")
    edges = induced_weight(g, view)
    removable = _removable_in(view, _degrees_in(g, view), edges)
    if not removable:
        raise ValueError("prc2 needs at least one removable vertex")
    side: dict[int, set[int]] = {}
    for r in removable:
        comp, _ = densest_component_after(g, r, within=view)
        if len(comp) >= k:
            raise ValueError("prc2 requires every dense side to have under k vertices")
        side[r] = set(comp)

    # Contraction pass: each processed vertex keeps representing the dense
    # side pruned behind it. Those sides are pairwise disjoint by the time
    # the loop ends, so block sizes add up to the original view size.
    surviving = set(view)
    pending = set(removable)
    while pending:
        r = min(pending)
        surviving -= side[r]
        pending -= side[r]
        pending.discard(r)
    removable_set = set(removable)
    claimed: set[int] = set()
    for r in sorted(removable_set & surviving):
        assert not (side[r] & claimed), "dense sides of survivors must be disjoint"
        claimed |= side[r]
    theta = {
        v: (len(side[v]) + 1 if v in removable_set else 1) for v in surviving
    }
    assert sum(theta.values()) == size, "block sizes must cover the whole view"

    # Grow a connected seed until its blocks cover k/2 vertices, then prune
    # it minimal; minimality caps the covered count at k and the seed at k/2.
    half = k // 2
    start = min(surviving)
    chosen = {start}
    covered = theta[start]
    queue = deque([start])
    while covered < half:
        assert queue, "connected view must reach k/2 block weight"
        v = queue.popleft()
        for u in g.neighbors(v):
            if u in surviving and u not in chosen:
                chosen.add(u)
                queue.append(u)
                covered += theta[u]
                if covered >= half:
                    break
    while len(chosen) > 1:
        articulation = set(cut_vertices(g, within=chosen))
        for v in sorted(chosen):
            if v not in articulation and covered - theta[v] >= half:
                chosen.remove(v)
                covered -= theta[v]
                break
        else:
            break
    assert half <= covered <= k, "pruned seed must cover between k/2 and k vertices"
    assert len(chosen) <= half, "pruned seed must stay within k/2 vertices"

    j = min(half, len(surviving) - len(chosen))
    assert j >= 1, "the surviving graph must extend past the seed"
    attachment = j_attachment(g, chosen, j, within=surviving)
    with_blocks = set(chosen)
    for r in removable_set & chosen:
        with_blocks |= side[r]
    with_attachment = chosen | set(attachment)
    assert len(with_blocks) == covered
    if state_log is not None:
        state_log.append(
            Prc2State(
                surviving=tuple(sorted(surviving)),
                removable=tuple(removable),
                block_sizes=dict(theta),
                seed=tuple(sorted(chosen)),
                seed_with_blocks=tuple(sorted(with_blocks)),
                seed_with_attachment=tuple(sorted(with_attachment)),
            )
        )
    pick = (
        with_blocks
        if induced_weight(g, with_blocks) >= induced_weight(g, with_attachment)
        else with_attachment
    )
    return expand_to_k(g, pick, k, within=view)


def alg1(
    g: Graph, k: int, *, density_log: list[list[Fraction]] | None = None
) -> Solution:
    """Peel removable non-cut vertices; recurse into large dense sides.

    When peeling stalls above k vertices, hand over to prc1 (no removable
    vertex left) or prc2 (all dense sides small). density_log, when given,
    receives one list per peeling phase holding the density after each step.
    """
    _check_even_input(g, k)
    view = set(range(g.n))
    deg = {v: g.degree(v) for v in view}
    edges = g.m
    while True:
        if density_log is not None:
            density_log.append([Fraction(2 * edges, len(view))])
        while len(view) > k:
            size = len(view)
            articulation = set(cut_vertices(g, within=view))
            pick = None
            for v in sorted(view):
                if deg[v] * size < edges and v not in articulation:
                    pick = v
                    break
            if pick is None:
                break
            view.remove(pick)
            edges -= deg[pick]
            for u in g.neighbors(pick):
                if u in view:
                    deg[u] -= 1
            del deg[pick]
            if density_log is not None:
                density_log[-1].append(Fraction(2 * edges, len(view)))
        if len(view) == k:
            return _make_solution(g, view, ALG1, k)
        removable = _removable_in(view, deg, edges)
        if not removable:
            return _make_solution(g, prc1(g, k, within=view), ALG1, k)
        descend = None
        for r in removable:
            comp, _ = densest_component_after(g, r, within=view)
            if len(comp) >= k:
                descend = comp
                break
        if descend is None:
            return _make_solution(g, prc2(g, k, within=view), ALG1, k)
        view = set(descend)
        deg = _degrees_in(g, view)
        edges = induced_weight(g, view)


def alg3(
    g: Graph,
    k: int,
    d: Iterable[int] | None = None,
    *,
    expansion_log: list[tuple[tuple[int, ...], tuple[int, ...]]] | None = None,
) -> Solution:
    """Start from a densest connected subgraph; expand or shrink it to k.

    d, when given, must be a connected vertex set of maximum density (it is
    recomputed otherwise). A maximizer has no removable vertex, so shrinking
    can delegate to prc1.
    """
    _check_even_input(g, k)
    if d is None:
        d = densest_connected_subgraph(g)
    dense = tuple(sorted(set(d)))
    if len(dense) <= k:
        out = expand_to_k(g, dense, k)
        if expansion_log is not None:
            expansion_log.append((dense, out))
        return _make_solution(g, out, ALG3, k)
    return _make_solution(g, prc1(g, k, within=dense), ALG3, k)


def highest_degree_vertices(g: Graph, count: int) -> tuple[int, ...]:
    """The count largest-degree vertices, ties toward smaller ids."""
    if not 0 <= count <= g.n:
        raise ValueError(f"count={count} out of range 0..{g.n}")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    return tuple(sorted(order[:count]))


def alg4_base(g: Graph, k: int) -> tuple[int, ...]:
    """k/2 highest-degree vertices plus their k/2-sized attachment."""
    hubs = highest_degree_vertices(g, k // 2)
    attachment = j_attachment(g, hubs, k // 2)
    return tuple(sorted(set(hubs) | set(attachment)))


def alg4(
    g: Graph,
    k: int,
    *,
    expansion_log: list[tuple[tuple[int, ...], tuple[int, ...]]] | None = None,
) -> Solution:
    """Attach half the budget to the k/2 highest-degree vertices."""
    _check_even_input(g, k)
    base = alg4_base(g, k)
    best = None
    best_density = Fraction(-1)
    for comp in components(g, base):
        comp_density = density(g, comp)
        if comp_density > best_density:
            best, best_density = comp, comp_density
    out = expand_to_k(g, best, k)
    if expansion_log is not None:
        expansion_log.append((best, out))
    return _make_solution(g, out, ALG4, k)


def walk2_counts(
    g: Graph, excluded: Iterable[int] = ()
) -> dict[tuple[int, int], int]:
    """Two-step walk counts between distinct vertex pairs, midpoints included.

    All three vertices of each counted walk must survive the exclusion.
    Keys are (u, v) with u < v; absent keys mean zero walks.
    """
    banned = set(excluded)
    counts: dict[tuple[int, int], int] = {}
    for mid in range(g.n):
        if mid in banned:
            continue
        around = [u for u in g.neighbors(mid) if u not in banned]
        for i, u in enumerate(around):
            for v in around[i + 1 :]:
                counts[(u, v)] = counts.get((u, v), 0) + 1
    return counts


def alg5_hub(
    g: Graph,
    k: int,
    *,
    expansion_log: list[tuple[tuple[int, ...], tuple[int, ...]]] | None = None,
) -> Solution:
    """Best hub-and-partners candidate outside the high-degree core.

    For each vertex of the residual graph, group it with its strongest
    two-step partners and the neighbors best wired into them, keep the
    hub's component, and expand back in the full graph.
    """
    _check_even_input(g, k)
    half = k // 2
    hubs = set(highest_degree_vertices(g, half))
    rest = [v for v in range(g.n) if v not in hubs]
    if not rest:
        raise ValueError("hub scan needs vertices outside the high-degree set")
    rest_set = set(rest)
    walks = walk2_counts(g, excluded=hubs)
    partners_of: dict[int, list[tuple[int, int]]] = {v: [] for v in rest}
    for (u, v), c in walks.items():
        partners_of[u].append((v, c))
        partners_of[v].append((u, c))
    best = None
    best_weight = -1
    for hub in rest:
        ranked = sorted(partners_of[hub], key=lambda t: (-t[1], t[0]))
        partners = set(u for u, _ in ranked[: half - 1])
        near = [u for u in g.neighbors(hub) if u in rest_set]
        near.sort(key=lambda u: (-sum(1 for x in g.neighbors(u) if x in partners), u))
        group = {hub} | partners | set(near[: min(len(near), half)])
        comp = next(c for c in components(g, group) if hub in c)
        out = expand_to_k(g, comp, k)
        if expansion_log is not None:
            expansion_log.append((comp, out))
        weight = induced_weight(g, out)
        if weight > best_weight:
            best, best_weight = out, weight
    return _make_solution(g, best, HUB, k)


def weighted_greedy(g: Graph, k: int) -> Solution:
    """Keep each vertex's k-1 heaviest edges as a star; best star wins.

    Works on weighted and unweighted graphs alike and on any k from 1 to n.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range 1..{g.n}")
    if not is_connected(g):
        raise ValueError("input graph must be connected")
    best = None
    best_weight = -1
    for v in range(g.n):
        ranked = sorted(g.neighbors(v), key=lambda u: (-g.edge_weight(v, u), u))
        star = {v, *ranked[: k - 1]}
        out = expand_to_k(g, star, k)
        weight = induced_weight(g, out)
        if weight > best_weight:
            best, best_weight = out, weight
    return _make_solution(g, best, WGREEDY, k)


def _attach_best_vertex(g: Graph, vertices: tuple[int, ...]) -> int:
    inside = set(vertices)
    best = None
    best_count = 0
    for v in range(g.n):
        if v in inside:
            continue
        count = sum(1 for u in g.neighbors(v) if u in inside)
        if count > best_count:
            best, best_count = v, count
    if best is None:
        raise ValueError("no vertex attaches to the solution")
    return best


def _run_maybe_odd(
    g: Graph, k: int, tag: str, runner: Callable[[int], Solution]
) -> Solution:
    # Odd budgets run the even core at k-1, then add the best-attached vertex.
    if k % 2 == 0:
        return runner(k)
    base = runner(k - 1)
    extra = _attach_best_vertex(g, base.vertices)
    return _make_solution(g, base.vertices + (extra,), tag, k)


def run_all_algorithms(g: Graph, k: int) -> list[Solution]:
    """Every algorithm applicable to the instance, one Solution each.

    Weighted graphs run the greedy star algorithm alone; unweighted graphs
    run the peeling, densest-core, high-degree and hub algorithms.
    """
    if not 3 <= k <= g.n:
        raise ValueError(f"k={k} out of range 3..{g.n}")
    if not is_connected(g):
        raise ValueError("input graph must be connected")
    if g.weighted:
        return [weighted_greedy(g, k)]
    dense = densest_connected_subgraph(g)
    runners: list[tuple[str, Callable[[int], Solution]]] = [
        (ALG1, lambda kk: alg1(g, kk)),
        (ALG3, lambda kk: alg3(g, kk, dense)),
        (ALG4, lambda kk: alg4(g, kk)),
        (HUB, lambda kk: alg5_hub(g, kk)),
    ]
    return [_run_maybe_odd(g, k, tag, runner) for tag, runner in runners]


_NAMED = ("alg1", "alg3", "alg4", "hub", "wgreedy")


def run_named_algorithm(g: Graph, k: int, name: str) -> Solution:
    """Run one algorithm by its CLI name, with the odd-k wrapper applied."""
    if name not in _NAMED:
        raise ValueError(f"unknown algorithm {name!r}; pick from {_NAMED}")
    if not 3 <= k <= g.n:
        raise ValueError(f"k={k} out of range 3..{g.n}")
    if name == "wgreedy":
        return weighted_greedy(g, k)
    if g.weighted:
        raise ValueError(f"{name} accepts unweighted graphs only")
    if name == "alg1":
        return _run_maybe_odd(g, k, ALG1, lambda kk: alg1(g, kk))
    if name == "alg3":
        return _run_maybe_odd(g, k, ALG3, lambda kk: alg3(g, kk))
    if name == "alg4":
        return _run_maybe_odd(g, k, ALG4, lambda kk: alg4(g, kk))
    return _run_maybe_odd(g, k, HUB, lambda kk: alg5_hub(g, kk))


def best_connected_k_subgraph(g: Graph, k: int) -> Solution:
    """Densest output across the whole suite, retagged as the combined run.

    Ties keep the earliest algorithm in the fixed run order.
    """
    solutions = run_all_algorithms(g, k)
    best = solutions[0]
    for sol in solutions[1:]:
        if sol.density > best.density:
            best = sol
    return Solution(
        vertices=best.vertices, density=best.density, algorithm=COMBINED, k=k
    )
