"""Shared graph builders and seeded corpora for the test suite."""

from fractions import Fraction

from densek.generators import Xorshift64Star, gnp
from densek.graph import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n, weight=None):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if weight is None:
        return Graph(n, edges)
    return Graph(n, edges, [weight] * len(edges))


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def k4p():
    """K4 on {0,1,2,3} plus the pendant edge 3-4."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])


def two_triangles_bridged():
    """Triangles {0,1,2} and {3,4,5} joined by the edge 2-3."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])


def two_triangles_path3():
    """Triangles {0,1,2} and {5,6,7} joined by the path 2-3-4-5."""
    return Graph(
        8,
        [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)],
    )


def triangles_through_cut():
    """Triangles {0,1,2} and {4,5,6} joined through vertex 3."""
    return Graph(
        7,
        [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)],
    )


def barbell(clique, path_len):
    """Two cliques joined by a path with path_len edges; triggers prc2."""
    edges = []
    for u in range(clique):
        for v in range(u + 1, clique):
            edges.append((u, v))
            edges.append((clique + u, clique + v))
    inner = list(range(2 * clique, 2 * clique + path_len - 1))
    chain = [0] + inner + [clique]
    edges += [(min(a, b), max(a, b)) for a, b in zip(chain, chain[1:])]
    return Graph(2 * clique + path_len - 1, edges)


def connected_corpus(count, max_n, seed0, min_n=5):
    """Deterministic list of connected graphs with n <= max_n."""
    out = []
    seed = seed0
    rng_ps = (0.2, 0.3, 0.45, 0.6, 0.8)
    while len(out) < count:
        rng = Xorshift64Star(seed)
        n = min_n + rng.next_below(max_n - min_n + 1)
        p = rng_ps[rng.next_below(len(rng_ps))]
        seed += 1
        try:
            g = gnp(n, p, seed0 + 7919 * seed)
        except ValueError:
            continue
        if g.n >= min_n:
            out.append(g)
    return out


def weighted_version(g, seed, max_w=5):
    """Same edges as g with deterministic weights in 0..max_w."""
    rng = Xorshift64Star(seed)
    return Graph(g.n, list(g.edges), [rng.next_below(max_w + 1) for _ in g.edges])


def assert_valid_solution(g, sol, k):
    from densek.graph import components, density

    assert len(sol.vertices) == k
    assert len(set(sol.vertices)) == k
    assert sol.vertices == tuple(sorted(sol.vertices))
    assert len(components(g, sol.vertices)) == 1
    assert sol.density == density(g, sol.vertices)
    assert sol.k == k


FRAC = Fraction
