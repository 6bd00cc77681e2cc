"""Naive reference implementations used only by the tests.

Nothing here shares code with the library beyond reading ``g.edges``.
"""

from itertools import combinations, permutations, product

import networkx as nx


def edge_set(g):
    return {(min(u, v), max(u, v), k) for u, v, k in g.edges}


def colors_on(es, u, v):
    a, b = min(u, v), max(u, v)
    return [k for (x, y, k) in es if x == a and y == b]


def naive_verify(g, vertices, colors, closed):
    es = edge_set(g)
    L = len(vertices)
    if len(set(vertices)) != L or len(colors) != (L if closed else L - 1):
        return False
    if closed and L < 3:
        return False
    pairs = [(vertices[i], vertices[(i + 1) % L]) for i in range(len(colors))]
    for (u, v), k in zip(pairs, colors):
        if (min(u, v), max(u, v), k) not in es:
            return False
    steps = len(colors)
    limit = steps if closed else steps - 1
    return all(colors[i] != colors[(i + 1) % steps] for i in range(limit))


def _colorable(lists):
    """Can each cyclic step pick a color from its list with neighbors differing?"""
    for first in lists[0]:
        reach = {first}
        for lst in lists[1:]:
            reach = {k for k in lst if reach - {k}}
        if reach - {first}:
            return True
    return False


def brute_proper_cycle(g, L=None):
    """True iff some L-subset of vertices carries a proper cycle (permutation enumeration)."""
    n = g.n
    L = n if L is None else L
    es = edge_set(g)
    for subset in combinations(range(n), L):
        head, rest = subset[0], subset[1:]
        for perm in permutations(rest):
            order = (head,) + perm
            if perm and perm[0] > perm[-1]:
                continue
            lists = [colors_on(es, order[i], order[(i + 1) % L]) for i in range(L)]
            if all(lists) and _colorable(lists):
                return True
    return False


def brute_proper_path(g, L, start=None, end=None, first_equals_last=False):
    es = edge_set(g)
    for order in permutations(range(g.n), L):
        if start is not None and order[0] != start:
            continue
        if end is not None and order[-1] != end:
            continue
        lists = [colors_on(es, order[i], order[i + 1]) for i in range(L - 1)]
        if not all(lists):
            continue
        for cols in product(*lists):
            if all(cols[i] != cols[i + 1] for i in range(len(cols) - 1)):
                if not first_equals_last or cols[0] == cols[-1]:
                    return True
    return False


def brute_ham_simple(g):
    es = edge_set(g)
    adj = {(u, v) for u, v, _ in es} | {(v, u) for u, v, _ in es}
    n = g.n
    for perm in permutations(range(1, n)):
        order = (0,) + perm
        if all((order[i], order[(i + 1) % n]) in adj for i in range(n)):
            return True
    return False


def to_nx(g, color=None):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v, k in g.edges if color is None or k == color)
    return h


def nx_perfect_matching(g, color):
    h = to_nx(g, color)
    m = nx.max_weight_matching(h, maxcardinality=True)
    return 2 * len(m) == g.n


def nx_connected(g):
    return g.n == 0 or nx.is_connected(to_nx(g))


def nx_biconnected(g):
    return g.n >= 3 and nx.is_biconnected(to_nx(g))
