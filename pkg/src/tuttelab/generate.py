"""Exhaustive generation of rooted planar maps and brute-force oracles.

all_maps builds every rooted planar map with n edges constructively, by
reversing root-edge deletion: a map with n edges is either a smaller map
with a new root edge inserted into its root face (root_face_degree + 1
ways), or two smaller maps joined by a new isthmus root edge.  Results are
deduplicated by canonical code and returned sorted, so output is
deterministic.

all_maps_oracle is an independent check: it enumerates every rotation
system on 2n darts with a fixed edge involution and fixed root, filters the
connected genus-0 ones, and deduplicates.  It is exponential and capped at
small n.

The remaining generators produce the standard sub-families (bipartite
maps, near-triangulations, quadrangulations, ...) and the brute-force
counting oracles (colourings, spanning trees, bipolar orientations) used
as ground truth by the rest of the package.
"""

from __future__ import annotations

import itertools
import json
import os
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from tuttelab.maps import MapError, RootedMap
from tuttelab.poly import MultiPoly

CACHE_ENV = "TUTTELAB_CACHE"
CACHE_FORMAT = 1
LIST_CAP = 7
ORACLE_CAP = 4

_maps_memo: dict = {}


class CapExceeded(ValueError):
    pass


def _cache_path(n):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"maps-v{CACHE_FORMAT}-n{n}.jsonl"


def all_maps(n: int, cap: int = LIST_CAP):
    """All rooted planar maps with n edges, sorted by canonical code."""
    if n < 0:
        raise ValueError("edge count must be nonnegative")
    if n > cap:
        raise CapExceeded(f"all_maps cap is {cap} edges (asked for {n})")
    if n in _maps_memo:
        return _maps_memo[n]
    path = _cache_path(n)
    if path is not None and path.exists():
        with open(path) as fh:
            maps = [RootedMap.from_json(line) for line in fh if line.strip()]
        _maps_memo[n] = maps
        return maps
    if n == 0:
        maps = [RootedMap.atomic()]
    else:
        out = set()
        for m in all_maps(n - 1, cap):
            for k in range(m.root_face_degree + 1):
                out.add(m.insert_root_edge(k))
        for e1 in range(n):
            for m1 in all_maps(e1, cap):
                for m2 in all_maps(n - 1 - e1, cap):
                    out.add(RootedMap.join_by_root_edge(m1, m2))
        maps = sorted(out, key=lambda m: m.code)
    _maps_memo[n] = maps
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as fh:
            for m in maps:
                fh.write(m.to_json() + "\n")
        tmp.replace(path)
    return maps


@lru_cache(maxsize=None)
def _count_by_degree(n: int) -> dict:
    """{root_face_degree: number of n-edge maps}, by the same recursion."""
    if n == 0:
        return {0: 1}
    out: dict = {}
    for d, c in _count_by_degree(n - 1).items():
        for k in range(d + 1):
            out[k + 1] = out.get(k + 1, 0) + c
    for e1 in range(n):
        left = _count_by_degree(e1)
        right = _count_by_degree(n - 1 - e1)
        for d1, c1 in left.items():
            for d2, c2 in right.items():
                d = d1 + d2 + 2
                out[d] = out.get(d, 0) + c1 * c2
    return out


def count_maps(n: int) -> int:
    """Number of rooted planar maps with n edges (count-only recursion)."""
    return sum(_count_by_degree(n).values())


def maps_count_formula(n: int) -> int:
    """2 * 3^n * C(2n, n) / ((n+1)(n+2))."""
    from tuttelab.closed_forms import maps_count
    return maps_count(n)


def all_maps_oracle(n: int, cap: int = ORACLE_CAP):
    """Independent enumeration by filtering all rotation systems.

    alpha is fixed to (0 1)(2 3)...; the root is dart 0.  Every rooted map
    has such a representative, so deduplicating by canonical code yields the
    full list.
    """
    if n > cap:
        raise CapExceeded(f"oracle cap is {cap} edges (asked for {n})")
    if n == 0:
        return [RootedMap.atomic()]
    darts = 2 * n
    alpha = [d + 1 if d % 2 == 0 else d - 1 for d in range(darts)]
    out = set()
    for sigma in itertools.permutations(range(darts)):
        try:
            out.add(RootedMap(alpha, sigma, 0))
        except MapError:
            continue
    return sorted(out, key=lambda m: m.code)


# -- family generators ---------------------------------------------------------


def near_triangulations(max_edges: int):
    """All near-triangulations (finite faces of degree 3) with <= max_edges."""
    out = []
    for n in range(max_edges + 1):
        out.extend(m for m in all_maps(n) if m.is_near_triangulation())
    return out


def bipartite_maps(n_edges: int):
    return [m for m in all_maps(n_edges) if m.is_bipartite()]


def eulerian_near_triangulations(n_black_faces: int):
    """Eulerian near-triangulations with n finite faces of each colour.

    An Eulerian near-triangulation with 2n finite faces has 3n edges (its
    finite faces are properly 2-colourable into n black and n white).
    """
    return [m for m in all_maps(3 * n_black_faces)
            if m.is_near_triangulation() and m.is_eulerian()]


def quadrangulations(n_faces: int):
    """All quadrangulations with n faces: duals of radials of n-edge maps."""
    out = sorted((m.radial().dual() for m in all_maps(n_faces) if not m.is_atomic),
                 key=lambda m: m.code)
    assert all(m.is_quadrangulation() for m in out)
    return out


def four_valent(n_vertices: int):
    """All 4-valent maps with n vertices: radials of n-edge maps."""
    return sorted((m.radial() for m in all_maps(n_vertices) if not m.is_atomic),
                  key=lambda m: m.code)


def non_separable_near_triangulations(n_inner_faces: int):
    """Non-separable near-triangulations with n finite (triangular) faces.

    Such a map with n >= 1 inner faces has at most 2n + 1 edges (the outer
    face is a simple cycle), so the search space is finite.
    """
    if n_inner_faces == 0:
        return [RootedMap.link()]
    out = []
    for e in range(1, 2 * n_inner_faces + 2):
        for m in all_maps(e):
            if (m.n_faces == n_inner_faces + 1 and not m.is_separable()
                    and m.is_near_triangulation()):
                out.append(m)
    return out


# -- brute-force oracles --------------------------------------------------------


def all_spanning_trees(m: RootedMap):
    """Every spanning edge subset that is a tree, as sorted tuples of edge
    indices into m.edges()."""
    if m.is_atomic:
        raise MapError("the atomic map has no spanning tree oracle")
    edges = m.multigraph_edges()
    v = m.n_vertices
    need = v - 1
    out = []
    for subset in itertools.combinations(range(len(edges)), need):
        parent = list(range(v))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ok = True
        for i in subset:
            ra, rb = find(edges[i][0]), find(edges[i][1])
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if ok:
            out.append(subset)
    return out


def all_bipolar_orientations(m: RootedMap):
    """All acyclic orientations with unique source at the root-edge origin
    and unique sink at its other endpoint.

    An orientation is the tuple of chosen head darts, one per edge of
    m.edges().  Empty exactly when the map is separable (and always empty
    for maps with a loop, since a loop closes a cycle)."""
    if m.is_atomic:
        raise MapError("the atomic map has no orientations")
    edges = m.edges()
    vg = m.multigraph_edges()
    v = m.n_vertices
    s = m.vertex_of[m.root]
    t = m.vertex_of[m.alpha[m.root]]
    if any(a == b for a, b in vg) or s == t:
        return []
    out = []
    for heads in itertools.product(*[(0, 1) for _ in edges]):
        arcs = []
        for (u, w), h in zip(vg, heads):
            arcs.append((u, w) if h else (w, u))
        # acyclicity by repeated source removal, tracking degrees
        indeg = [0] * v
        outdeg = [0] * v
        adj = [[] for _ in range(v)]
        for u, w in arcs:
            indeg[w] += 1
            outdeg[u] += 1
            adj[u].append(w)
        if [i for i in range(v) if indeg[i] == 0] != [s]:
            continue
        if [i for i in range(v) if outdeg[i] == 0] != [t]:
            continue
        seen = 0
        deg = indeg[:]
        stack = [s]
        while stack:
            u = stack.pop()
            seen += 1
            for w in adj[u]:
                deg[w] -= 1
                if deg[w] == 0:
                    stack.append(w)
        if seen == v:
            out.append(tuple(e[h] for e, h in zip(edges, heads)))
    return out


def colouring_sum(m: RootedMap, q: int, nu=None):
    """Potts partition sum: over all q-colourings, nu^(#monochromatic edges).

    With nu=None the result is a MultiPoly in nu; a rational nu gives an
    exact rational value.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    v = m.n_vertices
    edges = m.multigraph_edges()
    counts: dict = {}
    for col in itertools.product(range(q), repeat=v):
        mono = sum(1 for a, b in edges if col[a] == col[b])
        counts[mono] = counts.get(mono, 0) + 1
    if nu is None:
        nuv = MultiPoly.var("nu")
        total = MultiPoly.zero()
        for mono, c in counts.items():
            total = total + c * nuv ** mono
        return total
    nu = Fraction(nu)
    return sum(c * nu ** mono for mono, c in counts.items())
