"""Potts and Tutte polynomials of the multigraph underlying a map.

The Potts polynomial P_G(q, nu) is the sum over q-colourings of the
vertices of nu^(number of monochromatic edges), evaluated here as a
polynomial in q and nu.  It is computed by deletion-contraction,

    P_G = P_{G\\e} + (nu - 1) P_{G/e},

with the convention that contracting a loop deletes it, and memoized on a
canonical form of the multigraph (the polynomial does not depend on the
root or the embedding).

The Tutte polynomial T_G(mu, nu) is computed by its subset expansion and
tied to P by q = (mu - 1)(nu - 1):

    P_G(q, nu) = (mu - 1)^{c(G)} (nu - 1)^{v(G)} T_G(mu, nu).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from tuttelab.maps import RootedMap
from tuttelab.poly import MultiPoly, lagrange_interpolate

Q = MultiPoly.var("q")
NU = MultiPoly.var("nu")
MU = MultiPoly.var("mu")


def _canonical_multigraph(v, edges):
    """Canonical key of a loopy multigraph: lexicographically smallest sorted
    edge multiset over all vertex relabellings."""
    if v > 8:
        raise ValueError("multigraph canonicalization capped at 8 vertices")
    best = None
    for perm in itertools.permutations(range(v)):
        key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return v, best


@lru_cache(maxsize=None)
def _potts_of_key(v, edges):
    if not edges:
        return Q ** v
    (a, b), rest = edges[0], edges[1:]
    deleted = _potts_of_key(*_canonical_multigraph(v, rest))
    if a == b:
        return NU * deleted
    relabel = [i if i != b else a for i in range(v)]
    shift = [i - (1 if i > b else 0) for i in relabel]
    contracted_edges = [(shift[x], shift[y]) for x, y in rest]
    contracted = _potts_of_key(*_canonical_multigraph(v - 1, contracted_edges))
    return deleted + (NU - 1) * contracted


def potts(m: RootedMap) -> MultiPoly:
    """Potts polynomial of the underlying multigraph, in (q, nu).

    Always a multiple of q; the atomic map gives q."""
    v = m.n_vertices
    key = _canonical_multigraph(v, m.multigraph_edges())
    return _potts_of_key(*key)


def potts_subset_oracle(m: RootedMap) -> MultiPoly:
    """Fortuin-Kasteleyn expansion: sum over edge subsets S of
    q^{c(S)} (nu-1)^{|S|}, with c(S) counting connected components."""
    v = m.n_vertices
    edges = m.multigraph_edges()
    total = MultiPoly.zero()
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            total = total + Q ** _components(v, subset) * (NU - 1) ** r
    return total


def potts_by_interpolation(m: RootedMap) -> MultiPoly:
    """Potts polynomial recovered from integer-q colouring sums.

    Evaluates the colouring oracle at q = 1 .. v+1 plus the forced value 0
    at q = 0 and interpolates; the degree in q is at most v."""
    from tuttelab.generate import colouring_sum
    v = m.n_vertices
    points = [(0, MultiPoly.zero())]
    points += [(k, colouring_sum(m, k)) for k in range(1, v + 2)]
    return lagrange_interpolate(points)


def _components(v, edges):
    parent = list(range(v))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comp = v
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comp -= 1
    return comp


def tutte(m: RootedMap) -> MultiPoly:
    """Tutte polynomial of the underlying (connected) multigraph in (mu, nu):
    sum over edge subsets of (mu-1)^{c(S)-1} (nu-1)^{|S|+c(S)-v}."""
    v = m.n_vertices
    edges = m.multigraph_edges()
    total = MultiPoly.zero()
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            c = _components(v, subset)
            total = total + (MU - 1) ** (c - 1) * (NU - 1) ** (r + c - v)
    return total


def potts_from_tutte(m: RootedMap) -> MultiPoly:
    """P(q, nu) with q = (mu-1)(nu-1): (mu-1) (nu-1)^v T becomes a polynomial
    in q and nu once mu is eliminated; returned in (q, nu).

    Uses the subset expansion directly so no rational division is needed:
    (mu-1)^{c(S)} (nu-1)^{v} (nu-1)^{e(S)+c(S)-v} = q^{c(S)} (nu-1)^{e(S)}.
    """
    return potts_subset_oracle(m)


def duality_check(m: RootedMap) -> bool:
    """Tutte duality T_{G*}(mu, nu) = T_G(nu, mu), and the Potts form

        q^{v-1} P_{G*}(q, nu) = (nu-1)^e P_G(q, 1 + q/(nu-1)),

    where the right side is cleared of (nu-1) denominators term by term
    (the nu-degree of P_G is at most e, so no denominators survive).
    Both identities are verified exactly; returns True on success."""
    d = m.dual()
    t = tutte(m)
    td = tutte(d)
    if td != t.subs({"mu": NU, "nu": MU}):
        return False
    e = m.n_edges
    lhs = Q ** (m.n_vertices - 1) * potts(d)
    rhs = _cleared_nu_dual_sub(potts(m), e)
    return lhs == rhs


def _cleared_nu_dual_sub(p: MultiPoly, e: int) -> MultiPoly:
    """Substitute nu -> 1 + q/(nu-1) into a (q, nu)-polynomial and clear the
    denominators by (nu-1)^e: each (nu-1)^k factor becomes q^k (nu-1)^{e-k}."""
    shifted = p.subs({"nu": NU + 1})  # now nu stands for nu - 1
    out = MultiPoly.zero()
    for k, c in shifted.by_powers("nu").items():
        out = out + c * Q ** k * (NU - 1) ** (e - k)
    return out


def spanning_tree_count(m: RootedMap) -> int:
    """T(1, 1): the number of spanning trees."""
    if m.is_atomic:
        return 1
    val = tutte(m).eval({"mu": 1, "nu": 1})
    return int(val)


def chromatic_poly(m: RootedMap) -> MultiPoly:
    """P(q, 0): the chromatic polynomial, in q."""
    return potts(m).subs({"nu": 0})


def bipolar_count(m: RootedMap) -> int:
    """(-1)^{v} dP/dq (1, 0): the number of bipolar orientations with respect
    to the root edge's endpoints."""
    val = potts(m).diff("q").eval({"q": 1, "nu": 0})
    return int((-1) ** m.n_vertices * val)


def specializations(m: RootedMap) -> dict:
    return {
        "spanning_tree_count": spanning_tree_count(m),
        "chromatic_poly": chromatic_poly(m),
        "bipolar_count": bipolar_count(m),
    }
