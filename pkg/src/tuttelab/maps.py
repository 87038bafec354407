"""Rooted planar maps as rotation systems.

A map on n_darts darts is a pair of permutations: alpha (a fixed-point-free
involution pairing the two darts of each edge) and sigma (counterclockwise
order of darts around each vertex).  Faces are the orbits of phi = sigma o
alpha.  The atomic map (one vertex, no edge) is the unique map with zero
darts and root None.

Construction validates connectedness and Euler's relation, so every
RootedMap instance is a genus-0 rooted map.  Instances are immutable.

Conventions frozen here (and validated in the tests against the catalytic
functional equations):

* the root face is the phi-orbit of alpha(root);
* insert_root_edge(k) draws a new root edge inside the root face, starting
  in the corner just after the root dart, whose other end lands k corners
  further along the face walk (k = 0..root_face_degree); the result has
  root-face degree k + 1;
* join_by_root_edge(m1, m2) adds an isthmus root edge between the root
  corners of m1 and m2; the result has root-face degree df(m1) + df(m2) + 2.

Every rooted map with at least one edge arises exactly once as an insertion
or a join, and delete_root_edge inverts both.
"""

from __future__ import annotations

import json
from functools import cached_property


class MapError(ValueError):
    pass


class RootedMap:

    def __init__(self, alpha, sigma, root):
        alpha = tuple(alpha)
        sigma = tuple(sigma)
        n = len(alpha)
        if len(sigma) != n or n % 2:
            raise MapError("alpha and sigma must be permutations of an even dart set")
        if n == 0:
            if root is not None:
                raise MapError("atomic map has root None")
            self.n_darts, self.alpha, self.sigma, self.root = 0, (), (), None
            return
        if sorted(alpha) != list(range(n)) or sorted(sigma) != list(range(n)):
            raise MapError("alpha and sigma must be permutations of 0..n_darts-1")
        if any(alpha[alpha[d]] != d or alpha[d] == d for d in range(n)):
            raise MapError("alpha must be a fixed-point-free involution")
        if not (isinstance(root, int) and 0 <= root < n):
            raise MapError("root must be a dart")
        self.n_darts = n
        self.alpha = alpha
        self.sigma = sigma
        self.root = root
        if not self._connected():
            raise MapError("rotation system is not connected")
        if self.n_vertices - self.n_edges + self.n_faces != 2:
            raise MapError("rotation system has positive genus")

    def _connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.alpha[d], self.sigma[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == self.n_darts

    @property
    def is_atomic(self) -> bool:
        return self.n_darts == 0

    # -- orbits and statistics -------------------------------------------

    @staticmethod
    def _orbits(perm):
        n = len(perm)
        seen = [False] * n
        out = []
        for d in range(n):
            if not seen[d]:
                cyc = []
                e = d
                while not seen[e]:
                    seen[e] = True
                    cyc.append(e)
                    e = perm[e]
                out.append(tuple(cyc))
        return out

    def phi(self, d: int) -> int:
        """Face permutation sigma o alpha."""
        return self.sigma[self.alpha[d]]

    def sigma_inv(self, d: int) -> int:
        return self._inv_sigma[d]

    @cached_property
    def _inv_sigma(self):
        out = [0] * self.n_darts
        for d in range(self.n_darts):
            out[self.sigma[d]] = d
        return out

    @cached_property
    def vertices(self):
        """sigma-orbits (tuples of darts), one per vertex."""
        return self._orbits(self.sigma)

    @cached_property
    def faces(self):
        """phi-orbits; for the atomic map the single degree-0 face is ()."""
        if self.is_atomic:
            return [()]
        return self._orbits([self.sigma[self.alpha[d]] for d in range(self.n_darts)])

    @property
    def n_vertices(self):
        return 1 if self.is_atomic else len(self.vertices)

    @property
    def n_edges(self):
        return self.n_darts // 2

    @property
    def n_faces(self):
        return len(self.faces)

    @cached_property
    def vertex_of(self):
        """dart -> vertex index (into self.vertices)."""
        out = [0] * self.n_darts
        for i, cyc in enumerate(self.vertices):
            for d in cyc:
                out[d] = i
        return out

    @cached_property
    def face_of(self):
        out = [0] * self.n_darts
        for i, cyc in enumerate(self.faces):
            for d in cyc:
                out[d] = i
        return out

    @cached_property
    def root_face(self):
        """The root face: the phi-orbit of alpha(root)."""
        if self.is_atomic:
            return ()
        return self.faces[self.face_of[self.alpha[self.root]]]

    @property
    def root_vertex_degree(self):
        if self.is_atomic:
            return 0
        return len(self.vertices[self.vertex_of[self.root]])

    @property
    def root_face_degree(self):
        return len(self.root_face)

    def vertex_degrees(self):
        return sorted(len(c) for c in self.vertices) if not self.is_atomic else [0]

    def face_degrees(self):
        return sorted(len(c) for c in self.faces)

    def edges(self):
        """Edges as pairs (d, alpha(d)) with d < alpha(d)."""
        return [(d, self.alpha[d]) for d in range(self.n_darts) if d < self.alpha[d]]

    def multigraph_edges(self):
        """Edges as (vertex, vertex) pairs of the underlying multigraph."""
        return [(self.vertex_of[d], self.vertex_of[a]) for d, a in self.edges()]

    # -- equality / canonical code -----------------------------------------

    @cached_property
    def code(self):
        """Canonical code: breadth-first relabelling from the root.

        Two maps have equal codes iff they are equal as rooted maps
        (isomorphic via a root- and orientation-preserving relabelling).
        """
        if self.is_atomic:
            return (0,)
        label = {self.root: 0}
        order = [self.root]
        i = 0
        while i < len(order):
            d = order[i]
            i += 1
            for e in (self.sigma[d], self.alpha[d]):
                if e not in label:
                    label[e] = len(order)
                    order.append(e)
        n = self.n_darts
        sig = tuple(label[self.sigma[d]] for d in order)
        alf = tuple(label[self.alpha[d]] for d in order)
        return (n,) + sig + alf

    def relabelled(self) -> "RootedMap":
        """The canonical representative: same map, darts in code order."""
        return RootedMap.from_code(self.code)

    def __eq__(self, other):
        if not isinstance(other, RootedMap):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        if self.is_atomic:
            return "RootedMap.atomic()"
        return (f"RootedMap(alpha={list(self.alpha)}, "
                f"sigma={list(self.sigma)}, root={self.root})")

    @staticmethod
    def atomic() -> "RootedMap":
        return RootedMap((), (), None)

    @staticmethod
    def from_code(code) -> "RootedMap":
        n = code[0]
        if n == 0:
            return RootedMap.atomic()
        sig = code[1:1 + n]
        alf = code[1 + n:1 + 2 * n]
        return RootedMap(alf, sig, 0)

    # -- small standard maps -----------------------------------------------

    @staticmethod
    def loop() -> "RootedMap":
        return RootedMap(alpha=(1, 0), sigma=(1, 0), root=0)

    @staticmethod
    def link() -> "RootedMap":
        return RootedMap(alpha=(1, 0), sigma=(0, 1), root=0)

    # -- JSON wire format ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"n_darts": self.n_darts, "alpha": list(self.alpha),
                "sigma": list(self.sigma), "root": self.root}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @staticmethod
    def from_json_obj(obj) -> "RootedMap":
        try:
            n = obj["n_darts"]
            alpha, sigma, root = obj["alpha"], obj["sigma"], obj["root"]
        except (KeyError, TypeError) as exc:
            raise MapError(f"malformed map object: {exc}") from exc
        if not (isinstance(alpha, list) and isinstance(sigma, list)):
            raise MapError("alpha and sigma must be lists")
        if len(alpha) != n or len(sigma) != n:
            raise MapError("n_darts does not match permutation length")
        return RootedMap(alpha, sigma, root)

    @staticmethod
    def from_json(text: str) -> "RootedMap":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MapError(f"malformed map JSON: {exc}") from exc
        return RootedMap.from_json_obj(obj)

    # -- duality and the radial construction ---------------------------------

    def dual(self) -> "RootedMap":
        """The dual map: sigma* = sigma o alpha, alpha* = alpha, root* = alpha(root).

        Satisfies dual(dual(m)) == m, swaps the vertex and face degree
        multisets, and sends the root face of m to the root vertex of the
        dual (and vice versa).
        """
        if self.is_atomic:
            return self
        phi = tuple(self.sigma[self.alpha[d]] for d in range(self.n_darts))
        return RootedMap(self.alpha, phi, self.alpha[self.root])

    def radial(self) -> "RootedMap":
        """The radial map: 4-valent, one vertex per edge of self.

        Dart 2d of the radial leaves the midpoint of the edge of d towards
        the corner (d, sigma(d)); dart 2d+1 towards the corner
        (sigma^-1(d), d).  The construction is injective on rooted maps and
        radial(atomic) = atomic.
        """
        if self.is_atomic:
            return self
        n = self.n_darts
        inv = self._inv_sigma
        alpha = [0] * (2 * n)
        sigma = [0] * (2 * n)
        for d in range(n):
            # rotation at the midpoint of the edge carrying dart d
            sigma[2 * d] = 2 * d + 1
            sigma[2 * d + 1] = 2 * self.alpha[d]
            # radial edge across the corner (d, sigma(d))
            alpha[2 * d] = 2 * self.sigma[d] + 1
            alpha[2 * d + 1] = 2 * inv[d]
        return RootedMap(alpha, sigma, 2 * self.root + 1)

    # -- root-edge surgery -----------------------------------------------------

    def insert_root_edge(self, k: int) -> "RootedMap":
        """Add a new root edge inside the root face.

        The new edge starts in the corner just after the root dart; its
        other endpoint lands k corners further along the root-face walk,
        k in 0..root_face_degree.  The result has root-face degree k + 1.
        Inverted by delete_root_edge.
        """
        d = self.root_face_degree
        if not (0 <= k <= d):
            raise MapError(f"insertion index {k} out of range 0..{d}")
        n = self.n_darts
        a, b = n, n + 1  # a becomes the new root dart, b = alpha(a)
        alpha = list(self.alpha) + [b, a]
        if self.is_atomic:
            return RootedMap(alpha, [1, 0], a)
        sigma = list(self.sigma) + [0, 0]
        r = self.root
        s = self.sigma[r]
        if k == 0:
            # b immediately after a: the new edge is a loop enclosing nothing
            sigma[r], sigma[a], sigma[b] = a, b, s
        elif k == d:
            # b immediately before a: the loop encloses the whole root face
            sigma[r], sigma[b], sigma[a] = b, a, s
        else:
            # walk the root face to its k-th dart x_k; b lands in the corner
            # between alpha(x_k) and phi(x_k)
            x = self.alpha[r]
            for _ in range(k):
                x = self.sigma[self.alpha[x]]
            p = self.alpha[x]
            sigma[r], sigma[a] = a, s
            sigma[b] = sigma[p]
            sigma[p] = b
        return RootedMap(alpha, sigma, a)

    @staticmethod
    def join_by_root_edge(m1: "RootedMap", m2: "RootedMap") -> "RootedMap":
        """Connect two maps by a new isthmus root edge.

        The new edge runs from the root corner of m1 to the root corner of
        m2; the result has root-face degree df(m1) + df(m2) + 2 and its root
        edge is an isthmus.  Inverted by delete_root_edge.
        """
        n1, n2 = m1.n_darts, m2.n_darts
        a, b = n1 + n2, n1 + n2 + 1
        alpha = list(m1.alpha) + [x + n1 for x in m2.alpha] + [b, a]
        sigma = list(m1.sigma) + [x + n1 for x in m2.sigma] + [0, 0]
        if m1.is_atomic:
            sigma[a] = a
        else:
            sigma[a] = sigma[m1.root]
            sigma[m1.root] = a
        if m2.is_atomic:
            sigma[b] = b
        else:
            r2 = m2.root + n1
            sigma[b] = sigma[r2]
            sigma[r2] = b
        return RootedMap(alpha, sigma, a)

    def delete_root_edge(self):
        """Remove the root edge; the exact inverse of insertion and joining.

        Returns ("pair", (m1, m2)) when the root edge is an isthmus, with
        join_by_root_edge(m1, m2) == self, and ("single", (m, k)) otherwise,
        with m.insert_root_edge(k) == self.
        """
        if self.is_atomic:
            raise MapError("cannot delete the root edge of the atomic map")
        a = self.root
        b = self.alpha[a]
        pred_a = self._inv_sigma[a]
        pred_b = self._inv_sigma[b]
        sig = dict(enumerate(self.sigma))
        alf = {d: x for d, x in enumerate(self.alpha) if d not in (a, b)}
        for dart in (a, b):
            q = next(kk for kk, vv in sig.items() if vv == dart)
            if q == dart:
                del sig[dart]
            else:
                sig[q] = sig[dart]
                del sig[dart]
        if self.face_of[a] == self.face_of[b]:
            # isthmus: two components, rooted at the predecessors of a and b
            m1 = _extract(sig, alf, pred_a if pred_a != a else None)
            m2 = _extract(sig, alf, pred_b if pred_b != b else None)
            return "pair", (m1, m2)
        # single map: recover the old root dart from the local pattern
        if pred_a == b:
            r = pred_b if pred_b != a else None
        else:
            r = pred_a
        m = _extract(sig, alf, r)
        for k in range(m.root_face_degree + 1):
            if m.insert_root_edge(k) == self:
                return "single", (m, k)
        raise MapError("root-edge deletion failed to invert")  # pragma: no cover

    def contract_root_edge(self) -> "RootedMap":
        """Contract the root edge; a root loop is simply deleted.

        The contracted map is rooted at the sigma-successor of the old root
        (or of its partner dart when the root vertex carried nothing else).
        """
        if self.is_atomic:
            raise MapError("cannot contract the root edge of the atomic map")
        a = self.root
        b = self.alpha[a]
        if self.vertex_of[a] == self.vertex_of[b]:
            kind, data = self.delete_root_edge()
            if kind == "pair":
                raise MapError("loop deletion cannot disconnect")  # pragma: no cover
            return data[0]
        sig = dict(enumerate(self.sigma))
        alf = {d: x for d, x in enumerate(self.alpha) if d not in (a, b)}
        pred_a, pred_b = self._inv_sigma[a], self._inv_sigma[b]
        succ_a, succ_b = self.sigma[a], self.sigma[b]
        if succ_a == a and succ_b == b:
            return RootedMap.atomic()
        if succ_a == a:
            sig[pred_b] = succ_b
        elif succ_b == b:
            sig[pred_a] = succ_a
        else:
            sig[pred_a] = succ_b
            sig[pred_b] = succ_a
        del sig[a], sig[b]
        root = succ_a if succ_a != a else succ_b
        return _extract(sig, alf, root)

    # -- predicates -------------------------------------------------------------

    def is_bipartite(self) -> bool:
        """All faces have even degree (equivalently, vertices 2-colourable)."""
        return all(len(f) % 2 == 0 for f in self.faces)

    def is_eulerian(self) -> bool:
        """All vertices have even degree."""
        if self.is_atomic:
            return True
        return all(len(v) % 2 == 0 for v in self.vertices)

    def is_separable(self) -> bool:
        """Atomic, or obtainable by gluing two non-atomic maps at a vertex.

        Equivalent to the underlying multigraph having more than one block,
        where each loop counts as a block of its own.
        """
        if self.is_atomic:
            return True
        if self.n_edges == 1:
            return False
        return self._block_count() > 1

    def _block_count(self) -> int:
        edges = self.multigraph_edges()
        loops = sum(1 for u, v in edges if u == v)
        plain = [(u, v) for u, v in edges if u != v]
        if not plain:
            return loops
        adj = {}
        for i, (u, v) in enumerate(plain):
            adj.setdefault(u, []).append((v, i))
            adj.setdefault(v, []).append((u, i))
        index, low = {}, {}
        blocks = 0
        counter = 0
        for start in adj:
            if start in index:
                continue
            index[start] = low[start] = counter
            counter += 1
            call = [(start, None, iter(adj[start]))]
            while call:
                node, in_edge, it = call[-1]
                advanced = False
                for nbr, ei in it:
                    if ei == in_edge:
                        continue
                    if nbr not in index:
                        index[nbr] = low[nbr] = counter
                        counter += 1
                        call.append((nbr, ei, iter(adj[nbr])))
                        advanced = True
                        break
                    low[node] = min(low[node], index[nbr])
                if not advanced:
                    call.pop()
                    if call:
                        parent = call[-1][0]
                        low[parent] = min(low[parent], low[node])
                        if low[node] >= index[parent]:
                            blocks += 1
        return blocks + loops

    def is_near_triangulation(self) -> bool:
        """All non-root faces have degree 3; the atomic map qualifies."""
        if self.is_atomic:
            return True
        rf = self.face_of[self.alpha[self.root]]
        return all(len(f) == 3 for i, f in enumerate(self.faces) if i != rf)

    def is_near_quadrangulation(self) -> bool:
        """All non-root faces have degree 4; the atomic map qualifies."""
        if self.is_atomic:
            return True
        rf = self.face_of[self.alpha[self.root]]
        return all(len(f) == 4 for i, f in enumerate(self.faces) if i != rf)

    def is_quadrangulation(self) -> bool:
        """All faces, the root face included, have degree 4."""
        return not self.is_atomic and all(len(f) == 4 for f in self.faces)

    def is_4valent(self) -> bool:
        return not self.is_atomic and all(len(v) == 4 for v in self.vertices)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.multigraph_edges())


def _component(sig, alf, start):
    seen = {start}
    stack = [start]
    while stack:
        d = stack.pop()
        for e in (sig[d], alf[d]):
            if e not in seen:
                seen.add(e)
                stack.append(e)
    return seen


def _extract(sig, alf, root) -> RootedMap:
    """Build the RootedMap spanned by the component of `root` in a dart dict."""
    if root is None or root not in sig:
        return RootedMap.atomic()
    comp = sorted(_component(sig, alf, root))
    relabel = {d: i for i, d in enumerate(comp)}
    alpha = [relabel[alf[d]] for d in comp]
    sigma = [relabel[sig[d]] for d in comp]
    return RootedMap(alpha, sigma, relabel[root])
