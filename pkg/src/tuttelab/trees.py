"""Tree-like intermediate objects used by the map bijections.

Three families:

* BlossomingTree -- a plane binary tree rooted at a leaf whose inner nodes
  each carry one flower in one of the three non-parent slots.  A tree with
  n inner nodes has n flowers and n + 2 leaves (the trivial tree, a bare
  leaf, is allowed as a decomposition piece).
* LabelledTree -- a rooted plane tree with positive integer labels whose
  minimum is 1 and which change by 0 or +-1 along edges; well labelled if
  the root label is 1.
* DyckShuffle -- a word over {a, A, b, B} whose a/A and b/B subwords are
  each balanced (Dyck) words.

Serializations are deterministic strings: blossoming trees in preorder
over {l, n<flower-position>}, labelled trees as preorder label:child-count
tokens, shuffles as the raw ASCII word.
"""

from __future__ import annotations

import itertools

LEAF = "leaf"
FLOWER = "flower"


class TreeError(ValueError):
    pass


class BNode:
    __slots__ = ("flower_pos", "left", "right")

    def __init__(self, flower_pos, left, right):
        if flower_pos not in (0, 1, 2):
            raise TreeError("flower position must be 0, 1 or 2")
        self.flower_pos = flower_pos
        self.left = left
        self.right = right


class BlossomingTree:
    """top is a BNode, or LEAF for the trivial single-leaf tree."""

    def __init__(self, top):
        self.top = top

    @property
    def n_nodes(self) -> int:
        def count(t):
            return 0 if t is LEAF else 1 + count(t.left) + count(t.right)
        return count(self.top)

    def to_string(self) -> str:
        def ser(t):
            if t is LEAF:
                return "l"
            return f"n{t.flower_pos}({ser(t.left)},{ser(t.right)})"
        return ser(self.top)

    @staticmethod
    def from_string(s: str) -> "BlossomingTree":
        pos = 0

        def parse():
            nonlocal pos
            if s[pos] == "l":
                pos += 1
                return LEAF
            if s[pos] != "n":
                raise TreeError(f"bad blossoming tree at {pos}: {s!r}")
            fp = int(s[pos + 1])
            pos += 2
            if s[pos] != "(":
                raise TreeError(f"expected ( at {pos}: {s!r}")
            pos += 1
            left = parse()
            if s[pos] != ",":
                raise TreeError(f"expected , at {pos}: {s!r}")
            pos += 1
            right = parse()
            if s[pos] != ")":
                raise TreeError(f"expected ) at {pos}: {s!r}")
            pos += 1
            return BNode(fp, left, right)

        top = parse()
        if pos != len(s):
            raise TreeError(f"trailing input in {s!r}")
        return BlossomingTree(top)

    def __eq__(self, other):
        return (isinstance(other, BlossomingTree)
                and self.to_string() == other.to_string())

    def __hash__(self):
        return hash(self.to_string())

    def __repr__(self):
        return f"BlossomingTree({self.to_string()!r})"

    @staticmethod
    def all_trees(n: int):
        """All blossoming trees with n inner nodes (3^n * Catalan(n))."""
        def shapes(k):
            if k == 0:
                yield LEAF
                return
            for a in range(k):
                for left in shapes(a):
                    for right in shapes(k - 1 - a):
                        for fp in (0, 1, 2):
                            yield BNode(fp, left, right)
        return [BlossomingTree(t) for t in shapes(n)]

    # -- dart form -----------------------------------------------------------
    #
    # Inner node i owns darts 4i..4i+3 in counterclockwise order
    # [parent, slot0, slot1, slot2]; sigma cycles them.  Flowers, leaves and
    # the root leaf are alpha fixed points, tagged in `kind`.

    def to_darts(self):
        """Returns (sigma, alpha, kind, root_dart); kind maps half-edge
        darts to LEAF or FLOWER.  The trivial tree has no dart form."""
        if self.top is LEAF:
            raise TreeError("the trivial tree has no dart form")
        index = {}

        def walk(t):
            index[id(t)] = len(nodes)
            nodes.append(t)
            if t.left is not LEAF:
                walk(t.left)
            if t.right is not LEAF:
                walk(t.right)

        nodes = []
        walk(self.top)
        n = len(nodes)
        sigma = [0] * (4 * n)
        alpha = list(range(4 * n))
        kind = {}
        for i in range(n):
            for k in range(4):
                sigma[4 * i + k] = 4 * i + (k + 1) % 4
        for t in nodes:
            i = index[id(t)]
            slots = [4 * i + 1, 4 * i + 2, 4 * i + 3]
            kind[slots[t.flower_pos]] = FLOWER
            childs = [s for j, s in enumerate(slots) if j != t.flower_pos]
            for s, child in zip(childs, (t.left, t.right)):
                if child is LEAF:
                    kind[s] = LEAF
                else:
                    p = 4 * index[id(child)]
                    alpha[s] = p
                    alpha[p] = s
        root = 0
        kind[root] = LEAF
        return sigma, alpha, kind, root

    @staticmethod
    def from_darts(sigma, alpha, kind, root_dart) -> "BlossomingTree":
        """Rebuild the tree from a dart structure, rooted at the given leaf
        half-edge.  Inverse of to_darts (up to dart names)."""
        if kind.get(root_dart) != LEAF:
            raise TreeError("root dart must be a leaf half-edge")

        def build(parent_dart):
            slots = [sigma[parent_dart]]
            slots.append(sigma[slots[-1]])
            slots.append(sigma[slots[-1]])
            fps = [i for i, s in enumerate(slots) if kind.get(s) == FLOWER]
            if len(fps) != 1:
                raise TreeError("inner node must carry exactly one flower")
            children = []
            for i, s in enumerate(slots):
                if i == fps[0]:
                    continue
                if kind.get(s) == LEAF:
                    children.append(LEAF)
                else:
                    children.append(build(alpha[s]))
            return BNode(fps[0], children[0], children[1])

        return BlossomingTree(build(root_dart))


class LabelledTree:
    """Rooted plane tree with integer labels; children are ordered."""

    def __init__(self, label, children=()):
        self.label = int(label)
        self.children = list(children)

    @property
    def n_edges(self) -> int:
        return sum(1 + c.n_edges for c in self.children)

    def labels(self):
        out = [self.label]
        for c in self.children:
            out.extend(c.labels())
        return out

    def is_valid(self, well: bool = False) -> bool:
        """Labels positive with minimum 1, adjacent labels differing by
        0 or +-1; well labelled additionally means root label 1."""
        def edges_ok(t):
            return all(abs(t.label - c.label) <= 1 and edges_ok(c)
                       for c in t.children)
        labs = self.labels()
        ok = min(labs) == 1 and all(l >= 1 for l in labs) and edges_ok(self)
        if well:
            ok = ok and self.label == 1
        return ok

    def to_string(self) -> str:
        out = []

        def ser(t):
            out.append(f"{t.label}:{len(t.children)}")
            for c in t.children:
                ser(c)
        ser(self)
        return " ".join(out)

    @staticmethod
    def from_string(s: str) -> "LabelledTree":
        tokens = s.split()
        pos = 0

        def parse():
            nonlocal pos
            label, nc = tokens[pos].split(":")
            pos += 1
            return LabelledTree(int(label),
                                [parse() for _ in range(int(nc))])

        t = parse()
        if pos != len(tokens):
            raise TreeError(f"trailing input in {s!r}")
        return t

    def __eq__(self, other):
        return (isinstance(other, LabelledTree)
                and self.to_string() == other.to_string())

    def __hash__(self):
        return hash(self.to_string())

    def __repr__(self):
        return f"LabelledTree({self.to_string()!r})"

    @staticmethod
    def all_labelled_trees(n: int):
        """All labelled trees with n edges (3^n * Catalan(n) of them):
        every plane tree shape combined with every +-1/0 increment vector,
        shifted so the minimum label is 1."""
        def shapes(k):
            if k == 0:
                yield LabelledTree(0)
                return
            # root with first subtree of e edges (plus its connecting edge)
            for e in range(k):
                for first in shapes(e):
                    for rest in shapes(k - 1 - e):
                        yield LabelledTree(0, [first] + rest.children)

        def assign(t, diffs, it):
            for c in t.children:
                c.label = t.label + next(it)
                assign(c, diffs, it)

        out = []
        for shape in shapes(n):
            base = shape.to_string()
            for diffs in itertools.product((-1, 0, 1), repeat=n):
                t = LabelledTree.from_string(base)
                assign(t, diffs, iter(diffs))
                shift = 1 - min(t.labels())

                def bump(node):
                    node.label += shift
                    for c in node.children:
                        bump(c)
                bump(t)
                out.append(t)
        return out


class DyckShuffle:
    """A shuffle of two Dyck words: letters a/A form one balanced word,
    letters b/B the other."""

    def __init__(self, word: str):
        if set(word) - set("aAbB"):
            raise TreeError(f"bad letters in {word!r}")
        for lo, hi in (("a", "A"), ("b", "B")):
            depth = 0
            for ch in word:
                if ch == lo:
                    depth += 1
                elif ch == hi:
                    depth -= 1
                    if depth < 0:
                        raise TreeError(f"{lo}/{hi} subword of {word!r} "
                                        "is not a Dyck word")
            if depth:
                raise TreeError(f"{lo}/{hi} subword of {word!r} is unbalanced")
        self.word = word

    @property
    def n_tree_edges(self) -> int:
        return sum(1 for ch in self.word if ch == "a")

    @property
    def n_nontree_edges(self) -> int:
        return sum(1 for ch in self.word if ch == "b")

    def __eq__(self, other):
        return isinstance(other, DyckShuffle) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return f"DyckShuffle({self.word!r})"

    @staticmethod
    def all_shuffles(i: int, j: int):
        """All shuffles of a Dyck word with i a-pairs and one with j
        b-pairs: C(2i+2j, 2i) * Catalan(i) * Catalan(j) of them."""
        def dycks(k, lo, hi):
            if k == 0:
                yield ""
                return
            # first return decomposition: lo D1 hi D2
            for inner in range(k):
                for d1 in dycks(inner, lo, hi):
                    for d2 in dycks(k - 1 - inner, lo, hi):
                        yield lo + d1 + hi + d2

        out = []
        for u in dycks(i, "a", "A"):
            for v in dycks(j, "b", "B"):
                for positions in itertools.combinations(
                        range(2 * i + 2 * j), 2 * i):
                    word = [None] * (2 * i + 2 * j)
                    pos = set(positions)
                    iu = iter(u)
                    iv = iter(v)
                    for k in range(len(word)):
                        word[k] = next(iu) if k in pos else next(iv)
                    out.append(DyckShuffle("".join(word)))
        return out
