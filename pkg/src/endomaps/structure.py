"""Structural anatomy of a single endofunction.

Every map on a finite set looks like a collection of directed cycles with
trees hanging off them.  This module computes the pieces: the level
partition (distance to the nearest cycle), the cyclic core, the functional
graph in directed and undirected form, the connected components, and the
predicates built from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Endofunction, compose, power


@dataclass(frozen=True)
class LevelStructure:
    """Height m and level sets of a map.

    Level 0 is the eventual image (the cyclic core); level i > 0 holds the
    points whose distance to the core is exactly i.  The map sends each
    level into the one below and permutes level 0.
    """

    height: int
    levels: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ComponentDecomposition:
    """Vertex sets of the connected components of the undirected graph."""

    components: tuple[tuple[int, ...], ...]

    def containing(self, x: int) -> tuple[int, ...]:
        for comp in self.components:
            if x in comp:
                return comp
        raise ValueError(f"element {x} is in no component")


@dataclass(frozen=True)
class GraphEdges:
    """Arrow set (i, f(i)) and the loop-free undirected edge set.

    The undirected edge count can drop below n: fixed points contribute no
    edge and a transposition's two arrows merge into one edge.
    """

    directed: tuple[tuple[int, int], ...]
    undirected: tuple[tuple[int, int], ...]


class UnionFind:
    """Array union-find with path compression over 1-indexed elements.

    Roots are kept minimal so the resulting components are deterministic.
    """

    def __init__(self, n: int) -> None:
        self.parent = list(range(n + 1))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@lru_cache(maxsize=None)
def level_partition(f: Endofunction) -> LevelStructure:
    """Partition {1..n} into the cyclic core and distance-to-core levels.

    The core is the stable set of the descending chain of iterated images;
    the higher levels are peeled off by taking successive preimages of what
    has been reached so far.
    """
    universe = frozenset(range(1, f.n + 1))
    image = universe
    while True:
        nxt = frozenset(f.images[x - 1] for x in image)
        if nxt == image:
            break
        image = nxt
    levels = [tuple(sorted(image))]
    reached = set(image)
    while len(reached) < f.n:
        pulled = {x for x in universe if f.images[x - 1] in reached} - reached
        assert pulled, "preimage chain stalled before covering the universe"
        levels.append(tuple(sorted(pulled)))
        reached |= pulled
    return LevelStructure(height=len(levels) - 1, levels=tuple(levels))


@lru_cache(maxsize=None)
def cyclic_core(f: Endofunction) -> tuple[int, ...]:
    """The vertices sitting on directed cycles: the image of the n-th power.

    The map restricted to this set is a bijection of it.
    """
    return tuple(sorted(set(power(f, f.n).images)))


@lru_cache(maxsize=None)
def components(f: Endofunction) -> ComponentDecomposition:
    """Connected components of the undirected graph, via union-find.

    Components are closed under the map and its preimages; each carries
    exactly one directed cycle.  Vertex sets are sorted ascending and the
    list is ordered by minimum element.
    """
    uf = UnionFind(f.n)
    for x, y in enumerate(f.images, start=1):
        if x != y:
            uf.union(x, y)
    groups: dict[int, list[int]] = {}
    for x in range(1, f.n + 1):
        groups.setdefault(uf.find(x), []).append(x)
    comps = tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))
    return ComponentDecomposition(components=comps)


def graph_edges(f: Endofunction) -> GraphEdges:
    directed = tuple((x, y) for x, y in enumerate(f.images, start=1))
    undirected = tuple(sorted({(min(x, y), max(x, y)) for x, y in directed if x != y}))
    return GraphEdges(directed=directed, undirected=undirected)


def is_forest(f: Endofunction) -> bool:
    """True when every orbit ends at a fixed point: f^n equals f^(n+1)."""
    return power(f, f.n) == power(f, f.n + 1)


def is_idempotent(f: Endofunction) -> bool:
    """True when composing f with itself changes nothing.

    Equivalently the graph is a forest of height at most one whose roots
    are all fixed.
    """
    return compose(f, f) == f


def is_forest_on_cycle(f: Endofunction) -> bool:
    """True when at most one component is larger than a single vertex.

    Such a map is one directed cycle with trees attached, all other points
    fixed; these are the indecomposable factors of any map.  The identity
    qualifies vacuously (and factors as the empty product).
    """
    return sum(1 for comp in components(f).components if len(comp) > 1) <= 1
