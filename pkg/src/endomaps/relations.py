"""Endofunctions as preorders, and the stable equivalence of morphisms.

Reachability under iteration turns every object into a preordered set, and
every morphism into a monotone map; the construction is faithful but not
full.  Bijection objects land exactly on the equivalence relations and
forest objects exactly on the partial orders.  Separately, parallel
morphisms can be identified when they differ only by collapsing components
to fixed points; this is a two-sided congruence on hom-sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import Morphism
from .core import Endofunction
from .structure import components

EQUIVALENCE = "equivalence"
PARTIAL_ORDER = "partial-order"
BOTH = "both"
NEITHER = "neither"


@dataclass(frozen=True)
class PreorderRelation:
    """A reflexive transitive relation on {1..n} as a dense boolean table.

    ``holds[x - 1][y - 1]`` means x is below y.  Both axioms are enforced
    at construction.
    """

    n: int
    holds: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(bool(v) for v in row) for row in self.holds)
        object.__setattr__(self, "holds", rows)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise ValueError("relation table must be n x n")
        for x in range(self.n):
            if not rows[x][x]:
                raise ValueError(f"relation is not reflexive at {x + 1}")
        for x in range(self.n):
            for y in range(self.n):
                if not rows[x][y]:
                    continue
                for z in range(self.n):
                    if rows[y][z] and not rows[x][z]:
                        raise ValueError(
                            f"relation is not transitive at {x + 1},{y + 1},{z + 1}"
                        )

    def __call__(self, x: int, y: int) -> bool:
        return self.holds[x - 1][y - 1]


def to_preord(obj: Endofunction) -> PreorderRelation:
    """x is below y when x is an iterated image of y.

    On n points, iteration exponents up to n suffice; the relation is
    computed by n rounds of image composition.
    """
    n = obj.n
    holds = [[False] * n for _ in range(n)]
    current = list(range(1, n + 1))
    for _ in range(n + 1):
        for y in range(1, n + 1):
            holds[current[y - 1] - 1][y - 1] = True
        current = [obj.images[v - 1] for v in current]
    return PreorderRelation(n=n, holds=tuple(tuple(row) for row in holds))


def reachability_closure(obj: Endofunction) -> PreorderRelation:
    """The same relation built differently: reflexive-transitive closure of
    the single-step relation, kept as an independent construction."""
    n = obj.n
    holds = [[x == y for y in range(1, n + 1)] for x in range(1, n + 1)]
    for y in range(1, n + 1):
        holds[obj.images[y - 1] - 1][y - 1] = True
    for mid in range(n):
        for x in range(n):
            if holds[x][mid]:
                for y in range(n):
                    if holds[mid][y]:
                        holds[x][y] = True
    return PreorderRelation(n=n, holds=tuple(tuple(row) for row in holds))


def preorder_kind(rel: PreorderRelation) -> str:
    """Classify by symmetry and antisymmetry.

    equivalence when symmetric, partial-order when antisymmetric, both when
    it is equality, neither otherwise.
    """
    symmetric = True
    antisymmetric = True
    for x in range(rel.n):
        for y in range(x + 1, rel.n):
            forward, backward = rel.holds[x][y], rel.holds[y][x]
            if forward != backward:
                symmetric = False
            if forward and backward:
                antisymmetric = False
    if symmetric and antisymmetric:
        return BOTH
    if symmetric:
        return EQUIVALENCE
    if antisymmetric:
        return PARTIAL_ORDER
    return NEITHER


def stable_equivalent(g: Morphism, h: Morphism) -> bool:
    """Parallel morphisms are stably equivalent when on every component of
    the domain they agree pointwise, or both collapse the component to a
    fixed point of the codomain.

    An equivalence on each hom-set, and compatible with composition on
    both sides.
    """
    if g.dom != h.dom or g.cod != h.cod:
        raise ValueError("morphisms must share domain and codomain")
    cod_images = g.cod.images
    for comp in components(g.dom).components:
        if all(g.table[x - 1] == h.table[x - 1] for x in comp):
            continue
        g_values = {g.table[x - 1] for x in comp}
        h_values = {h.table[x - 1] for x in comp}
        if len(g_values) == 1 and len(h_values) == 1:
            gv = next(iter(g_values))
            hv = next(iter(h_values))
            if cod_images[gv - 1] == gv and cod_images[hv - 1] == hv:
                continue
        return False
    return True
