"""Canonical factorizations of a map and the three-valued sign.

Two decompositions are provided: splitting a map into its restrictions to
connected components (pairwise disjoint forests on a cycle), and writing a
map as a word of moves followed by transpositions of core elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import Endofunction, compose, identity, is_bijection
from .structure import components, level_partition


@dataclass(frozen=True)
class Move:
    """The idempotent map sending one point somewhere else, fixing the rest."""

    n: int
    source: int
    target: int

    def __post_init__(self) -> None:
        if not (1 <= self.source <= self.n and 1 <= self.target <= self.n):
            raise ValueError("move endpoints must lie in 1..n")
        if self.source == self.target:
            raise ValueError("a move must displace its source")

    def as_endofunction(self) -> Endofunction:
        table = list(range(1, self.n + 1))
        table[self.source - 1] = self.target
        return Endofunction(tuple(table))

    def __str__(self) -> str:
        return f"m({self.source},{self.target})"


@dataclass(frozen=True)
class Transposition:
    """The bijection swapping two points; stored with a < b."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (1 <= self.a <= self.n and 1 <= self.b <= self.n) or self.a == self.b:
            raise ValueError("a transposition swaps two distinct points in 1..n")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    def as_endofunction(self) -> Endofunction:
        table = list(range(1, self.n + 1))
        table[self.a - 1] = self.b
        table[self.b - 1] = self.a
        return Endofunction(tuple(table))

    def __str__(self) -> str:
        return f"({self.a} {self.b})"


WordFactor = Union[Move, Transposition]


@dataclass(frozen=True)
class GeneratorWord:
    """An ordered word of moves and transpositions, applied right to left.

    The canonical word for a map has one move per off-core point (so
    move_count == n - core_size) followed by a transposition word for the
    core permutation.
    """

    n: int
    factors: tuple[WordFactor, ...]
    core_size: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if not 1 <= self.core_size <= self.n:
            raise ValueError("core size must lie in 1..n")
        for factor in self.factors:
            if factor.n != self.n:
                raise ValueError("every factor must act on the same universe")

    @property
    def move_count(self) -> int:
        return sum(1 for factor in self.factors if isinstance(factor, Move))

    @property
    def transposition_count(self) -> int:
        return sum(1 for factor in self.factors if isinstance(factor, Transposition))

    def __str__(self) -> str:
        return " ".join(str(factor) for factor in self.factors) if self.factors else "(empty)"


def all_moves(n: int) -> tuple[Move, ...]:
    """Every move on {1..n}, ordered by source then target."""
    return tuple(
        Move(n, s, t) for s in range(1, n + 1) for t in range(1, n + 1) if s != t
    )


def moved_region(f: Endofunction) -> frozenset[int]:
    """Union of the non-singleton components: every vertex the graph of f
    touches with an edge."""
    return frozenset(
        x for comp in components(f).components if len(comp) > 1 for x in comp
    )


def are_disjoint(f: Endofunction, g: Endofunction) -> bool:
    """Pointwise disjoint: every point is fixed by f or by g.

    This is weaker than acting on disjoint components, and by itself does
    not force f and g to commute: m(1,2) and m(3,1) are pointwise disjoint
    yet compose differently in the two orders.  See are_graph_disjoint for
    the stronger notion.
    """
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} vs {g.n}")
    return all(
        fv == x or gv == x
        for x, (fv, gv) in enumerate(zip(f.images, g.images), start=1)
    )


def are_graph_disjoint(f: Endofunction, g: Endofunction) -> bool:
    """Graph-level disjoint: no vertex lies in a non-singleton component of
    both maps.

    Graph-disjoint maps commute, and the forest-on-a-cycle factorization is
    unique among graph-disjoint families.
    """
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} vs {g.n}")
    return not (moved_region(f) & moved_region(g))


def forest_on_cycle_factors(f: Endofunction) -> tuple[Endofunction, ...]:
    """Split f into its restrictions to non-singleton components.

    Each factor agrees with f on one component and fixes everything else;
    the factors commute and compose back to f in any order.  The identity
    yields the empty tuple.  Factors are ordered by the minimum vertex of
    their component.
    """
    factors = []
    for comp in components(f).components:
        if len(comp) == 1:
            continue
        table = list(range(1, f.n + 1))
        for x in comp:
            table[x - 1] = f.images[x - 1]
        factors.append(Endofunction(tuple(table)))
    return tuple(factors)


def permutation_cycles(f: Endofunction) -> tuple[tuple[int, ...], ...]:
    """Cycles of a bijection, fixed points included as 1-cycles.

    Each cycle starts at its minimum element; cycles are listed by
    ascending minimum.
    """
    if not is_bijection(f):
        raise ValueError("cycle decomposition needs a bijection")
    seen: set[int] = set()
    cycles = []
    for x in range(1, f.n + 1):
        if x in seen:
            continue
        cyc = [x]
        seen.add(x)
        y = f.images[x - 1]
        while y != x:
            cyc.append(y)
            seen.add(y)
            y = f.images[y - 1]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def transposition_word(sigma: Endofunction) -> tuple[Transposition, ...]:
    """Standard cycle splitting of a bijection into transpositions.

    A cycle (c1 c2 ... ck) with c1 minimal becomes (c1 ck)(c1 ck-1)...(c1 c2);
    cycles are processed by ascending minimum, fixed points contribute
    nothing.
    """
    words = []
    for cyc in permutation_cycles(sigma):
        head = cyc[0]
        for other in reversed(cyc[1:]):
            words.append(Transposition(sigma.n, head, other))
    return tuple(words)


def core_permutation(f: Endofunction) -> Endofunction:
    """The restriction of f to its cyclic core, extended by the identity."""
    lp = level_partition(f)
    table = list(range(1, f.n + 1))
    for c in lp.levels[0]:
        table[c - 1] = f.images[c - 1]
    return Endofunction(tuple(table))


def moves_transpositions(f: Endofunction) -> GeneratorWord:
    """Write f as moves (one per off-core point) followed by transpositions.

    Moves are emitted level by level from the top level down to level 1,
    sources ascending within a level, each sending a point to its image;
    they all fix the core.  The tail of the word is the transposition word
    of the core permutation.  Applying the word right to left reproduces f.
    """
    lp = level_partition(f)
    factors: list[WordFactor] = []
    for level in reversed(lp.levels[1:]):
        for x in level:
            factors.append(Move(f.n, x, f.images[x - 1]))
    factors.extend(transposition_word(core_permutation(f)))
    return GeneratorWord(n=f.n, factors=tuple(factors), core_size=len(lp.levels[0]))


def evaluate_word(word: GeneratorWord) -> Endofunction:
    """Compose the factors right to left; the empty word is the identity."""
    result = identity(word.n)
    for factor in reversed(word.factors):
        result = compose(factor.as_endofunction(), result)
    return result


def sign(f: Endofunction) -> int:
    """+1 on even bijections, -1 on odd ones, 0 on non-injective maps.

    Multiplicative: the sign of a composite is the product of the signs.
    """
    if not is_bijection(f):
        return 0
    return 1 if (f.n - len(permutation_cycles(f))) % 2 == 0 else -1
