"""Finite sets with a self-map as a category.

Objects are endofunctions (the carrier is always {1..n}); morphisms are
maps commuting with the two self-maps, i.e. homomorphisms of unary
algebras.  Bijection objects behave like a torsion class and forest
objects like a torsion-free class: every object sits in a short sequence
between its cyclic core and its forest quotient, and that sequence
satisfies the kernel/cokernel universal properties stated relative to
trivial morphisms (those factoring through an identity object).

All universal properties here are verified by bounded enumeration; the
bound is part of each checker's contract.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import (
    Endofunction,
    _compose_tables,
    is_bijection,
    iter_endofunctions,
    power,
)
from .errors import BoundExceededError
from .factorization import permutation_cycles
from .structure import components, cyclic_core, is_forest, level_partition

MapObject = Endofunction

DEFAULT_MAX_HOM_TABLES = 10**6

TORSION = "torsion"
TORSION_FREE = "torsion-free"
NEITHER = "neither"
BOTH = "both"

REFLECTIVE_BIJECTIONS = "reflective-bijections"
COREFLECTIVE_BIJECTIONS = "coreflective-bijections"
REFLECTIVE_FORESTS = "reflective-forests"

ADJUNCTION_SIDES = (
    REFLECTIVE_BIJECTIONS,
    COREFLECTIVE_BIJECTIONS,
    REFLECTIVE_FORESTS,
)


def _commutes(
    dom_images: tuple[int, ...],
    cod_images: tuple[int, ...],
    table: tuple[int, ...],
) -> bool:
    # g(f(x)) == f'(g(x)) for every x; zip pairs (f(x), g(x)) in x order.
    return all(table[y - 1] == cod_images[v - 1] for y, v in zip(dom_images, table))


@dataclass(frozen=True)
class Morphism:
    """A map between two objects whose square with the self-maps commutes."""

    dom: Endofunction
    cod: Endofunction
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.dom.n:
            raise ValueError("table length must equal the domain size")
        if any(not isinstance(v, int) or not 1 <= v <= self.cod.n for v in table):
            raise ValueError("table entries must land in the codomain")
        if not _commutes(self.dom.images, self.cod.images, table):
            raise ValueError("table does not commute with the self-maps")

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.dom.n:
            raise ValueError(f"element {x} is not in 1..{self.dom.n}")
        return self.table[x - 1]

    def __repr__(self) -> str:
        return f"Morphism({list(self.dom.images)} -> {list(self.cod.images)}, {list(self.table)})"


def is_morphism(dom: Endofunction, cod: Endofunction, table) -> bool:
    """Does the table commute with the two self-maps?"""
    table = tuple(table)
    if len(table) != dom.n or any(
        not isinstance(v, int) or not 1 <= v <= cod.n for v in table
    ):
        raise ValueError("malformed table")
    return _commutes(dom.images, cod.images, table)


def identity_morphism(obj: Endofunction) -> Morphism:
    return Morphism(obj, obj, tuple(range(1, obj.n + 1)))


def compose_morphisms(outer: Morphism, inner: Morphism) -> Morphism:
    if inner.cod != outer.dom:
        raise ValueError("morphisms are not composable")
    return Morphism(inner.dom, outer.cod, _compose_tables(outer.table, inner.table))


@lru_cache(maxsize=None)
def _hom_tables(
    dom_images: tuple[int, ...], cod_images: tuple[int, ...]
) -> tuple[tuple[int, ...], ...]:
    n_cod = len(cod_images)
    return tuple(
        table
        for table in itertools.product(range(1, n_cod + 1), repeat=len(dom_images))
        if _commutes(dom_images, cod_images, table)
    )


def _tables(
    dom: Endofunction, cod: Endofunction, max_tables: int
) -> tuple[tuple[int, ...], ...]:
    if cod.n**dom.n > max_tables:
        raise BoundExceededError(
            f"{cod.n}^{dom.n} candidate tables exceed the bound {max_tables}"
        )
    return _hom_tables(dom.images, cod.images)


def hom_set(
    dom: Endofunction,
    cod: Endofunction,
    max_tables: int = DEFAULT_MAX_HOM_TABLES,
) -> tuple[Morphism, ...]:
    """Every morphism dom -> cod, by filtering all cod.n ** dom.n tables.

    Deliberately brute force, in lexicographic table order: this is the
    oracle the rest of the machinery is judged against.
    """
    return tuple(
        Morphism(dom, cod, table) for table in _tables(dom, cod, max_tables)
    )


def _trivial_table(
    dom_components: tuple[tuple[int, ...], ...],
    cod_images: tuple[int, ...],
    table: tuple[int, ...],
) -> bool:
    for comp in dom_components:
        v = table[comp[0] - 1]
        if any(table[x - 1] != v for x in comp[1:]):
            return False
        if cod_images[v - 1] != v:
            return False
    return True


def is_trivial_morphism(g: Morphism) -> bool:
    """Constant on every component of the domain, with image made of fixed
    points of the codomain.

    Equivalently: g factors through an object whose self-map is the
    identity.
    """
    return _trivial_table(components(g.dom).components, g.cod.images, g.table)


@dataclass(frozen=True)
class Congruence:
    """A partition of {1..n}; compatibility with a map is checked on use."""

    n: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        classes = tuple(
            tuple(sorted(cls)) for cls in sorted(self.classes, key=min)
        )
        object.__setattr__(self, "classes", classes)
        flat = [x for cls in classes for x in cls]
        if sorted(flat) != list(range(1, self.n + 1)):
            raise ValueError("classes must partition {1..n}")


def is_congruence(f: Endofunction, cong: Congruence) -> bool:
    """Compatibility: related points stay related after applying the map."""
    if cong.n != f.n:
        return False
    index = _class_index(cong)
    return all(
        len({index[f.images[x - 1]] for x in cls}) == 1 for cls in cong.classes
    )


def _class_index(cong: Congruence) -> dict[int, int]:
    return {x: i for i, cls in enumerate(cong.classes, start=1) for x in cls}


@lru_cache(maxsize=None)
def cycle_congruence(obj: Endofunction) -> Congruence:
    """Classes are the directed cycles; off-cycle points are singletons.

    Two points are related exactly when each is reachable from the other;
    this is also the smallest congruence relating every point's eventual
    image with its successor.
    """
    core = set(cyclic_core(obj))
    classes = []
    seen: set[int] = set()
    for x in range(1, obj.n + 1):
        if x in seen:
            continue
        if x in core:
            cyc = [x]
            seen.add(x)
            y = obj.images[x - 1]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = obj.images[y - 1]
            classes.append(tuple(sorted(cyc)))
        else:
            classes.append((x,))
            seen.add(x)
    return Congruence(n=obj.n, classes=tuple(classes))


def quotient(obj: Endofunction, cong: Congruence) -> tuple[Endofunction, Morphism]:
    """Collapse each class to a point; returns the induced map and the
    projection.

    Classes are renumbered 1..k by ascending minimum.  For the cycle
    congruence the result is always a forest, and the projection
    coequalizes the n-th and (n+1)-th powers.
    """
    if cong.n != obj.n:
        raise ValueError("congruence size mismatch")
    index = _class_index(cong)
    table = []
    for cls in cong.classes:
        targets = {index[obj.images[x - 1]] for x in cls}
        if len(targets) != 1:
            raise ValueError("partition is not compatible with the map")
        table.append(targets.pop())
    induced = Endofunction(tuple(table))
    projection = Morphism(obj, induced, tuple(index[x] for x in range(1, obj.n + 1)))
    return induced, projection


def torsion_part(obj: Endofunction) -> tuple[Endofunction, Morphism]:
    """The restriction of the map to its cyclic core, with the inclusion.

    The core is renumbered ascending so the part lives on {1..p}; the
    inclusion's table records the original labels.
    """
    core = cyclic_core(obj)
    pos = {c: i for i, c in enumerate(core, start=1)}
    part = Endofunction(tuple(pos[obj.images[c - 1]] for c in core))
    inclusion = Morphism(part, obj, core)
    return part, inclusion


@dataclass(frozen=True)
class PreexactSequence:
    """Core inclusion followed by the forest-quotient projection."""

    torsion: Morphism
    quotient: Morphism

    def __post_init__(self) -> None:
        if self.torsion.cod != self.quotient.dom:
            raise ValueError("the two morphisms must share the middle object")
        if len(set(self.torsion.table)) != self.torsion.dom.n:
            raise ValueError("the core inclusion must be injective")
        if len(set(self.quotient.table)) != self.quotient.cod.n:
            raise ValueError("the projection must be surjective")
        if not is_bijection(self.torsion.dom):
            raise ValueError("the left object must carry a bijection")
        if not is_forest(self.quotient.cod):
            raise ValueError("the right object must be a forest")


def preexact_sequence(obj: Endofunction) -> PreexactSequence:
    """The canonical short sequence core -> obj -> forest quotient."""
    _, inclusion = torsion_part(obj)
    _, projection = quotient(obj, cycle_congruence(obj))
    return PreexactSequence(torsion=inclusion, quotient=projection)


def iter_objects(max_size: int) -> Iterator[Endofunction]:
    """All objects with carrier size 1..max_size, smallest first."""
    for n in range(1, max_size + 1):
        yield from iter_endofunctions(n)


def prekernel_check(
    k: Morphism,
    g: Morphism,
    max_test_size: int = 3,
    max_tables: int = DEFAULT_MAX_HOM_TABLES,
) -> bool:
    """Bounded check that k is a kernel of g relative to trivial morphisms.

    Requires g o k trivial and, for every morphism l into dom(g) with
    g o l trivial, a unique factorization l = k o l'.  "Every" ranges over
    all morphisms from all objects of size <= max_test_size; that bound is
    the contract.
    """
    if k.cod != g.dom:
        raise ValueError("k must land in the domain of g")
    if not is_trivial_morphism(compose_morphisms(g, k)):
        return False
    middle, left = g.dom, k.dom
    for probe in iter_objects(max_test_size):
        probe_components = components(probe).components
        candidate_tables = _tables(probe, left, max_tables)
        for ell in _tables(probe, middle, max_tables):
            composed = _compose_tables(g.table, ell)
            if not _trivial_table(probe_components, g.cod.images, composed):
                continue
            matches = sum(
                1
                for cand in candidate_tables
                if _compose_tables(k.table, cand) == ell
            )
            if matches != 1:
                return False
    return True


def precokernel_check(
    g: Morphism,
    p: Morphism,
    max_test_size: int = 3,
    max_tables: int = DEFAULT_MAX_HOM_TABLES,
) -> bool:
    """Bounded check that p is a cokernel of g relative to trivial morphisms.

    Dual to prekernel_check: p o g must be trivial and every h out of
    cod(g) with h o g trivial must factor uniquely through p.  Probe
    codomains range over all objects of size <= max_test_size.
    """
    if p.dom != g.cod:
        raise ValueError("p must start at the codomain of g")
    if not is_trivial_morphism(compose_morphisms(p, g)):
        return False
    left_components = components(g.dom).components
    middle = g.cod
    for probe in iter_objects(max_test_size):
        candidate_tables = _tables(p.cod, probe, max_tables)
        for h in _tables(middle, probe, max_tables):
            composed = _compose_tables(h, g.table)
            if not _trivial_table(left_components, probe.images, composed):
                continue
            matches = sum(
                1
                for cand in candidate_tables
                if _compose_tables(cand, p.table) == h
            )
            if matches != 1:
                return False
    return True


def functor_R(g: Morphism) -> Morphism:
    """Restrict a morphism to the cyclic cores of its endpoints.

    Morphisms send cycles to cycles, so the restriction is well defined;
    it preserves identities and composition.
    """
    dom_part, dom_inclusion = torsion_part(g.dom)
    cod_part, cod_inclusion = torsion_part(g.cod)
    pos = {c: i for i, c in enumerate(cod_inclusion.table, start=1)}
    table = tuple(pos[g.table[c - 1]] for c in dom_inclusion.table)
    return Morphism(dom_part, cod_part, table)


def functor_C(g: Morphism) -> Morphism:
    """Induce a morphism between the forest quotients.

    Mutually reachable points have mutually reachable images, so the
    induced table on cycle classes is well defined; on a forest object the
    quotient is an isomorphic copy, making this construction idempotent.
    """
    dom_q, dom_proj = quotient(g.dom, cycle_congruence(g.dom))
    cod_q, cod_proj = quotient(g.cod, cycle_congruence(g.cod))
    table = [0] * dom_q.n
    for x in range(1, g.dom.n + 1):
        i = dom_proj.table[x - 1]
        v = cod_proj.table[g.table[x - 1] - 1]
        if table[i - 1] and table[i - 1] != v:
            raise ValueError("map does not descend to the quotients")
        table[i - 1] = v
    return Morphism(dom_q, cod_q, tuple(table))


def winding_morphism(obj: Endofunction) -> Morphism:
    """The retraction of an object onto its cyclic core.

    Iterating the map k times lands every point on a cycle once k reaches
    the height; choosing k as the least multiple of the core permutation's
    order at least the height additionally fixes the core pointwise.  Any
    larger exponent with those two properties (the factorial of n in
    particular) produces the same map.
    """
    part, inclusion = torsion_part(obj)
    height = level_partition(obj).height
    order = math.lcm(*(len(cyc) for cyc in permutation_cycles(part)))
    k = 0 if height == 0 else order * math.ceil(height / order)
    iterated = power(obj, k)
    pos = {c: i for i, c in enumerate(inclusion.table, start=1)}
    return Morphism(obj, part, tuple(pos[v] for v in iterated.images))


def _precompose_is_bijection(
    unit_table: tuple[int, ...],
    reduced_dom: Endofunction,
    full_dom: Endofunction,
    target: Endofunction,
    max_tables: int,
) -> bool:
    # phi' -> phi' o unit must biject hom(reduced, target) onto hom(full, target)
    full_hom = set(_tables(full_dom, target, max_tables))
    seen = set()
    for table in _tables(reduced_dom, target, max_tables):
        composed = _compose_tables(table, unit_table)
        if composed in seen:
            return False
        seen.add(composed)
    return seen == full_hom


def _postcompose_is_bijection(
    counit_table: tuple[int, ...],
    reduced_cod: Endofunction,
    full_cod: Endofunction,
    source: Endofunction,
    max_tables: int,
) -> bool:
    # phi' -> counit o phi' must biject hom(source, reduced) onto hom(source, full)
    full_hom = set(_tables(source, full_cod, max_tables))
    seen = set()
    for table in _tables(source, reduced_cod, max_tables):
        composed = _compose_tables(counit_table, table)
        if composed in seen:
            return False
        seen.add(composed)
    return seen == full_hom


def adjunction_check(
    obj: Endofunction,
    target: Endofunction,
    side: str,
    max_tables: int = DEFAULT_MAX_HOM_TABLES,
) -> bool:
    """Bounded universal-property check for the two subcategory inclusions.

    reflective-bijections: morphisms from obj to a bijection object factor
    uniquely through the winding retraction onto the core.
    coreflective-bijections: morphisms from a bijection object into obj
    factor uniquely through the core inclusion.
    reflective-forests: morphisms from obj to a forest object factor
    uniquely through the quotient projection.

    Each check amounts to composition with the (co)unit being a bijection
    of hom-sets.
    """
    if side == REFLECTIVE_BIJECTIONS:
        if not is_bijection(target):
            raise ValueError("target must be a bijection object")
        w = winding_morphism(obj)
        return _precompose_is_bijection(w.table, w.cod, obj, target, max_tables)
    if side == COREFLECTIVE_BIJECTIONS:
        if not is_bijection(target):
            raise ValueError("target must be a bijection object")
        part, inclusion = torsion_part(obj)
        return _postcompose_is_bijection(
            inclusion.table, part, obj, target, max_tables
        )
    if side == REFLECTIVE_FORESTS:
        if not is_forest(target):
            raise ValueError("target must be a forest object")
        induced, projection = quotient(obj, cycle_congruence(obj))
        return _precompose_is_bijection(
            projection.table, induced, obj, target, max_tables
        )
    raise ValueError(f"unknown side {side!r}; expected one of {ADJUNCTION_SIDES}")


def pretorsion_characterization(obj: Endofunction, bound: int) -> str:
    """Classify an object by bounded hom-set tests.

    "torsion" when every morphism to a forest object of size <= bound is
    trivial, "torsion-free" when every morphism from a bijection object of
    size <= bound is trivial, "both" when both hold (identity-like
    objects), "neither" otherwise.  At these bounds the answer matches the
    direct bijection/forest predicates.
    """
    if bound > 4:
        raise BoundExceededError("characterization bound is capped at 4")
    torsionish = True
    freeish = True
    for other in iter_objects(bound):
        if torsionish and is_forest(other):
            if any(not is_trivial_morphism(m) for m in hom_set(obj, other)):
                torsionish = False
        if freeish and is_bijection(other):
            if any(not is_trivial_morphism(m) for m in hom_set(other, obj)):
                freeish = False
        if not torsionish and not freeish:
            break
    if torsionish and freeish:
        return BOTH
    if torsionish:
        return TORSION
    if freeish:
        return TORSION_FREE
    return NEITHER
