"""The monoid of all maps on n points, its units, and its ideal.

The bijections form the unit group; the non-injective maps form a
completely prime two-sided ideal generated by moves.  Pairing the ideal
(with identity adjoined) against the unit group gives a semidirect product
that multiplies onto the whole monoid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import (
    Endofunction,
    compose,
    identity,
    invert,
    is_bijection,
    iter_bijections,
    iter_endofunctions,
)
from .errors import BoundExceededError
from .factorization import Move, sign

DEFAULT_MAX_SIZE = 5


def _check_size(n: int, max_size: int) -> None:
    if n > max_size:
        raise BoundExceededError(
            f"n={n} exceeds the enumeration bound {max_size}; "
            "pass a larger max_size to override"
        )


@dataclass(frozen=True)
class MonoidEnumeration:
    """Snapshot of all n^n maps, split into the n! units and the ideal."""

    n: int
    all_maps: tuple[Endofunction, ...]
    units: tuple[Endofunction, ...]
    ideal: tuple[Endofunction, ...]


def enumerate_monoid(n: int, max_size: int = DEFAULT_MAX_SIZE) -> MonoidEnumeration:
    """Materialize every map on {1..n}; guarded because n^n explodes."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_size(n, max_size)
    all_maps = tuple(iter_endofunctions(n))
    units = tuple(f for f in all_maps if is_bijection(f))
    ideal = tuple(f for f in all_maps if not is_bijection(f))
    return MonoidEnumeration(n=n, all_maps=all_maps, units=units, ideal=ideal)


def conjugate_move(sigma: Endofunction, mv: Move) -> Move:
    """Conjugating a move by a bijection just relabels its endpoints."""
    if not is_bijection(sigma):
        raise ValueError("conjugation requires a bijection")
    if sigma.n != mv.n:
        raise ValueError(f"size mismatch: {sigma.n} vs {mv.n}")
    return Move(mv.n, sigma(mv.source), sigma(mv.target))


def _in_ideal_with_identity(f: Endofunction) -> bool:
    return not is_bijection(f) or f == identity(f.n)


@dataclass(frozen=True)
class SemidirectElement:
    """A pair (non-injective-or-identity map, bijection).

    Multiplication twists the first coordinate by conjugation with the
    second; collapsing a pair to the product of its coordinates is a
    surjective monoid homomorphism onto the full monoid.
    """

    ideal_part: Endofunction
    unit_part: Endofunction

    def __post_init__(self) -> None:
        if self.ideal_part.n != self.unit_part.n:
            raise ValueError("both parts must act on the same universe")
        if not _in_ideal_with_identity(self.ideal_part):
            raise ValueError("first part must be non-injective or the identity")
        if not is_bijection(self.unit_part):
            raise ValueError("second part must be a bijection")


def semidirect_compose(x: SemidirectElement, y: SemidirectElement) -> SemidirectElement:
    """(g, t) * (g', t') = (g . t g' t^-1, t t')."""
    if x.ideal_part.n != y.ideal_part.n:
        raise ValueError("size mismatch")
    tau = x.unit_part
    twisted = compose(compose(tau, y.ideal_part), invert(tau))
    return SemidirectElement(
        ideal_part=compose(x.ideal_part, twisted),
        unit_part=compose(tau, y.unit_part),
    )


def psi(x: SemidirectElement) -> Endofunction:
    """Multiply the two coordinates back together."""
    return compose(x.ideal_part, x.unit_part)


def psi_fiber(
    f: Endofunction, max_size: int = DEFAULT_MAX_SIZE
) -> tuple[SemidirectElement, ...]:
    """All pairs multiplying to f: exactly one when f is a bijection,
    n! otherwise."""
    _check_size(f.n, max_size)
    fiber = []
    for tau in iter_bijections(f.n):
        g = compose(f, invert(tau))
        if _in_ideal_with_identity(g):
            fiber.append(SemidirectElement(ideal_part=g, unit_part=tau))
    return tuple(fiber)


def closure(
    generators: Iterable[Endofunction], max_size: int = DEFAULT_MAX_SIZE
) -> set[Endofunction]:
    """Smallest composition-closed superset (semigroup closure, no identity
    adjoined).

    Deterministic single-threaded worklist; the result may be as large as
    n^n, hence the size guard.
    """
    gens = list(generators)
    if not gens:
        return set()
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators must share one universe size")
    _check_size(n, max_size)
    known: set[Endofunction] = set()
    order: list[Endofunction] = []
    queue: deque[Endofunction] = deque()
    for g in gens:
        if g not in known:
            known.add(g)
            order.append(g)
            queue.append(g)
    while queue:
        g = queue.popleft()
        for h in list(order):
            for product in (compose(g, h), compose(h, g)):
                if product not in known:
                    known.add(product)
                    order.append(product)
                    queue.append(product)
    return known


def swap_first_two(n: int) -> Endofunction:
    """The transposition exchanging 1 and 2."""
    if n < 2:
        raise ValueError("need at least two elements to swap")
    table = list(range(1, n + 1))
    table[0], table[1] = 2, 1
    return Endofunction(tuple(table))


@dataclass(frozen=True)
class NestedSemidirectElement:
    """Triple (non-injective-or-identity, even bijection, identity-or-swap).

    The third slot ranges over the two-element group generated by the
    transposition of 1 and 2.
    """

    ideal_part: Endofunction
    even_part: Endofunction
    parity_part: Endofunction

    def __post_init__(self) -> None:
        n = self.ideal_part.n
        if self.even_part.n != n or self.parity_part.n != n:
            raise ValueError("all parts must act on the same universe")
        if not _in_ideal_with_identity(self.ideal_part):
            raise ValueError("first part must be non-injective or the identity")
        if sign(self.even_part) != 1:
            raise ValueError("second part must be an even bijection")
        allowed = {identity(n)}
        if n >= 2:
            allowed.add(swap_first_two(n))
        if self.parity_part not in allowed:
            raise ValueError("third part must be the identity or the swap of 1 and 2")


def nested_sign(x: NestedSemidirectElement) -> int:
    """Componentwise sign: 0 kills everything from the ideal slot, the even
    slot contributes +1, and the parity slot its own sign.

    Agrees with the sign of the flattened product of the three parts.
    """
    if not is_bijection(x.ideal_part):
        return 0
    return -1 if x.parity_part != identity(x.parity_part.n) else 1
