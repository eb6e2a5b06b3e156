"""Endofunctions on {1, ..., n}: the value type and its composition monoid."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

BIJECTION = "bijection"
NON_INJECTIVE = "non-injective"


@dataclass(frozen=True)
class Endofunction:
    """A total map on {1, ..., n} stored as its 1-indexed image table.

    ``images[i - 1]`` is the image of ``i``.  Instances are immutable and
    hashable; every operation returns a fresh value, so they can be shared
    freely between threads.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("universe must have at least one element")
        for i, v in enumerate(images, start=1):
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise ValueError(f"image of {i} is {v!r}, not an integer in 1..{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"element {x} is not in 1..{self.n}")
        return self.images[x - 1]

    def __repr__(self) -> str:
        return f"Endofunction({list(self.images)})"


@dataclass(frozen=True)
class OrbitInfo:
    """Tail length and cycle length of one forward orbit."""

    tail: int
    period: int


def _compose_tables(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(outer[v - 1] for v in inner)


def identity(n: int) -> Endofunction:
    """The identity map on {1, ..., n}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Endofunction(tuple(range(1, n + 1)))


def compose(outer: Endofunction, inner: Endofunction) -> Endofunction:
    """outer after inner: the map x -> outer(inner(x))."""
    if outer.n != inner.n:
        raise ValueError(f"size mismatch: {outer.n} vs {inner.n}")
    return Endofunction(_compose_tables(outer.images, inner.images))


def power(f: Endofunction, k: int) -> Endofunction:
    """The k-th compositional power, by repeated squaring.

    Exponents as large as n! are routine; k is an ordinary Python integer
    and may be arbitrarily big.
    """
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = tuple(range(1, f.n + 1))
    base = f.images
    while k:
        if k & 1:
            result = _compose_tables(base, result)
        base = _compose_tables(base, base)
        k >>= 1
    return Endofunction(result)


def is_bijection(f: Endofunction) -> bool:
    return len(set(f.images)) == f.n


def classify(f: Endofunction) -> str:
    """"bijection" when f is injective (equivalently surjective), else
    "non-injective"."""
    return BIJECTION if is_bijection(f) else NON_INJECTIVE


def invert(f: Endofunction) -> Endofunction:
    """The inverse of a bijection."""
    if not is_bijection(f):
        raise ValueError("only bijections are invertible")
    table = [0] * f.n
    for i, v in enumerate(f.images, start=1):
        table[v - 1] = i
    return Endofunction(tuple(table))


def orbit_info(f: Endofunction, x: int) -> OrbitInfo:
    """Walk x, f(x), f(f(x)), ... until the first repeated point.

    ``tail`` counts the steps before the orbit enters its cycle and
    ``period`` is the cycle length, so tail + period <= n.
    """
    if not 1 <= x <= f.n:
        raise ValueError(f"element {x} is not in 1..{f.n}")
    seen: dict[int, int] = {}
    t = 0
    y = x
    while y not in seen:
        seen[y] = t
        y = f.images[y - 1]
        t += 1
    return OrbitInfo(tail=seen[y], period=t - seen[y])


def iter_endofunctions(n: int) -> Iterator[Endofunction]:
    """All n^n maps on {1, ..., n}, in lexicographic image-table order."""
    for images in itertools.product(range(1, n + 1), repeat=n):
        yield Endofunction(images)


def iter_bijections(n: int) -> Iterator[Endofunction]:
    """All n! bijections on {1, ..., n}, in lexicographic order."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Endofunction(images)
