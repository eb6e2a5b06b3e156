import itertools
import math

import pytest

from endomaps import (
    BoundExceededError,
    Endofunction,
    Move,
    NestedSemidirectElement,
    SemidirectElement,
    all_moves,
    closure,
    compose,
    conjugate_move,
    enumerate_monoid,
    identity,
    invert,
    is_bijection,
    iter_bijections,
    nested_sign,
    psi,
    psi_fiber,
    semidirect_compose,
    sign,
    swap_first_two,
)


def endo(*images):
    return Endofunction(tuple(images))


class TestEnumerate:
    @pytest.mark.parametrize(
        "n,total,units,ideal",
        [(2, 4, 2, 2), (3, 27, 6, 21), (1, 1, 1, 0)],
    )
    def test_counts(self, n, total, units, ideal):
        enum = enumerate_monoid(n)
        assert len(enum.all_maps) == total == n**n
        assert len(enum.units) == units == math.factorial(n)
        assert len(enum.ideal) == ideal
        assert all(is_bijection(f) for f in enum.units)
        assert not any(is_bijection(f) for f in enum.ideal)

    def test_bound_guard_and_override(self):
        with pytest.raises(BoundExceededError):
            enumerate_monoid(6)
        enum = enumerate_monoid(6, max_size=6)
        assert len(enum.all_maps) == 6**6

    def test_ideal_is_completely_prime(self):
        for n in (1, 2, 3):
            maps = list(enumerate_monoid(n).all_maps)
            for f in maps:
                for g in maps:
                    product_in_ideal = not is_bijection(compose(f, g))
                    assert product_in_ideal == (not is_bijection(f) or not is_bijection(g))


class TestConjugateMove:
    def test_examples(self):
        assert conjugate_move(endo(3, 2, 1), Move(3, 1, 2)) == Move(3, 3, 2)
        assert conjugate_move(identity(3), Move(3, 1, 2)) == Move(3, 1, 2)
        assert conjugate_move(endo(2, 3, 1), Move(3, 1, 3)) == Move(3, 2, 1)

    def test_equals_conjugation_of_maps(self):
        for sigma in iter_bijections(3):
            for mv in all_moves(3):
                conjugated = conjugate_move(sigma, mv).as_endofunction()
                direct = compose(compose(sigma, mv.as_endofunction()), invert(sigma))
                assert conjugated == direct

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            conjugate_move(endo(1, 1), Move(2, 1, 2))


class TestSemidirect:
    def test_element_validation(self):
        with pytest.raises(ValueError):
            SemidirectElement(endo(2, 1), identity(2))  # swap is a non-identity unit
        with pytest.raises(ValueError):
            SemidirectElement(identity(2), endo(1, 1))

    def test_neutral_element(self):
        e = SemidirectElement(identity(2), identity(2))
        x = SemidirectElement(endo(2, 2), endo(2, 1))
        assert semidirect_compose(e, x) == x
        assert semidirect_compose(x, e) == x

    def test_product_with_trivial_twist(self):
        left = SemidirectElement(endo(2, 2), identity(2))
        right = SemidirectElement(identity(2), endo(2, 1))
        assert semidirect_compose(left, right) == SemidirectElement(
            endo(2, 2), endo(2, 1)
        )

    def test_twist_conjugates_the_ideal_part(self):
        left = SemidirectElement(identity(2), endo(2, 1))
        right = SemidirectElement(endo(2, 2), identity(2))
        assert semidirect_compose(left, right) == SemidirectElement(
            endo(1, 1), endo(2, 1)
        )

    def test_associative_and_psi_homomorphism(self):
        enum = enumerate_monoid(2)
        elements = [
            SemidirectElement(g, tau)
            for g in (identity(2),) + enum.ideal
            for tau in enum.units
        ]
        for x, y in itertools.product(elements, repeat=2):
            assert psi(semidirect_compose(x, y)) == compose(psi(x), psi(y))
        for x, y, z in itertools.product(elements, repeat=3):
            assert semidirect_compose(semidirect_compose(x, y), z) == semidirect_compose(
                x, semidirect_compose(y, z)
            )

    def test_psi_examples(self):
        assert psi(SemidirectElement(endo(2, 2), endo(2, 1))) == endo(2, 2)
        assert psi(SemidirectElement(identity(2), endo(2, 1))) == endo(2, 1)
        assert psi(SemidirectElement(endo(1, 1), identity(2))) == endo(1, 1)


class TestPsiFiber:
    def test_unit_fiber_is_a_singleton(self):
        assert psi_fiber(endo(2, 1)) == (
            SemidirectElement(identity(2), endo(2, 1)),
        )
        assert psi_fiber(identity(2)) == (
            SemidirectElement(identity(2), identity(2)),
        )

    def test_ideal_fiber_has_factorial_size(self):
        fiber = psi_fiber(endo(2, 2))
        assert len(fiber) == 2
        assert all(psi(pair) == endo(2, 2) for pair in fiber)

    def test_sizes_exhaustively(self):
        for n in (1, 2, 3):
            enum = enumerate_monoid(n)
            total = 0
            for f in enum.all_maps:
                fiber = psi_fiber(f)
                assert len(fiber) == (1 if is_bijection(f) else math.factorial(n))
                total += len(fiber)
            assert total == (len(enum.ideal) + 1) * math.factorial(n)

    def test_bound_guard(self):
        with pytest.raises(BoundExceededError):
            psi_fiber(identity(6))


class TestClosure:
    def test_moves_generate_the_ideal(self):
        assert closure(mv.as_endofunction() for mv in all_moves(2)) == {
            endo(1, 1),
            endo(2, 2),
        }
        generated = closure(mv.as_endofunction() for mv in all_moves(3))
        assert generated == set(enumerate_monoid(3).ideal)
        assert len(generated) == 21

    def test_idempotent_singleton(self):
        assert closure([identity(3)]) == {identity(3)}

    def test_empty_and_mismatched_inputs(self):
        assert closure([]) == set()
        with pytest.raises(ValueError):
            closure([identity(2), identity(3)])

    def test_bound_guard(self):
        with pytest.raises(BoundExceededError):
            closure([identity(6)])


class TestNestedSign:
    def test_all_units(self):
        element = NestedSemidirectElement(identity(2), identity(2), identity(2))
        assert nested_sign(element) == 1

    def test_swap_slot_flips_the_sign(self):
        element = NestedSemidirectElement(identity(2), identity(2), swap_first_two(2))
        assert nested_sign(element) == -1

    def test_ideal_slot_kills_the_product(self):
        element = NestedSemidirectElement(endo(2, 2, 3), identity(3), identity(3))
        assert nested_sign(element) == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            NestedSemidirectElement(identity(2), endo(2, 1), identity(2))  # odd
        with pytest.raises(ValueError):
            NestedSemidirectElement(identity(3), identity(3), endo(1, 3, 2))  # wrong swap
        with pytest.raises(ValueError):
            swap_first_two(1)

    def test_agrees_with_flattened_sign(self):
        for n in (1, 2, 3):
            enum = enumerate_monoid(n)
            parities = [identity(n)] + ([swap_first_two(n)] if n >= 2 else [])
            for g in (identity(n),) + enum.ideal:
                for a in (f for f in enum.units if sign(f) == 1):
                    for t in parities:
                        element = NestedSemidirectElement(g, a, t)
                        assert nested_sign(element) == sign(compose(g, compose(a, t)))
