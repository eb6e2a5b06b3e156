import pytest

from endomaps import (
    BoundExceededError,
    Congruence,
    Endofunction,
    MapObject,
    Morphism,
    adjunction_check,
    compose_morphisms,
    cycle_congruence,
    functor_C,
    functor_R,
    hom_set,
    identity,
    identity_morphism,
    is_bijection,
    is_congruence,
    is_forest,
    is_morphism,
    is_trivial_morphism,
    iter_endofunctions,
    iter_objects,
    power,
    preexact_sequence,
    prekernel_check,
    precokernel_check,
    pretorsion_characterization,
    quotient,
    torsion_part,
    winding_morphism,
)
from endomaps.verification import _winding_by_factorial
from oracles import congruence_closure, trivial_by_factor_search


def endo(*images):
    return Endofunction(tuple(images))


THREE_CYCLE = endo(2, 3, 1)
HOOK = endo(2, 3, 1, 1)  # 3-cycle with one tail vertex


class TestMorphismBasics:
    def test_map_object_is_an_endofunction(self):
        assert MapObject is Endofunction

    def test_self_map_is_an_endomorphism(self):
        assert is_morphism(THREE_CYCLE, THREE_CYCLE, (2, 3, 1))

    def test_swap_does_not_commute_with_three_cycle(self):
        assert not is_morphism(THREE_CYCLE, THREE_CYCLE, (2, 1, 3))

    def test_identity_table_is_a_morphism(self):
        assert is_morphism(HOOK, HOOK, (1, 2, 3, 4))

    def test_malformed_tables_are_rejected(self):
        with pytest.raises(ValueError):
            is_morphism(THREE_CYCLE, THREE_CYCLE, (1, 2))
        with pytest.raises(ValueError):
            is_morphism(THREE_CYCLE, THREE_CYCLE, (0, 1, 2))

    def test_morphism_constructor_validates(self):
        with pytest.raises(ValueError):
            Morphism(THREE_CYCLE, THREE_CYCLE, (2, 1, 3))
        morphism = Morphism(THREE_CYCLE, THREE_CYCLE, (2, 3, 1))
        assert morphism(1) == 2

    def test_composition_checks_endpoints(self):
        ident = identity_morphism(THREE_CYCLE)
        rotate = Morphism(THREE_CYCLE, THREE_CYCLE, (2, 3, 1))
        assert compose_morphisms(rotate, ident) == rotate
        other = identity_morphism(identity(2))
        with pytest.raises(ValueError):
            compose_morphisms(rotate, other)


class TestHomSet:
    def test_no_map_from_point_into_fixed_point_free_cycle(self):
        assert hom_set(identity(1), THREE_CYCLE) == ()

    def test_terminal_object(self):
        for obj in (THREE_CYCLE, HOOK, identity(2)):
            assert len(hom_set(obj, identity(1))) == 1

    def test_swap_endomorphisms(self):
        tables = [m.table for m in hom_set(endo(2, 1), endo(2, 1))]
        assert tables == [(1, 2), (2, 1)]  # lexicographic

    def test_bound_guard(self):
        with pytest.raises(BoundExceededError):
            hom_set(identity(4), identity(4), max_tables=10)


class TestTrivialMorphism:
    def test_constant_into_fixed_point(self):
        constant = Morphism(THREE_CYCLE, identity(2), (1, 1, 1))
        assert is_trivial_morphism(constant)

    def test_identity_on_cycle_is_not_trivial(self):
        assert not is_trivial_morphism(identity_morphism(THREE_CYCLE))

    def test_bijection_to_forest_is_always_trivial(self):
        for target in iter_objects(3):
            if not is_forest(target):
                continue
            for morphism in hom_set(THREE_CYCLE, target):
                assert is_trivial_morphism(morphism)

    def test_agrees_with_factorization_search(self):
        for dom in iter_objects(2):
            for cod in iter_objects(3):
                for morphism in hom_set(dom, cod):
                    assert is_trivial_morphism(morphism) == trivial_by_factor_search(
                        dom, cod, morphism.table, 3
                    )


class TestCycleCongruence:
    def test_cycle_plus_tail(self):
        assert cycle_congruence(HOOK).classes == ((1, 2, 3), (4,))

    def test_identity_gives_singletons(self):
        assert cycle_congruence(identity(3)).classes == ((1,), (2,), (3,))

    def test_figure_surrogate_has_19_classes(self, figure_surrogate):
        classes = cycle_congruence(figure_surrogate).classes
        assert len(classes) == 19
        assert sorted(len(c) for c in classes) == [1] * 17 + [4, 6]

    def test_matches_generated_congruence(self):
        for n in (1, 2, 3, 4):
            for f in iter_endofunctions(n):
                stepped = power(f, n)
                advanced = power(f, n + 1)
                pairs = [(stepped(x), advanced(x)) for x in range(1, n + 1)]
                assert congruence_closure(f, pairs) == cycle_congruence(f).classes

    def test_congruence_type_validates_partitions(self):
        with pytest.raises(ValueError):
            Congruence(3, ((1, 2),))
        with pytest.raises(ValueError):
            Congruence(3, ((1, 2), (2, 3)))
        assert is_congruence(HOOK, cycle_congruence(HOOK))
        assert not is_congruence(THREE_CYCLE, Congruence(3, ((1, 2), (3,))))


class TestQuotient:
    def test_collapses_the_cycle(self):
        induced, projection = quotient(HOOK, cycle_congruence(HOOK))
        assert induced == endo(1, 1)
        assert projection.table == (1, 1, 1, 2)

    def test_quotient_by_equality_is_a_copy(self):
        singletons = Congruence(3, ((1,), (2,), (3,)))
        induced, projection = quotient(identity(3), singletons)
        assert induced == identity(3)
        assert projection.table == (1, 2, 3)

    def test_incompatible_partition_is_rejected(self):
        with pytest.raises(ValueError):
            quotient(THREE_CYCLE, Congruence(3, ((1, 2), (3,))))

    def test_quotient_is_a_forest_and_coequalizes(self):
        for n in (1, 2, 3):
            for f in iter_endofunctions(n):
                induced, projection = quotient(f, cycle_congruence(f))
                assert is_forest(induced)
                stepped = power(f, n)
                advanced = power(f, n + 1)
                for x in range(1, n + 1):
                    assert projection(stepped(x)) == projection(advanced(x))

    def test_forest_objects_are_quotient_fixed_points(self):
        # the construction is idempotent: a forest is its own quotient
        for obj in iter_objects(3):
            if not is_forest(obj):
                continue
            induced, projection = quotient(obj, cycle_congruence(obj))
            assert induced == obj
            assert projection.table == tuple(range(1, obj.n + 1))
            assert functor_C(identity_morphism(obj)) == identity_morphism(obj)


class TestTorsionPart:
    def test_core_of_hook(self):
        part, inclusion = torsion_part(HOOK)
        assert part == THREE_CYCLE
        assert inclusion.table == (1, 2, 3)

    def test_core_of_forest_is_its_root(self):
        part, inclusion = torsion_part(endo(1, 1, 2))
        assert part == identity(1)
        assert inclusion.table == (1,)

    def test_bijection_is_its_own_core(self):
        part, inclusion = torsion_part(endo(2, 1))
        assert part == endo(2, 1)
        assert inclusion.table == (1, 2)


class TestPreexactSequence:
    def test_hook_sequence(self):
        sequence = preexact_sequence(HOOK)
        assert sequence.torsion.dom == THREE_CYCLE
        assert sequence.quotient.cod == endo(1, 1)

    def test_bijection_collapses_to_a_point(self):
        sequence = preexact_sequence(THREE_CYCLE)
        assert sequence.torsion.table == (1, 2, 3)
        assert sequence.quotient.cod == identity(1)

    def test_forest_quotient_is_a_renaming(self):
        sequence = preexact_sequence(endo(1, 1, 2))
        assert sequence.torsion.dom == identity(1)
        assert sequence.quotient.cod.n == 3


class TestPrekernel:
    def test_canonical_sequence_passes(self):
        sequence = preexact_sequence(HOOK)
        assert prekernel_check(sequence.torsion, sequence.quotient, max_test_size=3)
        assert precokernel_check(sequence.torsion, sequence.quotient, max_test_size=3)

    def test_nontrivial_composite_fails(self):
        ident = identity_morphism(THREE_CYCLE)
        assert not prekernel_check(ident, ident, max_test_size=2)

    def test_missing_factorization_fails(self):
        _, inclusion = torsion_part(HOOK)
        collapse = Morphism(HOOK, identity(1), (1, 1, 1, 1))
        # the identity of HOOK composes trivially with the collapse but does
        # not factor through the core inclusion
        assert not prekernel_check(inclusion, collapse, max_test_size=4)

    def test_no_prekernel_into_fixed_point_free_cycle(self):
        ident = identity_morphism(THREE_CYCLE)
        for source in iter_objects(3):
            for candidate in hom_set(source, THREE_CYCLE):
                assert not prekernel_check(candidate, ident, max_test_size=2)

    def test_endpoint_mismatch_is_rejected(self):
        with pytest.raises(ValueError):
            prekernel_check(identity_morphism(identity(2)), identity_morphism(THREE_CYCLE))


class TestPrecokernel:
    def test_nontrivial_composite_fails(self):
        _, inclusion = torsion_part(HOOK)
        assert not precokernel_check(inclusion, identity_morphism(HOOK), max_test_size=2)

    def test_non_surjective_projection_fails_uniqueness(self):
        _, inclusion = torsion_part(HOOK)
        skewed = Morphism(HOOK, identity(2), (1, 1, 1, 1))
        assert not precokernel_check(inclusion, skewed, max_test_size=2)

    def test_point_object_is_self_cokernel(self):
        ident = identity_morphism(identity(1))
        assert precokernel_check(ident, ident, max_test_size=2)

    def test_endpoint_mismatch_is_rejected(self):
        with pytest.raises(ValueError):
            precokernel_check(identity_morphism(THREE_CYCLE), identity_morphism(identity(2)))


class TestFunctors:
    def test_restriction_of_projection_hits_the_root(self):
        sequence = preexact_sequence(HOOK)
        restricted = functor_R(sequence.quotient)
        assert restricted.dom == THREE_CYCLE
        assert restricted.cod == identity(1)
        assert restricted.table == (1, 1, 1)

    def test_identities_are_preserved(self):
        for obj in (HOOK, THREE_CYCLE, endo(1, 1, 2)):
            part, _ = torsion_part(obj)
            induced, _ = quotient(obj, cycle_congruence(obj))
            assert functor_R(identity_morphism(obj)) == identity_morphism(part)
            assert functor_C(identity_morphism(obj)) == identity_morphism(induced)

    def test_induced_map_of_core_inclusion(self):
        sequence = preexact_sequence(HOOK)
        induced = functor_C(sequence.torsion)
        assert induced.dom == identity(1)
        assert induced.cod == endo(1, 1)
        assert induced.table == (1,)

    def test_bijection_objects_get_discrete_quotients(self):
        rotate = Morphism(THREE_CYCLE, THREE_CYCLE, (2, 3, 1))
        induced = functor_C(rotate)
        assert induced.dom == identity(1)
        assert induced.table == (1,)

    def test_composition_is_preserved_small(self):
        objects = list(iter_objects(2))
        for a in objects:
            for b in objects:
                for c in objects:
                    for h in hom_set(a, b):
                        for g in hom_set(b, c):
                            composite = compose_morphisms(g, h)
                            assert functor_R(composite) == compose_morphisms(
                                functor_R(g), functor_R(h)
                            )
                            assert functor_C(composite) == compose_morphisms(
                                functor_C(g), functor_C(h)
                            )


class TestWinding:
    def test_hook_winds_onto_the_core(self):
        w = winding_morphism(HOOK)
        assert w.cod == THREE_CYCLE
        assert w.table == (1, 2, 3, 3)

    def test_bijection_winds_identically(self):
        assert winding_morphism(endo(2, 1)).table == (1, 2)

    def test_forest_winds_to_the_root(self):
        assert winding_morphism(endo(1, 1, 2)).table == (1, 1, 1)

    def test_matches_factorial_construction(self):
        for n in (1, 2, 3, 4):
            for obj in iter_endofunctions(n):
                assert winding_morphism(obj).table == _winding_by_factorial(obj)


class TestAdjunctions:
    def test_reflection_onto_bijections(self):
        core, _ = torsion_part(HOOK)
        for target in iter_objects(3):
            if is_bijection(target):
                assert adjunction_check(HOOK, target, "reflective-bijections")
                assert len(hom_set(HOOK, target)) == len(hom_set(core, target))
                assert adjunction_check(HOOK, target, "coreflective-bijections")

    def test_reflection_onto_forests(self):
        for target in iter_objects(3):
            if is_forest(target):
                assert adjunction_check(HOOK, target, "reflective-forests")

    def test_wrong_subcategory_is_rejected(self):
        with pytest.raises(ValueError):
            adjunction_check(HOOK, endo(1, 1), "reflective-bijections")
        with pytest.raises(ValueError):
            adjunction_check(HOOK, THREE_CYCLE, "reflective-forests")
        with pytest.raises(ValueError):
            adjunction_check(HOOK, THREE_CYCLE, "sideways")

    def test_no_right_adjoint_witness(self):
        for obj in iter_objects(3):
            if is_forest(obj):
                assert hom_set(obj, endo(2, 1)) == ()
                assert hom_set(obj, THREE_CYCLE) == ()


class TestCharacterization:
    @pytest.mark.parametrize(
        "images,expected",
        [
            ((2, 3, 1), "torsion"),
            ((1, 1, 2), "torsion-free"),
            ((2, 3, 1, 1), "neither"),
            ((1, 2), "both"),
        ],
    )
    def test_examples(self, images, expected):
        assert pretorsion_characterization(Endofunction(images), 3) == expected

    def test_bound_guard(self):
        with pytest.raises(BoundExceededError):
            pretorsion_characterization(THREE_CYCLE, 5)
