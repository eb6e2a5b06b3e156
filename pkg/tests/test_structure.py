import pytest

from endomaps import (
    Endofunction,
    components,
    cyclic_core,
    graph_edges,
    identity,
    is_forest,
    is_forest_on_cycle,
    is_idempotent,
    iter_endofunctions,
    level_partition,
    orbit_info,
    power,
)
from oracles import components_by_closure


def endo(*images):
    return Endofunction(tuple(images))


class TestLevelPartition:
    def test_chain_of_preimages(self):
        # image chain {1,2} then {1}; preimage chain {1}, {1,2}, {1,2,3}
        lp = level_partition(endo(1, 1, 2))
        assert lp.height == 2
        assert lp.levels == ((1,), (2,), (3,))

    def test_bijection_has_height_zero(self):
        lp = level_partition(identity(4))
        assert lp.height == 0
        assert lp.levels == ((1, 2, 3, 4),)

    def test_tail_on_three_cycle(self):
        lp = level_partition(endo(2, 3, 1, 1))
        assert lp.height == 1
        assert lp.levels == ((1, 2, 3), (4,))

    def test_invariants_exhaustively(self):
        for n in (1, 2, 3, 4):
            for f in iter_endofunctions(n):
                lp = level_partition(f)
                flat = sorted(x for level in lp.levels for x in level)
                assert flat == list(range(1, n + 1))
                assert all(lp.levels)
                core = set(lp.levels[0])
                assert {f(x) for x in core} == core
                for i in range(1, len(lp.levels)):
                    assert all(f(x) in set(lp.levels[i - 1]) for x in lp.levels[i])


class TestCyclicCore:
    @pytest.mark.parametrize(
        "images,expected",
        [((2, 3, 1, 1), (1, 2, 3)), ((1, 2, 3), (1, 2, 3)), ((1, 1, 2), (1,))],
    )
    def test_examples(self, images, expected):
        assert cyclic_core(Endofunction(images)) == expected

    def test_agrees_with_level_zero_and_is_permuted(self):
        for n in (1, 2, 3, 4):
            for f in iter_endofunctions(n):
                core = cyclic_core(f)
                assert core == level_partition(f).levels[0]
                assert core == tuple(sorted(set(power(f, n).images)))
                assert tuple(sorted(f(x) for x in core)) == core


class TestComponents:
    def test_two_components(self):
        assert components(endo(2, 1, 3, 3)).components == ((1, 2), (3, 4))

    def test_identity_is_all_singletons(self):
        assert components(identity(3)).components == ((1,), (2,), (3,))

    def test_tree_hangs_on_cycle(self):
        assert components(endo(2, 3, 1, 1)).components == ((1, 2, 3, 4),)

    def test_matches_preimage_closure_oracle(self):
        for n in (1, 2, 3, 4):
            for f in iter_endofunctions(n):
                assert components(f).components == components_by_closure(f)

    def test_each_component_has_one_cycle(self):
        for n in (1, 2, 3, 4):
            for f in iter_endofunctions(n):
                for comp in components(f).components:
                    cycles = set()
                    for x in comp:
                        info = orbit_info(f, x)
                        entry = power(f, info.tail)(x)
                        cyc = {entry}
                        y = f(entry)
                        while y != entry:
                            cyc.add(y)
                            y = f(y)
                        cycles.add(frozenset(cyc))
                    assert len(cycles) == 1

    def test_containing(self):
        decomposition = components(endo(2, 1, 3, 3))
        assert decomposition.containing(4) == (3, 4)
        with pytest.raises(ValueError):
            decomposition.containing(9)


class TestGraphEdges:
    def test_transposition_collapses(self):
        edges = graph_edges(endo(2, 1))
        assert edges.directed == ((1, 2), (2, 1))
        assert edges.undirected == ((1, 2),)

    def test_fixed_points_give_no_edges(self):
        edges = graph_edges(identity(2))
        assert edges.directed == ((1, 1), (2, 2))
        assert edges.undirected == ()

    def test_single_moved_point(self):
        edges = graph_edges(endo(2, 2))
        assert edges.directed == ((1, 2), (2, 2))
        assert edges.undirected == ((1, 2),)


class TestPredicates:
    def test_forest_examples(self):
        assert is_forest(endo(1, 1, 2))
        assert not is_forest(endo(2, 3, 1))
        assert is_forest(identity(3))

    def test_forest_iff_all_periods_one(self):
        for n in (1, 2, 3, 4):
            for f in iter_endofunctions(n):
                periods_one = all(orbit_info(f, x).period == 1 for x in range(1, n + 1))
                assert is_forest(f) == periods_one

    def test_idempotent_examples(self):
        assert is_idempotent(endo(2, 2))
        assert not is_idempotent(endo(2, 3, 1))
        assert is_idempotent(endo(1, 1, 1))

    def test_idempotent_iff_height_one_with_fixed_core(self):
        for n in (1, 2, 3, 4):
            for f in iter_endofunctions(n):
                lp = level_partition(f)
                structural = lp.height <= 1 and all(f(c) == c for c in lp.levels[0])
                assert is_idempotent(f) == structural
                if is_idempotent(f):
                    assert is_forest(f)

    def test_forest_on_cycle_examples(self):
        assert is_forest_on_cycle(endo(2, 3, 1, 4))
        assert not is_forest_on_cycle(endo(2, 1, 4, 3))
        assert is_forest_on_cycle(identity(3))
