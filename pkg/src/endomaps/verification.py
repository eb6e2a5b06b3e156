"""Exhaustive bounded verification of the package's algebraic claims.

Every check sweeps all instances up to a size bound and reports the
instance count, elapsed time, and a minimal witness on failure.  The bound
passed in is clamped to each check's own feasibility cap (pair sweeps and
hom-set sweeps get tighter caps than single-object sweeps).
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .core import (
    Endofunction,
    _compose_tables,
    classify,
    compose,
    identity,
    invert,
    is_bijection,
    iter_endofunctions,
    orbit_info,
    power,
)
from .category import (
    BOTH,
    COREFLECTIVE_BIJECTIONS,
    NEITHER,
    REFLECTIVE_BIJECTIONS,
    REFLECTIVE_FORESTS,
    TORSION,
    TORSION_FREE,
    Morphism,
    _hom_tables,
    adjunction_check,
    functor_C,
    functor_R,
    hom_set,
    identity_morphism,
    is_morphism,
    is_trivial_morphism,
    iter_objects,
    preexact_sequence,
    prekernel_check,
    precokernel_check,
    pretorsion_characterization,
    quotient,
    cycle_congruence,
    torsion_part,
    winding_morphism,
)
from .errors import BoundExceededError
from .factorization import (
    Move,
    Transposition,
    all_moves,
    are_disjoint,
    are_graph_disjoint,
    core_permutation,
    evaluate_word,
    forest_on_cycle_factors,
    moved_region,
    moves_transpositions,
    sign,
)
from .monoid import (
    NestedSemidirectElement,
    SemidirectElement,
    closure,
    enumerate_monoid,
    nested_sign,
    psi,
    psi_fiber,
    semidirect_compose,
    swap_first_two,
)
from .relations import (
    EQUIVALENCE,
    PARTIAL_ORDER,
    BOTH as REL_BOTH,
    preorder_kind,
    reachability_closure,
    stable_equivalent,
    to_preord,
)
from .structure import (
    components,
    cyclic_core,
    is_forest,
    is_idempotent,
    is_forest_on_cycle,
    level_partition,
)

SUITE_NAMES = ("factorization", "monoid", "pretorsion", "bridges")
DEFAULT_BOUND = 4
MAX_BOUND = 5


@dataclass
class CheckResult:
    name: str
    instances: int
    elapsed: float
    passed: bool
    witness: Optional[str] = None


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int], CheckResult]


SUITES: dict[str, list[Check]] = {name: [] for name in SUITE_NAMES}


def _register(suite: str, name: str):
    def decorate(fn):
        def run(bound: int) -> CheckResult:
            start = time.perf_counter()
            instances, witness = fn(bound)
            return CheckResult(
                name=name,
                instances=instances,
                elapsed=time.perf_counter() - start,
                passed=witness is None,
                witness=witness,
            )

        SUITES[suite].append(Check(name=name, run=run))
        return fn

    return decorate


def _maps(bound: int, cap: int) -> Iterator[Endofunction]:
    for n in range(1, min(bound, cap) + 1):
        yield from iter_endofunctions(n)


def _fmt(f: Endofunction) -> str:
    return str(list(f.images))


# --------------------------------------------------------------------------
# factorization suite (composition laws, structure, both factorizations)
# --------------------------------------------------------------------------


@_register("factorization", "composition-laws")
def _composition_laws(bound: int):
    count = 0
    for n in range(1, min(bound, 3) + 1):
        maps = list(iter_endofunctions(n))
        ident = identity(n)
        for f in maps:
            if compose(ident, f) != f or compose(f, ident) != f:
                return count, f"identity not neutral at f={_fmt(f)}"
            count += 1
        for f, g, h in itertools.product(maps, repeat=3):
            if compose(compose(f, g), h) != compose(f, compose(g, h)):
                return count, f"associativity fails at {_fmt(f)}, {_fmt(g)}, {_fmt(h)}"
            count += 1
    return count, None


@_register("factorization", "bijection-power-test")
def _bijection_power_test(bound: int):
    count = 0
    for f in _maps(bound, 4):
        expected = power(f, math.factorial(f.n)) == identity(f.n)
        if (classify(f) == "bijection") != expected:
            return count, f"bijection test disagrees at f={_fmt(f)}"
        count += 1
    return count, None


@_register("factorization", "orbit-consistency")
def _orbit_consistency(bound: int):
    count = 0
    for f in _maps(bound, 4):
        for x in range(1, f.n + 1):
            info = orbit_info(f, x)
            if info.period < 1 or info.tail + info.period > f.n:
                return count, f"orbit bounds violated at f={_fmt(f)}, x={x}"
            if power(f, info.tail)(x) != power(f, info.tail + info.period)(x):
                return count, f"orbit equation fails at f={_fmt(f)}, x={x}"
            if any(
                power(f, info.tail)(x) == power(f, info.tail + q)(x)
                for q in range(1, info.period)
            ):
                return count, f"period not minimal at f={_fmt(f)}, x={x}"
            if info.tail > 0 and power(f, info.tail - 1)(x) == power(
                f, info.tail - 1 + info.period
            )(x):
                return count, f"tail not minimal at f={_fmt(f)}, x={x}"
            count += 1
    return count, None


@_register("factorization", "core-level-agreement")
def _core_level_agreement(bound: int):
    count = 0
    for f in _maps(bound, 4):
        lp = level_partition(f)
        core = cyclic_core(f)
        if core != lp.levels[0]:
            return count, f"core differs from level zero at f={_fmt(f)}"
        if sorted(x for level in lp.levels for x in level) != list(range(1, f.n + 1)):
            return count, f"levels do not partition the universe at f={_fmt(f)}"
        if tuple(sorted(f.images[c - 1] for c in core)) != core:
            return count, f"core is not permuted at f={_fmt(f)}"
        for i in range(1, len(lp.levels)):
            below = set(lp.levels[i - 1])
            if any(f.images[x - 1] not in below for x in lp.levels[i]):
                return count, f"level {i} does not map into level {i - 1} at f={_fmt(f)}"
        count += 1
    return count, None


@_register("factorization", "component-cycle-count")
def _component_cycle_count(bound: int):
    count = 0
    for f in _maps(bound, 4):
        core = set(cyclic_core(f))
        for comp in components(f).components:
            if any(f.images[x - 1] not in comp for x in comp):
                return count, f"component not closed under f at f={_fmt(f)}"
            cycles = set()
            for x in comp:
                info = orbit_info(f, x)
                entry = power(f, info.tail)(x)
                cyc = [entry]
                y = f.images[entry - 1]
                while y != entry:
                    cyc.append(y)
                    y = f.images[y - 1]
                cycles.add(frozenset(cyc))
            if len(cycles) != 1:
                return count, f"component carries {len(cycles)} cycles at f={_fmt(f)}"
            if not cycles.pop() <= core:
                return count, f"component cycle escapes the core at f={_fmt(f)}"
            count += 1
    return count, None


@_register("factorization", "forest-period-agreement")
def _forest_period_agreement(bound: int):
    count = 0
    for f in _maps(bound, 4):
        all_periods_one = all(
            orbit_info(f, x).period == 1 for x in range(1, f.n + 1)
        )
        if is_forest(f) != all_periods_one:
            return count, f"forest predicate disagrees at f={_fmt(f)}"
        count += 1
    return count, None


@_register("factorization", "idempotent-structure")
def _idempotent_structure(bound: int):
    count = 0
    for f in _maps(bound, 4):
        lp = level_partition(f)
        core_fixed = all(f.images[c - 1] == c for c in lp.levels[0])
        structural = lp.height <= 1 and core_fixed
        if is_idempotent(f) != structural:
            return count, f"idempotent characterization fails at f={_fmt(f)}"
        if is_idempotent(f):
            if not is_forest(f):
                return count, f"idempotent map is not a forest at f={_fmt(f)}"
            word = moves_transpositions(f)
            if word.transposition_count != 0:
                return count, f"idempotent word has transpositions at f={_fmt(f)}"
            moves = [factor.as_endofunction() for factor in word.factors]
            for a, b in itertools.combinations(moves, 2):
                if compose(a, b) != compose(b, a):
                    return count, f"moves fail to commute at f={_fmt(f)}"
            for ordering in itertools.permutations(moves):
                product = identity(f.n)
                for mv in ordering:
                    product = compose(mv, product)
                if product != f:
                    return count, f"reordered idempotent word differs at f={_fmt(f)}"
        count += 1
    return count, None


@_register("factorization", "factor-reconstruction")
def _factor_reconstruction(bound: int):
    count = 0
    for f in _maps(bound, 4):
        factors = forest_on_cycle_factors(f)
        if f == identity(f.n) and factors:
            return count, f"identity should factor into nothing, f={_fmt(f)}"
        for a, b in itertools.combinations(factors, 2):
            if not are_disjoint(a, b) or not are_graph_disjoint(a, b):
                return count, f"factors not disjoint at f={_fmt(f)}"
        for factor in factors:
            if not is_forest_on_cycle(factor):
                return count, f"factor is not a forest on a cycle at f={_fmt(f)}"
        for ordering in itertools.permutations(factors):
            product = identity(f.n)
            for factor in ordering:
                product = compose(factor, product)
            if product != f:
                return count, f"factor product differs from f at f={_fmt(f)}"
        count += 1
    return count, None


def alternative_disjoint_factorizations(
    f: Endofunction,
) -> list[frozenset[Endofunction]]:
    """Brute-force search for families of pairwise graph-disjoint,
    non-identity forest-on-cycle maps whose product is f.

    Graph-disjoint families commute, so one composition order suffices.
    Used as the independence oracle for uniqueness of the canonical
    factorization.
    """
    n = f.n
    ident = identity(n)
    candidates = [
        g for g in iter_endofunctions(n) if g != ident and is_forest_on_cycle(g)
    ]
    regions = [moved_region(g) for g in candidates]
    found: list[frozenset[Endofunction]] = []

    def extend(start: int, chosen: list[Endofunction], occupied: frozenset[int], current: Endofunction) -> None:
        if current == f:
            found.append(frozenset(chosen))
        for i in range(start, len(candidates)):
            if regions[i] & occupied:
                continue
            chosen.append(candidates[i])
            extend(i + 1, chosen, occupied | regions[i], compose(candidates[i], current))
            chosen.pop()

    extend(0, [], frozenset(), ident)
    return found


@_register("factorization", "factor-uniqueness")
def _factor_uniqueness(bound: int):
    count = 0
    for f in _maps(bound, 3):
        canonical = frozenset(forest_on_cycle_factors(f))
        alternatives = alternative_disjoint_factorizations(f)
        if alternatives != [canonical]:
            return count, f"non-unique factorization at f={_fmt(f)}: {len(alternatives)} families"
        count += 1
    return count, None


@_register("factorization", "word-soundness")
def _word_soundness(bound: int):
    count = 0
    for f in _maps(bound, 4):
        word = moves_transpositions(f)
        core = cyclic_core(f)
        core_set = set(core)
        if evaluate_word(word) != f:
            return count, f"word does not evaluate to f={_fmt(f)}"
        if word.core_size != len(core) or word.move_count != f.n - len(core):
            return count, f"move count is not n - core size at f={_fmt(f)}"
        sources = [factor.source for factor in word.factors if isinstance(factor, Move)]
        if sorted(sources) != sorted(set(range(1, f.n + 1)) - core_set):
            return count, f"moves do not hit each off-core point once at f={_fmt(f)}"
        for factor in word.factors:
            if isinstance(factor, Move):
                if factor.source in core_set:
                    return count, f"a move displaces a core point at f={_fmt(f)}"
                mv = factor.as_endofunction()
                if any(mv(c) != c for c in core):
                    return count, f"a move fails to fix the core at f={_fmt(f)}"
            else:
                if factor.a not in core_set or factor.b not in core_set:
                    return count, f"a transposition leaves the core at f={_fmt(f)}"
        # the two composite blocks are determined by f
        sigma = core_permutation(f)
        move_product = identity(f.n)
        for factor in reversed([x for x in word.factors if isinstance(x, Move)]):
            move_product = compose(factor.as_endofunction(), move_product)
        transposition_product = identity(f.n)
        for factor in reversed([x for x in word.factors if isinstance(x, Transposition)]):
            transposition_product = compose(factor.as_endofunction(), transposition_product)
        if transposition_product != sigma:
            return count, f"transposition block is not the core permutation at f={_fmt(f)}"
        if compose(move_product, sigma) != f:
            return count, f"move block times core permutation differs at f={_fmt(f)}"
        count += 1
    return count, None


@_register("factorization", "sign-multiplicative")
def _sign_multiplicative(bound: int):
    count = 0
    for n in range(1, min(bound, 4) + 1):
        maps = list(iter_endofunctions(n))
        signs = {f: sign(f) for f in maps}
        for f in maps:
            for g in maps:
                if signs[f] * signs[g] != sign(compose(f, g)):
                    return count, f"sign not multiplicative at {_fmt(f)}, {_fmt(g)}"
                count += 1
    return count, None


# --------------------------------------------------------------------------
# monoid suite
# --------------------------------------------------------------------------


@_register("monoid", "monoid-cardinalities")
def _monoid_cardinalities(bound: int):
    count = 0
    for n in range(1, min(bound, 4) + 1):
        enum = enumerate_monoid(n)
        if len(enum.all_maps) != n**n:
            return count, f"|all| != n^n at n={n}"
        if len(enum.units) != math.factorial(n):
            return count, f"|units| != n! at n={n}"
        if len(enum.ideal) != n**n - math.factorial(n):
            return count, f"|ideal| != n^n - n! at n={n}"
        count += 1
    return count, None


@_register("monoid", "ideal-primality")
def _ideal_primality(bound: int):
    count = 0
    for n in range(1, min(bound, 3) + 1):
        maps = list(iter_endofunctions(n))
        in_ideal = {f: not is_bijection(f) for f in maps}
        for f in maps:
            for g in maps:
                if in_ideal[compose(f, g)] != (in_ideal[f] or in_ideal[g]):
                    return count, f"ideal not completely prime at {_fmt(f)}, {_fmt(g)}"
                count += 1
    return count, None


@_register("monoid", "psi-epimorphism")
def _psi_epimorphism(bound: int):
    count = 0
    for n in range(1, min(bound, 3) + 1):
        enum = enumerate_monoid(n)
        ideal_with_identity = len(enum.ideal) + 1
        total = 0
        for f in enum.all_maps:
            fiber = psi_fiber(f)
            expected = 1 if is_bijection(f) else math.factorial(n)
            if len(fiber) != expected:
                return count, f"fiber size {len(fiber)} != {expected} at f={_fmt(f)}"
            if any(psi(pair) != f for pair in fiber):
                return count, f"fiber element misses f={_fmt(f)}"
            total += len(fiber)
            count += 1
        if total != ideal_with_identity * math.factorial(n):
            return count, f"fiber sizes do not sum to the domain size at n={n}"
        # homomorphism against the twisted multiplication
        elements = [
            SemidirectElement(g, tau)
            for g in [identity(n)] + list(enum.ideal)
            for tau in enum.units
        ]
        for x in elements:
            for y in elements:
                if psi(semidirect_compose(x, y)) != compose(psi(x), psi(y)):
                    return count, "psi is not a homomorphism"
                count += 1
    return count, None


@_register("monoid", "moves-generate-ideal")
def _moves_generate_ideal(bound: int):
    count = 0
    for n in range(2, min(bound, 4) + 1):
        generated = closure(mv.as_endofunction() for mv in all_moves(n))
        ideal = set(enumerate_monoid(n).ideal)
        if generated != ideal:
            return count, f"moves generate {len(generated)} maps, ideal has {len(ideal)} at n={n}"
        count += 1
    return count, None


@_register("monoid", "nested-sign-triangle")
def _nested_sign_triangle(bound: int):
    count = 0
    for n in range(1, min(bound, 3) + 1):
        enum = enumerate_monoid(n)
        ideal_parts = [identity(n)] + list(enum.ideal)
        even_parts = [f for f in enum.units if sign(f) == 1]
        parity_parts = [identity(n)] + ([swap_first_two(n)] if n >= 2 else [])
        for g in ideal_parts:
            for a in even_parts:
                for t in parity_parts:
                    element = NestedSemidirectElement(g, a, t)
                    flattened = compose(g, compose(a, t))
                    if nested_sign(element) != sign(flattened):
                        return count, (
                            f"nested sign disagrees at ({_fmt(g)}, {_fmt(a)}, {_fmt(t)})"
                        )
                    count += 1
    return count, None


@_register("monoid", "no-unit-retraction")
def _no_unit_retraction(bound: int):
    del bound  # fixed instance at n = 2
    elements = list(iter_endofunctions(2))
    index = {f: i for i, f in enumerate(elements)}
    identity_index = index[identity(2)]
    unit_indices = {index[f] for f in elements if is_bijection(f)}
    multiply = [
        [index[compose(elements[i], elements[j])] for j in range(len(elements))]
        for i in range(len(elements))
    ]
    count = 0
    for phi in itertools.product(range(len(elements)), repeat=len(elements)):
        count += 1
        if phi[identity_index] != identity_index:
            continue
        if any(phi[phi[i]] != phi[i] for i in range(len(elements))):
            continue
        if set(phi) != unit_indices:
            continue
        if all(
            phi[multiply[i][j]] == multiply[phi[i]][phi[j]]
            for i in range(len(elements))
            for j in range(len(elements))
        ):
            return count, f"found an idempotent retraction onto the units: {phi}"
    return count, None


# --------------------------------------------------------------------------
# pretorsion suite (category structure)
# --------------------------------------------------------------------------


def _trivial_by_search(morphism: Morphism, max_middle: int) -> bool:
    """Independent oracle: search an explicit factorization through an
    identity object of size <= max_middle, from raw tables."""
    dom, cod = morphism.dom, morphism.cod
    for m in range(1, max_middle + 1):
        for h in itertools.product(range(1, m + 1), repeat=dom.n):
            if any(h[dom.images[x - 1] - 1] != h[x - 1] for x in range(1, dom.n + 1)):
                continue  # not a morphism into the identity object
            for ell in itertools.product(range(1, cod.n + 1), repeat=m):
                if any(cod.images[v - 1] != v for v in ell):
                    continue  # not a morphism out of the identity object
                if tuple(ell[h[x - 1] - 1] for x in range(1, dom.n + 1)) == morphism.table:
                    return True
    return False


@_register("pretorsion", "trivial-morphism-oracle")
def _trivial_morphism_oracle(bound: int):
    cap = min(bound, 3)
    count = 0
    for dom in iter_objects(cap):
        for cod in iter_objects(cap):
            for morphism in hom_set(dom, cod):
                if is_trivial_morphism(morphism) != _trivial_by_search(morphism, cap):
                    return count, (
                        f"trivial test disagrees with the factorization search at "
                        f"{morphism!r}"
                    )
                count += 1
    return count, None


@_register("pretorsion", "arrow-preservation")
def _arrow_preservation(bound: int):
    cap = min(bound, 3)
    count = 0
    for dom in iter_objects(cap):
        for cod in iter_objects(cap):
            arrows = {(x, cod.images[x - 1]) for x in range(1, cod.n + 1)}
            for table in _hom_tables(dom.images, cod.images):
                for x in range(1, dom.n + 1):
                    image_arrow = (table[x - 1], table[dom.images[x - 1] - 1])
                    if image_arrow not in arrows:
                        return count, f"arrow not preserved by {list(table)}"
                count += 1
    return count, None


@_register("pretorsion", "preexact-universal")
def _preexact_universal(bound: int):
    cap = min(bound, 4)
    count = 0
    for obj in iter_objects(cap):
        sequence = preexact_sequence(obj)
        if not prekernel_check(sequence.torsion, sequence.quotient, max_test_size=cap):
            return count, f"prekernel property fails at f={_fmt(obj)}"
        if not precokernel_check(sequence.torsion, sequence.quotient, max_test_size=cap):
            return count, f"precokernel property fails at f={_fmt(obj)}"
        count += 1
    return count, None


@_register("pretorsion", "torsion-free-hom-triviality")
def _torsion_free_hom_triviality(bound: int):
    cap = min(bound, 3)
    count = 0
    for source in iter_objects(cap):
        if not is_bijection(source):
            continue
        for target in iter_objects(cap):
            if not is_forest(target):
                continue
            for morphism in hom_set(source, target):
                if not is_trivial_morphism(morphism):
                    return count, f"nontrivial morphism {morphism!r}"
                count += 1
    return count, None


def _winding_by_factorial(obj: Endofunction) -> tuple[int, ...]:
    """The literal construction with factorial exponents, as core positions."""
    core = cyclic_core(obj)
    sigma = core_permutation(obj)
    k = math.factorial(obj.n)
    raw = compose(power(invert(sigma), k), power(obj, k))
    position = {c: i for i, c in enumerate(core, start=1)}
    return tuple(position[v] for v in raw.images)


@_register("pretorsion", "winding-formula")
def _winding_formula(bound: int):
    cap = min(bound, 5)
    count = 0
    for obj in iter_objects(cap):
        w = winding_morphism(obj)
        if w.table != _winding_by_factorial(obj):
            return count, f"winding differs from the factorial construction at f={_fmt(obj)}"
        core = cyclic_core(obj)
        position = {c: i for i, c in enumerate(core, start=1)}
        if any(w.table[c - 1] != position[c] for c in core):
            return count, f"winding moves a core point at f={_fmt(obj)}"
        # any exponent that is a multiple of the core order and >= height
        # produces the same retraction
        sigma = core_permutation(obj)
        height = level_partition(obj).height
        order = 1
        for c in core:
            order = math.lcm(order, orbit_info(obj, c).period)
        start = order * math.ceil(max(height, 1) / order)
        for k in (start, start + order, start + 2 * order, math.factorial(obj.n)):
            raw = compose(power(invert(sigma), k), power(obj, k))
            table = tuple(position[v] for v in raw.images)
            if table != w.table:
                return count, f"winding depends on the exponent at f={_fmt(obj)}, k={k}"
        count += 1
    return count, None


@_register("pretorsion", "functor-laws")
def _functor_laws(bound: int):
    cap = min(bound, 3)
    objects = list(iter_objects(cap))
    count = 0
    for obj in objects:
        ident = identity_morphism(obj)
        part, _ = torsion_part(obj)
        if functor_R(ident) != identity_morphism(part):
            return count, f"core functor breaks identities at f={_fmt(obj)}"
        induced, _ = quotient(obj, cycle_congruence(obj))
        if functor_C(ident) != identity_morphism(induced):
            return count, f"quotient functor breaks identities at f={_fmt(obj)}"
        count += 1
    homs = {
        (a, b): hom_set(a, b) for a in objects for b in objects
    }
    restricted = {}
    induced_tables = {}
    for (a, b), morphisms in homs.items():
        for morphism in morphisms:
            key = (a.images, b.images, morphism.table)
            restricted[key] = functor_R(morphism)
            induced_tables[key] = functor_C(morphism)
    for a in objects:
        for b in objects:
            if not homs[(a, b)]:
                continue
            for c in objects:
                for g in homs[(b, c)]:
                    g_r = restricted[(b.images, c.images, g.table)]
                    g_c = induced_tables[(b.images, c.images, g.table)]
                    for h in homs[(a, b)]:
                        composite = _compose_tables(g.table, h.table)
                        key = (a.images, c.images, composite)
                        if key not in restricted:
                            morphism = Morphism(a, c, composite)
                            restricted[key] = functor_R(morphism)
                            induced_tables[key] = functor_C(morphism)
                        h_r = restricted[(a.images, b.images, h.table)]
                        h_c = induced_tables[(a.images, b.images, h.table)]
                        if restricted[key].table != _compose_tables(g_r.table, h_r.table):
                            return count, f"core functor breaks composition at {g!r} o {h!r}"
                        if induced_tables[key].table != _compose_tables(g_c.table, h_c.table):
                            return count, f"quotient functor breaks composition at {g!r} o {h!r}"
                        count += 1
    return count, None


@_register("pretorsion", "characterization-agreement")
def _characterization_agreement(bound: int):
    cap = min(bound, 3)
    count = 0
    for obj in iter_objects(cap):
        bijective, forest = is_bijection(obj), is_forest(obj)
        if bijective and forest:
            expected = BOTH
        elif bijective:
            expected = TORSION
        elif forest:
            expected = TORSION_FREE
        else:
            expected = NEITHER
        if pretorsion_characterization(obj, cap) != expected:
            return count, f"characterization disagrees at f={_fmt(obj)}"
        count += 1
    return count, None


@_register("pretorsion", "adjunction-universality")
def _adjunction_universality(bound: int):
    cap = min(bound, 3)
    count = 0
    fixed_point_free = [Endofunction((2, 1)), Endofunction((2, 3, 1))]
    for obj in iter_objects(cap):
        for target in iter_objects(cap):
            if is_bijection(target):
                if not adjunction_check(obj, target, REFLECTIVE_BIJECTIONS):
                    return count, f"reflection onto bijections fails at {_fmt(obj)} -> {_fmt(target)}"
                if not adjunction_check(obj, target, COREFLECTIVE_BIJECTIONS):
                    return count, f"coreflection onto bijections fails at {_fmt(obj)} -> {_fmt(target)}"
                count += 2
            if is_forest(target):
                if not adjunction_check(obj, target, REFLECTIVE_FORESTS):
                    return count, f"reflection onto forests fails at {_fmt(obj)} -> {_fmt(target)}"
                count += 1
        if is_forest(obj):
            for target in fixed_point_free:
                if hom_set(obj, target):
                    return count, f"forest object maps into a fixed-point-free cycle: {_fmt(obj)}"
                count += 1
    return count, None


# --------------------------------------------------------------------------
# bridges suite (preorders and the stable congruence)
# --------------------------------------------------------------------------


@_register("bridges", "preorder-construction-agreement")
def _preorder_construction_agreement(bound: int):
    count = 0
    for obj in _maps(bound, 4):
        if to_preord(obj) != reachability_closure(obj):
            return count, f"preorder constructions disagree at f={_fmt(obj)}"
        count += 1
    return count, None


@_register("bridges", "preorder-kind-dichotomy")
def _preorder_kind_dichotomy(bound: int):
    count = 0
    for obj in _maps(bound, 4):
        kind = preorder_kind(to_preord(obj))
        if (kind in (EQUIVALENCE, REL_BOTH)) != is_bijection(obj):
            return count, f"equivalence test disagrees at f={_fmt(obj)}"
        if (kind in (PARTIAL_ORDER, REL_BOTH)) != is_forest(obj):
            return count, f"partial-order test disagrees at f={_fmt(obj)}"
        count += 1
    return count, None


@_register("bridges", "preorder-functoriality")
def _preorder_functoriality(bound: int):
    cap = min(bound, 3)
    objects = list(iter_objects(cap))
    preorders = {obj: to_preord(obj) for obj in objects}
    count = 0
    for dom in objects:
        rho = preorders[dom]
        below = [
            (x, y)
            for x in range(1, dom.n + 1)
            for y in range(1, dom.n + 1)
            if rho.holds[x - 1][y - 1]
        ]
        for cod in objects:
            rho_cod = preorders[cod]
            for table in _hom_tables(dom.images, cod.images):
                for x, y in below:
                    if not rho_cod.holds[table[x - 1] - 1][table[y - 1] - 1]:
                        return count, f"morphism {list(table)} is not monotone"
                count += 1
    return count, None


@_register("bridges", "embedding-not-full-witness")
def _embedding_not_full_witness(bound: int):
    del bound  # fixed witness
    cycle = Endofunction((2, 3, 1))
    table = (2, 1, 3)
    if is_morphism(cycle, cycle, table):
        return 1, "the swap unexpectedly commutes with the 3-cycle"
    rho = to_preord(cycle)
    for x in range(1, 4):
        for y in range(1, 4):
            if rho.holds[x - 1][y - 1] and not rho.holds[table[x - 1] - 1][table[y - 1] - 1]:
                return 1, "the swap is unexpectedly non-monotone"
    return 1, None


@_register("bridges", "stable-congruence")
def _stable_congruence(bound: int):
    cap = min(bound, 3)
    objects = list(iter_objects(cap))
    homs = {(a, b): hom_set(a, b) for a in objects for b in objects}
    count = 0
    for (a, b), morphisms in homs.items():
        for g in morphisms:
            if not stable_equivalent(g, g):
                return count, f"stable relation not reflexive at {g!r}"
            count += 1
        related = []
        for g, h in itertools.combinations(morphisms, 2):
            forward = stable_equivalent(g, h)
            if forward != stable_equivalent(h, g):
                return count, f"stable relation not symmetric at {g!r}, {h!r}"
            if forward:
                related.append((g, h))
            count += 1
        for g, h, ell in itertools.permutations(morphisms, 3):
            if stable_equivalent(g, h) and stable_equivalent(h, ell):
                if not stable_equivalent(g, ell):
                    return count, f"stable relation not transitive at {g!r}, {h!r}, {ell!r}"
                count += 1
        for g, h in related:
            for w in objects:
                for m in homs[(w, a)]:
                    if not stable_equivalent(
                        Morphism(w, b, _compose_tables(g.table, m.table)),
                        Morphism(w, b, _compose_tables(h.table, m.table)),
                    ):
                        return count, f"right composition breaks stability at {g!r}, {h!r}"
                    count += 1
            for z in objects:
                for ell in homs[(b, z)]:
                    if not stable_equivalent(
                        Morphism(a, z, _compose_tables(ell.table, g.table)),
                        Morphism(a, z, _compose_tables(ell.table, h.table)),
                    ):
                        return count, f"left composition breaks stability at {g!r}, {h!r}"
                    count += 1
    return count, None


@_register("bridges", "terminal-but-no-zero")
def _terminal_but_no_zero(bound: int):
    cap = min(bound, 3)
    terminal = identity(1)
    count = 0
    for obj in iter_objects(cap):
        if len(hom_set(obj, terminal)) != 1:
            return count, f"terminal object fails at f={_fmt(obj)}"
        count += 1
    if hom_set(terminal, Endofunction((2, 3, 1))):
        return count, "found a morphism from the point into the 3-cycle"
    count += 1
    return count, None


# --------------------------------------------------------------------------
# runner
# --------------------------------------------------------------------------


def run_verification(
    suite: str = "all",
    bound: int = DEFAULT_BOUND,
    max_bound: int = MAX_BOUND,
    force: bool = False,
) -> list[CheckResult]:
    """Run one suite (or all of them, in fixed order) at the given bound."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected 'all' or one of {SUITE_NAMES}")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if bound > max_bound and not force:
        raise BoundExceededError(
            f"bound {bound} exceeds the default limit {max_bound}; pass force to override"
        )
    names = SUITE_NAMES if suite == "all" else (suite,)
    results: list[CheckResult] = []
    for name in names:
        for check in SUITES[name]:
            results.append(check.run(bound))
    return results


def summarize(results: list[CheckResult]) -> str:
    lines = []
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        line = (
            f"{status}  {result.name:<34} instances={result.instances:<8}"
            f" {result.elapsed:8.3f}s"
        )
        if result.witness:
            line += f"\n      witness: {result.witness}"
        lines.append(line)
    passed = sum(1 for r in results if r.passed)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
