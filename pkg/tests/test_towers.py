"""Tower levels, reconstructed transitions, truncated limits, shifts."""

import pytest

from adictower.exactalg.matrices import Matrix
from adictower.exactalg.rings import RingError, integer_ring, polynomial_ring
from adictower.fpmod.modules import (
    ModuleMorphism,
    free_module,
    module_order,
    normalize,
)
from adictower.fpmod.morphisms import (
    cokernel,
    compose,
    equal_morphisms,
    find_isomorphism,
    is_isomorphism,
    submodules_equal,
)
from adictower.towers import (
    ML_HOLDS_BY_SURJECTIVITY,
    ML_NOT_STABILIZED,
    TowerError,
    build_adic_tower,
    build_transition,
    build_transitions,
    canonical_hom_embedding,
    hom_into_colimit,
    inclusion_composite,
    inverse_limit,
    mittag_leffler_check,
    reduction_morphism,
    shift_embedding,
    shift_endomorphism,
    transition_composite,
    truncated_limit,
    truncation_morphism,
)

Z = integer_ring()


def two_adic(depth):
    return build_adic_tower(Z, 2, depth)


def test_tower_levels_and_inclusions():
    tower = two_adic(3)
    assert module_order(tower.level(1)) == 2
    assert module_order(tower.level(3)) == 8
    assert tower.inclusion(1).matrix.to_lists() == [[2]]
    assert tower.level_modulus(2) == 4


def test_tower_rejects_bad_generators():
    with pytest.raises(RingError):
        build_adic_tower(Z, 0, 3)
    with pytest.raises(RingError):
        build_adic_tower(Z, 1, 3)
    with pytest.raises(RingError):
        build_adic_tower(Z, 2, 0)


def test_inclusion_composite_folds_stored_maps():
    tower = two_adic(4)
    comp = inclusion_composite(tower, 1, 4)
    assert comp.matrix.to_lists() == [[8]]
    assert equal_morphisms(
        comp, compose(tower.inclusion(3), compose(tower.inclusion(2), tower.inclusion(1)))
    )


def test_canonical_hom_embedding_detects_doctored_tower():
    tower = two_adic(3)
    # replace an inclusion with the zero map; the canonical map into the
    # hom module is no longer an isomorphism
    tower.inclusions = (
        tower.inclusions[0],
        ModuleMorphism(tower.level(2), tower.level(3), Matrix.from_rows(Z, [[0]])),
    )
    with pytest.raises(TowerError):
        canonical_hom_embedding(tower, 2, 3)


def test_transition_equals_reduction():
    for p in (2, 3):
        tower = build_adic_tower(Z, p, 5)
        for n in range(1, 5):
            delta = build_transition(tower, n)
            assert equal_morphisms(delta, reduction_morphism(tower, n))


def test_transition_composite_reduces_all_the_way():
    tower = two_adic(4)
    comp = transition_composite(tower, 1, 4)
    assert equal_morphisms(comp, ModuleMorphism(
        tower.level(4), tower.level(1), Matrix.from_rows(Z, [[1]])
    ))


def test_hom_into_colimit_stabilizes_immediately():
    tower = two_adic(6)
    for m in range(1, 7):
        col = hom_into_colimit(tower, m)
        assert col.stable_index <= m + 1
        assert find_isomorphism(col.stable_module, tower.level(m)) is not None


def test_truncated_limit_carrier_is_top_level():
    tower = two_adic(3)
    lim = truncated_limit(tower, 3)
    assert is_isomorphism(lim.top)
    assert normalize(lim.carrier).factors == (8,)


def test_truncated_limit_level_one_edge():
    tower = two_adic(1)
    lim = truncated_limit(tower, 1)
    assert module_order(lim.carrier) == 2
    assert is_isomorphism(lim.top)


def test_coherent_element_validation():
    tower = two_adic(3)
    lim = truncated_limit(tower, 3)
    elem = lim.element([1, 3, 3])
    assert elem.components == (1, 3, 3)
    with pytest.raises(ValueError):
        lim.element([1, 3, 4])
    with pytest.raises(ValueError):
        lim.element([1, 3])


def test_coherent_arithmetic():
    tower = two_adic(3)
    lim = truncated_limit(tower, 3)
    a = lim.element([1, 3, 3])
    b = lim.element([1, 1, 5])
    prod = lim.multiply(a, b)
    assert prod.components == (1, 3, 7)
    total = lim.add(a, b)
    assert total.components == (0, 0, 0)
    assert lim.from_scalar(5).components == (1, 1, 5)
    assert lim.one().components == (1, 1, 1)


def test_column_roundtrip():
    tower = two_adic(3)
    lim = truncated_limit(tower, 3)
    a = lim.element([1, 3, 3])
    col = lim.column(a)
    back = lim.element_from_column(col)
    assert back == a


def test_multiplication_morphism_matches_elementwise_product():
    tower = two_adic(3)
    lim = truncated_limit(tower, 3)
    a = lim.element([1, 3, 3])
    b = lim.element([1, 1, 5])
    mult = lim.multiplication_morphism(a)
    moved = lim.element_from_column(mult.matrix @ lim.column(b))
    assert moved == lim.multiply(a, b)


def test_structure_ring_map_hits_one():
    tower = two_adic(3)
    lim = truncated_limit(tower, 3)
    ring_map = lim.structure_ring_map()
    assert ring_map.source.same_presentation(free_module(Z, 1))
    one = lim.element_from_column(ring_map.matrix @ Matrix.column(Z, [1]))
    assert one == lim.one()


def test_shift_endomorphism_action():
    tower = two_adic(3)
    lim = truncated_limit(tower, 3)
    shift = shift_endomorphism(lim)
    a = lim.element([1, 3, 3])
    moved = lim.element_from_column(shift.matrix @ lim.column(a))
    assert moved == lim.element([0, 2, 6])


def test_shift_image_is_ideal_multiple():
    tower = two_adic(4)
    lim = truncated_limit(tower, 4)
    shift = shift_endomorphism(lim)
    doubled = Matrix.identity(Z, lim.carrier.generators).scale(2)
    assert submodules_equal(lim.carrier, shift.matrix, doubled)
    coker, _ = cokernel(shift)
    assert module_order(coker) == 2


def test_shift_embedding_and_truncation():
    tower = two_adic(3)
    big = truncated_limit(tower, 3)
    small = truncated_limit(tower, 2)
    embed = shift_embedding(small, big)
    drop = truncation_morphism(big, small)
    # dropping right after embedding is the shift on the smaller limit
    back = compose(drop, embed)
    shift = shift_endomorphism(small)
    assert equal_morphisms(back, shift)


def test_inverse_limit_single_module():
    lim = inverse_limit([free_module(Z, 1)], [])
    assert lim.carrier.generators >= 1
    assert is_isomorphism(lim.projections[0])


def test_mittag_leffler_surjective_shortcut():
    tower = two_adic(4)
    maps = build_transitions(tower)
    modules = [tower.level(n) for n in range(1, 5)]
    check = mittag_leffler_check(modules, maps, 8)
    assert check.verdict == ML_HOLDS_BY_SURJECTIVITY
    assert all(check.surjective_maps)


def test_mittag_leffler_control_fails_to_stabilize():
    free = free_module(Z, 1)
    doubling = ModuleMorphism(free, free, Matrix.from_rows(Z, [[2]]))
    horizon = 5
    modules = [free] * (horizon + 2)
    maps = [doubling] * (horizon + 1)
    check = mittag_leffler_check(modules, maps, horizon)
    assert check.verdict == ML_NOT_STABILIZED


def test_polynomial_tower_end_to_end():
    F2X = polynomial_ring(2)
    x = (0, 1)
    tower = build_adic_tower(F2X, x, 3)
    lim = truncated_limit(tower, 3)
    assert module_order(lim.carrier) == 8
    one = lim.one()
    assert one.components == ((1,), (1,), (1,))
    shift = shift_endomorphism(lim)
    moved = lim.element_from_column(shift.matrix @ lim.column(one))
    assert moved == lim.element([(), x, x])


def test_polynomial_tower_with_quadratic_generator():
    F3X = polynomial_ring(3)
    g = (1, 0, 1)
    tower = build_adic_tower(F3X, g, 2)
    assert module_order(tower.level(2)) == 3 ** 4
    delta = build_transition(tower, 1)
    assert equal_morphisms(delta, reduction_morphism(tower, 1))
