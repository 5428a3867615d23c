from fractions import Fraction

import pytest

from novikov.cocycles import OneCocycle, holonomy, zero_cocycle
from novikov.complexes import SimplicialComplex, circle, point
from novikov.constructions import (
    CoveringData,
    SimplicialMap,
    cyclic_cover,
    mapping_torus,
    product,
    torus_grid,
    torus_grid_map,
)
from novikov.errors import ConstructionError, InvalidMapError
from novikov.twisted import betti_profile, kunneth_check


def winding_theta(m, w=1):
    values = {e: 0 for e in circle(m).edges}
    values[(0, 1)] = w
    return OneCocycle(values)


def torus_theta(m=3, w=1):
    """Pullback of the winding cocycle along (i, j) -> i on torus_grid."""
    k = torus_grid(m)
    base = winding_theta(m, w)
    values = {}
    for (u, v) in k.edges:
        a, b = u // m, v // m
        values[(u, v)] = base.value(a, b) if a != b else 0
    return k, OneCocycle(values)


def test_simplicial_map_validation_and_collapse():
    k = circle(4)
    with pytest.raises(InvalidMapError):
        SimplicialMap(k, k, [0, 2, 1, 3])  # sends edge (0,1) to the non-edge (0,2)
    with pytest.raises(InvalidMapError):
        SimplicialMap(k, k, [0, 1, 2])
    with pytest.raises(InvalidMapError):
        SimplicialMap(k, k, [0, 1, 2, 7])
    collapse = SimplicialMap(circle(3), point(), [0, 0, 0])
    assert not collapse.is_isomorphism()
    assert collapse.image_simplex((0, 1)) == (0,)
    rot = SimplicialMap(k, k, [1, 2, 3, 0])
    assert rot.is_isomorphism()
    twice = rot.compose(rot)
    assert twice.vertex_map == (2, 3, 0, 1)
    via_dict = SimplicialMap(k, k, {0: 1, 1: 2, 2: 3, 3: 0})
    assert via_dict.vertex_map == rot.vertex_map


def test_product_of_circles_is_torus():
    prod = product(circle(3), circle(3))
    k = prod.complex
    assert k.counts() == (9, 27, 18)
    assert k.euler_characteristic() == 0
    theta = prod.combine_cocycles(winding_theta(3), zero_cocycle(circle(3)))
    assert betti_profile(k, theta, Fraction(1)).dims == (1, 2, 1)
    for lam in (Fraction(2), Fraction(5, 7)):
        assert betti_profile(k, theta, lam).dims == (0, 0, 0)


def test_product_with_point_is_identity_shape():
    prod = product(point(), circle(3))
    assert prod.complex.counts() == circle(3).counts()
    theta = prod.combine_cocycles(
        zero_cocycle(point()), winding_theta(3)
    )
    assert betti_profile(prod.complex, theta, Fraction(2)).dims == (0, 0)
    assert betti_profile(prod.complex, theta, Fraction(1)).dims == (1, 1)


def test_product_association_gives_same_complex():
    c = circle(3)
    left = product(product(c, c).complex, c).complex
    right = product(c, product(c, c).complex).complex
    assert left.counts() == (27, 189, 324, 162)
    assert left == right
    assert left.euler_characteristic() == 0


def test_three_torus_profiles():
    c = circle(3)
    t2 = product(c, c)
    t3 = product(t2.complex, c)
    theta2 = t2.combine_cocycles(winding_theta(3), zero_cocycle(c))
    theta3 = t3.combine_cocycles(theta2, zero_cocycle(c))
    assert betti_profile(t3.complex, theta3, Fraction(1)).dims == (1, 3, 3, 1)
    assert betti_profile(t3.complex, theta3, Fraction(2)).dims == (0, 0, 0, 0)


def test_kunneth_convolution_on_products():
    cases = [
        (3, 4, 1, 2, Fraction(1)),
        (3, 4, 1, 2, Fraction(-1)),
        (3, 3, 1, 0, Fraction(2)),
        (4, 3, 2, 1, Fraction(-1)),
    ]
    for ml, mr, wl, wr, lam in cases:
        cl, cr = circle(ml), circle(mr)
        tl, tr = winding_theta(ml, wl), winding_theta(mr, wr)
        prod = product(cl, cr)
        combined = prod.combine_cocycles(tl, tr)
        pa = betti_profile(cl, tl, lam)
        pb = betti_profile(cr, tr, lam)
        pp = betti_profile(prod.complex, combined, lam)
        assert kunneth_check(pa, pb, pp), (ml, mr, wl, wr, lam)


def test_mapping_torus_of_point_is_circle():
    ident = SimplicialMap(point(), point(), [0])
    mt = mapping_torus(point(), ident, layers=5)
    assert mt.complex == circle(5)
    assert mt.holonomy_period == 5
    assert holonomy(mt.complex, mt.fiber_cocycle, [0, 1, 2, 3, 4]) == 5
    assert betti_profile(mt.complex, mt.fiber_cocycle, Fraction(1)).dims == (1, 1)
    assert betti_profile(mt.complex, mt.fiber_cocycle, Fraction(2)).dims == (0, 0)


def test_mapping_torus_identity_circle_is_torus():
    c = circle(3)
    ident = SimplicialMap(c, c, [0, 1, 2])
    mt = mapping_torus(c, ident, layers=3)
    assert mt.complex.counts() == (9, 27, 18)
    assert mt.complex.euler_characteristic() == 0
    assert betti_profile(mt.complex, mt.fiber_cocycle, Fraction(1)).dims == (1, 2, 1)
    assert betti_profile(mt.complex, mt.fiber_cocycle, Fraction(2)).dims == (0, 0, 0)


def test_mapping_torus_counts_and_vertical_holonomy():
    k = torus_grid(3)
    swap = torus_grid_map(3, [[0, 1], [1, 0]])
    mt = mapping_torus(k, swap, layers=3)
    assert mt.complex.counts() == (27, 189, 324, 162)
    # vertex 0 = (0, 0) is fixed by the swap, so its vertical loop closes
    loop = [mt.vertex_id(0, r) for r in range(3)]
    assert holonomy(mt.complex, mt.fiber_cocycle, loop) == 3
    # fiber edges carry no holonomy
    fiber_edge = (mt.vertex_id(0, 0), mt.vertex_id(1, 0))
    assert mt.fiber_cocycle.value(*fiber_edge) == 0


def test_mapping_torus_rejections():
    c = circle(3)
    ident = SimplicialMap(c, c, [0, 1, 2])
    with pytest.raises(ConstructionError):
        mapping_torus(c, ident, layers=2)
    collapse = SimplicialMap(c, point(), [0, 0, 0])
    with pytest.raises(ConstructionError):
        mapping_torus(c, collapse, layers=3)
    with pytest.raises(ConstructionError):
        mapping_torus(point(), ident, layers=3)


def test_torus_grid_map_accepts_finite_order_matrices():
    for m in (3, 4, 5):
        for mat in ([[1, 0], [0, 1]], [[-1, 0], [0, -1]],
                    [[0, 1], [1, 0]], [[1, -1], [1, 0]]):
            phi = torus_grid_map(m, mat)
            assert phi.is_isomorphism()
        shifted = torus_grid_map(m, [[1, 0], [0, 1]], shift=(1, 2))
        assert shifted.is_isomorphism()


def test_torus_grid_map_rejects_infinite_order_matrices():
    # these generate infinite cyclic subgroups of GL2(Z), so no finite
    # complex can carry them as automorphisms; the triangle check agrees
    for m in (3, 4, 5):
        for mat in ([[2, 1], [1, 1]], [[1, 1], [0, 1]], [[1, 0], [1, 1]]):
            with pytest.raises(InvalidMapError):
                torus_grid_map(m, mat)
    with pytest.raises(ConstructionError):
        torus_grid(2)


def test_cyclic_cover_of_circle_is_hexagon():
    cover = cyclic_cover(circle(3), winding_theta(3), 2)
    k = cover.complex
    assert k.counts() == (6, 6)
    assert k.euler_characteristic() == 0
    assert set(k.edges) == {(0, 3), (1, 2), (2, 4), (3, 5), (0, 4), (1, 5)}
    assert holonomy(k, cover.theta_lift, [0, 3, 5, 1, 2, 4]) == 2
    # base dims embed componentwise; strict inequality at lambda = -1
    base = betti_profile(circle(3), winding_theta(3), Fraction(-1))
    lifted = betti_profile(k, cover.theta_lift, Fraction(-1))
    assert base.dims == (0, 0)
    assert lifted.dims == (1, 1)


def test_cyclic_cover_of_torus():
    k, theta = torus_theta(3)
    cover = cyclic_cover(k, theta, 3)
    assert cover.complex.counts() == (27, 81, 54)
    assert cover.complex.euler_characteristic() == 0
    assert betti_profile(cover.complex, cover.theta_lift, Fraction(1)).dims == (1, 2, 1)
    for lam in (Fraction(1), Fraction(-1), Fraction(2)):
        b = betti_profile(k, theta, lam).dims
        c = betti_profile(cover.complex, cover.theta_lift, lam).dims
        assert all(x <= y for x, y in zip(b, c))


def test_cyclic_cover_validation_and_deck():
    with pytest.raises(ConstructionError):
        cyclic_cover(circle(3), winding_theta(3), 0)
    float_theta = OneCocycle(
        {(0, 1): 1.0, (1, 2): 0.0, (0, 2): 0.0}, mode="float"
    )
    with pytest.raises(ConstructionError):
        cyclic_cover(circle(3), float_theta, 2)
    tri = SimplicialComplex.build([[0, 1, 2]])
    unclosed = OneCocycle({(0, 1): 1, (1, 2): 0, (0, 2): 0})
    with pytest.raises(ConstructionError):
        cyclic_cover(tri, unclosed, 2)
    cover = cyclic_cover(circle(3), winding_theta(3), 3)
    deck = cover.deck_map(1)
    assert deck.is_isomorphism()
    three = deck.compose(deck).compose(deck)
    assert three.vertex_map == tuple(range(cover.complex.vertex_count))
    v = cover.vertex_id(2, 1)
    assert cover.project_vertex(v) == 2
    assert cover.sheet_of(v) == 1


def test_sheets_one_cover_is_base():
    k, theta = torus_theta(3)
    cover = cyclic_cover(k, theta, 1)
    assert cover.complex.counts() == k.counts()
    assert isinstance(cover, CoveringData)
