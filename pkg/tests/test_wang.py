import random
from fractions import Fraction

import pytest

from novikov.complexes import circle
from novikov.constructions import (
    SimplicialMap,
    mapping_torus,
    torus_grid,
    torus_grid_map,
)
from novikov.errors import ConstructionError
from novikov.scalars import Matrix, parse_scalar
from novikov.twisted import betti_profile
from novikov.wang import (
    FiberCohomologyAction,
    induced_action,
    pullback_matrix,
    wang_dims,
)


def sphere_product_action():
    # fiber with cohomology in degrees 0, 3, 6 and a hyperbolic middle block
    return FiberCohomologyAction.from_blocks(
        {0: [[1]], 3: [[1, 1], [1, 2]], 6: [[1]]}
    )


def test_action_normalization():
    act = sphere_product_action()
    assert act.top_degree == 6
    assert act.fiber_dims() == (1, 0, 0, 2, 0, 0, 1)
    assert act.block(2).shape == (0, 0)
    assert act.block(9).shape == (0, 0)
    with pytest.raises(ValueError):
        FiberCohomologyAction([[[1, 2]]])


def test_wang_dims_hyperbolic_sphere_bundle():
    act = sphere_product_action()
    lam = parse_scalar("nf:x^2-3*x+1:x")
    prof = wang_dims(act, lam)
    assert prof.dims == (0, 0, 0, 1, 1, 0, 0, 0)
    assert prof.euler == 0
    assert prof.backend == "nf"
    # rational lambdas miss the spectrum entirely
    assert wang_dims(act, Fraction(2)).dims == (0,) * 8
    # at lambda = 1 only the degree 0 and 6 blocks contribute
    assert wang_dims(act, Fraction(1)).dims == (1, 1, 0, 0, 0, 0, 1, 1)


def test_wang_dims_float_backend():
    act = sphere_product_action()
    golden = (3 + 5 ** 0.5) / 2  # root of x^2 - 3x + 1
    prof = wang_dims(act, golden)
    assert prof.backend == "float"
    assert prof.dims == (0, 0, 0, 1, 1, 0, 0, 0)
    assert wang_dims(act, 2.0).dims == (0,) * 8


def test_wang_dims_sol_and_nilpotent_fibers():
    sol = FiberCohomologyAction.from_blocks(
        {0: [[1]], 1: [[2, 1], [1, 1]], 2: [[1]]}
    )
    lam = parse_scalar("nf:x^2-3*x+1:x")
    assert wang_dims(sol, lam).dims == (0, 1, 1, 0)
    assert wang_dims(sol, Fraction(2)).dims == (0, 0, 0, 0)
    assert wang_dims(sol, Fraction(1)).dims == (1, 1, 1, 1)

    nil = FiberCohomologyAction.from_blocks(
        {0: [[1]], 1: [[1, 1], [0, 1]], 2: [[1]]}
    )
    for lam in (Fraction(2), Fraction(-1), Fraction(5, 7)):
        assert wang_dims(nil, lam).dims == (0, 0, 0, 0)
    assert wang_dims(nil, Fraction(1)).dims == (1, 2, 2, 1)


def test_wang_euler_always_zero():
    rng = random.Random(11)
    for _ in range(10):
        blocks = {}
        for p in range(rng.randrange(1, 4)):
            n = rng.randrange(0, 3)
            if n:
                blocks[p] = [
                    [rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)
                ]
        act = FiberCohomologyAction.from_blocks(blocks)
        lam = Fraction(rng.randrange(1, 5), rng.randrange(1, 5))
        assert wang_dims(act, lam).euler == 0
    with pytest.raises(ValueError):
        wang_dims(sphere_product_action(), Fraction(0))


def test_induced_action_torus_automorphisms():
    k = torus_grid(3)
    ident = induced_action(k, torus_grid_map(3, [[1, 0], [0, 1]]))
    assert ident.fiber_dims() == (1, 2, 1)
    assert ident.block(1) == Matrix.from_rows([[1, 0], [0, 1]])
    assert ident.block(0) == Matrix.from_rows([[1]])
    assert ident.block(2) == Matrix.from_rows([[1]])

    translation = induced_action(k, torus_grid_map(3, [[1, 0], [0, 1]], shift=(1, 2)))
    assert translation.block(1) == Matrix.from_rows([[1, 0], [0, 1]])

    flip = induced_action(k, torus_grid_map(3, [[-1, 0], [0, -1]]))
    assert flip.block(1) == Matrix.from_rows([[-1, 0], [0, -1]])
    assert flip.block(2) == Matrix.from_rows([[1]])

    swap = induced_action(k, torus_grid_map(3, [[0, 1], [1, 0]]))
    m = swap.block(1)
    assert m.entry(0, 0) + m.entry(1, 1) == 0
    assert m.entry(0, 0) * m.entry(1, 1) - m.entry(0, 1) * m.entry(1, 0) == -1
    assert swap.block(2) == Matrix.from_rows([[-1]])

    hexa = induced_action(k, torus_grid_map(3, [[1, -1], [1, 0]]))
    m = hexa.block(1)
    trace = m.entry(0, 0) + m.entry(1, 1)
    det = m.entry(0, 0) * m.entry(1, 1) - m.entry(0, 1) * m.entry(1, 0)
    assert (trace, det) == (1, 1)  # satisfies x^2 - x + 1, order six
    power = m
    for _ in range(5):
        power = power @ m
    assert power == Matrix.from_rows([[1, 0], [0, 1]])


def test_pullback_is_cochain_map():
    k = torus_grid(3)
    phi = torus_grid_map(3, [[1, -1], [1, 0]], shift=(2, 1))
    for p in range(k.dim):
        delta = k.boundary_matrix(p + 1).transpose()
        left = pullback_matrix(k, phi, p + 1) @ delta
        right = delta @ pullback_matrix(k, phi, p)
        assert left == right


def test_induced_action_requires_isomorphism():
    k = circle(3)
    from novikov.complexes import point

    collapse = SimplicialMap(k, point(), [0, 0, 0])
    with pytest.raises(ConstructionError):
        induced_action(k, collapse)


def test_wang_matches_mapping_torus():
    k = torus_grid(3)
    mats = {
        "identity": [[1, 0], [0, 1]],
        "flip": [[-1, 0], [0, -1]],
        "swap": [[0, 1], [1, 0]],
        "hexagonal": [[1, -1], [1, 0]],
    }
    for name, mat in mats.items():
        phi = torus_grid_map(3, mat)
        mt = mapping_torus(k, phi, layers=3)
        action = induced_action(k, phi)
        for mu in (Fraction(1), Fraction(-1), Fraction(2)):
            lam = mu ** mt.holonomy_period
            direct = betti_profile(mt.complex, mt.fiber_cocycle, mu)
            predicted = wang_dims(action, lam)
            assert direct.dims == predicted.dims, (name, mu)
            assert direct.euler == 0


def test_wang_matches_mapping_torus_circle_rotation():
    c = circle(3)
    rot = SimplicialMap(c, c, [1, 2, 0])
    mt = mapping_torus(c, rot, layers=3)
    action = induced_action(c, rot)
    assert action.fiber_dims() == (1, 1)
    assert action.block(1) == Matrix.from_rows([[1]])
    for mu in (Fraction(1), Fraction(-1), Fraction(3)):
        direct = betti_profile(mt.complex, mt.fiber_cocycle, mu)
        predicted = wang_dims(action, mu ** 3)
        assert direct.dims == predicted.dims
