import random
from fractions import Fraction

import numpy as np
import pytest

from novikov.errors import BackendMismatchError, ReducibilityError
from novikov.scalars import (
    Matrix,
    MinimalPolynomial,
    NumberFieldElement,
    format_polynomial,
    kernel_basis,
    kernel_dim,
    matrix_rref,
    nf_inverse,
    parse_polynomial,
    parse_scalar,
    rank,
    rank_with_flag,
    scalar_literal,
    solve_linear,
)

GOLDEN = MinimalPolynomial.parse("x^2-3*x+1")


def x_in(minpoly):
    return NumberFieldElement.generator(minpoly)


def test_polynomial_parse_roundtrip():
    for text in ["x^2-3*x+1", "x^2-2", "x^3+1/2*x-7", "2*x", "x", "5"]:
        coeffs = parse_polynomial(text)
        assert parse_polynomial(format_polynomial(coeffs)) == coeffs
    assert parse_polynomial("x**2 - 3*x + 1") == (1, -3, 1)
    assert parse_polynomial("-x+4") == (4, -1)
    with pytest.raises(ValueError):
        parse_polynomial("x^2 + y")


def test_minimal_polynomial_validation():
    with pytest.raises(ValueError):
        MinimalPolynomial([1])  # degree 0
    with pytest.raises(ValueError):
        MinimalPolynomial([1, 2])  # not monic
    m = MinimalPolynomial.parse("x^2-2")
    assert m.degree == 2 and str(m) == "x^2-2"


def test_nf_inverse_golden_ratio_field():
    # product check: x * (3 - x) = 3x - x^2 = 3x - (3x - 1) = 1 mod x^2-3x+1
    a = x_in(GOLDEN)
    inv = nf_inverse(a)
    assert inv == NumberFieldElement((3, -1), GOLDEN)
    assert a * inv == 1


def test_nf_inverse_sqrt2_field():
    m = MinimalPolynomial.parse("x^2-2")
    a = x_in(m)
    inv = nf_inverse(a)
    assert inv == NumberFieldElement((0, Fraction(1, 2)), m)
    assert a * inv == 1


def test_nf_arithmetic_field_axioms_random():
    rng = random.Random(11)
    m = GOLDEN
    for _ in range(50):
        a = NumberFieldElement([rng.randint(-5, 5), rng.randint(-5, 5)], m)
        b = NumberFieldElement([rng.randint(-5, 5), rng.randint(-5, 5)], m)
        c = NumberFieldElement([rng.randint(-5, 5), rng.randint(-5, 5)], m)
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        if b:
            assert (a / b) * b == a
    assert x_in(m) ** 2 == 3 * x_in(m) - 1          # defining relation
    assert x_in(m) ** -1 == nf_inverse(x_in(m))


def test_nf_zero_and_reducible():
    with pytest.raises(ZeroDivisionError):
        nf_inverse(NumberFieldElement((0,), GOLDEN))
    # x^2-1 factors; inverting x-1 must surface a factor, not an answer
    m = MinimalPolynomial.parse("x^2-1")
    with pytest.raises(ReducibilityError) as err:
        nf_inverse(NumberFieldElement((-1, 1), m))
    assert err.value.factor is not None


def test_nf_mixed_minpoly_rejected():
    other = MinimalPolynomial.parse("x^2-2")
    with pytest.raises(BackendMismatchError):
        x_in(GOLDEN) + x_in(other)
    with pytest.raises(BackendMismatchError):
        Matrix.from_rows([[x_in(GOLDEN), x_in(other)]])


def test_matrix_backend_inference_and_coercion():
    m = Matrix.from_rows([[1, Fraction(1, 2)], [0, 3]])
    assert m.backend == "exact"
    assert all(isinstance(v, Fraction) for v in m.entries)
    mf = Matrix.from_rows([[1, 0.5], [0, 3]])
    assert mf.backend == "float"
    mn = Matrix.from_rows([[x_in(GOLDEN), 1], [0, 2]])
    assert mn.backend == "nf"
    with pytest.raises(BackendMismatchError):
        Matrix.from_rows([[x_in(GOLDEN), 0.5]])
    with pytest.raises(ValueError):
        Matrix.from_rows([[float("nan")]])
    with pytest.raises(ValueError):
        Matrix(2, 2, [1, 2, 3])


def test_rank_wang_block_golden_eigenvalue():
    # A - lambda*I for A = [[1,1],[1,2]] at lambda = x mod x^2-3x+1:
    # det = (1-x)(2-x) - 1 = x^2-3x+1 = 0, so rank drops to exactly 1
    lam = x_in(GOLDEN)
    m = Matrix.from_rows([[1 - lam, 1], [1, 2 - lam]])
    assert rank(m) == 1
    assert kernel_dim(m) == 1
    # off the eigenvalue the block is invertible
    m2 = Matrix.from_rows([[1 - Fraction(2), 1], [1, 2 - Fraction(2)]])
    assert rank(m2) == 2


def _random_rank_factors(rng, n, r):
    a = [[Fraction(rng.randint(-3, 3)) for _ in range(r)] for _ in range(n)]
    b = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(r)]
    prod = [
        [sum(a[i][k] * b[k][j] for k in range(r)) for j in range(n)]
        for i in range(n)
    ]
    return Matrix.from_rows(prod)


def test_exact_rank_matches_float_rank_random():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(2, 6)
        r = rng.randint(0, n)
        m = _random_rank_factors(rng, n, r) if r else Matrix.zeros(n, n)
        exact = rank(m)
        approx = rank(m, mode="float", tolerance=1e-10)
        assert exact == approx
        assert exact <= r
        assert rank(m.transpose()) == exact


def test_rank_invariances_random():
    rng = random.Random(5)
    for _ in range(20):
        rows = [
            [Fraction(rng.randint(-4, 4)) for _ in range(5)] for _ in range(4)
        ]
        m = Matrix.from_rows(rows)
        base = rank(m)
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert rank(Matrix.from_rows(shuffled)) == base
        scaled = [[Fraction(3) * v for v in row] for row in rows]
        assert rank(Matrix.from_rows(scaled)) == base
        assert rank(m.transpose()) == base


def test_rank_empty_and_zero():
    assert rank(Matrix.zeros(0, 5)) == 0
    assert rank(Matrix.zeros(5, 0)) == 0
    assert rank(Matrix.zeros(3, 3)) == 0
    assert kernel_dim(Matrix.zeros(0, 5)) == 5
    r, ill = rank_with_flag(Matrix(0, 4, []), mode="float", tolerance=1e-10)
    assert (r, ill) == (0, False)


def test_float_rank_tolerance_and_flag():
    m = Matrix.from_rows([[1.0, 0.0], [0.0, 1e-14]])
    r, ill = rank_with_flag(m, tolerance=1e-10)
    assert r == 1 and not ill
    # singular value right at the cut scale trips the flag
    m2 = Matrix.from_rows([[1.0, 0.0], [0.0, 3e-10]])
    r2, ill2 = rank_with_flag(m2, tolerance=1e-10)
    assert ill2
    with pytest.raises(ValueError):
        rank(m, mode="float", tolerance=0.0)
    with pytest.raises(BackendMismatchError):
        rank(m, mode="exact")


def test_rref_solve_and_kernel():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    basis = kernel_basis(m)
    assert len(basis) == 1
    for vec in basis:
        image = [
            sum(m.entry(i, j) * vec[j] for j in range(3)) for i in range(3)
        ]
        assert all(v == 0 for v in image)
    x = solve_linear(m, [Fraction(6), Fraction(12), Fraction(2)])
    assert x is not None
    assert [sum(m.entry(i, j) * x[j] for j in range(3)) for i in range(3)] == [6, 12, 2]
    assert solve_linear(Matrix.from_rows([[1], [1]]), [Fraction(0), Fraction(1)]) is None
    rows, pivots = matrix_rref(Matrix.from_rows([[0, 1], [1, 0]]))
    assert pivots == [0, 1]


def test_kernel_basis_number_field():
    lam = x_in(GOLDEN)
    m = Matrix.from_rows([[1 - lam, 1], [1, 2 - lam]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    v = basis[0]
    for i in range(2):
        assert m.entry(i, 0) * v[0] + m.entry(i, 1) * v[1] == 0


def test_matrix_product_and_numpy():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).rows() == [[2, 1], [4, 3]]
    arr = a.to_numpy()
    assert arr.dtype == complex and arr.shape == (2, 2)
    nfm = Matrix.from_rows([[x_in(GOLDEN)]])
    with pytest.raises(BackendMismatchError):
        nfm.to_numpy()
    assert np.allclose(Matrix.from_rows([[0.5j]]).to_numpy(), [[0.5j]])


def test_parse_scalar_literals():
    assert parse_scalar("2") == Fraction(2)
    assert parse_scalar("5/7") == Fraction(5, 7)
    assert parse_scalar("-3/2") == Fraction(-3, 2)
    assert parse_scalar("2.5") == 2.5
    assert parse_scalar("1e-3") == 1e-3
    assert parse_scalar("1+2j") == 1 + 2j
    lam = parse_scalar("nf:x^2-3*x+1:x")
    assert lam == NumberFieldElement.generator(GOLDEN)
    assert parse_scalar("2", backend="float") == 2.0
    with pytest.raises(BackendMismatchError):
        parse_scalar("2.5", backend="exact")
    with pytest.raises(ValueError):
        parse_scalar("zebra")


def test_scalar_literal_roundtrip():
    for text in ["2", "5/7", "-3", "nf:x^2-3*x+1:x", "nf:x^2-2:1/2*x+3"]:
        val = parse_scalar(text)
        assert parse_scalar(scalar_literal(val)) == val
    assert scalar_literal(2.5) == "2.5"
