"""Cohomology of rank-one local systems twisted by a closed 1-cocycle.

Given a closed integer (or real) cocycle theta and a nonzero monodromy
parameter lambda, each oriented edge u -> v carries the weight
lambda**theta(u, v).  The twisted coboundary transports the omitted leading
vertex along its first edge:

    (delta f)(v0..v_{p+1}) = w(v0, v1) f(v1..v_{p+1})
                             + sum_{i>=1} (-1)^i f(v0..^v_i..v_{p+1})

Closedness of theta gives w(v0,v1) w(v1,v2) = w(v0,v2) on every triangle,
which is exactly what makes delta delta = 0.  At lambda = 1 this is the
ordinary simplicial coboundary (the transpose of the boundary matrix).
The dimension of degree-p cohomology is then

    dims[p] = #C^p - rank delta_p - rank delta_{p-1},

computed exactly for rational / number field lambda and through singular
values for float lambda.  All functions are pure and safe to call from
concurrent readers; results depend only on their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex
from .cocycles import OneCocycle, validate_closed
from .errors import BackendMismatchError
from .scalars import (
    DEFAULT_FLOAT_TOLERANCE,
    Matrix,
    NumberFieldElement,
    rank_with_flag,
    scalar_backend,
    scalar_literal,
)

__all__ = [
    "LocalSystemWeights",
    "twisted_coboundary",
    "BettiProfile",
    "betti_profile",
    "duality_check",
    "kunneth_check",
]


class LocalSystemWeights:
    """Edge weights lambda**theta(e) of the rank-one local system.

    Exact backends require integer theta so the weights live in the scalar
    field; the float backend accepts real exponents through the principal
    power branch.
    """

    __slots__ = ("complex", "theta", "lam", "backend")

    def __init__(self, k: SimplicialComplex, theta: OneCocycle, lam):
        backend = scalar_backend(lam)
        if lam == 0:
            raise ValueError("monodromy parameter lambda must be nonzero")
        if backend in ("exact", "nf") and theta.mode != "exact":
            raise BackendMismatchError(
                "exact lambda needs an integer cocycle; use float lambda "
                "for real-valued theta"
            )
        if not validate_closed(k, theta):
            raise ValueError("cocycle is not closed on this complex")
        object.__setattr__(self, "complex", k)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "lam", Fraction(lam) if backend == "exact" else lam)
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, *a):
        raise AttributeError("LocalSystemWeights is immutable")

    def weight(self, u: int, v: int):
        """Transport weight along the oriented edge u -> v."""
        e = self.theta.value(u, v)
        if self.backend == "float":
            return complex(self.lam) ** complex(e)
        return self.lam ** e

    def one(self):
        if self.backend == "float":
            return 1.0 + 0j
        if self.backend == "nf":
            return NumberFieldElement.constant(1, self.lam.minpoly)
        return Fraction(1)


def twisted_coboundary(
    k: SimplicialComplex, theta: OneCocycle, lam, p: int
) -> Matrix:
    """Matrix of delta_p : C^p -> C^{p+1} for the twisted complex.

    Rows are (p+1)-simplices, columns are p-simplices.  Degrees outside
    0..dim-1 give empty matrices of the right shape.
    """
    weights = (
        lam if isinstance(lam, LocalSystemWeights)
        else LocalSystemWeights(k, theta, lam)
    )
    if p < 0 or p > k.dim:
        raise ValueError(f"degree {p} out of range for dim {k.dim}")
    rows = k.n_simplices(p + 1)
    cols = k.n_simplices(p)
    zero = Fraction(0) if weights.backend != "float" else 0j
    ent = [zero] * (rows * cols)
    if rows and cols:
        index = k._index[p]
        for r, tau in enumerate(k.simplices[p + 1]):
            # face 0 picks up the transport weight, the rest alternate signs
            face0 = tau[1:]
            ent[r * cols + index[face0]] = weights.weight(tau[0], tau[1])
            sign = -1
            for i in range(1, len(tau)):
                face = tau[:i] + tau[i + 1 :]
                c = index[face]
                ent[r * cols + c] = ent[r * cols + c] + sign
                sign = -sign
    return Matrix(rows, cols, ent)


@dataclass(frozen=True)
class BettiProfile:
    """Twisted cohomology dimensions with their computation context."""

    dims: tuple[int, ...]
    euler: int
    lam: object
    backend: str
    tolerance: float | None
    ill_conditioned: bool

    def to_json(self) -> dict:
        out = {
            "lambda": scalar_literal(self.lam),
            "backend": self.backend,
            "dims": list(self.dims),
            "euler": self.euler,
            "ill_conditioned": self.ill_conditioned,
        }
        out["tolerance"] = self.tolerance
        return out


def betti_profile(
    k: SimplicialComplex,
    theta: OneCocycle,
    lam,
    backend: str | None = None,
    tolerance: float | None = None,
) -> BettiProfile:
    """All twisted cohomology dimensions of (k, theta, lambda).

    backend "float" forces numeric rank on an exact lambda; exact backends
    run tolerance-free.  The ill_conditioned flag reports whether any
    singular value fell near the rank cut (float mode only).
    """
    if backend == "float" and scalar_backend(lam) == "exact":
        lam = float(lam)
    weights = LocalSystemWeights(k, theta, lam)
    if backend is not None and backend != weights.backend:
        raise BackendMismatchError(
            f"lambda {scalar_literal(lam)} has backend {weights.backend!r}, "
            f"requested {backend!r}"
        )
    is_float = weights.backend == "float"
    tol = (DEFAULT_FLOAT_TOLERANCE if tolerance is None else tolerance) if is_float else None
    ranks = []
    ill_any = False
    for p in range(k.dim + 1):
        delta = twisted_coboundary(k, theta, weights, p)
        r, ill = rank_with_flag(delta, tolerance=tol)
        ranks.append(r)
        ill_any = ill_any or ill
    dims = []
    for p in range(k.dim + 1):
        below = ranks[p - 1] if p > 0 else 0
        dims.append(k.n_simplices(p) - ranks[p] - below)
    euler = sum((-1) ** p * d for p, d in enumerate(dims))
    return BettiProfile(
        dims=tuple(dims),
        euler=euler,
        lam=weights.lam,
        backend=weights.backend,
        tolerance=tol,
        ill_conditioned=ill_any,
    )


def _invert_lambda(lam):
    if scalar_backend(lam) == "float":
        return 1.0 / complex(lam)
    return 1 / lam


def duality_check(
    k: SimplicialComplex,
    theta: OneCocycle,
    lam,
    tolerance: float | None = None,
) -> bool:
    """Whether dims(lambda)[p] == dims(1/lambda)[n-p] for all p.

    This is the Poincare duality pattern for closed orientable manifolds;
    on non-manifold complexes it can legitimately fail, so the result is
    reported rather than asserted.
    """
    n = k.dim
    a = betti_profile(k, theta, lam, tolerance=tolerance)
    b = betti_profile(k, theta, _invert_lambda(lam), tolerance=tolerance)
    return all(a.dims[p] == b.dims[n - p] for p in range(n + 1))


def kunneth_check(
    factor_a: BettiProfile, factor_b: BettiProfile, product: BettiProfile
) -> bool:
    """Whether the product profile is the convolution of the factors."""
    da, db, dp = factor_a.dims, factor_b.dims, product.dims
    if len(dp) != len(da) + len(db) - 1:
        return False
    conv = [0] * len(dp)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            conv[i + j] += x * y
    return tuple(conv) == dp
