"""Weighted Hodge theory for the twisted coboundary, on the float backend.

A positive diagonal weight per simplex defines the inner product
<a, b>_p = sum_s w_p(s) conj(a_s) b_s.  The adjoint of the twisted
coboundary is then W_p^{-1} delta_p^H W_{p+1} and the Laplacian is

    Lap_p = adjoint(delta_p) delta_p + delta_{p-1} adjoint(delta_{p-1}).

Its kernel has the dimension of degree-p twisted cohomology, which gives a
spectral route to the same numbers the rank pipeline produces; the two are
cross-checked in the test suite.  Everything here is numerical: exact
backends have no square roots or conjugation, so requests are coerced to
floats up front.

Harmonic cutoffs act on the singular-value scale (square roots of Laplacian
eigenvalues) relative to the largest one.  Eigenvalue-scale cutoffs look
natural but misclassify near-kernels: a coboundary within eps of a singular
matrix has a Laplacian eigenvalue of order eps^2, which slips under any
linear cut long before the matrix is actually singular.  The user threshold
is floored at the eigensolver noise level sqrt(n * machine_eps) so that true
zeros, which come back from the solver perturbed by about n * eps * eig_max,
are never dropped by an overly tight request.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complexes import SimplicialComplex
from .cocycles import OneCocycle
from .errors import NormalizationError, NumericalError
from .twisted import twisted_coboundary

__all__ = [
    "DEFAULT_HARMONIC_THRESHOLD",
    "InnerProduct",
    "adjoint",
    "laplacian",
    "laplacian_spectrum",
    "harmonic_dim",
    "spectral_gap",
    "HodgeParts",
    "hodge_decompose",
    "harmonic_representative",
    "volume",
    "novikov_normalize",
]

DEFAULT_HARMONIC_THRESHOLD = 1e-8


class InnerProduct:
    """Positive diagonal weights, one vector per simplex degree."""

    __slots__ = ("complex", "_vectors")

    def __init__(self, k: SimplicialComplex, weights=None):
        vectors = []
        for p in range(k.dim + 1):
            n = k.n_simplices(p)
            given = None if weights is None else weights.get(p)
            if given is None:
                vec = np.ones(n)
            else:
                vec = np.asarray([float(w) for w in given])
                if vec.shape != (n,):
                    raise ValueError(
                        f"degree {p} weight vector has length {vec.size}, "
                        f"need {n}"
                    )
                if not np.all(vec > 0):
                    raise ValueError(f"degree {p} weights must be positive")
            vectors.append(vec)
        object.__setattr__(self, "complex", k)
        object.__setattr__(self, "_vectors", tuple(vectors))

    def __setattr__(self, *a):
        raise AttributeError("InnerProduct is immutable")

    def vector(self, p: int) -> np.ndarray:
        if 0 <= p <= self.complex.dim:
            return self._vectors[p]
        return np.ones(0)

    def pairing(self, p: int, a, b) -> complex:
        return complex(np.vdot(np.asarray(a), self.vector(p) * np.asarray(b)))


def _resolve(k, weights) -> InnerProduct:
    if weights is None:
        return InnerProduct(k)
    if isinstance(weights, InnerProduct):
        return weights
    return InnerProduct(k, weights)


def _delta(k, theta, lam, p: int) -> np.ndarray:
    lam = complex(lam)
    if p < 0 or p > k.dim:
        return np.zeros((0, k.n_simplices(p)))
    return twisted_coboundary(k, theta, lam, p).to_numpy()


def adjoint(k: SimplicialComplex, theta: OneCocycle, lam, p: int, weights=None) -> np.ndarray:
    """Matrix of the weighted adjoint, mapping degree p+1 back to degree p.

    Scaling every weight by one positive constant changes nothing: the
    constant cancels between the inverse on the left and the plain weight
    on the right.
    """
    w = _resolve(k, weights)
    d = _delta(k, theta, lam, p)
    return (d.conj().T * w.vector(p + 1)) / w.vector(p)[:, None]


def laplacian(k: SimplicialComplex, theta: OneCocycle, lam, p: int, weights=None) -> np.ndarray:
    w = _resolve(k, weights)
    up = adjoint(k, theta, lam, p, w) @ _delta(k, theta, lam, p)
    if p >= 1:
        down = _delta(k, theta, lam, p - 1) @ adjoint(k, theta, lam, p - 1, w)
    else:
        down = np.zeros_like(up)
    return up + down


def _symmetrized(k, theta, lam, p, w: InnerProduct) -> np.ndarray:
    # W^{1/2} Lap W^{-1/2} is Hermitian PSD with the same spectrum
    root = np.sqrt(w.vector(p))
    lap = laplacian(k, theta, lam, p, w)
    sym = (root[:, None] * lap) / root
    return (sym + sym.conj().T) / 2


def laplacian_spectrum(
    k: SimplicialComplex, theta: OneCocycle, lam, p: int, weights=None
) -> np.ndarray:
    """Ascending real eigenvalues of the degree-p twisted Laplacian."""
    w = _resolve(k, weights)
    n = k.n_simplices(p)
    if n == 0:
        return np.zeros(0)
    try:
        return np.linalg.eigvalsh(_symmetrized(k, theta, lam, p, w))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue solve failed in degree {p}: {exc}") from exc


def _singular_values(spectrum: np.ndarray) -> np.ndarray:
    return np.sqrt(np.clip(spectrum, 0.0, None))


def _harmonic_cut(sing: np.ndarray, threshold: float) -> float:
    # eigvalsh perturbs a true zero eigenvalue by roughly n * eps * eig_max,
    # which is sqrt(n * eps) * sigma_max after the square root, so the user
    # threshold is floored at that machine-noise level
    floor = math.sqrt(sing.size * np.finfo(float).eps)
    return max(threshold, floor) * sing.max()


def harmonic_dim(
    k: SimplicialComplex,
    theta: OneCocycle,
    lam,
    p: int,
    weights=None,
    threshold: float = DEFAULT_HARMONIC_THRESHOLD,
) -> int:
    """Dimension of the harmonic space, counted on the singular-value scale."""
    sing = _singular_values(laplacian_spectrum(k, theta, lam, p, weights))
    if sing.size == 0:
        return 0
    if sing.max() == 0:
        return sing.size
    return int(np.count_nonzero(sing <= _harmonic_cut(sing, threshold)))


def spectral_gap(
    k: SimplicialComplex,
    theta: OneCocycle,
    lam,
    p: int,
    weights=None,
    threshold: float = DEFAULT_HARMONIC_THRESHOLD,
):
    """Smallest nonzero Laplacian eigenvalue in degree p, None if all zero."""
    spectrum = laplacian_spectrum(k, theta, lam, p, weights)
    sing = _singular_values(spectrum)
    if sing.size == 0 or sing.max() == 0:
        return None
    above = spectrum[sing > _harmonic_cut(sing, threshold)]
    return float(above.min()) if above.size else None


@dataclass(frozen=True)
class HodgeParts:
    """Weighted-orthogonal split of a cochain into its three components."""

    harmonic: np.ndarray
    exact: np.ndarray
    coexact: np.ndarray
    residual: float

    def recombined(self) -> np.ndarray:
        return self.harmonic + self.exact + self.coexact


def _weighted_projection(target, basis_matrix, w_vec):
    """Project target onto the column span in the weighted metric."""
    if basis_matrix.shape[1] == 0:
        return np.zeros_like(target)
    root = np.sqrt(w_vec)
    coeff, *_ = np.linalg.lstsq(
        basis_matrix * root[:, None], target * root, rcond=None
    )
    return basis_matrix @ coeff


def hodge_decompose(
    k: SimplicialComplex,
    theta: OneCocycle,
    lam,
    p: int,
    cochain,
    weights=None,
) -> HodgeParts:
    """Split a degree-p cochain into harmonic + image of delta + image of
    the adjoint.

    The two image subspaces are automatically weighted-orthogonal (the
    pairing between them is <delta delta x, y> = 0), so each projection can
    be done independently and the harmonic part is the remainder.
    """
    w = _resolve(k, weights)
    alpha = np.asarray(cochain, dtype=complex)
    n = k.n_simplices(p)
    if alpha.shape != (n,):
        raise ValueError(f"cochain has shape {alpha.shape}, need ({n},)")
    wv = w.vector(p)
    exact = _weighted_projection(
        alpha, _delta(k, theta, lam, p - 1) if p >= 1 else np.zeros((n, 0)), wv
    )
    coexact = _weighted_projection(alpha, adjoint(k, theta, lam, p, w), wv)
    harmonic = alpha - exact - coexact
    scale = max(float(np.linalg.norm(alpha)), 1.0)
    # the harmonic remainder must be killed by both operators
    r1 = np.linalg.norm(_delta(k, theta, lam, p) @ harmonic)
    r2 = np.linalg.norm(adjoint(k, theta, lam, p - 1, w) @ harmonic) if p >= 1 else 0.0
    residual = float(max(r1, r2) / scale)
    return HodgeParts(harmonic=harmonic, exact=exact, coexact=coexact, residual=residual)


def harmonic_representative(
    k: SimplicialComplex, theta: OneCocycle, weights=None
) -> OneCocycle:
    """Weighted-norm minimizer theta + delta f over the gauge orbit.

    Untwisted setting: the minimizer is the orthogonal projection of theta
    away from the coboundary image, hence weighted-coexact, and it keeps
    every holonomy of theta.  Applying the projection twice is idempotent.
    """
    w = _resolve(k, weights)
    if k.dim < 1:
        raise ValueError("need 1-simplices for a 1-cochain representative")
    edges = k.edges
    vec = np.asarray([float(theta.value(u, v)) for (u, v) in edges])
    d0 = k.boundary_matrix(1).transpose().to_numpy().real
    drop = _weighted_projection(vec, d0, w.vector(1))
    rep = vec - drop
    return OneCocycle(
        {e: float(rep[i]) for i, e in enumerate(edges)}, mode="float"
    )


def _is_pure(k: SimplicialComplex) -> bool:
    return all(len(s) - 1 == k.dim for s in k.maximal_simplices())


def volume(k: SimplicialComplex, weights=None):
    """Total weight and the convention that produced it.

    A smooth volume has no canonical discrete stand-in; this takes the
    weight of the top-dimensional simplices when the complex is pure and
    falls back to total vertex weight otherwise.  The convention string is
    part of the return value so reports can carry it.
    """
    w = _resolve(k, weights)
    if k.dim >= 1 and _is_pure(k):
        return float(w.vector(k.dim).sum()), "top-simplex weight"
    return float(w.vector(0).sum()), "vertex weight"


def novikov_normalize(k: SimplicialComplex, theta_h: OneCocycle, weights=None) -> float:
    """Scale t with ||t theta_h||^2 = volume in the weighted metric.

    Doubling theta_h halves t; a representative whose weighted square norm
    already equals the volume gets t = 1.
    """
    w = _resolve(k, weights)
    vec = np.asarray([float(theta_h.value(u, v)) for (u, v) in k.edges])
    norm_sq = float(np.dot(w.vector(1), vec * vec))
    if norm_sq == 0:
        raise NormalizationError("cannot normalize the zero cocycle")
    vol, _ = volume(k, w)
    return float(np.sqrt(vol / norm_sq))
