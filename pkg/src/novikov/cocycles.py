"""Closed 1-cochains (cocycles) and 0-cochains on a simplicial complex.

A OneCocycle stores one value per increasing edge (u, v), u < v; reading
the reversed edge negates the value.  Exact mode keeps integer values so
that monodromy weights lambda**theta(e) stay inside the scalar field;
float mode allows real values.  Closedness means the signed sum over every
triangle vanishes.
"""

from __future__ import annotations

import math

import numpy as np

from .complexes import SimplicialComplex
from .errors import IncompleteCocycleError, InvalidLoopError

__all__ = [
    "OneCocycle",
    "ZeroCochain",
    "validate_closed",
    "holonomy",
    "is_exact",
    "gauge_transform",
    "coboundary_of",
    "zero_cocycle",
    "CLOSEDNESS_TOLERANCE",
    "EXACTNESS_RESIDUAL",
]

CLOSEDNESS_TOLERANCE = 1e-12
EXACTNESS_RESIDUAL = 1e-9


def _check_mode_value(value, mode):
    if mode == "exact":
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(
                "exact cocycles take integer edge values, got "
                f"{value!r} ({type(value).__name__})"
            )
        return value
    if mode == "float":
        v = float(value)
        if not math.isfinite(v):
            raise ValueError("non-finite cocycle value")
        return v
    raise ValueError(f"unknown cocycle mode {mode!r}")


class OneCocycle:
    """Integer or real valued 1-cochain indexed by increasing edges."""

    __slots__ = ("values", "mode")

    def __init__(self, values, mode="exact"):
        cleaned = {}
        for (u, v), val in dict(values).items():
            if not (isinstance(u, int) and isinstance(v, int) and u < v):
                raise ValueError(f"edge keys must be increasing pairs, got {(u, v)}")
            cleaned[(u, v)] = _check_mode_value(val, mode)
        object.__setattr__(self, "values", cleaned)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, *a):
        raise AttributeError("OneCocycle is immutable")

    def value(self, u: int, v: int):
        """Signed value on the oriented edge u -> v."""
        if u == v:
            raise InvalidLoopError("degenerate edge (u, u)")
        key = (u, v) if u < v else (v, u)
        try:
            raw = self.values[key]
        except KeyError:
            raise IncompleteCocycleError(f"no cocycle value on edge {key}") from None
        return raw if u < v else -raw

    def edges(self):
        return sorted(self.values)

    def max_abs(self):
        return max((abs(v) for v in self.values.values()), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, OneCocycle)
            and self.mode == other.mode
            and self.values == other.values
        )

    def __repr__(self):
        return f"OneCocycle({len(self.values)} edges, mode={self.mode})"


class ZeroCochain:
    """Vertex-indexed potential, the f in theta + delta f."""

    __slots__ = ("values", "mode")

    def __init__(self, values, mode="exact"):
        cleaned = {}
        for v, val in dict(values).items():
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex keys must be ints >= 0, got {v!r}")
            cleaned[v] = _check_mode_value(val, mode)
        object.__setattr__(self, "values", cleaned)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, *a):
        raise AttributeError("ZeroCochain is immutable")

    def value(self, v: int):
        return self.values.get(v, 0 if self.mode == "exact" else 0.0)

    def __repr__(self):
        return f"ZeroCochain({len(self.values)} vertices, mode={self.mode})"


def zero_cocycle(k: SimplicialComplex, mode="exact") -> OneCocycle:
    fill = 0 if mode == "exact" else 0.0
    return OneCocycle({e: fill for e in k.edges}, mode=mode)


def _require_cover(k: SimplicialComplex, theta: OneCocycle):
    missing = [e for e in k.edges if e not in theta.values]
    if missing:
        raise IncompleteCocycleError(
            f"cocycle misses {len(missing)} edges, first {missing[:3]}"
        )


def validate_closed(
    k: SimplicialComplex, theta: OneCocycle, tolerance: float = CLOSEDNESS_TOLERANCE
) -> bool:
    """True when the signed sum over every 2-simplex vanishes.

    Exact mode demands exact zero; float mode allows |residual| <= tolerance.
    Raises IncompleteCocycleError when edge values are missing.
    """
    _require_cover(k, theta)
    if k.dim < 2:
        return True
    for (a, b, c) in k.simplices[2]:
        residual = theta.value(a, b) + theta.value(b, c) - theta.value(a, c)
        if theta.mode == "exact":
            if residual != 0:
                return False
        elif abs(residual) > tolerance:
            return False
    return True


def holonomy(k: SimplicialComplex, theta: OneCocycle, loop):
    """Signed edge sum along a cyclic vertex sequence.

    The loop is cyclic: the closing step from the last vertex back to the
    first is implicit when they differ.  Repeated consecutive vertices
    contribute nothing; any other step must be an edge of the complex.
    """
    seq = list(loop)
    if not seq:
        raise InvalidLoopError("empty loop")
    total = 0 if theta.mode == "exact" else 0.0
    steps = list(zip(seq, seq[1:] + seq[:1]))
    for u, v in steps:
        if u == v:
            continue
        if not k.has_simplex((min(u, v), max(u, v))):
            raise InvalidLoopError(f"loop step {(u, v)} is not an edge")
        total += theta.value(u, v)
    return total


def is_exact(k: SimplicialComplex, theta: OneCocycle):
    """A potential f with delta f = theta, or None.

    Exact mode walks a spanning forest and verifies every edge exactly.
    Float mode solves the weighted least squares system and accepts when
    the residual stays below EXACTNESS_RESIDUAL.  The potential is pinned
    to 0 at the least vertex of each connected component.
    """
    _require_cover(k, theta)
    n = k.vertex_count
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for (u, v) in k.edges:
        adj[u].append(v)
        adj[v].append(u)

    if theta.mode == "exact":
        f: dict[int, int] = {}
        for root in range(n):
            if root in f:
                continue
            f[root] = 0
            stack = [root]
            while stack:
                u = stack.pop()
                for v in adj[u]:
                    if v not in f:
                        f[v] = f[u] + theta.value(u, v)
                        stack.append(v)
        for (u, v) in k.edges:
            if f[v] - f[u] != theta.value(u, v):
                return None
        return ZeroCochain(f, mode="exact")

    edges = list(k.edges)
    if edges:
        a = np.zeros((len(edges), n))
        b = np.zeros(len(edges))
        for i, (u, v) in enumerate(edges):
            a[i, v] = 1.0
            a[i, u] = -1.0
            b[i] = theta.value(u, v)
        sol, *_ = np.linalg.lstsq(a, b, rcond=None)
        scale = max(1.0, float(np.max(np.abs(b))))
        if float(np.max(np.abs(a @ sol - b))) > EXACTNESS_RESIDUAL * scale:
            return None
    else:
        sol = np.zeros(n)
    # pin each component at its least vertex
    comp: dict[int, int] = {}
    for root in range(n):
        if root in comp:
            continue
        members = [root]
        comp[root] = root
        stack = [root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in comp:
                    comp[v] = root
                    members.append(v)
                    stack.append(v)
        offset = sol[root]
        for v in members:
            sol[v] -= offset
    return ZeroCochain({v: float(sol[v]) for v in range(n)}, mode="float")


def coboundary_of(f: ZeroCochain, k: SimplicialComplex) -> OneCocycle:
    """delta f as a OneCocycle on the edges of k."""
    vals = {(u, v): f.value(v) - f.value(u) for (u, v) in k.edges}
    return OneCocycle(vals, mode=f.mode)


def gauge_transform(theta: OneCocycle, f: ZeroCochain) -> OneCocycle:
    """theta + delta f on the edge set of theta.

    Modes must match; the result stays closed and keeps every loop
    holonomy because delta f contributes a telescoping sum.
    """
    if theta.mode != f.mode:
        raise ValueError(f"mode mismatch: cocycle {theta.mode}, potential {f.mode}")
    vals = {
        (u, v): val + f.value(v) - f.value(u)
        for (u, v), val in theta.values.items()
    }
    return OneCocycle(vals, mode=theta.mode)
