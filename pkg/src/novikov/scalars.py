"""Scalar backends and exact/float linear algebra.

Three scalar backends are supported and deliberately kept simple:

* ``exact``  -- arbitrary-precision rationals (``fractions.Fraction``),
* ``nf``     -- elements of a number field Q[x]/(m) for a monic irreducible m,
* ``float``  -- complex double precision.

A Matrix carries one backend; mixing incompatible scalars raises
BackendMismatchError.  Rank is computed exactly (division-controlled
elimination, no tolerances) for the exact backends and through singular
values for the float backend.  All exact routines are deterministic: pivot
order depends only on the matrix, never on hashing or timing.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

import numpy as np

from .errors import BackendMismatchError, ReducibilityError

__all__ = [
    "MinimalPolynomial",
    "NumberFieldElement",
    "nf_inverse",
    "Matrix",
    "rank",
    "kernel_dim",
    "matrix_rref",
    "kernel_basis",
    "solve_linear",
    "parse_scalar",
    "scalar_literal",
    "DEFAULT_FLOAT_TOLERANCE",
]

DEFAULT_FLOAT_TOLERANCE = 1e-10

# ---------------------------------------------------------------------------
# polynomial helpers (dense, ascending coefficients, Fraction entries)


def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return _ptrim(out)


def _pneg(a):
    return [-v for v in a]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j, v in enumerate(b):
            out[i + j] += u * v
    return _ptrim(out)


def _pdivmod(a, b):
    """Quotient and remainder in Q[x]; b must be nonzero."""
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        coef = a[-1] / lead
        q[shift] = coef
        for i, v in enumerate(b):
            a[shift + i] -= coef * v
        a = _ptrim(a)
    return _ptrim(q), a


def _pxgcd(a, b):
    """Extended gcd in Q[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = _ptrim(a), _ptrim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, _pneg(_pmul(q, s1)))
        t0, t1 = t1, _padd(t0, _pneg(_pmul(q, t1)))
    return r0, s0, t0


_TERM_RE = re.compile(
    r"^(?P<coef>[+-]?\d+(?:/\d+)?)?"
    r"(?:\*?(?P<var>x)(?:(?:\^|\*\*)(?P<exp>\d+))?)?$"
)


def parse_polynomial(text: str) -> tuple[Fraction, ...]:
    """Parse strings like ``x^2-3*x+1`` into ascending coefficients."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial string")
    # split keeping signs: insert separators before + and - that start a term
    pieces = re.findall(r"[+-]?[^+-]+", compact)
    coeffs: dict[int, Fraction] = {}
    for piece in pieces:
        sign = Fraction(1)
        body = piece
        if body[0] in "+-":
            if body[0] == "-":
                sign = Fraction(-1)
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial term {piece!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
    deg = max(coeffs)
    return tuple(coeffs.get(i, Fraction(0)) for i in range(deg + 1))


def format_polynomial(coeffs) -> str:
    """Inverse of parse_polynomial, canonical descending form."""
    terms = []
    for exp in range(len(coeffs) - 1, -1, -1):
        c = coeffs[exp]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            xpow = "x" if exp == 1 else f"x^{exp}"
            body = xpow if mag == 1 else f"{mag}*{xpow}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += sign + body
    return out


class MinimalPolynomial:
    """A monic polynomial over Q presented as the modulus of a number field.

    Irreducibility is not verified up front (no factoring here); it is
    certified lazily, in the sense that any inversion that stumbles on a
    nontrivial factor raises ReducibilityError carrying that factor.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(Fraction(c) for c in coeffs)
        cs = tuple(_ptrim(list(cs)))
        if len(cs) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if cs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.coeffs = cs

    @classmethod
    def parse(cls, text: str) -> "MinimalPolynomial":
        return cls(parse_polynomial(text))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, MinimalPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return format_polynomial(self.coeffs)

    def __repr__(self):
        return f"MinimalPolynomial({self})"


class NumberFieldElement:
    """An element of Q[x]/(m), stored as coefficients of degree < deg(m).

    Supports mixed arithmetic with ints and Fractions (lifted to constants).
    Division uses the extended Euclidean algorithm; dividing by a zero
    divisor of a reducible modulus raises ReducibilityError instead of
    returning garbage.
    """

    __slots__ = ("coeffs", "minpoly")

    def __init__(self, coeffs, minpoly: MinimalPolynomial):
        if not isinstance(minpoly, MinimalPolynomial):
            minpoly = MinimalPolynomial(minpoly)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) >= len(minpoly.coeffs):
            _, cs = _pdivmod(cs, list(minpoly.coeffs))
        cs = cs + [Fraction(0)] * (minpoly.degree - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "minpoly", minpoly)

    def __setattr__(self, *a):  # immutable by construction
        raise AttributeError("NumberFieldElement is immutable")

    @classmethod
    def generator(cls, minpoly: MinimalPolynomial) -> "NumberFieldElement":
        return cls((0, 1), minpoly)

    @classmethod
    def constant(cls, value, minpoly: MinimalPolynomial) -> "NumberFieldElement":
        return cls((Fraction(value),), minpoly)

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.minpoly != self.minpoly:
                raise BackendMismatchError(
                    "number field elements with different minimal polynomials: "
                    f"{self.minpoly} vs {other.minpoly}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement.constant(other, self.minpoly)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(_padd(self.coeffs, o.coeffs), self.minpoly)

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(_pneg(self.coeffs), self.minpoly)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(_pmul(self.coeffs, o.coeffs), self.minpoly)

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        a = _ptrim(list(self.coeffs))
        if not a:
            raise ZeroDivisionError("inverse of zero number field element")
        g, s, _ = _pxgcd(a, list(self.minpoly.coeffs))
        if len(g) - 1 > 0:
            # gcd of degree >= 1 certifies the modulus factors
            lead = g[-1]
            factor = tuple(c / lead for c in g)
            raise ReducibilityError(
                f"modulus {self.minpoly} is reducible; found factor "
                f"{format_polynomial(factor)}",
                factor=factor,
            )
        ginv = 1 / g[0]
        return NumberFieldElement([c * ginv for c in s], self.minpoly)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        e = abs(n)
        out = NumberFieldElement.constant(1, self.minpoly)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NumberFieldElement.constant(other, self.minpoly)
        if not isinstance(other, NumberFieldElement):
            return NotImplemented
        return self.minpoly == other.minpoly and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.minpoly))

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    def __str__(self):
        return format_polynomial(self.coeffs)

    def __repr__(self):
        return f"<{self} mod {self.minpoly}>"


def nf_inverse(a: NumberFieldElement) -> NumberFieldElement:
    """Field inverse in Q[x]/(m) via extended Euclid."""
    return a.inverse()


# ---------------------------------------------------------------------------
# matrices

_EXACT = "exact"
_NF = "nf"
_FLOAT = "float"


def _classify(value):
    if isinstance(value, NumberFieldElement):
        return _NF
    if isinstance(value, bool):
        raise ValueError("boolean matrix entries are ambiguous; use 0/1")
    if isinstance(value, (int, Fraction)):
        return _EXACT
    if isinstance(value, (float, complex)):
        return _FLOAT
    raise ValueError(f"unsupported scalar type {type(value).__name__}")


class Matrix:
    """Dense matrix over one scalar backend.

    Entries are stored row-major in a flat tuple.  Construction coerces
    ints/Fractions into the strongest backend present (number field wins
    over rationals, float wins over rationals, number field + float is an
    error) and rejects non-finite floats.
    """

    __slots__ = ("nrows", "ncols", "entries", "backend", "minpoly")

    def __init__(self, nrows, ncols, entries, backend=None):
        entries = list(entries)
        if len(entries) != nrows * ncols:
            raise ValueError(
                f"matrix {nrows}x{ncols} needs {nrows * ncols} entries, "
                f"got {len(entries)}"
            )
        kinds = set()
        minpoly = None
        for v in entries:
            kind = _classify(v)
            kinds.add(kind)
            if kind == _NF:
                if minpoly is None:
                    minpoly = v.minpoly
                elif v.minpoly != minpoly:
                    raise BackendMismatchError(
                        "mixed minimal polynomials in one matrix"
                    )
        if _NF in kinds and _FLOAT in kinds:
            raise BackendMismatchError(
                "number field and float entries cannot share a matrix"
            )
        if _NF in kinds:
            inferred = _NF
        elif _FLOAT in kinds:
            inferred = _FLOAT
        else:
            inferred = _EXACT
        if backend is not None and backend != inferred:
            if backend == _FLOAT and inferred == _EXACT:
                inferred = _FLOAT
            else:
                raise BackendMismatchError(
                    f"requested backend {backend!r} but entries are {inferred!r}"
                )
        if inferred == _NF:
            entries = [
                v if isinstance(v, NumberFieldElement)
                else NumberFieldElement.constant(v, minpoly)
                for v in entries
            ]
        elif inferred == _FLOAT:
            coerced = []
            for v in entries:
                c = complex(v) if not isinstance(v, Fraction) else complex(float(v))
                if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                    raise ValueError("non-finite float matrix entry")
                coerced.append(c)
            entries = coerced
        else:
            entries = [v if isinstance(v, Fraction) else Fraction(v) for v in entries]
        self.nrows = nrows
        self.ncols = ncols
        self.entries = tuple(entries)
        self.backend = inferred
        self.minpoly = minpoly

    @classmethod
    def from_rows(cls, rows, backend=None) -> "Matrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = [v for r in rows for v in r]
        return cls(nrows, ncols, flat, backend=backend)

    @classmethod
    def zeros(cls, nrows, ncols) -> "Matrix":
        return cls(nrows, ncols, [Fraction(0)] * (nrows * ncols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        return self.entries[i * self.ncols + j]

    def row(self, i):
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def rows(self):
        return [list(self.row(i)) for i in range(self.nrows)]

    def transpose(self) -> "Matrix":
        ent = [self.entry(i, j) for j in range(self.ncols) for i in range(self.nrows)]
        return Matrix(self.ncols, self.nrows, ent)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        # sparse-aware triple loop; fine at the sizes this package meets
        out = [0] * (self.nrows * other.ncols)
        for i in range(self.nrows):
            base = i * self.ncols
            for k in range(self.ncols):
                a = self.entries[base + k]
                if a == 0:
                    continue
                obase = k * other.ncols
                robase = i * other.ncols
                for j in range(other.ncols):
                    b = other.entries[obase + j]
                    if b == 0:
                        continue
                    out[robase + j] = out[robase + j] + a * b
        return Matrix(self.nrows, other.ncols, out)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix difference")
        ent = [a - b for a, b in zip(self.entries, other.entries)]
        return Matrix(self.nrows, self.ncols, ent)

    def scale(self, s) -> "Matrix":
        return Matrix(self.nrows, self.ncols, [s * v for v in self.entries])

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def to_numpy(self) -> np.ndarray:
        if self.backend == _NF:
            raise BackendMismatchError(
                "number field matrices have no canonical float embedding"
            )
        if self.backend == _EXACT:
            data = [complex(float(v)) for v in self.entries]
        else:
            data = list(self.entries)
        return np.array(data, dtype=complex).reshape(self.nrows, self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, backend={self.backend})"


# ---------------------------------------------------------------------------
# rank


def _exact_rank_columns(columns) -> int:
    """Rank by left-to-right column reduction with lowest-row pivots.

    Each fixed pivot column is normalized so its pivot entry is 1; new
    columns are reduced against existing pivots until they expose a fresh
    pivot row or vanish.  Entirely exact and deterministic.
    """
    pivots: dict[int, dict] = {}
    rnk = 0
    for col in columns:
        col = {r: v for r, v in col.items() if v != 0}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                inv = 1 / col[low]
                pivots[low] = {r: v * inv for r, v in col.items()}
                rnk += 1
                break
            factor = col.pop(low)
            for r, v in piv.items():
                if r == low:
                    continue
                nv = col.get(r, 0) - factor * v
                if nv == 0:
                    col.pop(r, None)
                else:
                    col[r] = nv
    return rnk


def _matrix_columns_sparse(m: Matrix, transposed: bool):
    if transposed:
        for i in range(m.nrows):
            row = m.row(i)
            yield {j: v for j, v in enumerate(row) if v != 0}
    else:
        for j in range(m.ncols):
            col = {}
            for i in range(m.nrows):
                v = m.entries[i * m.ncols + j]
                if v != 0:
                    col[i] = v
            yield col


def _float_rank(a: np.ndarray, tolerance: float):
    """(rank, ill_conditioned) from singular values.

    Rank counts singular values above tolerance * sigma_max; the flag trips
    when any singular value sits within a factor of ten of that cut, i.e.
    the answer would move under a modest tolerance change.
    """
    if a.size == 0:
        return 0, False
    s = np.linalg.svd(a, compute_uv=False)
    if len(s) == 0 or s[0] == 0.0:
        return 0, False
    cut = tolerance * float(s[0])
    rnk = int(np.count_nonzero(s > cut))
    ill = bool(np.any((s > cut / 10.0) & (s < cut * 10.0)))
    return rnk, ill


def rank(m: Matrix, mode: str | None = None, tolerance: float | None = None) -> int:
    """Rank of a matrix in the requested mode.

    mode None picks the matrix's own backend.  Exact mode on float entries
    is refused (no tolerance-free pivot test exists there); float mode on
    exact entries converts and uses singular values.
    """
    r, _ = rank_with_flag(m, mode=mode, tolerance=tolerance)
    return r


def rank_with_flag(
    m: Matrix, mode: str | None = None, tolerance: float | None = None
):
    """Like rank(), returning (rank, ill_conditioned).

    The flag is always False in exact mode.
    """
    if mode is None:
        mode = _FLOAT if m.backend == _FLOAT else _EXACT
    if mode == _EXACT or mode == _NF:
        if m.backend == _FLOAT:
            raise BackendMismatchError("exact rank requires exact entries")
        if m.nrows == 0 or m.ncols == 0:
            return 0, False
        transposed = m.nrows < m.ncols
        return _exact_rank_columns(_matrix_columns_sparse(m, transposed)), False
    if mode == _FLOAT:
        tol = DEFAULT_FLOAT_TOLERANCE if tolerance is None else tolerance
        if not tol > 0:
            raise ValueError("float rank needs tolerance > 0")
        return _float_rank(m.to_numpy(), tol)
    raise ValueError(f"unknown rank mode {mode!r}")


def kernel_dim(
    m: Matrix, mode: str | None = None, tolerance: float | None = None
) -> int:
    """dim ker = ncols - rank."""
    return m.ncols - rank(m, mode=mode, tolerance=tolerance)


# ---------------------------------------------------------------------------
# dense exact elimination utilities (used for cohomology bases)


def matrix_rref(m: Matrix):
    """Reduced row echelon form over the exact backends.

    Returns (rows, pivot_columns).  Pivoting scans columns left to right and
    takes the first row with an exact nonzero entry.
    """
    if m.backend == _FLOAT:
        raise BackendMismatchError("rref requires exact entries")
    rows = m.rows()
    pivots = []
    rpos = 0
    for col in range(m.ncols):
        piv = None
        for r in range(rpos, m.nrows):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rpos], rows[piv] = rows[piv], rows[rpos]
        inv = 1 / rows[rpos][col]
        rows[rpos] = [v * inv for v in rows[rpos]]
        for r in range(m.nrows):
            if r == rpos:
                continue
            f = rows[r][col]
            if f == 0:
                continue
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[rpos])]
        pivots.append(col)
        rpos += 1
        if rpos == m.nrows:
            break
    return rows, pivots


def _field_constant(m: Matrix, value):
    if m.backend == _NF:
        return NumberFieldElement.constant(value, m.minpoly)
    return Fraction(value)


def kernel_basis(m: Matrix):
    """Basis of the right null space, one vector per free column.

    Deterministic: free columns in increasing order, each basis vector has
    a 1 in its free slot.
    """
    rows, pivots = matrix_rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [_field_constant(m, 0)] * m.ncols
        vec[fc] = _field_constant(m, 1)
        for rix, pc in enumerate(pivots):
            vec[pc] = -rows[rix][fc]
        basis.append(vec)
    return basis


def solve_linear(m: Matrix, rhs):
    """One exact solution of m @ x = rhs, or None if inconsistent."""
    if m.backend == _FLOAT:
        raise BackendMismatchError("solve_linear requires exact entries")
    if len(rhs) != m.nrows:
        raise ValueError("rhs length mismatch")
    if m.nrows == 0:
        return [_field_constant(m, 0)] * m.ncols
    aug = Matrix.from_rows([list(m.row(i)) + [rhs[i]] for i in range(m.nrows)])
    rows, pivots = matrix_rref(aug)
    if m.ncols in pivots:
        return None
    x = [_field_constant(aug, 0)] * m.ncols
    for rix, pc in enumerate(pivots):
        x[pc] = rows[rix][m.ncols]
    return x


# ---------------------------------------------------------------------------
# scalar literals


def parse_scalar(text: str, backend: str | None = None):
    """Parse a scalar literal.

    Accepted forms: integers "2", rationals "5/7", decimals "2.5"/"1e-3",
    complex "1+2j", and number field elements "nf:<minpoly>:<element>"
    (e.g. "nf:x^2-3*x+1:x").  The optional backend forces the result kind.
    """
    text = text.strip()
    if text.startswith("nf:"):
        parts = text.split(":", 2)
        if len(parts) != 3:
            raise ValueError("number field literal must be nf:<minpoly>:<element>")
        minpoly = MinimalPolynomial.parse(parts[1])
        elem = NumberFieldElement(parse_polynomial(parts[2]), minpoly)
        if backend not in (None, _NF):
            raise BackendMismatchError(f"nf literal with backend {backend!r}")
        return elem
    value: object
    if re.fullmatch(r"[+-]?\d+(?:/\d+)?", text):
        value = Fraction(text)
    else:
        try:
            value = complex(text) if "j" in text else float(text)
        except ValueError as exc:
            raise ValueError(f"cannot parse scalar literal {text!r}") from exc
    if backend == _FLOAT and isinstance(value, Fraction):
        return float(value)
    if backend in (_EXACT, None) and isinstance(value, Fraction):
        return value
    if backend == _EXACT and not isinstance(value, Fraction):
        raise BackendMismatchError(f"literal {text!r} is not exact")
    return value


def scalar_literal(value) -> str:
    """Canonical string form of a scalar, inverse-ish of parse_scalar."""
    if isinstance(value, NumberFieldElement):
        return f"nf:{value.minpoly}:{format_polynomial(value.coeffs)}"
    if isinstance(value, (int, Fraction)):
        f = Fraction(value)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    if isinstance(value, complex):
        if value.imag == 0:
            return repr(value.real)
        return repr(value)
    return repr(float(value))


def scalar_backend(value) -> str:
    """Backend name for a scalar value."""
    return _classify(value)
