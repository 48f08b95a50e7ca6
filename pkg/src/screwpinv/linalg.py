"""Small dense linear algebra over exact rationals or float64.

A matrix is in rational mode when every entry is a ``Fraction`` and in float
mode when every entry is a ``float``.  Mixing the two promotes to float, so a
whole computation stays in one mode.  Everything here is sized for the 6x6
problems of screw theory; there is no attempt at blocking or sparsity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import IdenticallyZero, Singular

Scalar = Union[Fraction, float]

# zero threshold in float mode: relative to the largest entry, floored
TAU = 1e-10
ATOL = 1e-12
# relative threshold for float polynomial coefficients produced by interpolation
PENCIL_TOL = 1e-9

_FLOATS = (float, np.floating)


def is_floaty(x) -> bool:
    return isinstance(x, _FLOATS)


def to_scalar(x, float_mode: bool) -> Scalar:
    if float_mode:
        return float(x)
    if type(x) is Fraction:
        return x
    if is_floaty(x):
        raise TypeError(f"float {x!r} in a rational-mode computation")
    return Fraction(x)


def fmt_scalar(x: Scalar) -> str:
    """Canonical text form: ``"3/4"``, ``"-2"`` or the shortest float repr."""
    if isinstance(x, Fraction):
        return str(x)
    return repr(float(x))


class Mat:
    """Immutable dense matrix.

    >>> Mat([[1, 2], [3, 4]]) @ Mat.identity(2) == Mat([[1, 2], [3, 4]])
    True
    """

    __slots__ = ("_rows", "shape", "is_float")

    def __init__(self, rows: Iterable[Iterable], shape: tuple[int, int] | None = None,
                 float_mode: bool | None = None):
        data = [list(r) for r in rows]
        if shape is None:
            if not data:
                raise ValueError("an empty matrix needs an explicit shape")
            shape = (len(data), len(data[0]))
        n, m = shape
        if len(data) != n or any(len(r) != m for r in data):
            raise ValueError(f"ragged rows for shape {shape}")
        if float_mode is None:
            float_mode = any(is_floaty(x) for r in data for x in r)
        self._rows = tuple(tuple(to_scalar(x, float_mode) for x in r) for r in data)
        self.shape = (n, m)
        self.is_float = bool(float_mode)

    @classmethod
    def _raw(cls, rows, shape, is_float) -> "Mat":
        # entries already have the right type
        obj = object.__new__(cls)
        obj._rows = tuple(tuple(r) for r in rows)
        obj.shape = shape
        obj.is_float = is_float
        return obj

    # construction helpers

    @classmethod
    def zeros(cls, n: int, m: int, float_mode: bool = False) -> "Mat":
        z = 0.0 if float_mode else Fraction(0)
        return cls._raw([[z] * m for _ in range(n)], (n, m), float_mode)

    @classmethod
    def identity(cls, n: int, float_mode: bool = False) -> "Mat":
        z, o = (0.0, 1.0) if float_mode else (Fraction(0), Fraction(1))
        return cls._raw([[o if i == j else z for j in range(n)] for i in range(n)],
                        (n, n), float_mode)

    @classmethod
    def diag(cls, values: Sequence) -> "Mat":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)],
                   (n, n))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Mat":
        columns = [list(c) for c in columns]
        if not columns:
            if nrows is None:
                raise ValueError("need nrows for a matrix with no columns")
            return cls([[] for _ in range(nrows)], (nrows, 0))
        n = len(columns[0])
        return cls([[c[i] for c in columns] for i in range(n)], (n, len(columns)))

    @classmethod
    def column(cls, values: Sequence) -> "Mat":
        return cls([[v] for v in values], (len(values), 1))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Mat"]]) -> "Mat":
        rows = []
        for brow in blocks:
            n = brow[0].rows
            for i in range(n):
                rows.append([x for b in brow for x in b._rows[i]])
        return cls(rows, (len(rows), sum(b.cols for b in blocks[0])))

    # shape and access

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    @property
    def entries(self) -> tuple:
        return tuple(x for r in self._rows for x in r)

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return Mat._raw([[self._rows[i][j] for j in cols] for i in rows],
                        (len(rows), len(cols)), self.is_float)

    def select_columns(self, cols: Sequence[int]) -> "Mat":
        return self.submatrix(range(self.rows), cols)

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return Mat([a + b for a, b in zip(self._rows, other._rows)],
                   (self.rows, self.cols + other.cols))

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return Mat(self._rows + other._rows, (self.rows + other.rows, self.cols))

    @property
    def T(self) -> "Mat":
        n, m = self.shape
        return Mat._raw(list(zip(*self._rows)) if n and m else [[] for _ in range(m)],
                        (m, n), self.is_float)

    # arithmetic

    def _zero(self) -> Scalar:
        return 0.0 if self.is_float else Fraction(0)

    def __matmul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        fl = self.is_float or other.is_float
        if not fl:
            return self._exact_matmul(other)
        zero = 0.0
        ocols = list(zip(*other._rows)) if other.rows and other.cols else [() for _ in range(other.cols)]
        out = [[sum((a * b for a, b in zip(r, c) if a and b), zero) for c in ocols]
               for r in self._rows]
        if fl != self.is_float or fl != other.is_float:
            return Mat(out, (self.rows, other.cols), fl)
        return Mat._raw(out, (self.rows, other.cols), fl)

    def _scaled_integers(self) -> tuple[list[list[int]], int]:
        den = 1
        for r in self._rows:
            for x in r:
                den = math.lcm(den, x.denominator)
        return [[x.numerator * (den // x.denominator) for x in r] for r in self._rows], den

    def _exact_matmul(self, other: "Mat") -> "Mat":
        # integer products over a common denominator avoid per-term gcds
        A, da = self._scaled_integers()
        B, db = other._scaled_integers()
        d = da * db
        bcols = list(zip(*B)) if other.rows and other.cols else [() for _ in range(other.cols)]
        out = [[Fraction(sum(a * b for a, b in zip(r, c)), d) for c in bcols] for r in A]
        return Mat._raw(out, (self.rows, other.cols), False)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product returned as a tuple."""
        return (self @ Mat.column(vec)).col(0)

    def _elementwise(self, other: "Mat", op) -> "Mat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Mat([[op(a, b) for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                   self.shape, self.is_float or other.is_float)

    def __add__(self, other: "Mat") -> "Mat":
        return self._elementwise(other, lambda a, b: a + b)

    def __sub__(self, other: "Mat") -> "Mat":
        return self._elementwise(other, lambda a, b: a - b)

    def __neg__(self) -> "Mat":
        return Mat._raw([[-x for x in r] for r in self._rows], self.shape, self.is_float)

    def __mul__(self, c) -> "Mat":
        if isinstance(c, Mat):
            return NotImplemented
        fl = self.is_float or is_floaty(c)
        c = to_scalar(c, fl)
        return Mat([[c * x for x in r] for r in self._rows], self.shape, fl)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Mat":
        fl = self.is_float or is_floaty(c)
        return self * (1.0 / float(c) if fl else 1 / Fraction(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(fmt_scalar(x) for x in r) for r in self._rows)
        return f"Mat[{self.rows}x{self.cols}]({body})"

    # numeric queries

    def max_abs(self) -> float:
        return max((abs(x) for r in self._rows for x in r), default=0)

    def is_zero(self, tol: float | None = None) -> bool:
        if tol is None:
            tol = zero_tol(self)
        return all(abs(x) <= tol for r in self._rows for x in r)

    def allclose(self, other: "Mat", atol: float = 1e-9) -> bool:
        if self.shape != other.shape:
            return False
        scale = max(1.0, float(self.max_abs()), float(other.max_abs()))
        return all(abs(float(a) - float(b)) <= atol * scale
                   for r, s in zip(self._rows, other._rows) for a, b in zip(r, s))

    def equals(self, other: "Mat", atol: float = 1e-9) -> bool:
        """Exact equality in rational mode, ``allclose`` otherwise."""
        if self.is_float or other.is_float:
            return self.allclose(other, atol)
        return self == other

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.equals(self.T)

    def to_float(self) -> "Mat":
        return Mat(self._rows, self.shape, True)

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self._rows], dtype=float).reshape(self.shape)


def zero_tol(M: Mat) -> float:
    if not M.is_float:
        return 0
    return max(TAU * float(M.max_abs()), ATOL)


def _rref(M: Mat, tol: float | None = None) -> tuple[list[list], list[int]]:
    a = [list(r) for r in M._rows]
    n, m = M.shape
    if tol is None:
        tol = zero_tol(M)
    pivots: list[int] = []
    r = 0
    for c in range(m):
        if r == n:
            break
        if M.is_float:
            p = max(range(r, n), key=lambda i: abs(a[i][c]))
            if abs(a[p][c]) <= tol:
                for i in range(r, n):
                    a[i][c] = 0.0
                continue
        else:
            p = next((i for i in range(r, n) if a[i][c]), None)
            if p is None:
                continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv if x else x for x in a[r]]
        prow = a[r]
        for i in range(n):
            f = a[i][c]
            if i != r and f:
                a[i] = [x - f * y if y else x for x, y in zip(a[i], prow)]
                if M.is_float:
                    a[i][c] = 0.0
        pivots.append(c)
        r += 1
    return a, pivots


def rref(M: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a, piv = _rref(M)
    return Mat._raw(a, M.shape, M.is_float), piv


def rank(M: Mat) -> int:
    if 0 in M.shape:
        return 0
    return len(_rref(M)[1])


def nullspace(M: Mat) -> Mat:
    """Canonical kernel basis: one column per free variable, pivot-ordered."""
    n, m = M.shape
    zero, one = (0.0, 1.0) if M.is_float else (Fraction(0), Fraction(1))
    if n == 0:
        return Mat.identity(m, M.is_float)
    a, pivots = _rref(M)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][f]
        basis.append(v)
    if not basis:
        return Mat._raw([[] for _ in range(m)], (m, 0), M.is_float)
    return Mat(list(zip(*basis)), (m, len(basis)), M.is_float)


def column_space(M: Mat) -> Mat:
    """Canonical basis of the column span (nonzero rows of rref(Mᵀ), as columns)."""
    a, pivots = _rref(M.T)
    rows = a[:len(pivots)]
    if not rows:
        return Mat._raw([[] for _ in range(M.rows)], (M.rows, 0), M.is_float)
    return Mat(list(zip(*rows)), (M.rows, len(rows)), M.is_float)


def det(M: Mat) -> Scalar:
    n, m = M.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in M._rows]
    result = 1.0 if M.is_float else Fraction(1)
    for c in range(n):
        if M.is_float:
            p = max(range(c, n), key=lambda i: abs(a[i][c]))
            if a[p][c] == 0:
                return 0.0
        else:
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        piv = a[c][c]
        result *= piv
        for i in range(c + 1, n):
            f = a[i][c]
            if f:
                f = f / piv
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[c])]
    return result


def inverse(M: Mat) -> Mat:
    n, m = M.shape
    if n != m:
        raise ValueError("inverse of a non-square matrix")
    aug = M.hstack(Mat.identity(n, M.is_float))
    a, pivots = _rref(aug, zero_tol(M))
    if pivots[:n] != list(range(n)):
        raise Singular(f"matrix of size {n} has rank {sum(p < n for p in pivots)}")
    return Mat._raw([r[n:] for r in a], (n, n), M.is_float)


# polynomials in the pitch parameter


def _coerce_coeffs(coeffs: Sequence) -> tuple:
    fl = any(is_floaty(c) for c in coeffs)
    return tuple(to_scalar(c, fl) for c in coeffs)


@dataclass(frozen=True)
class PolyH:
    """Polynomial in h with coefficients stored low degree first.

    The zero polynomial has no coefficients and degree -1.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        c = list(_coerce_coeffs(self.coeffs))
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_float(self) -> bool:
        return bool(self.coeffs) and is_floaty(self.coeffs[0])

    def __call__(self, h):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * h + c
        if not self.coeffs:
            return 0.0 if is_floaty(h) else Fraction(0)
        return acc

    def monic(self) -> "PolyH":
        lead = self.coeffs[-1]
        return PolyH(tuple(c / lead for c in self.coeffs))

    def derivative(self) -> "PolyH":
        return PolyH(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def scaled(self, c) -> "PolyH":
        return PolyH(tuple(c * x for x in self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if isinstance(mag, Fraction) and mag.denominator != 1:
                num = f"({mag})"
            else:
                num = fmt_scalar(mag) if not isinstance(mag, Fraction) else str(mag)
            if k and mag == 1:
                num = ""
            var = "" if k == 0 else ("h" if k == 1 else f"h^{k}")
            terms.append(("-" if neg else "+", num + var))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            text += f" {sign} {t}"
        return text


def _interpolate(xs: Sequence, ys: Sequence) -> list:
    """Monomial coefficients (low first) of the Lagrange interpolant."""
    n = len(xs)
    zero = ys[0] * 0
    out = [zero] * n
    for k, (xk, yk) in enumerate(zip(xs, ys)):
        if not yk:
            continue
        basis = [zero + 1]
        denom = zero + 1
        for j, xj in enumerate(xs):
            if j == k:
                continue
            nb = [zero] * (len(basis) + 1)
            for i, b in enumerate(basis):
                nb[i + 1] += b
                nb[i] -= xj * b
            basis = nb
            denom *= xk - xj
        f = yk / denom
        for i, b in enumerate(basis):
            out[i] += f * b
    return out


def pencil_det(G0: Mat, Ginf: Mat) -> PolyH:
    """det(G0 + h*Ginf) as a polynomial of degree <= m, by interpolation."""
    if G0.shape != Ginf.shape or G0.rows != G0.cols:
        raise ValueError("pencil matrices must be square and of equal size")
    m = G0.rows
    fl = G0.is_float or Ginf.is_float
    xs = [to_scalar(k - m // 2, fl) for k in range(m + 1)]
    ys = [det(G0 + Ginf * x) for x in xs]
    coeffs = _interpolate(xs, ys)
    if fl:
        scale = max(1.0, float(G0.max_abs()), float(Ginf.max_abs())) ** m
        coeffs = [0.0 if abs(c) <= PENCIL_TOL * scale else float(c) for c in coeffs]
    return PolyH(tuple(coeffs))


def _exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _newton_polish(coeffs: Sequence[float], x: float, steps: int = 4) -> float:
    p = PolyH(tuple(float(c) for c in coeffs))
    dp = p.derivative()
    for _ in range(steps):
        d = dp(x)
        if d == 0:
            break
        nx = x - p(x) / d
        if abs(p(nx)) >= abs(p(x)):
            break
        x = nx
    return x


def _float_real_roots(coeffs: Sequence) -> list[float]:
    c = [float(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    deg = len(c) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [-c[0] / c[1]]
    if deg == 2:
        a, b, k = c[2], c[1], c[0]
        disc = b * b - 4 * a * k
        if disc < 0:
            if -disc > 1e-12 * max(b * b, abs(4 * a * k)):
                return []
            disc = 0.0
        sq = math.sqrt(disc)
        if sq == 0:
            return [-b / (2 * a)] * 2
        q = -0.5 * (b + math.copysign(sq, b))
        return sorted([q / a, k / q])
    zs = np.roots(c[::-1])
    out = []
    for z in zs:
        if abs(z.imag) <= 1e-6 * max(1.0, abs(z)):
            out.append(_newton_polish(c, float(z.real)))
    return sorted(out)


def _poly_divmod(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    """Exact long division of coefficient tuples (low degree first)."""
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return tuple(q), tuple(a)


def _squarefree(p: PolyH) -> PolyH:
    """p / gcd(p, p'): same roots, all simple."""
    a, b = p.coeffs, p.derivative().coeffs
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    return PolyH(_poly_divmod(p.coeffs, a)[0]).monic()


def _find_rational_root(p: PolyH) -> Fraction | None:
    # float root estimates only propose candidates; acceptance is an exact check
    sf = _squarefree(p)
    if sf.degree <= 0:
        return None
    if sf.degree == 1:
        return -sf.coeffs[0] / sf.coeffs[1]
    for z in np.roots([float(c) for c in reversed(sf.coeffs)]):
        tried = set()
        for limit in (1, 10, 100, 1000, 10**4, 10**6):
            cand = Fraction(float(z.real)).limit_denominator(limit)
            if cand in tried:
                continue
            tried.add(cand)
            if p(cand) == 0:
                return cand
    return None


def _deflate(p: PolyH, r) -> PolyH:
    """Quotient of p by (h - r), assuming r is a root."""
    c = p.coeffs
    out = [c[-1]]
    for coef in reversed(c[1:-1]):
        out.append(coef + r * out[-1])
    return PolyH(tuple(reversed(out)))


def real_roots(p: PolyH) -> list[Scalar]:
    """Sorted real roots with multiplicity.

    Rational coefficients give exact ``Fraction`` roots wherever a root is
    rational; irrational roots come back as floats.
    """
    if p.is_zero:
        raise IdenticallyZero("the zero polynomial has no isolated roots")
    if p.degree == 0:
        return []
    if p.is_float:
        return _float_real_roots(p.coeffs)
    roots: list[Scalar] = []
    q = p.monic()
    while q.degree >= 1:
        if q.degree == 1:
            roots.append(-q.coeffs[0])
            q = PolyH((1,))
            break
        if q.degree == 2:
            break
        r = _find_rational_root(q)
        if r is None:
            break
        roots.append(r)
        q = _deflate(q, r)
    if q.degree == 2:
        k, b, _ = q.coeffs
        disc = b * b - 4 * k
        if disc == 0:
            roots += [-b / 2] * 2
        elif disc > 0:
            sq = _exact_sqrt(disc)
            if sq is not None:
                roots += [(-b - sq) / 2, (-b + sq) / 2]
            else:
                roots += _float_real_roots(q.coeffs)
    elif q.degree > 2:
        roots += _float_real_roots(q.coeffs)
    return sorted(roots)
