"""Dense exact linear algebra over Q and Q[t].

Matrices act on column vectors: column ``j`` of a matrix is the image of the
``j``-th basis vector.  Bases chosen by the elimination routines follow
reduced-row-echelon pivot order, so results are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotInvariant, NotSquare
from .ring import LaurentPolynomial, as_rational, poly_exact_quotient

Vector = tuple[Fraction, ...]

__all__ = [
    "MatrixQ",
    "MatrixPoly",
    "det_one_minus_tA",
    "det_one_minus_tA_newton",
    "trace_power",
    "rref",
    "rank",
    "kernel_basis",
    "image_basis",
    "coordinates",
    "induced_quotient_map",
    "quotient_representatives",
]


class MatrixQ:
    """A rectangular matrix of rationals; ``0 x n`` and ``n x 0`` are allowed."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable], rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in entries)
        r = len(data) if rows is None else rows
        if len(data) != r:
            raise ValueError(f"expected {r} rows, got {len(data)}")
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixQ is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> MatrixQ:
        return cls([[0] * cols for _ in range(rows)], rows=rows, cols=cols)

    @classmethod
    def identity(cls, n: int) -> MatrixQ:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], rows=n, cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> MatrixQ:
        return cls([[c[i] for c in columns] for i in range(rows)], rows=rows, cols=len(columns))

    @classmethod
    def permutation(cls, images: Sequence[int]) -> MatrixQ:
        """Matrix sending basis vector ``j`` to basis vector ``images[j]``."""
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError(f"{list(images)} is not a permutation")
        return cls([[int(images[j] == i) for j in range(n)] for i in range(n)], rows=n, cols=n)

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not x for r in self._data for x in r)

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other: MatrixQ) -> MatrixQ:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        return MatrixQ(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols] for r in self._data],
            rows=self.rows,
            cols=other.cols,
        )

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self._data)

    def __add__(self, other: MatrixQ) -> MatrixQ:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return MatrixQ(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            rows=self.rows,
            cols=self.cols,
        )

    def __sub__(self, other: MatrixQ) -> MatrixQ:
        return self + other.scale(-1)

    def scale(self, c) -> MatrixQ:
        c = as_rational(c)
        return MatrixQ([[c * a for a in r] for r in self._data], rows=self.rows, cols=self.cols)

    def transpose(self) -> MatrixQ:
        return MatrixQ([self.column(j) for j in range(self.cols)], rows=self.cols, cols=self.rows)

    def trace(self) -> Fraction:
        _square(self)
        return sum((self._data[i][i] for i in range(self.rows)), Fraction(0))

    def __pow__(self, k: int) -> MatrixQ:
        _square(self)
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = MatrixQ.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def block_diagonal(self, other: MatrixQ) -> MatrixQ:
        rows = [list(r) + [0] * other.cols for r in self._data]
        rows += [[0] * self.cols + list(r) for r in other._data]
        return MatrixQ(rows, rows=self.rows + other.rows, cols=self.cols + other.cols)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"MatrixQ({self.rows}x{self.cols}: [{body}])"


def _square(A: MatrixQ) -> None:
    if not A.is_square():
        raise NotSquare(f"expected a square matrix, got {A.rows}x{A.cols}")


class MatrixPoly:
    """Square matrix with polynomial entries, used for ``det(I - tA)``."""

    __slots__ = ("n", "_data")

    def __init__(self, entries: Sequence[Sequence[LaurentPolynomial]]):
        data = tuple(tuple(entries[i]) for i in range(len(entries)))
        if any(len(r) != len(data) for r in data):
            raise NotSquare("MatrixPoly must be square")
        for r in data:
            for x in r:
                if not x.is_polynomial():
                    raise ValueError("MatrixPoly entries must be ordinary polynomials")
        self.n = len(data)
        self._data = data

    @classmethod
    def one_minus_t(cls, A: MatrixQ) -> MatrixPoly:
        _square(A)
        n = A.rows
        return cls(
            [
                [LaurentPolynomial({0: int(i == j), 1: -A[i, j]}) for j in range(n)]
                for i in range(n)
            ]
        )

    def det(self) -> LaurentPolynomial:
        """Bareiss fraction-free elimination over Q[t]."""
        n = self.n
        if n == 0:
            return LaurentPolynomial.one()
        m = [list(r) for r in self._data]
        sign = 1
        prev = LaurentPolynomial.one()
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return LaurentPolynomial.zero()
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = poly_exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            prev = m[k][k]
        return m[n - 1][n - 1].scale(sign)


def det_one_minus_tA(A: MatrixQ) -> LaurentPolynomial:
    """``det(I - tA)`` by fraction-free elimination."""
    return MatrixPoly.one_minus_t(A).det()


def det_one_minus_tA_newton(A: MatrixQ) -> LaurentPolynomial:
    """``det(I - tA) = sum (-1)^k e_k t^k`` with ``e_k`` from power-sum traces."""
    _square(A)
    n = A.rows
    p = [Fraction(0)] + [trace_power(A, k) for k in range(1, n + 1)]
    e = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        e[k] = sum(((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1)), Fraction(0)) / k
    return LaurentPolynomial({k: (-1) ** k * e[k] for k in range(n + 1)})


def trace_power(A: MatrixQ, k: int) -> Fraction:
    """``Tr(A^k)`` for ``k >= 1``."""
    _square(A)
    if k < 1:
        raise ValueError("trace_power needs k >= 1")
    return (A ** k).trace()


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def rref(A: MatrixQ) -> tuple[MatrixQ, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    m = [list(r) for r in A.to_lists()]
    pivots: list[int] = []
    r = 0
    for c in range(A.cols):
        piv = next((i for i in range(r, A.rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(A.rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == A.rows:
            break
    return MatrixQ(m, rows=A.rows, cols=A.cols), pivots


def rank(A: MatrixQ) -> int:
    return len(rref(A)[1])


def kernel_basis(A: MatrixQ) -> list[Vector]:
    """Basis of ``{v : Av = 0}``, one vector per free column of the RREF."""
    R, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * A.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i, f]
        basis.append(tuple(v))
    return basis


def image_basis(A: MatrixQ) -> list[Vector]:
    """The pivot columns of ``A``: a basis of its column space."""
    _, pivots = rref(A)
    return [A.column(c) for c in pivots]


def coordinates(v: Sequence, basis: Sequence[Sequence]) -> Vector | None:
    """Coordinates of ``v`` in a linearly independent ``basis``; None if outside the span."""
    n = len(v)
    if not basis:
        return () if all(not x for x in v) else None
    aug = MatrixQ.from_columns([*basis, v], rows=n)
    R, pivots = rref(aug)
    k = len(basis)
    if k in pivots:
        return None
    out = [Fraction(0)] * k
    for i, p in enumerate(pivots):
        out[p] = R[i, k]
    return tuple(out)


def _quotient_frame(ker_basis, im_basis):
    k = len(ker_basis)
    im_coords = []
    for w in im_basis:
        c = coordinates(w, ker_basis)
        if c is None:
            raise NotInvariant("image vector outside the kernel span")
        im_coords.append(c)
    if im_coords:
        R, pivots = rref(MatrixQ(im_coords, rows=len(im_coords), cols=k))
        reducers = [(p, R.row(i)) for i, p in enumerate(pivots)]
    else:
        pivots, reducers = [], []
    reps = [j for j in range(k) if j not in pivots]
    return reps, reducers


def quotient_representatives(ker_basis: Sequence[Sequence], im_basis: Sequence[Sequence]) -> list[Vector]:
    """Kernel basis vectors chosen as a basis of ``span(ker) / span(im)``."""
    reps, _ = _quotient_frame(ker_basis, im_basis)
    return [tuple(ker_basis[j]) for j in reps]


def induced_quotient_map(T_: MatrixQ, ker_basis: Sequence[Sequence], im_basis: Sequence[Sequence]) -> MatrixQ:
    """Matrix of the endomorphism induced by ``T_`` on ``span(ker) / span(im)``.

    Coset representatives are the kernel basis vectors whose coordinates are
    not pivots of the RREF of the image (written in kernel coordinates).
    """
    _square(T_)
    reps, reducers = _quotient_frame(ker_basis, im_basis)
    for w in im_basis:
        if coordinates(T_.apply(w), im_basis) is None:
            raise NotInvariant("map does not preserve the image subspace")

    columns = []
    for j in reps:
        image = T_.apply(ker_basis[j])
        c = coordinates(image, ker_basis)
        if c is None:
            raise NotInvariant("map does not preserve the kernel")
        c = list(c)
        for p, row in reducers:
            if c[p]:
                f = c[p]
                c = [a - f * b for a, b in zip(c, row)]
        columns.append([c[r] for r in reps])
    return MatrixQ.from_columns(columns, rows=len(reps)) if reps else MatrixQ.zeros(0, 0)
