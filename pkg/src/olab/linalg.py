"""Exact rational linear algebra and unshuffle combinatorics.

Everything here works over :class:`fractions.Fraction`. Matrices are small,
dense and immutable; elimination pivots deterministically on the first
nonzero entry of each column (scanning rows top to bottom) so that
witnesses and reports are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Convert ints, Fractions and exact decimal/ratio strings to a Fraction.

    Floats are rejected: they are not exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"not an exact rational scalar: {value!r}")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def vec(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in a)


def is_zero_vec(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def axpy(acc: list, c, a: Sequence[Fraction]) -> None:
    """In-place ``acc += c * a`` on a mutable accumulator list."""
    if c == 0:
        return
    for k, x in enumerate(a):
        if x:
            acc[k] += c * x


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(to_rational(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls(
            rows,
            len(columns),
            tuple(to_rational(columns[j][i]) for i in range(rows) for j in range(len(columns))),
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        out = []
        c = self.cols
        for i in range(self.rows):
            base = i * c
            s = ZERO
            for j, x in enumerate(v):
                if x:
                    a = self.entries[base + j]
                    if a:
                        s += a * x
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            cols = [self.apply(other.column(j)) for j in range(other.cols)]
            return Matrix.from_columns(cols, rows=self.rows)
        return self.apply(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = to_rational(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def _check_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space, one vector per free column."""
    a, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -a[r][f]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Return some ``x`` with ``m @ x == b`` (free variables set to 0), or None."""
    b = vec(b)
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {m.rows} rows")
    aug = Matrix(m.rows, m.cols + 1, tuple(
        x for i in range(m.rows) for x in (*m.row(i), b[i])
    ))
    a, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = a[r][m.cols]
    return tuple(x)


def column_space_basis(m: Matrix) -> list[Vector]:
    """The pivot columns of ``m``: a basis of its image."""
    _, pivots = rref(m)
    return [m.column(p) for p in pivots]


# --- permutations -----------------------------------------------------------

def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparable items."""
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def sort_with_sign(items: Sequence[int]) -> tuple[int, tuple]:
    """Sort distinct items, returning (sign of the sorting permutation, sorted tuple).

    Returns sign 0 when an item repeats.
    """
    if len(set(items)) != len(items):
        return 0, ()
    return permutation_sign(items), tuple(sorted(items))


@dataclass(frozen=True)
class Unshuffle:
    """A permutation ascending inside each block.

    ``positions`` lists sigma(1), ..., sigma(n) (1-based, block after block).
    """

    block_sizes: tuple
    positions: tuple
    sign: int

    def blocks(self) -> list[tuple]:
        out, k = [], 0
        for s in self.block_sizes:
            out.append(self.positions[k:k + s])
            k += s
        return out


def _unshuffles(block_sizes: tuple, pool: tuple):
    if not block_sizes:
        yield ()
        return
    first, rest = block_sizes[0], block_sizes[1:]
    for chosen in itertools.combinations(pool, first):
        remaining = tuple(x for x in pool if x not in chosen)
        for tail in _unshuffles(rest, remaining):
            yield chosen + tail


def unshuffles(block_sizes: Sequence[int], n: int | None = None) -> list[Unshuffle]:
    """All (i_1, ..., i_k)-unshuffles of {1, ..., n} with their signs.

    Enumeration is lexicographic in the first block, then recursively.
    """
    block_sizes = tuple(int(s) for s in block_sizes)
    if any(s < 0 for s in block_sizes):
        raise ValueError(f"negative block size in {block_sizes}")
    total = sum(block_sizes)
    if n is None:
        n = total
    if total != n:
        raise ValueError(f"block sizes {block_sizes} do not sum to {n}")
    return [
        Unshuffle(block_sizes, perm, permutation_sign(perm))
        for perm in _unshuffles(block_sizes, tuple(range(1, n + 1)))
    ]


_UNSHUFFLE_CACHE: dict = {}


def unshuffles_0based(block_sizes: tuple) -> list[tuple[tuple, int]]:
    """Cached ``(positions, sign)`` pairs with 0-based positions, for inner loops."""
    key = tuple(block_sizes)
    hit = _UNSHUFFLE_CACHE.get(key)
    if hit is None:
        hit = [(tuple(p - 1 for p in u.positions), u.sign) for u in unshuffles(key)]
        _UNSHUFFLE_CACHE[key] = hit
    return hit


# --- polynomial matrices in a formal parameter t ------------------------------

def poly_matmul(a: Sequence[Matrix], b: Sequence[Matrix]) -> list[Matrix]:
    """Product of matrix polynomials given as coefficient lists (t^0 first)."""
    if not a or not b:
        return []
    out = [Matrix.zero(a[0].rows, b[0].cols) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x @ y
    return out


def poly_equal(a: Sequence[Matrix], b: Sequence[Matrix]) -> list[int]:
    """Powers of t whose coefficients differ."""
    bad = []
    for k in range(max(len(a), len(b))):
        x = a[k] if k < len(a) else None
        y = b[k] if k < len(b) else None
        if x is None:
            x = Matrix.zero(y.rows, y.cols)
        if y is None:
            y = Matrix.zero(x.rows, x.cols)
        if x != y:
            bad.append(k)
    return bad
