"""Dense exact arrays over Q or F_p.

Entries are stored as a numpy object array of Python ints together with a
single positive denominator (always 1 over F_p).  This keeps numpy's einsum
and tensordot machinery usable while every operation stays exact; over Q the
pair (numerators, denominator) is kept in lowest terms so equality is a plain
comparison.

A linear map V -> W is a ``Mat`` of shape (dim W, dim V).  The basis of V⊗W
is ordered e_i⊗f_j -> i*dim(W) + j.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
import math

import numpy as np

from .errors import FieldMismatch, ShapeMismatch
from .scalars import Field, Scalar


def _canon(field: Field, num: np.ndarray, den: int):
    if field.p is not None:
        if den != 1:
            num = num * pow(den, -1, field.p)
        return num % field.p, 1
    if num.size == 0:
        return num, 1
    g = math.gcd(den, int(np.gcd.reduce(num.ravel())))
    if g > 1:
        num = num // g
        den //= g
    return num, den


def _obj(a) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    return a


class Tensor:
    """An exact n-dimensional array; ``Mat`` is the 2-d specialisation."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: Field, num, den: int = 1, canonical: bool = False):
        num = _obj(num)
        if not canonical:
            num, den = _canon(field, num, den)
            num = _obj(num)              # 0-d arithmetic hands back bare ints
        self.field = field
        self.num = num
        self.den = den

    # construction ------------------------------------------------------------
    @staticmethod
    def make(field: Field, num, den: int = 1, canonical: bool = False) -> "Tensor":
        num = _obj(num)
        cls = Mat if num.ndim == 2 else Tensor
        return cls(field, num, den, canonical)

    @classmethod
    def from_values(cls, field: Field, values, shape=None) -> "Tensor":
        """Build from a nested list (or array) of ints, Fractions, "a/b" or Scalars."""
        src = np.array(values, dtype=object)
        if shape is not None:
            if src.size != int(np.prod(shape)):
                raise ShapeMismatch(f"{src.size} values for shape {shape}")
            src = src.reshape(shape)
        raws = [field.raw(x) for x in src.ravel()]
        if field.p is None:
            den = reduce(math.lcm, (r.denominator for r in raws), 1)
            nums = [int(r.numerator * (den // r.denominator)) for r in raws]
        else:
            den = 1
            nums = raws
        arr = np.empty(len(nums), dtype=object)
        arr[:] = nums
        return cls.make(field, arr.reshape(src.shape), den)

    @classmethod
    def zeros(cls, field: Field, shape) -> "Tensor":
        return cls.make(field, np.zeros(shape, dtype=object), 1, canonical=True)

    # basic properties ----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, ...]:
        return self.num.shape

    @property
    def ndim(self) -> int:
        return self.num.ndim

    @property
    def size(self) -> int:
        return self.num.size

    def _raw_at(self, n) -> Fraction | int:
        if self.field.p is None:
            return Fraction(int(n), self.den)
        return int(n)

    def __getitem__(self, idx):
        sub = self.num[idx]
        if isinstance(sub, np.ndarray):
            return Tensor.make(self.field, sub.copy(), self.den)
        return Scalar(self.field, self._raw_at(sub))

    def raw_values(self) -> list:
        """Flat list of raw entries (Fractions or residues) in C order."""
        return [self._raw_at(n) for n in self.num.ravel()]

    def tolist(self):
        """Nested list of raw entries."""
        if self.ndim == 0:
            return self._raw_at(self.num[()])
        flat = self.raw_values()
        out = np.empty(len(flat), dtype=object)
        out[:] = flat
        return out.reshape(self.shape).tolist()

    def to_json(self):
        enc = self.field.encode
        if self.ndim == 0:
            return enc(self._raw_at(self.num[()]))
        flat = self.raw_values()
        out = np.empty(len(flat), dtype=object)
        out[:] = [enc(v) for v in flat]
        return out.reshape(self.shape).tolist()

    # structural --------------------------------------------------------------
    def reshape(self, *shape) -> "Tensor":
        if len(shape) == 1 and isinstance(shape[0], tuple):
            shape = shape[0]
        return Tensor.make(self.field, self.num.reshape(shape), self.den, canonical=True)

    def transpose(self, *axes) -> "Tensor":
        return Tensor.make(self.field, self.num.transpose(*axes), self.den, canonical=True)

    @property
    def T(self) -> "Tensor":
        return self.transpose()

    # arithmetic --------------------------------------------------------------
    def _check(self, other: "Tensor"):
        if not isinstance(other, Tensor):
            raise TypeError(f"expected Tensor, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.shape != self.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        den = math.lcm(self.den, other.den)
        num = self.num * (den // self.den) + other.num * (den // other.den)
        return Tensor.make(self.field, num, den)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __neg__(self) -> "Tensor":
        return Tensor.make(self.field, -self.num, self.den)

    def scale(self, c) -> "Tensor":
        r = self.field.raw(c)
        if self.field.p is None:
            return Tensor.make(self.field, self.num * r.numerator, self.den * r.denominator)
        return Tensor.make(self.field, self.num * r, 1)

    def __mul__(self, c):
        if isinstance(c, Tensor):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.den == other.den and bool(np.all(self.num == other.num)))

    __hash__ = None

    def is_zero(self) -> bool:
        return not np.any(self.num != 0)

    def nonzero_index(self):
        """First nonzero multi-index in C order, or None."""
        nz = np.flatnonzero(self.num.ravel() != 0)
        if nz.size == 0:
            return None
        return tuple(int(i) for i in np.unravel_index(int(nz[0]), self.shape))

    def __repr__(self):
        return f"{type(self).__name__}({self.field}, shape={self.shape}, {self.to_json()})"


class Mat(Tensor):
    """Exact matrix; a linear map V -> W has shape (dim W, dim V)."""

    __slots__ = ()

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    def __matmul__(self, other: "Mat") -> "Mat":
        return matmul(self, other)

    def column(self, j: int) -> "Mat":
        return Mat(self.field, self.num[:, j:j + 1].copy(), self.den)

    def row_vector(self, i: int) -> "Mat":
        return Mat(self.field, self.num[i:i + 1, :].copy(), self.den)

    @classmethod
    def from_columns(cls, field: Field, cols: list["Tensor"], nrows: int | None = None) -> "Mat":
        if not cols:
            return Tensor.zeros(field, (nrows or 0, 0))
        flat = [c.reshape(c.size) for c in cols]
        den = reduce(math.lcm, (c.den for c in flat), 1)
        num = np.stack([c.num * (den // c.den) for c in flat], axis=1)
        return Mat(field, num, den)


# ----------------------------------------------------------------------------
# operations


def contract(spec: str, *ops: Tensor) -> Tensor:
    """Exact einsum over Tensors sharing one field."""
    field = ops[0].field
    for t in ops[1:]:
        if t.field != field:
            raise FieldMismatch(f"{field} vs {t.field}")
    num = np.einsum(spec, *[t.num for t in ops], optimize="greedy" if len(ops) > 2 else False)
    den = 1
    for t in ops:
        den *= t.den
    return Tensor.make(field, np.asarray(num, dtype=object), den)


def matmul(a: Mat, b: Mat) -> Mat:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.ndim != 2 or b.ndim != 2 or a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    num = a.num.dot(b.num) if a.size and b.size else np.zeros((a.rows, b.cols), dtype=object)
    return Mat(a.field, _obj(num), a.den * b.den)


def add(a: Tensor, b: Tensor) -> Tensor:
    return a + b


def sub(a: Tensor, b: Tensor) -> Tensor:
    return a - b


def scale(c, a: Tensor) -> Tensor:
    return a.scale(c)


def transpose(a: Mat) -> Mat:
    return a.T


def kron(a: Mat, b: Mat) -> Mat:
    t = contract("ij,kl->ikjl", a, b)
    return t.reshape(a.rows * b.rows, a.cols * b.cols)


def identity(n: int, field: Field) -> Mat:
    num = np.zeros((n, n), dtype=object)
    for i in range(n):
        num[i, i] = 1
    return Mat(field, num, 1, canonical=True)


def twist(dim_v: int, dim_w: int, field: Field) -> Mat:
    """The flip V⊗W -> W⊗V: e_i⊗f_j (index i*dimW+j) -> f_j⊗e_i (index j*dimV+i)."""
    n = dim_v * dim_w
    num = np.zeros((n, n), dtype=object)
    for i in range(dim_v):
        for j in range(dim_w):
            num[j * dim_v + i, i * dim_w + j] = 1
    return Mat(field, num, 1, canonical=True)


def vector(field: Field, values) -> Mat:
    """Column vector."""
    vals = list(values)
    return Tensor.from_values(field, vals, shape=(len(vals), 1))


# Gaussian elimination -------------------------------------------------------


def _rows(a: Mat) -> list[list]:
    field = a.field
    if field.p is None:
        return [[Fraction(int(x), a.den) for x in row] for row in a.num]
    return [[int(x) for x in row] for row in a.num]


def _rref(field: Field, rows: list[list], ncols: int, stop: int | None = None) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form; return pivot columns.

    Pivots are only searched among the first ``stop`` columns (default all).
    """
    p = field.p
    stop = ncols if stop is None else stop
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(stop):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv_raw(rows[r][c])
        if p is None:
            pr = [v * inv for v in rows[r]]
        else:
            pr = [v * inv % p for v in rows[r]]
        rows[r] = pr
        nz = [k for k in range(c, ncols) if pr[k] != 0]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f == 0:
                continue
            if p is None:
                for k in nz:
                    row[k] = row[k] - f * pr[k]
            else:
                for k in nz:
                    row[k] = (row[k] - f * pr[k]) % p
        pivots.append(c)
        r += 1
    return pivots


def rref(a: Mat) -> tuple[Mat, list[int]]:
    rows = _rows(a)
    piv = _rref(a.field, rows, a.cols)
    if not rows:
        return a, piv
    return Tensor.from_values(a.field, rows, shape=a.shape), piv


def rank(a: Mat) -> int:
    if a.size == 0:
        return 0
    return len(_rref(a.field, _rows(a), a.cols))


def kernel_basis(a: Mat) -> Mat:
    """Columns form a basis of {v : a v = 0}, one per free column, in order."""
    n = a.cols
    if a.rows == 0:
        return identity(n, a.field)
    rows = _rows(a)
    piv = _rref(a.field, rows, n)
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in enumerate(piv):
            v[c] = -rows[r][f]
        basis.append(v)
    if not basis:
        return Tensor.zeros(a.field, (n, 0))
    return Tensor.from_values(a.field, basis, shape=(len(basis), n)).T


def image_basis(a: Mat) -> tuple[Mat, list[int]]:
    """Leftmost-pivot columns of ``a`` (a basis of its column space) and their indices."""
    if a.size == 0:
        return Tensor.zeros(a.field, (a.rows, 0)), []
    piv = _rref(a.field, _rows(a), a.cols)
    return Mat(a.field, a.num[:, piv].copy(), a.den), piv


def solve(a: Mat, rhs: Mat) -> Mat | None:
    """A particular solution X of a X = rhs (free variables set to 0), or None."""
    if a.field != rhs.field:
        raise FieldMismatch(f"{a.field} vs {rhs.field}")
    if a.rows != rhs.rows:
        raise ShapeMismatch(f"{a.shape} vs rhs {rhs.shape}")
    n, k = a.cols, rhs.cols
    aug = np.concatenate([a.num * rhs.den, rhs.num * a.den], axis=1)
    rows = _rows(Mat(a.field, aug, a.den * rhs.den))
    piv = _rref(a.field, rows, n + k, stop=n)
    for row in rows[len(piv):]:
        if any(v != 0 for v in row[n:]):
            return None
    sol = [[0] * k for _ in range(n)]
    for r, c in enumerate(piv):
        sol[c] = rows[r][n:]
    return Tensor.from_values(a.field, sol, shape=(n, k))


def inverse(a: Mat) -> Mat:
    if a.rows != a.cols:
        raise ShapeMismatch(f"not square: {a.shape}")
    x = solve(a, identity(a.rows, a.field))
    if x is None or rank(a) < a.rows:
        from .errors import DivisionByZero
        raise DivisionByZero("singular matrix")
    return x


def left_inverse(b: Mat) -> Mat:
    """L with L b = I for a matrix with independent columns (rows picked by pivots)."""
    r = b.cols
    _, prow = image_basis(b.T)
    if len(prow) != r:
        raise ShapeMismatch("columns are not independent")
    sq = Mat(b.field, b.num[prow, :].copy(), b.den)
    inv = inverse(sq)
    num = np.zeros((r, b.rows), dtype=object)
    num[:, prow] = inv.num
    return Mat(b.field, num, inv.den)


def same_span(a: Mat, b: Mat) -> bool:
    """Do the column spaces of a and b coincide?"""
    ra, rb = rank(a), rank(b)
    if ra != rb:
        return False
    both = Mat(a.field, np.concatenate([a.num * b.den, b.num * a.den], axis=1), a.den * b.den)
    return rank(both) == ra


def stack_rows(ms: list[Tensor]) -> Mat:
    """Stack 2-d blocks vertically."""
    den = reduce(math.lcm, (m.den for m in ms), 1)
    return Mat(ms[0].field, np.concatenate([m.num * (den // m.den) for m in ms], axis=0), den)


def stack_cols(ms: list[Tensor]) -> Mat:
    den = reduce(math.lcm, (m.den for m in ms), 1)
    return Mat(ms[0].field, np.concatenate([m.num * (den // m.den) for m in ms], axis=1), den)
