"""Exact scalars (Q and F_p) and dense Gauss-Jordan elimination.

Rationals are ``fractions.Fraction``; residues mod p are ``ModP``.  Both
support the usual operators, so the elimination code below never needs to
know which field it runs over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import UsageError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class ModP:
    """Residue class modulo a prime, stored in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    @classmethod
    def _make(cls, value, p):
        obj = object.__new__(cls)
        obj.value = value
        obj.p = p
        return obj

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise UsageError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP._make((self.value + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP._make((self.value - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP._make((o - self.value) % self.p, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP._make(self.value * o % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP._make(-self.value % self.p, self.p)

    def inverse(self) -> ModP:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return ModP._make(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP._make(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Field:
    """Q when ``p`` is None, otherwise the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise UsageError(f"{self.p} is not prime")

    @property
    def zero(self):
        return Fraction(0) if self.p is None else ModP._make(0, self.p)

    @property
    def one(self):
        return Fraction(1) if self.p is None else ModP._make(1, self.p)

    def __call__(self, x):
        """Coerce an int, Fraction, string or residue into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            if isinstance(x, ModP):
                raise UsageError("cannot read a residue as a rational")
            return Fraction(x)
        if isinstance(x, ModP):
            if x.p != self.p:
                raise UsageError(f"mixing F_{self.p} and F_{x.p}")
            return x
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator {x.denominator} vanishes in F_{self.p}")
        return ModP(x.numerator, self.p) / x.denominator

    def parse(self, s: str):
        s = s.strip()
        try:
            value = Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {s!r}") from exc
        return self(value)

    def format(self, x) -> str:
        return str(self(x))

    def __str__(self):
        return "Q" if self.p is None else f"Fp:{self.p}"

    @classmethod
    def from_string(cls, s: str) -> Field:
        s = s.strip()
        if s in ("Q", "QQ"):
            return cls()
        for prefix in ("Fp:", "F_", "GF"):
            if s.startswith(prefix):
                try:
                    p = int(s[len(prefix):])
                except ValueError:
                    break
                return cls(p)
        raise ValueError(f"unknown field {s!r} (expected 'Q' or 'Fp:<prime>')")


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


class Matrix:
    """Dense exact matrix, row-major."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if entries is None:
            z = field.zero
            entries = [[z] * cols for _ in range(rows)]
        else:
            entries = [[field(x) for x in row] for row in entries]
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise UsageError("entries do not match the declared shape")
        self.entries = entries

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, rows)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        m = cls(field, n, n)
        for i in range(n):
            m.entries[i][i] = field.one
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise UsageError(f"cannot multiply {self.shape} by {other.shape}")
            out = Matrix(self.field, self.rows, other.cols)
            cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
            for i, row in enumerate(self.entries):
                out.entries[i] = [_dot(row, col, self.field.zero) for col in cols]
            return out
        v = list(other)
        if len(v) != self.cols:
            raise UsageError(f"cannot apply {self.shape} to a vector of length {len(v)}")
        return [_dot(row, v, self.field.zero) for row in self.entries]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.cols, self.rows, [list(c) for c in zip(*self.entries)] if self.rows else [[] for _ in range(self.cols)])

    def to_json(self):
        return [[str(x) for x in row] for row in self.entries]

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_json()})"


def _dot(u, v, zero):
    s = zero
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def rref(A: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of A; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in A.entries]
    pivots = []
    r = 0
    for c in range(A.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def kernel_basis(A: Matrix) -> list[list]:
    """Basis of ker A as column vectors, in reduced column echelon form.

    Stacking the returned vectors as columns gives a matrix whose leading
    entries are 1, sit in strictly increasing rows, and are the only nonzero
    entry of their row.
    """
    R, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    zero, one = A.field.zero, A.field.one
    raw = []
    for f in free:
        v = [zero] * A.cols
        v[f] = one
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        raw.append(v)
    if not raw:
        return []
    basis, _ = rref(Matrix(A.field, len(raw), A.cols, raw))
    return basis


def solve(A: Matrix, b: Sequence):
    """One solution of A x = b (free variables 0), or None if inconsistent."""
    b = [A.field(x) for x in b]
    if len(b) != A.rows:
        raise UsageError(f"right-hand side has length {len(b)}, expected {A.rows}")
    aug = Matrix(A.field, A.rows, A.cols + 1, [row + [bi] for row, bi in zip(A.entries, b)])
    R, pivots = rref(aug)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [A.field.zero] * A.cols
    for row, p in zip(R, pivots):
        x[p] = row[A.cols]
    return x


def invert(A: Matrix) -> Matrix | None:
    """Exact inverse, or None when A is singular."""
    if A.rows != A.cols:
        raise UsageError(f"cannot invert a non-square {A.shape} matrix")
    n = A.rows
    one, zero = A.field.one, A.field.zero
    aug = Matrix(
        A.field, n, 2 * n,
        [row + [one if i == j else zero for j in range(n)] for i, row in enumerate(A.entries)],
    )
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return Matrix(A.field, n, n, [row[n:] for row in R])
