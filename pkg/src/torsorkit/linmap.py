"""Sparse exact linear maps between tensor-structured spaces.

A space is described by its tuple of leg dimensions; ``()`` is the ground
field.  Basis tensors are flattened big-endian: (i_1, ..., i_m) sits at
offset sum(i_t * prod(dims[t+1:])), leftmost leg most significant.  This is
the only index convention used anywhere in the package.

Columns are stored as ``{row: scalar}`` dicts holding nonzeros only, so the
five-fold tensors appearing in the Grunspan identities stay cheap when the
structure constants are sparse.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Sequence

from . import exactla
from .errors import MembershipFailure, UsageError
from .exactla import Field, Matrix


def flat_index(multi: Sequence[int], dims: Sequence[int]) -> int:
    idx = 0
    for i, d in zip(multi, dims):
        if not 0 <= i < d:
            raise UsageError(f"index {tuple(multi)} out of range for dims {tuple(dims)}")
        idx = idx * d + i
    return idx


def multi_index(flat: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        flat, r = divmod(flat, d)
        out.append(r)
    return tuple(reversed(out))


def _prune(col: dict) -> dict:
    return {r: x for r, x in col.items() if x}


def _add_into(out: dict, idx: int, x):
    y = out.get(idx)
    out[idx] = x if y is None else y + x


class LinearMap:
    __slots__ = ("field", "dom", "cod", "cols")

    def __init__(self, field: Field, dom: Sequence[int], cod: Sequence[int], cols: Iterable[dict]):
        self.field = field
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.cols = tuple(_prune(c) for c in cols)
        if len(self.cols) != prod(self.dom):
            raise UsageError(f"{len(self.cols)} columns for a domain of dims {self.dom}")

    # -- construction -------------------------------------------------
    @classmethod
    def zero(cls, field, dom, cod):
        return cls(field, dom, cod, [{} for _ in range(prod(dom))])

    @classmethod
    def identity(cls, field, dims):
        one = field.one
        return cls(field, dims, dims, [{i: one} for i in range(prod(dims))])

    @classmethod
    def from_matrix(cls, M: Matrix, dom=None, cod=None) -> LinearMap:
        dom = (M.cols,) if dom is None else dom
        cod = (M.rows,) if cod is None else cod
        cols = [{} for _ in range(M.cols)]
        for i, row in enumerate(M.entries):
            for j, x in enumerate(row):
                if x:
                    cols[j][i] = x
        return cls(M.field, dom, cod, cols)

    @classmethod
    def vector(cls, field, dims, coords) -> LinearMap:
        """The map k -> V sending 1 to ``coords`` (dict or dense sequence)."""
        if not isinstance(coords, dict):
            coords = dict(enumerate(coords))
        return cls(field, (), dims, [{i: field(x) for i, x in coords.items()}])

    # -- shape ---------------------------------------------------------
    @property
    def dom_dim(self) -> int:
        return prod(self.dom)

    @property
    def cod_dim(self) -> int:
        return prod(self.cod)

    def regroup(self, dom=None, cod=None) -> LinearMap:
        """Same matrix, different leg bookkeeping."""
        dom = self.dom if dom is None else tuple(dom)
        cod = self.cod if cod is None else tuple(cod)
        if prod(dom) != self.dom_dim or prod(cod) != self.cod_dim:
            raise UsageError("regroup must preserve total dimensions")
        out = object.__new__(LinearMap)
        out.field, out.dom, out.cod, out.cols = self.field, dom, cod, self.cols
        return out

    # -- algebra of maps -----------------------------------------------
    def __call__(self, v: dict) -> dict:
        out = {}
        for j, x in v.items():
            for i, y in self.cols[j].items():
                _add_into(out, i, x * y)
        return _prune(out)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        if self.dom_dim != other.cod_dim:
            raise UsageError(f"cannot compose {self.dom}->{self.cod} after {other.dom}->{other.cod}")
        return LinearMap(self.field, other.dom, self.cod, [self(c) for c in other.cols])

    def _check_same(self, other):
        if self.dom_dim != other.dom_dim or self.cod_dim != other.cod_dim:
            raise UsageError(f"shape mismatch {self.dom}->{self.cod} vs {other.dom}->{other.cod}")

    def __add__(self, other: LinearMap) -> LinearMap:
        self._check_same(other)
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, y in b.items():
                _add_into(c, i, y)
            cols.append(c)
        return LinearMap(self.field, self.dom, self.cod, cols)

    def __neg__(self) -> LinearMap:
        return LinearMap(self.field, self.dom, self.cod, [{i: -x for i, x in c.items()} for c in self.cols])

    def __sub__(self, other: LinearMap) -> LinearMap:
        return self + (-other)

    def scale(self, c) -> LinearMap:
        c = self.field(c)
        return LinearMap(self.field, self.dom, self.cod, [{i: c * x for i, x in col.items()} for col in self.cols])

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.field == other.field
            and self.dom_dim == other.dom_dim
            and self.cod_dim == other.cod_dim
            and self.cols == other.cols
        )

    __hash__ = None

    def tensor(self, other: LinearMap) -> LinearMap:
        """f (x) g with the big-endian convention on both sides."""
        m = other.cod_dim
        cols = []
        for a in self.cols:
            for b in other.cols:
                cols.append({r * m + s: x * y for r, x in a.items() for s, y in b.items()})
        return LinearMap(self.field, self.dom + other.dom, self.cod + other.cod, cols)

    def apply(self, f: LinearMap, start: int, stop: int | None = None) -> LinearMap:
        """Post-compose with id (x) f (x) id, f acting on codomain legs start:stop."""
        stop = start + 1 if stop is None else stop
        if not 0 <= start <= stop <= len(self.cod):
            raise UsageError(f"bad leg range {start}:{stop} for {len(self.cod)} legs")
        B = prod(self.cod[start:stop])
        C = prod(self.cod[stop:])
        if f.dom_dim != B:
            raise UsageError(f"map on {f.dom} cannot act on legs of dims {self.cod[start:stop]}")
        Bf = f.cod_dim
        BC = B * C
        fcols = f.cols
        cols = []
        for col in self.cols:
            out = {}
            for r, x in col.items():
                a, rest = divmod(r, BC)
                b, c = divmod(rest, C)
                base = a * Bf
                for s, y in fcols[b].items():
                    _add_into(out, (base + s) * C + c, x * y)
            cols.append(out)
        return LinearMap(self.field, self.dom, self.cod[:start] + f.cod + self.cod[stop:], cols)

    def permute(self, perm: Sequence[int]) -> LinearMap:
        """Reorder codomain legs: new leg t is old leg perm[t]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(len(self.cod))):
            raise UsageError(f"{perm} is not a permutation of the legs")
        new_dims = tuple(self.cod[p] for p in perm)
        cache = {}

        def move(r):
            if r not in cache:
                old = multi_index(r, self.cod)
                cache[r] = flat_index([old[p] for p in perm], new_dims)
            return cache[r]

        cols = [{move(r): x for r, x in col.items()} for col in self.cols]
        return LinearMap(self.field, self.dom, new_dims, cols)

    # -- dense bridge --------------------------------------------------
    def matrix(self) -> Matrix:
        M = Matrix(self.field, self.cod_dim, self.dom_dim)
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                M.entries[i][j] = x
        return M

    def column_vector(self, j: int) -> list:
        z = self.field.zero
        v = [z] * self.cod_dim
        for i, x in self.cols[j].items():
            v[i] = x
        return v

    def inverse(self) -> LinearMap | None:
        inv = exactla.invert(self.matrix())
        if inv is None:
            return None
        return LinearMap.from_matrix(inv, dom=self.cod, cod=self.dom)

    def rank(self) -> int:
        return exactla.rank(self.matrix())

    def first_difference(self, other: LinearMap):
        """(column, row, lhs, rhs) of the first disagreeing entry, or None."""
        self._check_same(other)
        z = self.field.zero
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                i = min(set(a) ^ set(b) | {r for r in a if r in b and a[r] != b[r]})
                return j, i, a.get(i, z), b.get(i, z)
        return None

    def __repr__(self):
        return f"LinearMap({self.dom}->{self.cod}, {list(self.cols)})"


class Subspace:
    """Subspace given by a reduced column-echelon basis.

    ``pivots[j]`` is the row of the leading 1 of basis vector j; every other
    basis vector vanishes there, so coordinates are read off at the pivots.
    """

    __slots__ = ("basis", "pivots")

    def __init__(self, basis: LinearMap, pivots: Sequence[int]):
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_rows(cls, field: Field, dims, rows: list[list]) -> Subspace:
        """Span of dense vectors, echelonized."""
        n = prod(dims)
        if rows:
            R, pivots = exactla.rref(Matrix(field, len(rows), n, rows))
        else:
            R, pivots = [], []
        cols = [{i: x for i, x in enumerate(r) if x} for r in R]
        return cls(LinearMap(field, (len(cols),), dims, cols), pivots)

    @classmethod
    def span(cls, f: LinearMap) -> Subspace:
        """Image of f."""
        return cls.from_rows(f.field, f.cod, [f.column_vector(j) for j in range(f.dom_dim)])

    @classmethod
    def kernel(cls, f: LinearMap) -> Subspace:
        basis = exactla.kernel_basis(f.matrix())
        return cls.from_rows(f.field, f.dom, basis)

    @property
    def dim(self) -> int:
        return self.basis.dom_dim

    @property
    def ambient(self) -> tuple:
        return self.basis.cod

    @property
    def field(self):
        return self.basis.field

    def coords(self, X: LinearMap, error=MembershipFailure) -> LinearMap:
        """Coordinates of the columns of X in this basis; raises if not members."""
        if X.cod_dim != self.basis.cod_dim:
            raise UsageError("ambient dimension mismatch")
        where = {p: j for j, p in enumerate(self.pivots)}
        cols = [{where[r]: x for r, x in col.items() if r in where} for col in X.cols]
        C = LinearMap(self.field, X.dom, (self.dim,), cols)
        back = self.basis @ C
        if back.cols != X.cols:
            j, i, _, _ = back.first_difference(X.regroup(cod=back.cod))
            raise error(f"column {j} is not in the subspace (mismatch at ambient index {i})")
        return C

    def contains(self, X: LinearMap) -> bool:
        try:
            self.coords(X)
        except MembershipFailure:
            return False
        return True

    def tensor(self, other: Subspace) -> Subspace:
        m = other.basis.cod_dim
        pivots = [p * m + q for p in self.pivots for q in other.pivots]
        return Subspace(self.basis.tensor(other.basis), pivots)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.pivots == other.pivots and self.basis == other.basis

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"
