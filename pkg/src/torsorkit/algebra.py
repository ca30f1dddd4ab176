"""Finite-dimensional unital associative algebras by structure constants."""

from __future__ import annotations

from functools import cached_property
from itertools import product as iproduct
from typing import Mapping, Sequence

from .errors import UsageError
from .exactla import Field
from .linmap import LinearMap, multi_index
from .report import Failure


class FiniteAlgebra:
    """Algebra with basis e_0..e_{n-1} and e_i e_j = sum_k c_ij^k e_k.

    ``mult`` is the multiplication as a linear map (n, n) -> (n,); column
    i*n + j holds the coordinates of e_i e_j.  ``unit`` is a sparse
    coordinate dict of 1.
    """

    def __init__(self, field: Field, labels: Sequence[str], mult: LinearMap | None, unit: Mapping[int, object]):
        self.field = field
        self.labels = tuple(labels)
        n = len(self.labels)
        if n < 1:
            raise UsageError("an algebra needs at least one basis element")
        if len(set(self.labels)) != n:
            raise UsageError("basis labels must be distinct")
        if mult is not None:
            if mult.dom_dim != n * n or mult.cod_dim != n:
                raise UsageError(f"multiplication of shape {mult.dom}->{mult.cod} for dimension {n}")
            self._mult = mult.regroup(dom=(n, n), cod=(n,))
        self.unit = {i: field(x) for i, x in unit.items() if x}

    @classmethod
    def from_structure_constants(cls, field, labels, constants, unit) -> FiniteAlgebra:
        """``constants`` maps (i, j) to a coordinate sequence/dict, or is an
        iterable of (i, j, k, c) quadruples."""
        n = len(labels)
        cols = [{} for _ in range(n * n)]
        if isinstance(constants, Mapping):
            for (i, j), v in constants.items():
                if not isinstance(v, Mapping):
                    v = dict(enumerate(v))
                for k, c in v.items():
                    cols[i * n + j][k] = cols[i * n + j].get(k, field.zero) + field(c)
        else:
            for i, j, k, c in constants:
                for idx in (i, j, k):
                    if not 0 <= idx < n:
                        raise UsageError(f"structure constant index {(i, j, k)} out of range")
                cols[i * n + j][k] = cols[i * n + j].get(k, field.zero) + field(c)
        if not isinstance(unit, Mapping):
            unit = dict(enumerate(unit))
        return cls(field, labels, LinearMap(field, (n, n), (n,), cols), unit)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def mult(self) -> LinearMap:
        return self._mult

    @cached_property
    def unit_map(self) -> LinearMap:
        """eta: k -> A."""
        return LinearMap(self.field, (), (self.dim,), [self.unit])

    def product(self, u: dict, v: dict) -> dict:
        n = self.dim
        cols = self.mult.cols
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                xy = x * y
                for k, c in cols[i * n + j].items():
                    out[k] = out.get(k, 0) + xy * c
        return {k: c for k, c in out.items() if c}

    def constant(self, i, j, k):
        return self.mult.cols[i * self.dim + j].get(k, self.field.zero)

    def left_mult(self, u: dict) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim,), [self.product(u, {j: self.field.one}) for j in range(self.dim)])

    def right_mult(self, u: dict) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim,), [self.product({j: self.field.one}, u) for j in range(self.dim)])

    def basis_vector(self, i) -> dict:
        if isinstance(i, str):
            i = self.labels.index(i)
        return {i: self.field.one}

    def element(self, coords) -> Element:
        if isinstance(coords, Mapping):
            coords = {k: self.field(v) for k, v in coords.items()}
        else:
            coords = list(coords)
            if len(coords) != self.dim:
                raise UsageError(f"{len(coords)} coordinates for dimension {self.dim}")
            coords = {k: self.field(v) for k, v in enumerate(coords)}
        return Element(self, coords)

    def e(self, i) -> Element:
        return Element(self, self.basis_vector(i))

    def one(self) -> Element:
        return Element(self, dict(self.unit))

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mult.cols[i * n + j] == self.mult.cols[j * n + i] for i in range(n) for j in range(i))

    def same_as(self, other: FiniteAlgebra) -> bool:
        return self.field == other.field and self.dim == other.dim and self.mult == other.mult and self.unit == other.unit

    def __repr__(self):
        return f"FiniteAlgebra({self.field}, {list(self.labels)})"


class Element:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: FiniteAlgebra, coords: dict):
        self.algebra = algebra
        self.coords = {k: v for k, v in coords.items() if v}

    def _same(self, other):
        if not isinstance(other, Element):
            return False
        if other.algebra is not self.algebra:
            raise UsageError("elements of different algebras")
        return True

    def __mul__(self, other):
        if self._same(other):
            return Element(self.algebra, self.algebra.product(self.coords, other.coords))
        c = self.algebra.field(other)
        return Element(self.algebra, {k: c * v for k, v in self.coords.items()})

    def __rmul__(self, other):
        c = self.algebra.field(other)
        return Element(self.algebra, {k: c * v for k, v in self.coords.items()})

    def __add__(self, other):
        self._same(other)
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, 0) + v
        return Element(self.algebra, out)

    def __neg__(self):
        return Element(self.algebra, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    __hash__ = None

    def dense(self) -> list:
        z = self.algebra.field.zero
        return [self.coords.get(i, z) for i in range(self.algebra.dim)]

    def __repr__(self):
        if not self.coords:
            return "0"
        out = ""
        for k, v in sorted(self.coords.items()):
            s = str(v)
            sign, mag = ("-", s[1:]) if s.startswith("-") else ("+", s)
            term = self.algebra.labels[k] if mag == "1" else f"{mag}·{self.algebra.labels[k]}"
            out += (f" {sign} " if out else ("-" if sign == "-" else "")) + term
        return out


def multiply(a: Element, b: Element) -> Element:
    if a.algebra is not b.algebra:
        raise UsageError("elements of different algebras")
    return a * b


def check_algebra(A: FiniteAlgebra) -> list[Failure]:
    failures = []
    n = A.dim
    one = A.field.one
    for i in range(n):
        ei = {i: one}
        if A.product(A.unit, ei) != ei:
            failures.append(Failure("left unit", A.labels[i], f"1·{A.labels[i]} = {Element(A, A.product(A.unit, ei))}"))
        if A.product(ei, A.unit) != ei:
            failures.append(Failure("right unit", A.labels[i], f"{A.labels[i]}·1 = {Element(A, A.product(ei, A.unit))}"))
    cols = A.mult.cols
    for i, j in iproduct(range(n), repeat=2):
        ij = cols[i * n + j]
        for k in range(n):
            lhs = A.product(ij, {k: one})
            rhs = A.product({i: one}, cols[j * n + k])
            if lhs != rhs:
                failures.append(
                    Failure(
                        "associativity",
                        f"({A.labels[i]}, {A.labels[j]}, {A.labels[k]})",
                        f"(ab)c = {Element(A, lhs)}, a(bc) = {Element(A, rhs)}",
                    )
                )
    return failures


def opposite(A: FiniteAlgebra) -> FiniteAlgebra:
    if isinstance(A, TensorAlgebra):
        return TensorAlgebra([(f, not op) for f, op in A.factors])
    n = A.dim
    cols = [A.mult.cols[j * n + i] for i in range(n) for j in range(n)]
    return FiniteAlgebra(A.field, A.labels, LinearMap(A.field, (n, n), (n,), cols), A.unit)


class TensorAlgebra(FiniteAlgebra):
    """A_1 (x) ... (x) A_m, each factor straight or opposite.

    Products are computed factor by factor; the full structure-constant map
    is only built if someone asks for ``mult``.
    """

    def __init__(self, factors: Sequence[tuple[FiniteAlgebra, bool]]):
        if not factors:
            raise UsageError("need at least one factor")
        fields = {f.field for f, _ in factors}
        if len(fields) != 1:
            raise UsageError("tensor factors over different fields")
        self.factors = tuple((f, bool(op)) for f, op in factors)
        self.dims = tuple(f.dim for f, _ in self.factors)
        labels = ["⊗".join(f.labels[i] for (f, _), i in zip(self.factors, idx)) for idx in iproduct(*(range(d) for d in self.dims))]
        unit = LinearMap(factors[0][0].field, (), (), [{0: factors[0][0].field.one}])
        for f, _ in self.factors:
            unit = unit.tensor(f.unit_map)
        super().__init__(fields.pop(), labels, None, unit.cols[0])

    @cached_property
    def mult(self) -> LinearMap:
        n = self.dim
        one = self.field.one
        cols = [self.product({i: one}, {j: one}) for i in range(n) for j in range(n)]
        return LinearMap(self.field, (n, n), (n,), cols)

    def product(self, u: dict, v: dict) -> dict:
        dims = self.dims
        out = {}
        for a, x in u.items():
            ma = multi_index(a, dims)
            for b, y in v.items():
                mb = multi_index(b, dims)
                terms = {0: x * y}
                for (alg, op), d, i, j in zip(self.factors, dims, ma, mb):
                    col = alg.mult.cols[j * d + i] if op else alg.mult.cols[i * d + j]
                    new = {}
                    for idx, c in terms.items():
                        base = idx * d
                        for k, z in col.items():
                            key = base + k
                            new[key] = new.get(key, 0) + c * z
                    terms = new
                for k, c in terms.items():
                    out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}


def tensor_algebra(factors) -> FiniteAlgebra:
    """Factors are algebras or (algebra, opposite?) pairs; a single straight
    factor is returned unchanged."""
    norm = [f if isinstance(f, tuple) else (f, False) for f in factors]
    if len(norm) == 1 and not norm[0][1]:
        return norm[0][0]
    return TensorAlgebra(norm)


def ground_algebra(field: Field) -> FiniteAlgebra:
    """k as a one-dimensional algebra."""
    return FiniteAlgebra.from_structure_constants(field, ["1"], {(0, 0): [1]}, [1])


def is_algebra_map(f: LinearMap, A: FiniteAlgebra, B: FiniteAlgebra, name: str = "algebra map") -> list[Failure]:
    if f.dom_dim != A.dim or f.cod_dim != B.dim:
        raise UsageError(f"map {f.dom}->{f.cod} does not go from dim {A.dim} to dim {B.dim}")
    failures = []
    if f(A.unit) != B.unit:
        failures.append(Failure(f"{name}: unit", "1", f"f(1) = {Element(B, f(A.unit))}"))
    n = A.dim
    images = f.cols
    for i, j in iproduct(range(n), repeat=2):
        lhs = f(A.mult.cols[i * n + j])
        rhs = B.product(images[i], images[j])
        if lhs != rhs:
            failures.append(
                Failure(
                    f"{name}: multiplicativity",
                    f"({A.labels[i]}, {A.labels[j]})",
                    f"f(ab) = {Element(B, lhs)}, f(a)f(b) = {Element(B, rhs)}",
                )
            )
    return failures

