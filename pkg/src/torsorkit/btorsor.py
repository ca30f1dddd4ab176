"""Torsors over a subalgebra B of T.

T (x)_B T is realized as the quotient of T (x) T by the span of
x b (x) y - x (x) b y.  Quotient coordinates are taken at the non-pivot
positions of the row-reduced relations, so the section picks plain basis
tensors (the earliest ones in index order) as representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .algebra import FiniteAlgebra, TensorAlgebra, check_algebra, tensor_algebra
from .errors import CoinvariantMismatch, GaloisFailure, InconsistencyError, UsageError
from .galois import Coaction, check_coaction, coinvariants
from .hopf import HopfAlgebra, assemble_hopf, basis_labels, fixed_subspace
from .linmap import LinearMap, Subspace
from .report import Failure, compare_maps, tensor_label
from .torsor import DescentDatum, check_descent_datum


@dataclass(eq=False)
class BExtension:
    algebra: FiniteAlgebra
    inclusion: LinearMap  # (b,) -> (n,), columns are the chosen basis of B

    def __post_init__(self):
        T = self.algebra
        n = T.dim
        if self.inclusion.cod_dim != n:
            raise UsageError("B basis vectors must live in T")
        self.inclusion = self.inclusion.regroup(dom=(self.inclusion.dom_dim,), cod=(n,))
        if self.inclusion.rank() != self.inclusion.dom_dim:
            raise UsageError("B basis is linearly dependent")
        span = self.subspace
        if not span.contains(T.unit_map.regroup(cod=(n,))):
            raise UsageError("B does not contain 1")
        prods = [T.product(a, b) for a in self.inclusion.cols for b in self.inclusion.cols]
        if not span.contains(LinearMap(T.field, (len(prods),), (n,), prods)):
            raise UsageError("B is not closed under multiplication")

    @classmethod
    def from_rows(cls, T: FiniteAlgebra, rows) -> BExtension:
        cols = [{i: T.field(x) for i, x in enumerate(r)} for r in rows]
        return cls(T, LinearMap(T.field, (len(cols),), (T.dim,), cols))

    @classmethod
    def ground(cls, T: FiniteAlgebra) -> BExtension:
        return cls(T, T.unit_map.regroup(dom=(1,), cod=(T.dim,)))

    @property
    def B_basis(self) -> tuple:
        return self.inclusion.cols

    @property
    def subspace(self) -> Subspace:
        return Subspace.span(self.inclusion)


@dataclass(eq=False)
class BalancedTensor:
    """T (x)_B T with its projection from, and section into, T (x) T."""

    ext: BExtension
    relations: LinearMap  # generators x b (x) y - x (x) b y as columns
    projection: LinearMap  # (n, n) -> (q,)
    section: LinearMap  # (q,) -> (n, n)
    labels: tuple

    @property
    def dim(self) -> int:
        return self.projection.cod_dim


def _stack(maps, field, dom) -> LinearMap:
    """Maps with a common domain, stacked into one map to (len, m)."""
    m = maps[0].cod_dim
    cols = []
    for j in range(maps[0].dom_dim):
        col = {}
        for k, f in enumerate(maps):
            for i, x in f.cols[j].items():
                col[k * m + i] = x
        cols.append(col)
    return LinearMap(field, dom, (len(maps), m), cols)


def tensor_over_B(ext: BExtension) -> BalancedTensor:
    T = ext.algebra
    n, F = T.dim, T.field
    ident = LinearMap.identity(F, (n,))
    gens = []
    for b in ext.B_basis:
        diff = T.right_mult(b).tensor(ident) - ident.tensor(T.left_mult(b))
        gens.extend(diff.cols)
    relations = LinearMap(F, (len(gens),), (n, n), gens)
    # eliminate from the last index backwards so representatives are the earliest tensors
    N = n * n
    rev = [[g.get(N - 1 - i, F.zero) for i in range(N)] for g in gens]
    R = Subspace.from_rows(F, (N,), rev)
    pivot_row = {N - 1 - p: j for j, p in enumerate(R.pivots)}
    free = [i for i in range(N) if i not in pivot_row]
    pos = {i: k for k, i in enumerate(free)}
    cols = []
    for i in range(N):
        if i in pos:
            cols.append({pos[i]: F.one})
        else:
            r = R.basis.cols[pivot_row[i]]
            cols.append({pos[N - 1 - j]: -x for j, x in r.items() if N - 1 - j in pos})
    q = len(free)
    projection = LinearMap(F, (n, n), (q,), cols)
    section = LinearMap(F, (q,), (n, n), [{i: F.one} for i in free])
    labels = tuple(tensor_label(i, (n, n), [T.labels, T.labels]) for i in free)
    return BalancedTensor(ext, relations, projection, section, labels)


@dataclass(eq=False)
class Centralizer:
    subspace: Subspace  # inside T (x)_B T
    algebra: FiniteAlgebra


def centralizer(ext: BExtension, quotient: BalancedTensor | None = None) -> Centralizer:
    """(T (x)_B T)^B with (x (x) y)(a (x) b) = a x (x) y b."""
    quotient = tensor_over_B(ext) if quotient is None else quotient
    T = ext.algebra
    n, F = T.dim, T.field
    ident = LinearMap.identity(F, (n,))
    pi, sigma = quotient.projection, quotient.section
    conds = [
        pi @ (T.left_mult(b).tensor(ident) - ident.tensor(T.right_mult(b))) @ sigma
        for b in ext.B_basis
    ]
    C = Subspace.kernel(_stack(conds, F, (quotient.dim,)))
    P = tensor_algebra([(T, True), (T, False)])
    lifts = (sigma @ C.basis).cols
    bad = []
    for z, s in enumerate(lifts):
        for r, rel in enumerate(quotient.relations.cols):
            if pi(P.product(s, rel)) or pi(P.product(rel, s)):
                bad.append(f"centralizer element {z} times relation {r}")
    if bad:
        raise InconsistencyError("centralizer product is not well defined: " + ", ".join(bad[:5]))
    d = C.dim
    products = LinearMap(F, (d, d), (quotient.dim,), [pi(P.product(a, b)) for a in lifts for b in lifts])
    mult = C.coords(products, error=InconsistencyError)
    unit = C.coords(LinearMap(F, (), (quotient.dim,), [pi(P.unit)]), error=InconsistencyError)
    labels = ["[" + quotient.labels[p] + "]" for p in C.pivots]
    algebra = FiniteAlgebra(F, labels, mult.regroup(dom=(d, d)), unit.cols[0])
    failures = check_algebra(algebra)
    if failures:
        raise InconsistencyError("centralizer product is not associative/unital: " + "; ".join(map(str, failures[:5])))
    return Centralizer(C, algebra)


@dataclass(eq=False)
class BTorsor:
    ext: BExtension
    mu: LinearMap  # a lift T -> T (x) T (x) T of mu0: T -> T (x) (T (x)_B T)
    name: str = ""

    def __post_init__(self):
        n = self.ext.algebra.dim
        if self.mu.dom_dim != n or self.mu.cod_dim != n**3:
            raise UsageError(f"mu has shape {self.mu.dom}->{self.mu.cod}, expected ({n},)->({n}, {n}, {n})")
        self.mu = self.mu.regroup(dom=(n,), cod=(n, n, n))

    @property
    def algebra(self) -> FiniteAlgebra:
        return self.ext.algebra

    @property
    def field(self):
        return self.ext.algebra.field


def projected_mu(bt: BTorsor, quotient: BalancedTensor) -> LinearMap:
    """mu0 = (id (x) pi) mu: T -> T (x) (T (x)_B T)."""
    n = bt.algebra.dim
    return LinearMap.identity(bt.field, (n,)).tensor(quotient.projection) @ bt.mu


def check_btorsor_axioms(bt: BTorsor, quotient: BalancedTensor | None = None,
                         cent: Centralizer | None = None) -> list[Failure]:
    T, mu = bt.algebra, bt.mu
    n, F = T.dim, T.field
    quotient = tensor_over_B(bt.ext) if quotient is None else quotient
    cent = centralizer(bt.ext, quotient) if cent is None else cent
    pi = quotient.projection
    ident = LinearMap.identity(F, (n,))
    id_pi = ident.tensor(pi)
    TL = [T.labels]
    QL = [quotient.labels]
    failures = []

    mu0 = id_pi @ mu
    inside = Subspace(ident, range(n)).tensor(cent.subspace)
    for i in range(n):
        if not inside.contains(LinearMap(F, (), mu0.cod, [mu0.cols[i]])):
            failures.append(Failure("μ lands in T⊗(T⊗_B T)^B", T.labels[i]))

    target = TensorAlgebra([(T, False), (T, True), (T, False)])
    if id_pi(mu(T.unit)) != id_pi(target.unit):
        failures.append(Failure("μ algebra map: unit", "1"))
    for i in range(n):
        for j in range(n):
            lhs = id_pi(mu(T.mult.cols[i * n + j]))
            rhs = id_pi(target.product(mu.cols[i], mu.cols[j]))
            if lhs != rhs:
                failures.append(Failure("μ algebra map: multiplicativity", f"({T.labels[i]}, {T.labels[j]})"))

    failures += compare_maps(
        "(1) x1x2⊗x3 = 1⊗x in T⊗_B T",
        pi @ mu.apply(T.mult, 0, 2), pi @ T.unit_map.tensor(ident), TL, QL,
    )
    failures += compare_maps(
        "(2) x1⊗x2x3 = x⊗1 in T⊗T",
        mu.apply(T.mult, 1, 3), ident.tensor(T.unit_map), TL, TL * 2,
    )
    inc = bt.ext.inclusion
    b_labels = [[f"b{k}" for k in range(inc.dom_dim)]]
    b11 = inc.tensor(T.unit_map).tensor(T.unit_map)
    failures += compare_maps("(3) μ(b) = b⊗1⊗1", id_pi @ mu @ inc, id_pi @ b11, b_labels, TL + QL)
    for k, b in enumerate(inc.cols):
        bb = b11.cols[k]
        for i in range(n):
            lhs = id_pi(mu(T.product(b, {i: F.one})))
            rhs = id_pi(target.product(bb, mu.cols[i]))
            if lhs != rhs:
                failures.append(Failure("μ left B-linear", f"b{k}·{T.labels[i]}"))
    pp = ident.tensor(pi).tensor(pi)
    failures += compare_maps(
        "(4) μ(x1)⊗x2⊗x3 = x1⊗x2⊗μ(x3)",
        pp @ mu.apply(mu, 0), pp @ mu.apply(mu, 2), TL, TL + QL + QL,
    )
    return failures


class BHopfResult(NamedTuple):
    hopf: HopfAlgebra
    coaction: Coaction
    quotient: BalancedTensor
    beta: LinearMap


def btorsor_descent_datum(bt: BTorsor, quotient: BalancedTensor) -> DescentDatum:
    """D(x (x) y) = x y1 (x) y2 (x) y3 on the left T-module T (x)_B T."""
    T = bt.algebra
    n, F = T.dim, T.field
    ident = LinearMap.identity(F, (n,))
    pi, sigma = quotient.projection, quotient.section
    D_lift = ident.tensor(bt.mu).apply(T.mult, 0, 2)
    id_pi = ident.tensor(pi)
    if any((id_pi @ D_lift @ quotient.relations).cols):
        raise InconsistencyError("D is not well defined on T⊗_B T")
    D = id_pi @ D_lift @ sigma
    action = pi @ ident.tensor(sigma).apply(T.mult, 0, 2)
    return DescentDatum(T, action, D, (quotient.dim,), [quotient.labels])


def hopf_from_btorsor(bt: BTorsor) -> BHopfResult:
    T = bt.algebra
    n, F = T.dim, T.field
    quotient = tensor_over_B(bt.ext)
    cent = centralizer(bt.ext, quotient)
    failures = check_btorsor_axioms(bt, quotient, cent)
    if failures:
        raise InconsistencyError("not a B-torsor: " + "; ".join(map(str, failures[:5])))
    pi, sigma = quotient.projection, quotient.section
    dd = btorsor_descent_datum(bt, quotient)
    bad = check_descent_datum(dd)
    if bad:
        raise InconsistencyError("D is not a descent datum: " + "; ".join(map(str, bad[:5])))
    V = fixed_subspace(dd)
    if not cent.subspace.contains(V.basis):
        raise InconsistencyError("fixed points of D are not inside the centralizer")
    d = V.dim
    lifts = sigma @ V.basis
    P = tensor_algebra([(T, True), (T, False)])
    products = LinearMap(F, (d, d), (quotient.dim,), [pi(P.product(a, b)) for a in lifts.cols for b in lifts.cols])
    unit = LinearMap(F, (), (quotient.dim,), [pi(P.unit)])
    delta_image = pi.tensor(pi) @ lifts.apply(bt.mu, 1)
    counit_image = T.mult @ lifts
    labels = basis_labels(V, [quotient.labels])
    H = assemble_hopf(F, V, labels, products, unit, delta_image, counit_image, T)

    ident = LinearMap.identity(F, (n,))
    mu0 = ident.tensor(pi) @ bt.mu
    delta = Subspace(ident, range(n)).tensor(V).coords(mu0)
    coaction = Coaction(T, H, delta)
    bad = check_coaction(coaction)
    if bad:
        raise InconsistencyError("δ is not a coaction: " + "; ".join(map(str, bad[:5])))
    beta = ident.tensor(coaction.delta).apply(T.mult, 0, 2) @ sigma
    if beta.dom_dim != beta.cod_dim or beta.inverse() is None:
        raise GaloisFailure(f"β: T⊗_B T -> T⊗H is not bijective (dims {beta.dom_dim} -> {beta.cod_dim})")
    if coinvariants(coaction) != bt.ext.subspace:
        raise CoinvariantMismatch("coinvariants of δ differ from B")
    return BHopfResult(H, coaction, quotient, beta)


def btorsor_from_galois_extension(A: FiniteAlgebra, H: HopfAlgebra, delta: LinearMap, B_basis, name: str = "") -> BTorsor:
    """mu(x) = x(0) (x) beta^{-1}(1 (x) x(1)), lifted to T (x) T (x) T."""
    ext = B_basis if isinstance(B_basis, BExtension) else BExtension.from_rows(A, B_basis)
    n, F = A.dim, A.field
    c = Coaction(A, H, delta)
    if coinvariants(c) != ext.subspace:
        raise GaloisFailure("coinvariants of δ differ from B")
    quotient = tensor_over_B(ext)
    ident = LinearMap.identity(F, (n,))
    beta_lift = ident.tensor(c.delta).apply(A.mult, 0, 2)
    if any((beta_lift @ quotient.relations).cols):
        raise GaloisFailure("β is not balanced over B")
    beta = beta_lift @ quotient.section
    inv = beta.inverse() if beta.dom_dim == beta.cod_dim else None
    if inv is None:
        raise GaloisFailure(f"β: T⊗_B T -> T⊗H is not bijective (dims {beta.dom_dim} -> {beta.cod_dim})")
    gamma = quotient.section @ inv @ A.unit_map.tensor(LinearMap.identity(F, (H.dim,)))
    return BTorsor(ext, c.delta.apply(gamma, 1), name)
