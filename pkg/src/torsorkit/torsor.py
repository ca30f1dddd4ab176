"""Noncommutative torsors (T, mu) and the descent datum they induce.

mu: T -> T (x) T^op (x) T is stored as a linear map (n,) -> (n, n, n); the
middle leg multiplies oppositely.  In Sweedler-type notation
mu(x) = x1 (x) x2 (x) x3 the axioms are

    mu(x1) (x) x2 (x) x3 = x1 (x) x2 (x) mu(x3)
    x1 x2 (x) x3 = 1 (x) x
    x1 (x) x2 x3 = x (x) 1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .algebra import FiniteAlgebra, TensorAlgebra, is_algebra_map
from .errors import UsageError
from .linmap import LinearMap
from .report import Failure, compare_maps


@dataclass(eq=False)
class Torsor:
    algebra: FiniteAlgebra
    mu: LinearMap
    name: str = ""

    def __post_init__(self):
        n = self.algebra.dim
        if self.mu.dom_dim != n or self.mu.cod_dim != n**3:
            raise UsageError(f"mu has shape {self.mu.dom}->{self.mu.cod}, expected ({n},)->({n}, {n}, {n})")
        self.mu = self.mu.regroup(dom=(n,), cod=(n, n, n))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    @cached_property
    def target(self) -> TensorAlgebra:
        """T (x) T^op (x) T."""
        T = self.algebra
        return TensorAlgebra([(T, False), (T, True), (T, False)])

    def labels(self, legs: int) -> list:
        return [self.algebra.labels] * legs


def check_torsor_axioms(t: Torsor) -> list[Failure]:
    T, mu = t.algebra, t.mu
    n = T.dim
    ident = LinearMap.identity(t.field, (n,))
    L = t.labels
    failures = is_algebra_map(mu, T, t.target, name="mu algebra map")
    failures += compare_maps("coassociativity", mu.apply(mu, 0), mu.apply(mu, 2), L(1), L(5))
    failures += compare_maps("left law x1x2⊗x3 = 1⊗x", mu.apply(T.mult, 0, 2), T.unit_map.tensor(ident), L(1), L(2))
    failures += compare_maps("right law x1⊗x2x3 = x⊗1", mu.apply(T.mult, 1, 3), ident.tensor(T.unit_map), L(1), L(2))
    return failures


@dataclass(eq=False)
class DescentDatum:
    """S/k descent datum D: M -> S (x) M on a left S-module M.

    ``action`` is the module structure S (x) M -> M; ``module_dims`` are the
    leg dimensions of M and ``module_labels`` their per-leg labels.
    """

    algebra: FiniteAlgebra
    action: LinearMap
    D: LinearMap
    module_dims: tuple
    module_labels: list = field(default_factory=list)

    @property
    def carrier_dim(self) -> int:
        return self.D.dom_dim


def check_descent_datum(dd: DescentDatum) -> list[Failure]:
    S, D, act = dd.algebra, dd.D, dd.action
    n = S.dim
    m_legs = len(dd.module_dims)
    idS = LinearMap.identity(S.field, (n,))
    idM = LinearMap.identity(S.field, dd.module_dims)
    ML = dd.module_labels or [[str(i) for i in range(d)] for d in dd.module_dims]
    SL = [S.labels]
    failures = compare_maps(
        "descent: left S-linearity",
        D @ act,
        idS.tensor(D).apply(S.mult, 0, 2),
        SL + ML,
        SL + ML,
    )
    failures += compare_maps(
        "descent: (S⊗D)D = (S⊗η⊗M)D",
        D.apply(D, 1, 1 + m_legs),
        D.apply(S.unit_map.tensor(idM), 1, 1 + m_legs),
        ML,
        SL + SL + ML,
    )
    failures += compare_maps("descent: m∘D = id", act @ D, idM, ML, ML)
    return failures


def descent_datum(t: Torsor) -> DescentDatum:
    """D(x (x) y) = x y1 (x) y2 (x) y3 on the left T-module T (x) T."""
    T = t.algebra
    n = T.dim
    ident = LinearMap.identity(t.field, (n,))
    D = ident.tensor(t.mu).apply(T.mult, 0, 2)
    action = T.mult.tensor(ident)
    return DescentDatum(T, action, D, (n, n), [T.labels, T.labels])


def check_mu_descent(t: Torsor, dd: DescentDatum | None = None) -> list[Failure]:
    """(T (x) D) mu = (T (x) eta (x) T (x) T) mu."""
    dd = descent_datum(t) if dd is None else dd
    n = t.dim
    lhs = t.mu.apply(dd.D, 1, 3)
    rhs = t.mu.apply(t.algebra.unit_map.tensor(LinearMap.identity(t.field, (n, n))), 1, 3)
    return compare_maps("(T⊗D)μ = (T⊗η⊗T⊗T)μ", lhs, rhs, t.labels(1), t.labels(4))


def torsor_from_hopf(H, name: str = "") -> Torsor:
    """mu(h) = h(1) (x) S(h(2)) (x) h(3), the torsor structure of H over itself."""
    mu = H.delta.apply(H.delta, 0).apply(H.antipode, 1)
    return Torsor(H.algebra, mu, name)
