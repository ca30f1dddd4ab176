"""Grunspan's endomorphism theta and its two defining identities."""

from __future__ import annotations

from .algebra import is_algebra_map
from .errors import UsageError
from .linmap import LinearMap
from .report import Failure, compare_maps
from .torsor import Torsor


def grunspan_theta(t: Torsor) -> LinearMap:
    """theta(x) = x1 . x2_3 . x2_2 . x2_1 . x3, where mu(x2) = x2_1 (x) x2_2 (x) x2_3.

    All five factors are multiplied in T itself, in the order written.
    """
    T = t.algebra
    five = t.mu.apply(t.mu, 1).permute((0, 3, 2, 1, 4))
    for _ in range(4):
        five = five.apply(T.mult, 0, 2)
    return five.regroup(cod=(T.dim,))


def mu_op(t: Torsor) -> LinearMap:
    """x -> x3 (x) x2 (x) x1."""
    return t.mu.permute((2, 1, 0))


def check_grunspan_axioms(t: Torsor, theta: LinearMap) -> list[Failure]:
    T = t.algebra
    n = T.dim
    if theta.dom_dim != n or theta.cod_dim != n:
        raise UsageError(f"theta has shape {theta.dom}->{theta.cod}, expected an endomorphism of dim {n}")
    theta = theta.regroup(dom=(n,), cod=(n,))
    mu = t.mu
    failures = is_algebra_map(theta, T, T, name="θ algebra endomorphism")
    lhs = mu.apply(mu, 0).apply(theta, 2)
    rhs = mu.apply(mu_op(t), 1)
    failures += compare_maps("θ identity (μ⊗id⊗id)μ then θ on leg 3 = (id⊗μ^op⊗id)μ", lhs, rhs, t.labels(1), t.labels(5))
    lhs = mu.apply(theta, 0).apply(theta, 1).apply(theta, 2)
    failures += compare_maps("θ identity (θ⊗θ⊗θ)μ = μθ", lhs, mu @ theta, t.labels(1), t.labels(3))
    return failures


def is_identity(theta: LinearMap) -> bool:
    return theta == LinearMap.identity(theta.field, (theta.dom_dim,))
