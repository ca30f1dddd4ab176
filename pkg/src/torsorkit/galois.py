"""Comodule algebras, Galois maps, coinvariants, and the way back to torsors."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteAlgebra, is_algebra_map, tensor_algebra
from .errors import GaloisFailure, UsageError
from .hopf import HopfAlgebra, hopf_from_torsor
from .linmap import LinearMap, Subspace
from .report import Failure, compare_maps
from .torsor import Torsor, descent_datum, torsor_from_hopf


@dataclass(eq=False)
class Coaction:
    algebra: FiniteAlgebra
    hopf: HopfAlgebra
    delta: LinearMap  # (n,) -> (n, d)

    def __post_init__(self):
        n, d = self.algebra.dim, self.hopf.dim
        if self.delta.dom_dim != n or self.delta.cod_dim != n * d:
            raise UsageError(f"coaction of shape {self.delta.dom}->{self.delta.cod} for dims {n}, {d}")
        self.delta = self.delta.regroup(dom=(n,), cod=(n, d))


def check_coaction(c: Coaction) -> list[Failure]:
    A, H, delta = c.algebra, c.hopf, c.delta
    failures = is_algebra_map(delta, A, tensor_algebra([A, H.algebra]), name="δ algebra map")
    failures += compare_maps(
        "coaction coassociativity", delta.apply(delta, 0), delta.apply(H.delta, 1),
        [A.labels], [A.labels, H.labels, H.labels],
    )
    failures += compare_maps(
        "coaction counit", delta.apply(H.epsilon, 1), LinearMap.identity(A.field, (A.dim,)),
        [A.labels], [A.labels],
    )
    return failures


def identity_subspace(field, n) -> Subspace:
    return Subspace(LinearMap.identity(field, (n,)), range(n))


def coaction_from_torsor(t: Torsor, H: HopfAlgebra) -> Coaction:
    """delta = mu, read in T (x) H through H's embedding in T (x) T."""
    if H.embedding is None:
        raise UsageError("H must carry its embedding into T⊗T")
    ambient = identity_subspace(t.field, t.dim).tensor(H.embedding)
    return Coaction(t.algebra, H, ambient.coords(t.mu))


def regular_coaction(H: HopfAlgebra) -> Coaction:
    return Coaction(H.algebra, H, H.delta)


def trivial_coaction(A: FiniteAlgebra, H: HopfAlgebra) -> Coaction:
    """x -> x (x) 1."""
    return Coaction(A, H, LinearMap.identity(A.field, (A.dim,)).tensor(H.algebra.unit_map))


def galois_map(c: Coaction) -> tuple[LinearMap, bool]:
    """beta(x (x) y) = x y(0) (x) y(1), and whether it is bijective."""
    A = c.algebra
    n = A.dim
    beta = LinearMap.identity(A.field, (n,)).tensor(c.delta).apply(A.mult, 0, 2)
    bijective = beta.dom_dim == beta.cod_dim and beta.inverse() is not None
    return beta, bijective


def check_beta_is_descent(t: Torsor, H: HopfAlgebra, beta: LinearMap) -> list[Failure]:
    """(id (x) embedding) beta = D."""
    lifted = beta.apply(H.embedding.basis, 1)
    D = descent_datum(t).D
    return compare_maps("β = D under H ⊂ T⊗T", lifted, D, t.labels(2), t.labels(3))


def coinvariants(c: Coaction) -> Subspace:
    """{x : delta(x) = x (x) 1}."""
    A, H = c.algebra, c.hopf
    x_one = LinearMap.identity(A.field, (A.dim,)).tensor(H.algebra.unit_map)
    return Subspace.kernel(c.delta - x_one)


def unit_line(A: FiniteAlgebra) -> Subspace:
    return Subspace.span(A.unit_map.regroup(cod=(A.dim,)))


def galois_section(c: Coaction) -> LinearMap:
    """h -> beta^{-1}(1 (x) h), a map H -> A (x) A."""
    beta, bijective = galois_map(c)
    if not bijective:
        raise GaloisFailure(f"the Galois map {beta.dom}->{beta.cod} is not bijective")
    d = c.hopf.dim
    one_h = c.algebra.unit_map.tensor(LinearMap.identity(c.algebra.field, (d,)))
    return beta.inverse() @ one_h


def torsor_from_galois(c: Coaction, name: str = "") -> Torsor:
    """mu(x) = x(0) (x) beta^{-1}(1 (x) x(1))."""
    if coinvariants(c) != unit_line(c.algebra):
        raise GaloisFailure("coinvariants are not k·1")
    gamma = galois_section(c)
    return Torsor(c.algebra, c.delta.apply(gamma, 1), name)


def hopf_roundtrip(H: HopfAlgebra):
    """H -> torsor_from_hopf(H) -> hopf_from_torsor, compared along h -> beta^{-1}(1 (x) h).

    Returns (H2, phi, failures) where phi: H -> H2 is the comparison map.
    """
    t = torsor_from_hopf(H)
    H2 = hopf_from_torsor(t)
    gamma = galois_section(regular_coaction(H))
    phi = H2.embedding.coords(gamma).regroup(dom=(H.dim,), cod=(H2.dim,))
    return H2, phi, compare_hopf(phi, H, H2)


def compare_hopf(phi: LinearMap, H: HopfAlgebra, H2: HopfAlgebra) -> list[Failure]:
    """Failures of phi: H -> H2 to be an isomorphism of Hopf algebras."""
    failures = []
    L, L2 = [H.labels], [H2.labels]
    if phi.dom_dim != phi.cod_dim or phi.inverse() is None:
        failures.append(Failure("φ bijective", "φ", f"rank {phi.rank()} for dims {H.dim} -> {H2.dim}"))
        return failures
    failures += is_algebra_map(phi, H.algebra, H2.algebra, name="φ algebra map")
    failures += compare_maps("φ preserves Δ", H2.delta @ phi, H.delta.apply(phi, 0).apply(phi, 1), L, L2 * 2)
    failures += compare_maps("φ preserves ε", H2.epsilon @ phi, H.epsilon, L, [])
    failures += compare_maps("φ preserves S", H2.antipode @ phi, phi @ H.antipode, L, L2)
    return failures


def torsor_roundtrip(t: Torsor) -> tuple[Torsor, list[Failure]]:
    """torsor -> (H, delta) -> torsor; failures list mismatches of mu."""
    H = hopf_from_torsor(t)
    t2 = torsor_from_galois(coaction_from_torsor(t, H), name=t.name)
    return t2, compare_maps("round trip μ", t2.mu, t.mu, t.labels(1), t.labels(3))
