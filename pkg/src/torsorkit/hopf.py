"""The Hopf algebra H = {fixed points of D} inside T (x) T, and antipodes.

H is a subalgebra of T^op (x) T; its comultiplication and counit are

    Delta(x (x) y) = x (x) y1 (x) y2 (x) y3,      eps(x (x) y) = x y,

and the antipode is read off from the inverse of
beta_H(g (x) h) = g h(1) (x) h(2) as S(h) = (id (x) eps) beta_H^{-1}(1 (x) h).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteAlgebra, check_algebra, ground_algebra, is_algebra_map, tensor_algebra
from .errors import AntipodeMissing, ClosureFailure, CounitNotScalar, InconsistencyError, MembershipFailure
from .linmap import LinearMap, Subspace
from .report import Failure, compare_maps, tensor_label
from .torsor import DescentDatum, Torsor, check_descent_datum, descent_datum


@dataclass(eq=False)
class Bialgebra:
    algebra: FiniteAlgebra
    delta: LinearMap
    epsilon: LinearMap

    def __post_init__(self):
        d = self.algebra.dim
        self.delta = self.delta.regroup(dom=(d,), cod=(d, d))
        self.epsilon = self.epsilon.regroup(dom=(d,), cod=())

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    @property
    def labels(self):
        return self.algebra.labels


@dataclass(eq=False)
class HopfAlgebra(Bialgebra):
    antipode: LinearMap
    # H realized inside T (x) T (or T (x)_B T); None for abstract Hopf algebras
    embedding: Subspace | None = None

    def __post_init__(self):
        super().__post_init__()
        d = self.algebra.dim
        self.antipode = self.antipode.regroup(dom=(d,), cod=(d,))


def fixed_subspace(dd: DescentDatum) -> Subspace:
    """{m : D(m) = 1 (x) m}."""
    idM = LinearMap.identity(dd.algebra.field, dd.module_dims)
    return Subspace.kernel(dd.D - dd.algebra.unit_map.tensor(idM))


def beta_h(B: Bialgebra) -> LinearMap:
    d = B.dim
    return LinearMap.identity(B.field, (d,)).tensor(B.delta).apply(B.algebra.mult, 0, 2)


def antipode_from_beta(B: Bialgebra) -> LinearMap:
    d = B.dim
    beta = beta_h(B)
    inv = beta.inverse()
    if inv is None:
        raise AntipodeMissing(f"beta_H is singular (rank {beta.rank()} < {d * d}); the bialgebra is not Hopf")
    one_h = B.algebra.unit_map.tensor(LinearMap.identity(B.field, (d,)))
    S = (inv @ one_h).apply(B.epsilon, 1).regroup(dom=(d,), cod=(d,))
    failures = _antipode_failures(B, S)
    if failures:
        raise InconsistencyError("antipode from beta_H fails the antipode axioms: " + "; ".join(map(str, failures)))
    return S


def _antipode_failures(B: Bialgebra, S: LinearMap) -> list[Failure]:
    A = B.algebra
    L = [A.labels]
    unit_counit = A.unit_map @ B.epsilon
    failures = compare_maps("antipode: ∇(S⊗id)Δ = ηε", B.delta.apply(S, 0).apply(A.mult, 0, 2), unit_counit, L, L)
    failures += compare_maps("antipode: ∇(id⊗S)Δ = ηε", B.delta.apply(S, 1).apply(A.mult, 0, 2), unit_counit, L, L)
    return failures


def check_hopf_axioms(H: Bialgebra) -> list[Failure]:
    A = H.algebra
    d = A.dim
    ident = LinearMap.identity(H.field, (d,))
    L = [A.labels]
    failures = [Failure("algebra: " + f.check, f.witness, f.detail) for f in check_algebra(A)]
    failures += compare_maps("coassociativity", H.delta.apply(H.delta, 0), H.delta.apply(H.delta, 1), L, L * 3)
    failures += compare_maps("left counit (ε⊗id)Δ = id", H.delta.apply(H.epsilon, 0), ident, L, L)
    failures += compare_maps("right counit (id⊗ε)Δ = id", H.delta.apply(H.epsilon, 1), ident, L, L)
    failures += is_algebra_map(H.delta, A, tensor_algebra([A, A]), name="Δ algebra map")
    failures += is_algebra_map(H.epsilon, A, ground_algebra(H.field), name="ε algebra map")
    if isinstance(H, HopfAlgebra):
        failures += _antipode_failures(H, H.antipode)
    return failures


def scalar_coords(A: FiniteAlgebra, X: LinearMap, error=CounitNotScalar) -> LinearMap:
    """Columns of X as multiples of 1_A, or raise."""
    return Subspace.span(A.unit_map).coords(X, error=error).regroup(cod=())


def assemble_hopf(field, basis: Subspace, labels, products: LinearMap, unit: LinearMap,
                  delta_image: LinearMap, counit_image: LinearMap, base: FiniteAlgebra) -> HopfAlgebra:
    """Hopf algebra on ``basis`` from ambient images of its structure maps.

    ``products`` (d, d) -> ambient holds the ambient product of basis pairs,
    ``unit`` the ambient unit, ``delta_image`` the image of Delta in
    ambient (x) ambient, and ``counit_image`` the images x y in ``base``.
    """
    d = basis.dim
    try:
        mult = basis.coords(products, error=ClosureFailure)
    except ClosureFailure as exc:
        raise ClosureFailure(f"H is not closed under the product: {exc}") from None
    try:
        unit_coords = basis.coords(unit, error=ClosureFailure)
    except ClosureFailure:
        raise ClosureFailure("the unit of the ambient algebra is not in H") from None
    try:
        delta = basis.tensor(basis).coords(delta_image)
    except MembershipFailure as exc:
        raise MembershipFailure(f"Δ(H) is not contained in H⊗H: {exc}") from None
    try:
        epsilon = scalar_coords(base, counit_image)
    except CounitNotScalar as exc:
        raise CounitNotScalar(f"x·y is not a scalar multiple of 1 for some x⊗y in H: {exc}") from None
    algebra = FiniteAlgebra(field, labels, mult.regroup(dom=(d, d)), unit_coords.cols[0])
    bi = Bialgebra(algebra, delta, epsilon)
    S = antipode_from_beta(bi)
    H = HopfAlgebra(algebra, bi.delta, bi.epsilon, S, basis)
    failures = check_hopf_axioms(H)
    if failures:
        raise InconsistencyError("constructed H fails the Hopf axioms: " + "; ".join(map(str, failures)))
    return H


def basis_labels(basis: Subspace, leg_labels) -> list[str]:
    return ["[" + tensor_label(p, basis.ambient, leg_labels) + "]" for p in basis.pivots]


def hopf_from_torsor(t: Torsor) -> HopfAlgebra:
    T = t.algebra
    n = T.dim
    dd = descent_datum(t)
    bad = check_descent_datum(dd)
    if bad:
        raise InconsistencyError("D is not a descent datum: " + "; ".join(map(str, bad)))
    V = fixed_subspace(dd)
    d = V.dim
    Vb = V.basis
    P = tensor_algebra([(T, True), (T, False)])
    products = LinearMap(t.field, (d, d), (n, n), [P.product(a, b) for a in Vb.cols for b in Vb.cols])
    unit = LinearMap(t.field, (), (n, n), [P.unit])
    delta_image = Vb.apply(t.mu, 1)
    counit_image = T.mult @ Vb
    labels = basis_labels(V, [T.labels, T.labels])
    return assemble_hopf(t.field, V, labels, products, unit, delta_image, counit_image, T)


def group_likes(H: Bialgebra) -> list[int]:
    """Indices of basis elements h with Δh = h⊗h and εh = 1."""
    d = H.dim
    one = H.field.one
    return [
        i for i in range(d)
        if H.delta.cols[i] == {i * d + i: one} and H.epsilon.cols[i] == {0: one}
    ]
