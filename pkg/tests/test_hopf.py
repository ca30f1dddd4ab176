import pytest
import sympy

from oracles import group_fixed_dim
from torsorkit.errors import AntipodeMissing
from torsorkit.exactla import QQ
from torsorkit.examples import (
    cyclic_group,
    ground_torsor,
    group_hopf,
    group_torsor,
    klein_group,
    monoid_bialgebra,
    sqrt2_torsor,
    sweedler_hopf,
    symmetric_group3,
)
from torsorkit.hopf import Bialgebra, HopfAlgebra, antipode_from_beta, beta_h, check_hopf_axioms, fixed_subspace, group_likes, hopf_from_torsor
from torsorkit.linmap import LinearMap, Subspace
from torsorkit.torsor import descent_datum


def test_fixed_point_dims_match_kernel_oracle():
    for G in (cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_group(), symmetric_group3()):
        V = fixed_subspace(descent_datum(group_torsor(G)))
        assert V.dim == group_fixed_dim(G) == G.order


def test_unit_torsor_gives_ground_field():
    H = hopf_from_torsor(ground_torsor())
    assert H.dim == 1
    one = LinearMap.identity(QQ, (1,))
    assert H.antipode == one and H.delta.cols == ({0: QQ(1)},)
    assert check_hopf_axioms(H) == []


def test_c2_hopf_is_group_algebra():
    H = hopf_from_torsor(group_torsor(cyclic_group(2)))
    assert H.dim == 2
    # spanned by h^-1 (x) h: e(x)e and g(x)g
    assert H.embedding == Subspace.from_rows(QQ, (2, 2), [[1, 0, 0, 0], [0, 0, 0, 1]])
    assert group_likes(H) == [0, 1]
    assert H.epsilon.cols == ({0: QQ(1)}, {0: QQ(1)})


def test_sqrt2_hopf_spanned_by_one_and_half_xx():
    H = hopf_from_torsor(sqrt2_torsor())
    assert H.embedding == Subspace.from_rows(QQ, (2, 2), [[1, 0, 0, 0], [0, 0, 0, QQ("1/2")]])
    # h = 1/2 x(x)x in H coordinates, via the embedding
    h = H.embedding.coords(LinearMap(QQ, (), (2, 2), [{3: QQ("1/2")}])).cols[0]
    assert H.epsilon(h) == {0: QQ(1)}
    assert H.delta(h) == {a * 2 + b: x * y for a, x in h.items() for b, y in h.items()}


def test_positive_fixtures_give_hopf_algebras(positive):
    H = hopf_from_torsor(positive)
    assert H.dim == positive.dim
    assert check_hopf_axioms(H) == []


def test_antipode_properties(positive):
    H = hopf_from_torsor(positive)
    S = H.antipode
    assert H.epsilon @ S == H.epsilon
    assert S(H.algebra.unit) == H.algebra.unit
    twisted = H.delta.apply(S, 0).apply(S, 1).permute((1, 0))
    assert H.delta @ S == twisted


def test_group_antipodes_are_inverses():
    G = cyclic_group(3)
    Hg = group_hopf(G)
    S = antipode_from_beta(Bialgebra(Hg.algebra, Hg.delta, Hg.epsilon))
    assert S.cols == ({0: QQ(1)}, {2: QQ(1)}, {1: QQ(1)})
    G2 = cyclic_group(2)
    H2 = group_hopf(G2)
    assert antipode_from_beta(Bialgebra(H2.algebra, H2.delta, H2.epsilon)) == LinearMap.identity(QQ, (2,))


def test_sweedler_antipode():
    H = sweedler_hopf()
    S = antipode_from_beta(Bialgebra(H.algebra, H.delta, H.epsilon))
    assert S == H.antipode
    x, gx = 2, 3
    assert S.cols[x] == {gx: QQ(-1)}
    S2 = S @ S
    assert S2.cols[x] == {x: QQ(-1)}
    assert S2 != LinearMap.identity(QQ, (4,))
    assert S2 @ S2 == LinearMap.identity(QQ, (4,))


def test_corrupted_coproduct_is_reported():
    H = group_hopf(cyclic_group(2))
    # Delta(g) = g (x) e
    bad = Bialgebra(H.algebra, LinearMap(QQ, (2,), (2, 2), [{0: QQ(1)}, {2: QQ(1)}]), H.epsilon)
    checks = {f.check for f in check_hopf_axioms(bad)}
    assert "left counit (ε⊗id)Δ = id" in checks
    assert any("counit" in c or "coassociativity" in c for c in checks)


def test_monoid_has_no_antipode():
    m = monoid_bialgebra()
    assert check_hopf_axioms(m) == []
    assert beta_h(m).rank() == 3
    with pytest.raises(AntipodeMissing, match="rank 3 < 4"):
        antipode_from_beta(m)


def test_monoid_antipode_equations_have_no_solution():
    # S(z) = a + b z must satisfy z S(z) = eps(z) 1 = 1, but z(a + b z) = (a + b) z:
    # coefficient of z gives a + b = 0, coefficient of 1 gives 0 = 1
    a, b = sympy.symbols("a b")
    assert sympy.linsolve([a + b, sympy.Integer(-1)], [a, b]) == sympy.EmptySet


def test_ground_field_hopf_passes():
    H = hopf_from_torsor(ground_torsor())
    assert isinstance(H, HopfAlgebra) and check_hopf_axioms(H) == []
