import pytest

from oracles import group_balanced_dim, group_centralizer_dim
from torsorkit.algebra import tensor_algebra
from torsorkit.btorsor import (
    BExtension,
    BTorsor,
    btorsor_from_galois_extension,
    centralizer,
    check_btorsor_axioms,
    hopf_from_btorsor,
    projected_mu,
    tensor_over_B,
)
from torsorkit.errors import GaloisFailure, UsageError
from torsorkit.exactla import QQ
from torsorkit.examples import corrupted_c3_torsor, cyclic_group, group_algebra, group_torsor, subgroup_basis, symmetric_group3
from torsorkit.hopf import group_likes, hopf_from_torsor
from torsorkit.linmap import LinearMap, flat_index
from torsorkit.galois import coinvariants

C4, S3 = cyclic_group(4), symmetric_group3()
A3 = ["e", "(123)", "(132)"]


def c4_over_c2():
    t = group_torsor(C4)
    return BTorsor(BExtension.from_rows(t.algebra, subgroup_basis(C4, ["e", "g^2"])), t.mu, "c4/c2")


def s3_over_a3():
    t = group_torsor(S3)
    return BTorsor(BExtension.from_rows(t.algebra, subgroup_basis(S3, A3)), t.mu, "s3/a3")


def test_extension_validation():
    T = group_algebra(C4)
    with pytest.raises(UsageError, match="contain 1"):
        BExtension.from_rows(T, subgroup_basis(C4, ["g^2"]))
    with pytest.raises(UsageError, match="closed"):
        BExtension.from_rows(T, subgroup_basis(C4, ["e", "g"]))
    with pytest.raises(UsageError, match="dependent"):
        BExtension.from_rows(T, [[1, 0, 0, 0], [2, 0, 0, 0]])


def test_ground_quotient_is_plain_tensor():
    T = group_algebra(S3)
    q = tensor_over_B(BExtension.ground(T))
    assert q.dim == 36
    assert q.projection == LinearMap.identity(QQ, (6, 6)).regroup(cod=(36,))
    assert q.section.regroup(cod=(36,)) == LinearMap.identity(QQ, (36,))


@pytest.mark.parametrize("G, members", [
    (cyclic_group(2), ["e", "g"]),
    (C4, ["e", "g^2"]),
    (S3, A3),
    (S3, ["e", "(12)"]),
])
def test_quotient_dims_match_row_reduction(G, members):
    T = group_algebra(G)
    ext = BExtension.from_rows(T, subgroup_basis(G, members))
    q = tensor_over_B(ext)
    assert q.dim == group_balanced_dim(G, [G.index(m) for m in members])
    assert q.dim == G.order**2 // len(members)
    assert not any((q.projection @ q.relations).cols)
    assert q.projection @ q.section == LinearMap.identity(QQ, (q.dim,))


def test_c2_over_itself_collapses_to_t():
    T = group_algebra(cyclic_group(2))
    q = tensor_over_B(BExtension.from_rows(T, [[1, 0], [0, 1]]))
    assert q.dim == 2
    assert q.labels == ("e⊗e", "e⊗g")


def test_centralizer_over_ground_is_op_tensor():
    T = group_algebra(cyclic_group(3))
    cent = centralizer(BExtension.ground(T))
    assert cent.subspace.dim == 9
    assert cent.algebra.mult == tensor_algebra([(T, True), (T, False)]).mult


@pytest.mark.parametrize("G, members", [(cyclic_group(2), ["e", "g"]), (C4, ["e", "g^2"]), (S3, A3), (S3, ["e", "(12)"])])
def test_centralizer_dims_match_oracle(G, members):
    T = group_algebra(G)
    cent = centralizer(BExtension.from_rows(T, subgroup_basis(G, members)))
    assert cent.subspace.dim == group_centralizer_dim(G, [G.index(m) for m in members])


def test_c4_centralizer_is_everything():
    # T commutative: every element of T (x)_B T commutes with B
    assert centralizer(c4_over_c2().ext).subspace.dim == 8


@pytest.mark.parametrize("make", [c4_over_c2, s3_over_a3])
def test_bundled_btorsors_pass(make):
    assert check_btorsor_axioms(make()) == []


def test_wrong_mu_over_b_fails():
    T = group_algebra(C4)
    n = 4
    mu = LinearMap(QQ, (n,), (n, n, n), [{flat_index((i, i, i), (n, n, n)): QQ(1)} for i in range(n)])
    bt = BTorsor(BExtension.from_rows(T, subgroup_basis(C4, ["e", "g^2"])), mu)
    checks = {f.check for f in check_btorsor_axioms(bt)}
    assert "(1) x1x2⊗x3 = 1⊗x in T⊗_B T" in checks


@pytest.mark.parametrize("make, order", [(c4_over_c2, 4), (s3_over_a3, 6)])
def test_hopf_over_b(make, order):
    bt = make()
    res = hopf_from_btorsor(bt)
    H = res.hopf
    assert H.dim == 2
    assert group_likes(H) == [0, 1]  # the quotient group of order 2
    assert coinvariants(res.coaction) == bt.ext.subspace
    assert res.quotient.dim == order * H.dim
    assert res.beta.inverse() is not None


def test_specialization_matches_k_pipeline(positive):
    bt = BTorsor(BExtension.ground(positive.algebra), positive.mu)
    assert check_btorsor_axioms(bt) == []
    res = hopf_from_btorsor(bt)
    H = hopf_from_torsor(positive)
    H_B = res.hopf
    assert H_B.labels == H.labels
    assert H_B.algebra.mult == H.algebra.mult and H_B.algebra.unit == H.algebra.unit
    assert H_B.delta == H.delta and H_B.epsilon == H.epsilon and H_B.antipode == H.antipode
    assert H_B.embedding.basis.cols == H.embedding.basis.cols


def test_specialization_of_negative_agrees():
    t = corrupted_c3_torsor()
    bt = BTorsor(BExtension.ground(t.algebra), t.mu)
    assert check_btorsor_axioms(bt)


@pytest.mark.parametrize("make", [c4_over_c2, s3_over_a3])
def test_btorsor_roundtrip(make):
    bt = make()
    res = hopf_from_btorsor(bt)
    bt2 = btorsor_from_galois_extension(bt.algebra, res.hopf, res.coaction.delta, bt.ext)
    assert check_btorsor_axioms(bt2) == []
    assert projected_mu(bt2, res.quotient) == projected_mu(bt, res.quotient)


def test_galois_extension_with_wrong_base_is_rejected():
    bt = c4_over_c2()
    res = hopf_from_btorsor(bt)
    with pytest.raises(GaloisFailure):
        btorsor_from_galois_extension(bt.algebra, res.hopf, res.coaction.delta, BExtension.ground(bt.algebra))


def test_ground_galois_extension_reproduces_torsor(positive):
    H = hopf_from_torsor(positive)
    res = hopf_from_btorsor(BTorsor(BExtension.ground(positive.algebra), positive.mu))
    bt2 = btorsor_from_galois_extension(positive.algebra, H, res.coaction.delta, BExtension.ground(positive.algebra))
    assert bt2.mu == positive.mu
