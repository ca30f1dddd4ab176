import random

import pytest

from torsorkit.exactla import GF, QQ
from torsorkit.examples import (
    cyclic_group,
    ground_torsor,
    group_torsor,
    random_group_hopf,
    sweedler_hopf,
    sweedler_self_torsor,
    symmetric_group3,
)
from torsorkit.grunspan import check_grunspan_axioms, grunspan_theta, is_identity
from torsorkit.hopf import check_hopf_axioms
from torsorkit.linmap import LinearMap
from torsorkit.torsor import check_torsor_axioms, torsor_from_hopf


def test_theta_passes_on_fixtures(positive):
    theta = grunspan_theta(positive)
    assert check_grunspan_axioms(positive, theta) == []


def test_unit_torsor_theta_is_identity():
    t = ground_torsor()
    assert is_identity(grunspan_theta(t))
    assert check_grunspan_axioms(t, LinearMap.identity(QQ, (1,))) == []


def test_s3_theta_is_identity():
    t = group_torsor(symmetric_group3())
    assert is_identity(grunspan_theta(t))


@pytest.mark.parametrize("field", [QQ, GF(5)])
def test_sweedler_theta_is_antipode_squared(field):
    t = sweedler_self_torsor(field)
    theta = grunspan_theta(t)
    S = sweedler_hopf(field).antipode
    assert theta == S @ S
    assert not is_identity(theta)
    x = 2
    assert theta.cols[x] == {x: field(-1)}


def test_sign_flip_fails_first_identity_only():
    t = group_torsor(cyclic_group(2))
    flip = LinearMap(QQ, (2,), (2,), [{0: QQ(1)}, {1: QQ(-1)}])
    checks = {f.check for f in check_grunspan_axioms(t, flip)}
    assert checks == {"θ identity (μ⊗id⊗id)μ then θ on leg 3 = (id⊗μ^op⊗id)μ"}


def test_non_endomorphism_is_reported():
    t = group_torsor(cyclic_group(3))
    zero = LinearMap.zero(QQ, (3,), (3,))
    checks = {f.check for f in check_grunspan_axioms(t, zero)}
    assert "θ algebra endomorphism: unit" in checks


def random_torsors(count=25, seed=20240611):
    rng = random.Random(seed)
    return [torsor_from_hopf(random_group_hopf(rng), name=f"random_{i}") for i in range(count)]


@pytest.mark.parametrize("t", random_torsors(), ids=lambda t: t.name)
def test_random_group_torsors(t):
    assert check_torsor_axioms(t) == []
    theta = grunspan_theta(t)
    assert check_grunspan_axioms(t, theta) == []
    # group algebras are cocommutative and S^2 = id, so theta is the identity
    assert is_identity(theta)


def test_random_hopf_algebras_are_hopf():
    rng = random.Random(7)
    for _ in range(5):
        H = random_group_hopf(rng)
        assert check_hopf_axioms(H) == []
