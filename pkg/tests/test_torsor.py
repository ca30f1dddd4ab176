from hypothesis import given, settings, strategies as st

from oracles import group_descent_matrix, group_mu, sqrt2_descent_matrix, to_sympy
from torsorkit.exactla import QQ
from torsorkit.examples import (
    corrupted_c3_torsor,
    ground_torsor,
    cyclic_group,
    group_hopf,
    group_torsor,
    sqrt2_torsor,
    sweedler_hopf,
    sweedler_self_torsor,
    symmetric_group3,
)
from torsorkit.linmap import LinearMap, flat_index
from torsorkit.torsor import Torsor, check_descent_datum, check_mu_descent, check_torsor_axioms, descent_datum, torsor_from_hopf


def test_positive_fixtures_pass(positive):
    assert check_torsor_axioms(positive) == []


def test_negative_fixtures_fail_with_witness(negative):
    failures = check_torsor_axioms(negative)
    assert failures
    assert all(f.witness for f in failures)


def test_corrupted_c3_breaks_the_unit_laws():
    checks = {f.check for f in check_torsor_axioms(corrupted_c3_torsor())}
    assert any(c.startswith("left law") for c in checks)
    assert any(c.startswith("right law") for c in checks)


def test_c2_group_torsor_mu_matches_expansion():
    G = cyclic_group(2)
    t = group_torsor(G)
    for g, expected in enumerate(group_mu(G)):
        assert t.mu.cols[g] == {flat_index(k, (2, 2, 2)): v for k, v in expected.items()}


def test_group_descent_matrix_matches_oracle():
    for G in (cyclic_group(2), cyclic_group(3), symmetric_group3()):
        dd = descent_datum(group_torsor(G))
        assert to_sympy(dd.D.matrix().entries) == group_descent_matrix(G)


def test_sqrt2_descent_matrix_matches_hand_expansion():
    dd = descent_datum(sqrt2_torsor())
    M = to_sympy(dd.D.matrix().entries)
    assert M.shape == (8, 4)
    assert M == sqrt2_descent_matrix()
    assert check_descent_datum(dd) == []


def test_descent_identities_hold(positive):
    dd = descent_datum(positive)
    assert check_descent_datum(dd) == []
    assert check_mu_descent(positive, dd) == []


def test_unit_torsor_descent_is_trivial():
    dd = descent_datum(ground_torsor())
    assert dd.D.cols == ({0: QQ(1)},)


def test_torsor_from_hopf_reproduces_hand_written_mu():
    G = cyclic_group(2)
    assert torsor_from_hopf(group_hopf(G)).mu == group_torsor(G).mu
    assert torsor_from_hopf(sweedler_hopf()).mu == sweedler_self_torsor().mu
    assert check_torsor_axioms(torsor_from_hopf(sweedler_hopf())) == []


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 63), st.integers(1, 3), st.sampled_from(["c3", "sweedler"]))
def test_perturbing_one_coefficient_is_detected(pos, delta, which):
    t = group_torsor(cyclic_group(3)) if which == "c3" else sweedler_self_torsor()
    n = t.dim
    j, r = divmod(pos % (n * n**3), n**3)
    cols = [dict(c) for c in t.mu.cols]
    cols[j][r] = cols[j].get(r, QQ(0)) + delta
    bad = Torsor(t.algebra, LinearMap(QQ, (n,), (n, n, n), cols))
    assert check_torsor_axioms(bad)
