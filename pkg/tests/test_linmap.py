from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.physics.quantum import TensorProduct

from oracles import to_sympy
from torsorkit.errors import MembershipFailure, UsageError
from torsorkit.exactla import QQ, Matrix
from torsorkit.linmap import LinearMap, Subspace, flat_index, multi_index


def random_map(draw, dom, cod):
    m, n = 1, 1
    for d in dom:
        n *= d
    for d in cod:
        m *= d
    rows = draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=m, max_size=m))
    return LinearMap.from_matrix(Matrix.from_rows(QQ, rows), dom=dom, cod=cod), sympy.Matrix(rows)


def S(f: LinearMap) -> sympy.Matrix:
    return to_sympy(f.matrix().entries)


def test_big_endian_index():
    assert flat_index((1, 0, 2), (2, 3, 4)) == 1 * 12 + 0 * 4 + 2
    assert multi_index(14, (2, 3, 4)) == (1, 0, 2)
    assert flat_index((), ()) == 0


dims = st.integers(1, 3)


@settings(max_examples=40, deadline=None)
@given(st.data(), dims, dims, dims, dims)
def test_tensor_is_kronecker(data, a, b, c, d):
    f, F = random_map(data.draw, (a,), (b,))
    g, G = random_map(data.draw, (c,), (d,))
    assert S(f.tensor(g)) == TensorProduct(F, G)


@settings(max_examples=40, deadline=None)
@given(st.data(), dims, dims, dims, dims)
def test_apply_is_id_tensor_f_tensor_id(data, a, b, c, k):
    v, V = random_map(data.draw, (k,), (a, b, c))
    f, F = random_map(data.draw, (b,), (2,))
    lhs = v.apply(f, 1)
    rhs = TensorProduct(sympy.eye(a), TensorProduct(F, sympy.eye(c))) * V
    assert S(lhs) == rhs
    assert lhs.cod == (a, 2, c)


@settings(max_examples=30, deadline=None)
@given(st.data(), st.sampled_from(list(permutations(range(3)))))
def test_permute_moves_legs(data, perm):
    dims3 = (2, 3, 2)
    v, _ = random_map(data.draw, (2,), dims3)
    w = v.permute(perm)
    for j, col in enumerate(v.cols):
        for r, x in col.items():
            old = multi_index(r, dims3)
            new = tuple(old[p] for p in perm)
            assert w.cols[j][flat_index(new, w.cod)] == x


def test_compose_and_inverse():
    f = LinearMap.from_matrix(Matrix.from_rows(QQ, [[1, 1], [0, 1]]))
    assert f.inverse() @ f == LinearMap.identity(QQ, (2,))
    assert LinearMap.from_matrix(Matrix.from_rows(QQ, [[1, 2], [2, 4]])).inverse() is None
    with pytest.raises(UsageError):
        f @ LinearMap.identity(QQ, (3,))


def test_subspace_coords_and_membership():
    V = Subspace.from_rows(QQ, (3,), [[1, 1, 0], [0, 2, 2]])
    assert V.dim == 2
    x = LinearMap(QQ, (1,), (3,), [{0: QQ(1), 1: QQ(3), 2: QQ(2)}])
    c = V.coords(x)
    assert V.basis @ c == x
    with pytest.raises(MembershipFailure):
        V.coords(LinearMap(QQ, (1,), (3,), [{0: QQ(1)}]))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_kernel_matches_sympy(data):
    f, F = random_map(data.draw, (4,), (3,))
    K = Subspace.kernel(f)
    assert K.dim == len(F.nullspace())
    assert not any((f @ K.basis).cols)


def test_tensor_of_subspaces():
    V = Subspace.from_rows(QQ, (2,), [[1, 1]])
    W = Subspace.from_rows(QQ, (3,), [[1, 0, 0], [0, 1, Fraction(1, 2)]])
    VW = V.tensor(W)
    assert VW.dim == 2
    assert VW == Subspace.span(V.basis.tensor(W.basis))
