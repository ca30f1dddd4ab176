"""Small algebras, Hopf algebras and torsors used as fixtures.

The torsor structure maps here are written out by hand (not produced by
``torsor_from_hopf``) so that the library constructions can be checked
against them.
"""

from __future__ import annotations

from dataclasses import dataclass
import random
from itertools import permutations
from typing import Sequence

from .algebra import FiniteAlgebra
from .exactla import GF, QQ, Field
from .hopf import Bialgebra, HopfAlgebra
from .linmap import LinearMap, flat_index
from .torsor import Torsor


@dataclass(frozen=True)
class Group:
    labels: tuple
    table: tuple  # table[i][j] = index of g_i g_j

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        return next(i for i in range(self.order) if all(self.table[i][j] == j for j in range(self.order)))

    def inverse(self, i: int) -> int:
        e = self.identity
        return next(j for j in range(self.order) if self.table[i][j] == e)

    def index(self, label: str) -> int:
        return self.labels.index(label)


def cyclic_group(n: int) -> Group:
    labels = ["e", "g"] + [f"g^{k}" for k in range(2, n)]
    return Group(tuple(labels[:n]), tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def klein_group() -> Group:
    labels = ("e", "a", "b", "ab")
    # bit encoding: a = 01, b = 10
    return Group(labels, tuple(tuple(i ^ j for j in range(4)) for i in range(4)))


def _cycle_label(p) -> str:
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        c, x = [], s
        while x not in seen:
            seen.add(x)
            c.append(str(x + 1))
            x = p[x]
        cycles.append("(" + "".join(c) + ")")
    return "".join(cycles) or "e"


def symmetric_group3() -> Group:
    perms = list(permutations(range(3)))
    labels = tuple(_cycle_label(p) for p in perms)
    # (p q)(x) = p(q(x))
    table = tuple(tuple(perms.index(tuple(p[q[x]] for x in range(3))) for q in perms) for p in perms)
    return Group(labels, table)


GROUPS = {
    "C1": lambda: cyclic_group(1),
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C5": lambda: cyclic_group(5),
    "C6": lambda: cyclic_group(6),
    "C2xC2": klein_group,
    "S3": symmetric_group3,
}


def group_algebra(G: Group, field: Field = QQ) -> FiniteAlgebra:
    constants = [(i, j, G.table[i][j], 1) for i in range(G.order) for j in range(G.order)]
    return FiniteAlgebra.from_structure_constants(field, G.labels, constants, {G.identity: 1})


def group_hopf(G: Group, field: Field = QQ) -> HopfAlgebra:
    A = group_algebra(G, field)
    n, one = G.order, field.one
    delta = LinearMap(field, (n,), (n, n), [{i * n + i: one} for i in range(n)])
    eps = LinearMap(field, (n,), (), [{0: one} for _ in range(n)])
    S = LinearMap(field, (n,), (n,), [{G.inverse(i): one} for i in range(n)])
    return HopfAlgebra(A, delta, eps, S)


def group_torsor(G: Group, field: Field = QQ, name: str = "") -> Torsor:
    """mu(g) = g (x) g^-1 (x) g."""
    n = G.order
    one = field.one
    cols = [{flat_index((i, G.inverse(i), i), (n, n, n)): one} for i in range(n)]
    return Torsor(group_algebra(G, field), LinearMap(field, (n,), (n, n, n), cols), name)


def ground_torsor(field: Field = QQ) -> Torsor:
    k = FiniteAlgebra.from_structure_constants(field, ["1"], [(0, 0, 0, 1)], [1])
    return Torsor(k, LinearMap(field, (1,), (1, 1, 1), [{0: field.one}]), "unit_torsor")


def sqrt2_algebra(field: Field = QQ) -> FiniteAlgebra:
    """k[x]/(x^2 - 2), basis 1, x."""
    return FiniteAlgebra.from_structure_constants(
        field, ["1", "x"], [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 2)], [1, 0]
    )


def sqrt2_torsor(field: Field = QQ) -> Torsor:
    """mu(1) = 1 (x) 1 (x) 1, mu(x) = 1/2 x (x) x (x) x."""
    dims = (2, 2, 2)
    mu = LinearMap(field, (2,), dims, [{0: field.one}, {flat_index((1, 1, 1), dims): field("1/2")}])
    return Torsor(sqrt2_algebra(field), mu, "sqrt2_torsor")


SWEEDLER_LABELS = ("1", "g", "x", "gx")


def sweedler_algebra(field: Field = QQ) -> FiniteAlgebra:
    """g^2 = 1, x^2 = 0, xg = -gx."""
    one, g, x, gx = range(4)
    constants = [(one, b, b, 1) for b in range(4)] + [(b, one, b, 1) for b in range(1, 4)]
    constants += [
        (g, g, one, 1), (g, x, gx, 1), (g, gx, x, 1),
        (x, g, gx, -1),
        (gx, g, x, -1),
    ]
    return FiniteAlgebra.from_structure_constants(field, SWEEDLER_LABELS, constants, [1, 0, 0, 0])


def _tensor_col(field, dims, terms):
    col = {}
    for idx, c in terms:
        k = flat_index(idx, dims)
        col[k] = col.get(k, field.zero) + field(c)
    return col


def sweedler_hopf(field: Field = QQ) -> HopfAlgebra:
    one, g, x, gx = range(4)
    d2 = (4, 4)
    delta = LinearMap(field, (4,), d2, [
        _tensor_col(field, d2, [((one, one), 1)]),
        _tensor_col(field, d2, [((g, g), 1)]),
        _tensor_col(field, d2, [((x, one), 1), ((g, x), 1)]),
        _tensor_col(field, d2, [((gx, g), 1), ((one, gx), 1)]),
    ])
    eps = LinearMap(field, (4,), (), [{0: field.one}, {0: field.one}, {}, {}])
    S = LinearMap(field, (4,), (4,), [{one: field.one}, {g: field.one}, {gx: field(-1)}, {x: field.one}])
    return HopfAlgebra(sweedler_algebra(field), delta, eps, S)


def sweedler_self_torsor(field: Field = QQ) -> Torsor:
    """mu(h) = h(1) (x) S(h(2)) (x) h(3), expanded by hand."""
    one, g, x, gx = range(4)
    d3 = (4, 4, 4)
    mu = LinearMap(field, (4,), d3, [
        _tensor_col(field, d3, [((one, one, one), 1)]),
        _tensor_col(field, d3, [((g, g, g), 1)]),
        _tensor_col(field, d3, [((x, one, one), 1), ((g, gx, one), -1), ((g, g, x), 1)]),
        _tensor_col(field, d3, [((gx, g, g), 1), ((one, x, g), 1), ((one, one, gx), 1)]),
    ])
    name = "sweedler_self_torsor" if field.p is None else f"sweedler_self_torsor_f{field.p}"
    return Torsor(sweedler_algebra(field), mu, name)


def monoid_bialgebra(field: Field = QQ) -> Bialgebra:
    """k{1, z}, z^2 = z, Delta(z) = z (x) z, eps(z) = 1: a bialgebra with no antipode."""
    A = FiniteAlgebra.from_structure_constants(
        field, ["1", "z"], [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)], [1, 0]
    )
    one = field.one
    delta = LinearMap(field, (2,), (2, 2), [{0: one}, {3: one}])
    eps = LinearMap(field, (2,), (), [{0: one}, {0: one}])
    return Bialgebra(A, delta, eps)


def corrupted_c3_torsor(field: Field = QQ) -> Torsor:
    """mu(g^k) = g^k (x) g^k (x) g^k on k[C3]: an algebra map, but not a torsor."""
    G = cyclic_group(3)
    one = field.one
    cols = [{flat_index((i, i, i), (3, 3, 3)): one} for i in range(3)]
    return Torsor(group_algebra(G, field), LinearMap(field, (3,), (3, 3, 3), cols), "corrupted_c3_torsor")


def corrupted_sweedler_torsor(field: Field = QQ) -> Torsor:
    """Sweedler self-torsor with the sign of g (x) gx (x) 1 in mu(x) flipped."""
    t = sweedler_self_torsor(field)
    cols = [dict(c) for c in t.mu.cols]
    k = flat_index((1, 3, 0), (4, 4, 4))
    cols[2][k] = -cols[2][k]
    return Torsor(t.algebra, LinearMap(field, (4,), (4, 4, 4), cols), "corrupted_sweedler_torsor")


def subgroup_basis(G: Group, members: Sequence[str], field: Field = QQ) -> list[list]:
    """Coordinate vectors of the subgroup elements inside k[G]."""
    rows = []
    for m in members:
        v = [field.zero] * G.order
        v[G.index(m)] = field.one
        rows.append(v)
    return rows


def transport_hopf(H: HopfAlgebra, P: LinearMap, labels=None) -> HopfAlgebra:
    """The Hopf algebra carried along the basis change P (new basis -> old coordinates)."""
    Pinv = P.inverse()
    if Pinv is None:
        raise ValueError("basis change is singular")
    A = H.algebra
    mult = Pinv @ A.mult @ P.tensor(P)
    unit = Pinv(A.unit)
    labels = labels or [f"b{i}" for i in range(H.dim)]
    B = FiniteAlgebra(H.field, labels, mult, unit)
    delta = Pinv.tensor(Pinv) @ H.delta @ P
    return HopfAlgebra(B, delta, H.epsilon @ P, Pinv @ H.antipode @ P)


PRIMES = (3, 5, 7, 11, 13, 101)


def random_group_hopf(rng: random.Random) -> HopfAlgebra:
    """A group algebra over a random small prime field, in a random monomial basis."""
    G = GROUPS[rng.choice(sorted(GROUPS))]()
    F = GF(rng.choice(PRIMES))
    n = G.order
    perm = list(range(n))
    rng.shuffle(perm)
    cols = [{perm[j]: F(rng.randrange(1, F.p))} for j in range(n)]
    P = LinearMap(F, (n,), (n,), cols)
    return transport_hopf(group_hopf(G, F), P)
