"""Regenerate the bundled spec files in src/torsorkit/data/.

The expected blocks are hand-derived values, not computed by the library.
"""

import json
import sys
from pathlib import Path

from torsorkit.exactla import GF, QQ
from torsorkit.examples import (
    corrupted_c3_torsor,
    corrupted_sweedler_torsor,
    cyclic_group,
    ground_torsor,
    group_torsor,
    monoid_bialgebra,
    sqrt2_torsor,
    subgroup_basis,
    sweedler_hopf,
    sweedler_self_torsor,
    symmetric_group3,
)
from torsorkit.specfile import spec_document

DATA = Path(__file__).resolve().parents[1] / "src" / "torsorkit" / "data"


def torsor_doc(t, description, expected, B=None):
    return spec_document(t.name, t.algebra, mu=t.mu, B=B, expected=expected, description=description)


def documents():
    positive = {"torsor": True, "coinvariant_dim": 1}
    yield torsor_doc(ground_torsor(), "k itself, mu(1) = 1⊗1⊗1",
                     {**positive, "hopf_dim": 1, "theta_is_identity": True, "group_likes": 1})
    C2, C3, C4, S3 = cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group3()
    for G, name in [(C2, "c2"), (C3, "c3"), (S3, "s3")]:
        t = group_torsor(G, QQ, f"{name}_group_torsor")
        yield torsor_doc(t, f"group algebra Q[{name.upper()}], mu(g) = g⊗g^-1⊗g",
                         {**positive, "hopf_dim": G.order, "theta_is_identity": True, "group_likes": G.order})
    yield torsor_doc(sqrt2_torsor(), "Q(sqrt 2) = Q[x]/(x^2-2), mu(x) = 1/2 x⊗x⊗x",
                     {**positive, "hopf_dim": 2, "theta_is_identity": True, "group_likes": 1})
    for field in (QQ, GF(5)):
        t = sweedler_self_torsor(field)
        yield torsor_doc(t, f"Sweedler's 4-dim Hopf algebra over {field} as a torsor over itself",
                         {**positive, "hopf_dim": 4, "theta_is_identity": False, "group_likes": 2})
    yield torsor_doc(corrupted_c3_torsor(), "NEGATIVE: Q[C3] with mu(g) = g⊗g⊗g (left/right laws fail)",
                     {"torsor": False})
    yield torsor_doc(corrupted_sweedler_torsor(), "NEGATIVE: Sweedler torsor with one sign of mu(x) flipped",
                     {"torsor": False})
    t = group_torsor(C4, QQ, "c4_over_c2_btorsor")
    yield torsor_doc(t, "Q[C4] over B = Q[{e, g^2}], mu(g) = g⊗g^-1⊗g",
                     {**positive, "hopf_dim": 4, "group_likes": 4, "theta_is_identity": True,
                      "btorsor": True, "quotient_dim": 8, "hopf_dim_B": 2, "coinvariant_dim_B": 2},
                     B=subgroup_basis(C4, ["e", "g^2"]))
    t = group_torsor(S3, QQ, "s3_over_a3_btorsor")
    yield torsor_doc(t, "Q[S3] over B = Q[A3], mu(g) = g⊗g^-1⊗g",
                     {**positive, "hopf_dim": 6, "group_likes": 6, "theta_is_identity": True,
                      "btorsor": True, "quotient_dim": 12, "hopf_dim_B": 2, "coinvariant_dim_B": 3},
                     B=subgroup_basis(S3, ["e", "(123)", "(132)"]))
    m = monoid_bialgebra()
    yield spec_document("monoid_bialgebra", m.algebra, coalgebra=(m.delta, m.epsilon),
                        expected={"hopf": False},
                        description="NEGATIVE: Q{1, z}, z^2 = z, Δz = z⊗z, εz = 1 (bialgebra, no antipode)")
    H = sweedler_hopf()
    yield spec_document("sweedler_hopf", H.algebra, coalgebra=(H.delta, H.epsilon),
                        expected={"hopf": True, "antipode_order": 4},
                        description="Sweedler's 4-dim Hopf algebra: g^2 = 1, x^2 = 0, xg = -gx, Δx = x⊗1 + g⊗x")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    for doc in documents():
        path = DATA / f"{doc['name']}.json"
        path.write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
        print("wrote", path, file=sys.stderr)


if __name__ == "__main__":
    main()
