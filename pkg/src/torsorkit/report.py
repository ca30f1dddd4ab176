"""Check results.

Every ``check_*`` function returns a list of ``Failure``; an empty list means
the object passed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .linmap import LinearMap, multi_index


@dataclass(frozen=True)
class Failure:
    check: str
    witness: str
    detail: str = ""

    def to_json(self):
        return asdict(self)

    def __str__(self):
        return f"{self.check}: {self.witness}" + (f" ({self.detail})" if self.detail else "")


def tensor_label(flat: int, dims: Sequence[int], labels: Sequence[Sequence[str]]) -> str:
    if not dims:
        return "1"
    idx = multi_index(flat, dims)
    return "⊗".join(labels[t][i] for t, i in enumerate(idx))


def compare_maps(check: str, lhs: LinearMap, rhs: LinearMap, dom_labels, cod_labels) -> list[Failure]:
    """One Failure per domain basis element on which lhs and rhs disagree.

    ``dom_labels``/``cod_labels`` are per-leg label lists for the domain and
    codomain legs, used to name the witness and the offending coefficient.
    """
    failures = []
    z = lhs.field.zero
    for j, (a, b) in enumerate(zip(lhs.cols, rhs.cols)):
        if a == b:
            continue
        bad = sorted(r for r in set(a) | set(b) if a.get(r, z) != b.get(r, z))
        i = bad[0]
        failures.append(
            Failure(
                check,
                tensor_label(j, lhs.dom, dom_labels),
                f"coefficient of {tensor_label(i, lhs.cod, cod_labels)}: "
                f"lhs {a.get(i, z)}, rhs {b.get(i, z)}; {len(bad)} differing coefficient(s)",
            )
        )
    return failures
