"""JSON spec files: an algebra, optionally mu, a subalgebra B, a coalgebra.

Indices may be given as 0-based integers or as basis labels.  Scalars are
strings ("3", "-1/2"), read in the declared field.  Tensor indices follow
the big-endian lexicographic convention and files must say so:

    "mu": {"convention": "big-endian-lex",
           "entries": [[["g", "g", "g"], "g", "1"], ...]}

Each mu entry is (row, column, scalar) with row a multi-index or a flat
offset into T (x) T (x) T and column a basis element of T.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .algebra import FiniteAlgebra
from .btorsor import BExtension, BTorsor
from .errors import ParseError, UsageError, ValidationError
from .exactla import Field
from .hopf import Bialgebra
from .linmap import LinearMap, flat_index, multi_index
from .torsor import Torsor

CONVENTION = "big-endian-lex"


@dataclass(eq=False)
class SpecFile:
    name: str
    field: Field
    algebra: FiniteAlgebra
    mu: LinearMap | None = None
    B: list | None = None
    coalgebra: tuple | None = None  # (delta, epsilon)
    expected: dict = field(default_factory=dict)
    description: str = ""

    def torsor(self) -> Torsor:
        if self.mu is None:
            raise ValidationError(f"{self.name}: no 'mu' block")
        return Torsor(self.algebra, self.mu, self.name)

    def extension(self) -> BExtension:
        if self.B is None:
            raise ValidationError(f"{self.name}: no 'B' block")
        try:
            return BExtension.from_rows(self.algebra, self.B)
        except UsageError as exc:
            raise ValidationError(f"B: {exc}") from None

    def btorsor(self) -> BTorsor:
        if self.mu is None:
            raise ValidationError(f"{self.name}: no 'mu' block")
        return BTorsor(self.extension(), self.mu, self.name)

    def bialgebra(self) -> Bialgebra:
        if self.coalgebra is None:
            raise ValidationError(f"{self.name}: no 'coalgebra' block")
        delta, eps = self.coalgebra
        return Bialgebra(self.algebra, delta, eps)


class _Reader:
    def __init__(self, field: Field):
        self.field = field
        self.errors = []

    def scalar(self, s, where):
        if not isinstance(s, (str, int)) or isinstance(s, bool):
            raise ParseError(f"{where}: scalar must be a string, got {s!r}")
        try:
            return self.field(str(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: cannot read {s!r} in {self.field}: {exc}") from None

    def index(self, x, labels, where):
        if isinstance(x, bool):
            x = None
        if isinstance(x, int) and 0 <= x < len(labels):
            return x
        if isinstance(x, str) and x in labels:
            return labels.index(x)
        self.errors.append(f"{where}: index {x!r} out of range / unknown label")
        return None

    def multi(self, x, label_lists, where):
        dims = [len(ls) for ls in label_lists]
        if isinstance(x, int) and not isinstance(x, bool):
            total = 1
            for d in dims:
                total *= d
            if 0 <= x < total:
                return x
            self.errors.append(f"{where}: flat index {x} out of range (< {total})")
            return None
        if not isinstance(x, list) or len(x) != len(dims):
            self.errors.append(f"{where}: expected a multi-index of length {len(dims)}, got {x!r}")
            return None
        idx = [self.index(a, ls, f"{where}[{t}]") for t, (a, ls) in enumerate(zip(x, label_lists))]
        if None in idx:
            return None
        return flat_index(idx, dims)

    def dense(self, v, n, where):
        if not isinstance(v, list) or len(v) != n:
            self.errors.append(f"{where}: expected a list of {n} scalars")
            return None
        return [self.scalar(s, f"{where}[{i}]") for i, s in enumerate(v)]

    def tensor_map(self, block, dom_labels, cod_label_lists, where):
        if not isinstance(block, dict):
            self.errors.append(f"{where}: expected an object")
            return None
        if block.get("convention") != CONVENTION:
            self.errors.append(f"{where}.convention: must be {CONVENTION!r}")
        entries = block.get("entries")
        if not isinstance(entries, list):
            self.errors.append(f"{where}.entries: expected a list")
            return None
        dims = tuple(len(ls) for ls in cod_label_lists)
        cols = [{} for _ in dom_labels]
        for k, e in enumerate(entries):
            w = f"{where}.entries[{k}]"
            if not isinstance(e, list) or len(e) != 3:
                self.errors.append(f"{w}: expected [row, col, scalar]")
                continue
            row = self.multi(e[0], cod_label_lists, w + "[0]")
            col = self.index(e[1], dom_labels, w + "[1]")
            c = self.scalar(e[2], w + "[2]")
            if row is None or col is None:
                continue
            cols[col][row] = cols[col].get(row, self.field.zero) + c
        return LinearMap(self.field, (len(dom_labels),), dims, cols)


def parse_spec(doc: dict, field_override: Field | None = None, source: str = "<spec>") -> SpecFile:
    if not isinstance(doc, dict):
        raise ValidationError(f"{source}: top level must be an object")
    try:
        fld = field_override or Field.from_string(str(doc.get("field", "")))
    except (ValueError, UsageError) as exc:
        raise ValidationError(f"field: {exc}") from None
    r = _Reader(fld)
    alg = doc.get("algebra")
    if not isinstance(alg, dict):
        raise ValidationError("algebra: missing or not an object")
    labels = alg.get("basis")
    if not isinstance(labels, list) or not labels or not all(isinstance(s, str) for s in labels):
        raise ValidationError("algebra.basis: expected a non-empty list of strings")
    if len(set(labels)) != len(labels):
        raise ValidationError("algebra.basis: labels must be distinct")
    n = len(labels)
    if "dim" in alg and alg["dim"] != n:
        r.errors.append(f"algebra.dim: {alg['dim']} but {n} basis labels")
    quads = []
    consts = alg.get("structure_constants")
    if not isinstance(consts, list):
        r.errors.append("algebra.structure_constants: expected a list of [i, j, k, scalar]")
        consts = []
    for q, e in enumerate(consts):
        w = f"algebra.structure_constants[{q}]"
        if not isinstance(e, list) or len(e) != 4:
            r.errors.append(f"{w}: expected [i, j, k, scalar]")
            continue
        ijk = [r.index(x, labels, f"{w}[{t}]") for t, x in enumerate(e[:3])]
        c = r.scalar(e[3], f"{w}[3]")
        if None not in ijk:
            quads.append((*ijk, c))
    unit = r.dense(alg.get("unit"), n, "algebra.unit")

    mu = None
    if "mu" in doc:
        mu = r.tensor_map(doc["mu"], labels, [labels] * 3, "mu")
    B = None
    if "B" in doc:
        if not isinstance(doc["B"], list) or not doc["B"]:
            r.errors.append("B: expected a non-empty list of coordinate vectors")
        else:
            B = [r.dense(v, n, f"B[{k}]") for k, v in enumerate(doc["B"])]
    coalgebra = None
    if "coalgebra" in doc:
        co = doc["coalgebra"]
        if not isinstance(co, dict):
            r.errors.append("coalgebra: expected an object")
        else:
            delta = r.tensor_map(co.get("delta"), labels, [labels] * 2, "coalgebra.delta")
            eps = r.dense(co.get("epsilon"), n, "coalgebra.epsilon")
            if delta is not None and eps is not None:
                coalgebra = (delta, LinearMap(fld, (n,), (), [{0: x} for x in eps]))
    expected = doc.get("expected", {})
    if not isinstance(expected, dict):
        r.errors.append("expected: must be an object")
        expected = {}
    if r.errors:
        raise ValidationError(r.errors)
    algebra = FiniteAlgebra.from_structure_constants(fld, labels, quads, unit)
    return SpecFile(
        name=str(doc.get("name", source)),
        field=fld,
        algebra=algebra,
        mu=mu,
        B=B,
        coalgebra=coalgebra,
        expected=expected,
        description=str(doc.get("description", "")),
    )


def bundled_names() -> list[str]:
    data = resources.files("torsorkit") / "data"
    return sorted(p.name[:-5] for p in data.iterdir() if p.name.endswith(".json"))


def bundled_path(name: str):
    return resources.files("torsorkit") / "data" / f"{name}.json"


def load_spec(path, field_override: Field | None = None) -> SpecFile:
    """Load a spec file by path, or a bundled example by name."""
    p = Path(path)
    if not p.exists() and str(path) in bundled_names():
        text = bundled_path(str(path)).read_text(encoding="utf-8")
        source = str(path)
    else:
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"{path}: {exc.strerror or exc}") from None
        source = p.stem
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_spec(doc, field_override, source)


# -- writing ------------------------------------------------------------

def map_entries(f: LinearMap, dom_labels, cod_label_lists):
    dims = tuple(len(ls) for ls in cod_label_lists)
    out = []
    for j, col in enumerate(f.cols):
        for i in sorted(col):
            mi = multi_index(i, dims)
            out.append([[cod_label_lists[t][a] for t, a in enumerate(mi)], dom_labels[j], str(col[i])])
    return out


def spec_document(name, algebra: FiniteAlgebra, mu=None, B=None, coalgebra=None, expected=None, description=""):
    labels = list(algebra.labels)
    n = len(labels)
    consts = []
    for i in range(n):
        for j in range(n):
            col = algebra.mult.cols[i * n + j]
            for k in sorted(col):
                consts.append([labels[i], labels[j], labels[k], str(col[k])])
    doc = {
        "name": name,
        "description": description,
        "field": str(algebra.field),
        "algebra": {
            "dim": n,
            "basis": labels,
            "structure_constants": consts,
            "unit": [str(algebra.unit.get(i, 0)) for i in range(n)],
        },
    }
    if mu is not None:
        doc["mu"] = {"convention": CONVENTION, "entries": map_entries(mu, labels, [labels] * 3)}
    if B is not None:
        doc["B"] = [[str(x) for x in row] for row in B]
    if coalgebra is not None:
        delta, eps = coalgebra
        doc["coalgebra"] = {
            "delta": {"convention": CONVENTION, "entries": map_entries(delta, labels, [labels] * 2)},
            "epsilon": [str(c.get(0, 0)) for c in eps.cols],
        }
    if expected:
        doc["expected"] = expected
    return doc
