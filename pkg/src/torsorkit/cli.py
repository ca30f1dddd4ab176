"""Command line front end: ``torsorkit <subcommand> <spec-file> [options]``.

Each subcommand builds a report dict (see ``run_command``), prints a short
text summary and optionally writes the report as JSON.  Exit status is 0
when every check passes, 1 when a mathematical check fails and 2 when the
input cannot be used.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from .algebra import check_algebra
from .btorsor import centralizer, check_btorsor_axioms, hopf_from_btorsor, tensor_over_B
from .errors import InconsistencyError, SpecFileError, UsageError
from .exactla import Field
from .galois import (
    check_beta_is_descent,
    coaction_from_torsor,
    coinvariants,
    galois_map,
    hopf_roundtrip,
    torsor_roundtrip,
    unit_line,
)
from .grunspan import check_grunspan_axioms, grunspan_theta, is_identity
from .hopf import HopfAlgebra, antipode_from_beta, check_hopf_axioms, group_likes, hopf_from_torsor
from .linmap import LinearMap
from .report import Failure, tensor_label
from .specfile import SpecFile, bundled_names, load_spec, map_entries
from .torsor import check_descent_datum, check_mu_descent, check_torsor_axioms, descent_datum

SCHEMA = "torsorkit-report/1"


class _Report:
    def __init__(self, cmd: str, spec: SpecFile):
        self.data = {
            "schema": SCHEMA,
            "command": cmd,
            "input": {
                "name": spec.name,
                "field": str(spec.field),
                "dim": spec.algebra.dim,
                "basis": list(spec.algebra.labels),
            },
            "checks": [],
            "objects": {},
        }
        self.actual = {}

    def check(self, name: str, failures) -> bool:
        failures = list(failures)
        self.data["checks"].append({
            "name": name,
            "passed": not failures,
            "failures": [f.to_json() for f in failures],
        })
        return not failures

    def attempt(self, name: str, fn: Callable):
        """Run a construction; an InconsistencyError becomes a failed check."""
        try:
            value = fn()
        except InconsistencyError as exc:
            self.check(name, [Failure(name, type(exc).__name__, str(exc))])
            return None
        self.check(name, [])
        return value

    def finish(self, expected: dict) -> dict:
        compared = {}
        for key, want in expected.items():
            if key in self.actual:
                got = self.actual[key]
                compared[key] = {"expected": want, "actual": got, "match": got == want}
        if compared:
            self.data["expected"] = compared
            mismatched = [k for k, v in compared.items() if not v["match"]]
            self.check("expected block", [
                Failure("expected block", k, f"expected {compared[k]['expected']!r}, got {compared[k]['actual']!r}")
                for k in mismatched
            ])
        self.data["passed"] = all(c["passed"] for c in self.data["checks"])
        return self.data


def _functional_json(f: LinearMap):
    return [str(c.get(0, f.field.zero)) for c in f.cols]


def _hopf_json(H: HopfAlgebra, ambient_labels=None) -> dict:
    L = list(H.labels)
    out = {"dim": H.dim}
    if H.embedding is not None and ambient_labels is not None:
        emb = H.embedding
        out["basis"] = [
            {
                "label": L[j],
                "coordinates": [[tensor_label(i, emb.ambient, ambient_labels), str(c)] for i, c in sorted(col.items())],
            }
            for j, col in enumerate(emb.basis.cols)
        ]
    else:
        out["basis"] = [{"label": s} for s in L]
    A = H.algebra
    out["product"] = map_entries(A.mult.regroup(dom=(H.dim * H.dim,)), [f"{a}·{b}" for a in L for b in L], [L])
    out["unit"] = [str(A.unit.get(i, H.field.zero)) for i in range(H.dim)]
    out["delta"] = map_entries(H.delta, L, [L, L])
    out["epsilon"] = _functional_json(H.epsilon)
    out["antipode"] = map_entries(H.antipode, L, [L])
    out["group_likes"] = [L[i] for i in group_likes(H)]
    return out


def _torsor_checks(rep: _Report, spec: SpecFile):
    t = spec.torsor()
    rep.check("algebra axioms", check_algebra(spec.algebra))
    ok = rep.check("torsor axioms", check_torsor_axioms(t))
    rep.actual["torsor"] = ok
    return t, ok


def _cmd_validate(rep: _Report, spec: SpecFile):
    rep.check("algebra axioms", check_algebra(spec.algebra))
    rep.data["objects"]["blocks"] = [
        k for k, v in (("mu", spec.mu), ("B", spec.B), ("coalgebra", spec.coalgebra)) if v is not None
    ]


def _cmd_check_torsor(rep: _Report, spec: SpecFile):
    _torsor_checks(rep, spec)


def _build_hopf(rep: _Report, spec: SpecFile):
    t, ok = _torsor_checks(rep, spec)
    if not ok:
        return t, None
    dd = descent_datum(t)
    rep.check("descent datum", check_descent_datum(dd))
    rep.check("μ compatible with D", check_mu_descent(t, dd))
    H = rep.attempt("H construction", lambda: hopf_from_torsor(t))
    return t, H


def _cmd_build_hopf(rep: _Report, spec: SpecFile):
    t, H = _build_hopf(rep, spec)
    if H is None:
        return
    T = t.algebra
    rep.check("Hopf axioms", check_hopf_axioms(H))
    rep.check("dim H = dim T", [] if H.dim == T.dim else [Failure("dim H = dim T", "H", f"{H.dim} != {T.dim}")])
    c = coaction_from_torsor(t, H)
    beta, bijective = galois_map(c)
    rep.check("β bijective", [] if bijective else [Failure("β bijective", "β", f"rank {beta.rank()}")])
    rep.check("β = D", check_beta_is_descent(t, H, beta))
    co = coinvariants(c)
    rep.check("coinvariants = k·1", [] if co == unit_line(T) else [Failure("coinvariants = k·1", "coinvariants", f"dim {co.dim}")])
    rep.actual.update(hopf_dim=H.dim, coinvariant_dim=co.dim, group_likes=len(group_likes(H)))
    rep.data["objects"]["hopf"] = _hopf_json(H, t.labels(2))


def _cmd_grunspan(rep: _Report, spec: SpecFile):
    t, ok = _torsor_checks(rep, spec)
    if not ok:
        return
    theta = grunspan_theta(t)
    rep.check("Grunspan identities", check_grunspan_axioms(t, theta))
    L = list(t.algebra.labels)
    rep.actual["theta_is_identity"] = is_identity(theta)
    rep.data["objects"]["theta"] = map_entries(theta, L, [L])
    rep.data["objects"]["theta_is_identity"] = rep.actual["theta_is_identity"]


def _cmd_roundtrip(rep: _Report, spec: SpecFile):
    if spec.mu is not None:
        t, H = _build_hopf(rep, spec)
        if H is None:
            return
        t2, failures = torsor_roundtrip(t)
        rep.check("torsor → Hopf → torsor", failures)
        L = list(t.algebra.labels)
        rep.data["objects"]["roundtrip_mu"] = map_entries(t2.mu, L, [L, L, L])
    else:
        H = _antipode(rep, spec)
        if H is None:
            return
    H2, phi, failures = hopf_roundtrip(H)
    rep.check("Hopf → torsor → Hopf", failures)
    rep.data["objects"]["phi"] = map_entries(phi, list(H.labels), [list(H2.labels)])


def _antipode(rep: _Report, spec: SpecFile):
    bi = spec.bialgebra()
    rep.check("bialgebra axioms", check_hopf_axioms(bi))
    S = rep.attempt("antipode from β_H", lambda: antipode_from_beta(bi))
    rep.actual["hopf"] = S is not None
    if S is None:
        return None
    return HopfAlgebra(bi.algebra, bi.delta, bi.epsilon, S)


def _antipode_order(S: LinearMap, limit: int = 64):
    ident = LinearMap.identity(S.field, (S.dom_dim,))
    power = S
    for k in range(1, limit + 1):
        if power == ident:
            return k
        power = S @ power
    return None


def _cmd_antipode(rep: _Report, spec: SpecFile):
    H = _antipode(rep, spec)
    if H is None:
        return
    rep.check("Hopf axioms", check_hopf_axioms(H))
    rep.actual["antipode_order"] = _antipode_order(H.antipode)
    rep.data["objects"]["hopf"] = _hopf_json(H)
    rep.data["objects"]["antipode_order"] = rep.actual["antipode_order"]


def _btorsor_checks(rep: _Report, spec: SpecFile):
    bt = spec.btorsor()
    rep.check("algebra axioms", check_algebra(spec.algebra))
    quotient = tensor_over_B(bt.ext)
    cent = rep.attempt("centralizer", lambda: centralizer(bt.ext, quotient))
    rep.actual["quotient_dim"] = quotient.dim
    rep.data["objects"]["quotient"] = {"dim": quotient.dim, "representatives": list(quotient.labels)}
    if cent is None:
        rep.actual["btorsor"] = False
        return bt, False
    rep.data["objects"]["centralizer_dim"] = cent.subspace.dim
    ok = rep.check("B-torsor axioms", check_btorsor_axioms(bt, quotient, cent))
    rep.actual["btorsor"] = ok
    return bt, ok


def _cmd_check_btorsor(rep: _Report, spec: SpecFile):
    _btorsor_checks(rep, spec)


def _cmd_build_hopf_b(rep: _Report, spec: SpecFile):
    bt, ok = _btorsor_checks(rep, spec)
    if not ok:
        return
    res = rep.attempt("H construction over B", lambda: hopf_from_btorsor(bt))
    if res is None:
        return
    H = res.hopf
    rep.check("Hopf axioms", check_hopf_axioms(H))
    co = coinvariants(res.coaction)
    rep.actual.update(hopf_dim_B=H.dim, coinvariant_dim_B=co.dim)
    rep.data["objects"]["hopf"] = _hopf_json(H, [res.quotient.labels])
    rep.data["objects"]["coinvariant_dim"] = co.dim


COMMANDS = {
    "validate": _cmd_validate,
    "check-torsor": _cmd_check_torsor,
    "build-hopf": _cmd_build_hopf,
    "grunspan": _cmd_grunspan,
    "roundtrip": _cmd_roundtrip,
    "antipode": _cmd_antipode,
    "check-btorsor": _cmd_check_btorsor,
    "build-hopf-b": _cmd_build_hopf_b,
}


def run_command(cmd: str, spec: SpecFile, timing: bool = True) -> dict:
    """Run one subcommand on a loaded spec and return the report dict.

    Raises ValidationError if the spec lacks a block the command needs.
    """
    if cmd not in COMMANDS:
        raise UsageError(f"unknown command {cmd!r}")
    start = time.perf_counter()
    rep = _Report(cmd, spec)
    COMMANDS[cmd](rep, spec)
    data = rep.finish(spec.expected)
    if timing:
        data["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return data


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def report_text(report: dict) -> str:
    inp = report["input"]
    lines = [f"{report['command']} {inp['name']} ({inp['field']}, dim {inp['dim']})"]
    for c in report["checks"]:
        lines.append(f"  {'PASS' if c['passed'] else 'FAIL'}  {c['name']}")
        for f in c["failures"][:10]:
            detail = f" ({f['detail']})" if f["detail"] else ""
            lines.append(f"          {f['check']} at {f['witness']}{detail}")
        if len(c["failures"]) > 10:
            lines.append(f"          ... {len(c['failures']) - 10} more")
    hopf = report["objects"].get("hopf")
    if hopf:
        lines.append(f"  H: dim {hopf['dim']}, group-likes {hopf['group_likes']}")
        for b in hopf["basis"]:
            if "coordinates" in b:
                terms = " + ".join(f"{c}·{t}" for t, c in b["coordinates"])
                lines.append(f"    {b['label']} = {terms}")
    if "theta_is_identity" in report["objects"]:
        lines.append(f"  θ = id: {report['objects']['theta_is_identity']}")
    for key, v in report.get("expected", {}).items():
        lines.append(f"  expected {key}: {v['expected']!r}, got {v['actual']!r}")
    if "timing" in report:
        lines.append(f"  time: {report['timing']['seconds']:.3f}s")
    lines.append("result: " + ("PASS" if report["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torsorkit", description="Exact checks for noncommutative torsors and their Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("spec", help="spec file path, or the name of a bundled example")
        s.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")
        s.add_argument("--no-timing", action="store_true", help="omit the timing field")
        s.add_argument("--field-override", metavar="FIELD", help="read all scalars in FIELD, e.g. Fp:7")
    sub.add_parser("list", help="list bundled examples")
    return p


def _error_report(cmd: str, source: str, errors) -> dict:
    return {"schema": SCHEMA, "command": cmd, "input": {"source": source}, "errors": list(errors), "passed": False}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "list":
        for name in bundled_names():
            print(name)
        return 0
    try:
        override = Field.from_string(args.field_override) if args.field_override else None
        spec = load_spec(args.spec, override)
        report = run_command(args.command, spec, timing=not args.no_timing)
    except (SpecFileError, ValueError) as exc:
        errors = exc.errors if isinstance(exc, SpecFileError) else [str(exc)]
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        if args.json:
            _emit_json(args.json, _error_report(args.command, str(args.spec), errors))
        return 2
    if args.json == "-":
        sys.stdout.write(report_json(report))
    else:
        sys.stdout.write(report_text(report))
        if args.json:
            _emit_json(args.json, report)
    return 0 if report["passed"] else 1


def _emit_json(dest: str, report: dict):
    text = report_json(report)
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


if __name__ == "__main__":
    sys.exit(main())
