"""Command-line front end: fixture parsing, verification, classification.

All mathematics lives in the library modules; this is a thin shell that
loads JSON fixtures, runs checks and renders a report.  Exit codes:
0 every check passed, 1 a mathematical check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import shutil
import sys
import time
from dataclasses import dataclass, field
from importlib import resources

from . import braid, cohomology, lie2, linfty, twoterm
from .exactlin import DimensionMismatch, rat_str, rational
from .report import CheckReport
from .serialize import FixtureError, load_json_file


@dataclass
class Report:
    command: list
    reports: list = field(default_factory=list)
    elapsed_s: float = 0.0
    notes: list = field(default_factory=list)
    payload: dict | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self) -> dict:
        checks = [c.to_json() for r in self.reports for c in r.checks]
        out = {"command": self.command, "passed": self.passed,
               "checks": checks, "elapsed_s": self.elapsed_s}
        if self.notes:
            out["notes"] = self.notes
        if self.payload is not None:
            out["payload"] = self.payload
        return out


def _render_human(rep: Report) -> str:
    lines = []
    for r in rep.reports:
        for c in r.checks:
            status = "ok" if c.passed else "FAIL"
            line = f"  {r.name}.{c.name:<28s} {status}"
            if not c.passed and c.first_violation is not None:
                loc, resid = c.first_violation
                line += f"  at {loc}: residual {_short(resid)}"
            lines.append(line)
    for note in rep.notes:
        lines.append(f"  note: {note}")
    verdict = "PASS" if rep.passed else "FAIL"
    lines.append(f"{verdict} ({rep.elapsed_s:.2f}s)")
    return "\n".join(lines)


def _short(resid) -> str:
    if isinstance(resid, (list, tuple)):
        flat = [x for x in resid if not isinstance(x, (list, tuple))]
        if len(flat) == len(resid) and len(resid) > 16:
            nz = {i: rat_str(x) for i, x in enumerate(resid) if x}
            return f"nonzero entries {nz} of {len(resid)}"
        return "[" + ", ".join(rat_str(x) if not isinstance(x, (list, tuple))
                               else _short(x) for x in resid) + "]"
    try:
        return rat_str(resid)
    except (TypeError, ValueError):
        return str(resid)


def _load_linf(path: str) -> linfty.TwoTermLInfinity:
    return linfty.linf_from_json(load_json_file(path))


def _load_algebra(path: str) -> cohomology.LieAlgebra:
    return cohomology.algebra_from_json(load_json_file(path))


def _load_rep(g, path: str | None) -> cohomology.Representation:
    if path is None:
        return cohomology.trivial_rep(g, 1)
    return cohomology.rep_from_json(g, load_json_file(path))


def _missing(path: str, fieldname: str):
    raise FixtureError(f"missing field '{fieldname}' in {path}")


def _load_cochain(path: str):
    obj = load_json_file(path)
    if "algebra" not in obj:
        _missing(path, "algebra")
    g = cohomology.algebra_from_json(obj["algebra"])
    rep = (cohomology.rep_from_json(g, obj["rep"]) if "rep" in obj
           else cohomology.trivial_rep(g, 1))
    return cohomology.cochain_from_json(rep, obj)


def _field(obj: dict, name: str, path: str):
    if name not in obj:
        _missing(path, name)
    return obj[name]


def _load_hom(path: str) -> linfty.LInfHom:
    obj = load_json_file(path)
    src = linfty.linf_from_json(_field(obj, "source", path))
    dst = linfty.linf_from_json(_field(obj, "target", path))
    return _hom_fields(src, dst, obj, path)


def _hom_fields(src, dst, obj, path) -> linfty.LInfHom:
    from .exactlin import mat_from_json
    from .serialize import tensor_from_json
    try:
        phi0 = mat_from_json(_field(obj, "phi0", path), rows=dst.dim0, cols=src.dim0)
        phi1 = mat_from_json(_field(obj, "phi1", path), rows=dst.dim1, cols=src.dim1)
    except (ValueError, DimensionMismatch) as exc:
        raise FixtureError(f"field 'phi0'/'phi1': {exc}") from None
    phi2 = tensor_from_json(_field(obj, "phi2", path),
                            (src.dim0, src.dim0, dst.dim1), "phi2")
    chain = twoterm.ChainMap(src.complex, dst.complex, phi0, phi1)
    return linfty.LInfHom(src, dst, chain, phi2)


def cmd_check_linfty(args, rep: Report) -> None:
    v = _load_linf(args.file)
    rep.reports.append(linfty.check_axioms(v))


def cmd_check_hom(args, rep: Report) -> None:
    rep.reports.append(linfty.check_hom(_load_hom(args.file)))


def cmd_check_2hom(args, rep: Report) -> None:
    from .exactlin import mat_from_json
    obj = load_json_file(args.file)
    src = linfty.linf_from_json(_field(obj, "source", args.file))
    dst = linfty.linf_from_json(_field(obj, "target", args.file))
    f = _hom_fields(src, dst, _field(obj, "from", args.file), args.file)
    g = _hom_fields(src, dst, _field(obj, "to", args.file), args.file)
    try:
        tau = mat_from_json(_field(obj, "tau", args.file),
                            rows=dst.dim1, cols=src.dim0)
    except (ValueError, DimensionMismatch) as exc:
        raise FixtureError(f"field 'tau': {exc}") from None
    hom2 = linfty.LInfTwoHom(f, g, twoterm.ChainHomotopy(f.chain, g.chain, tau))
    rep.reports.append(linfty.check_two_hom(hom2))


def cmd_check_lie2(args, rep: Report) -> None:
    v = _load_linf(args.file)
    L = lie2.from_linfty(v)
    axioms = linfty.check_axioms(v)
    octagon = lie2.check_jacobiator_identity_categorical(L)
    rep.reports.append(axioms)
    rep.reports.append(octagon)
    agreement = CheckReport("presentation_agreement")
    same = axioms.result("i_jacobiator_coherence").passed == octagon.passed
    agreement.add("octagon_matches_condition_i", [] if same else [((), "disagreement")])
    rep.reports.append(agreement)


def cmd_check_dcm(args, rep: Report) -> None:
    m = lie2.dcm_from_json(load_json_file(args.file))
    rep.reports.append(lie2.check_crossed_module(m))


def cmd_cohomology(args, rep: Report) -> None:
    g = _load_algebra(args.gfile)
    r = _load_rep(g, args.rep)
    rep.reports.append(cohomology.check_representation(r))
    dim = cohomology.cohomology_dim(r, args.degree)
    rep.payload = {"degree": args.degree, "dimension": dim}
    rep.notes.append(f"dim H^{args.degree} = {dim}")


def cmd_is_cocycle(args, rep: Report) -> None:
    w = _load_cochain(args.file)
    out = CheckReport("cocycle")
    ok = cohomology.is_cocycle(w)
    out.add("delta_vanishes", [] if ok else
            [((), cohomology.cochain_to_coords(cohomology.coboundary(w))[:6])])
    rep.reports.append(out)
    rep.payload = {"is_cocycle": ok, "is_coboundary": cohomology.is_coboundary(w) if ok else False}


def cmd_coboundary(args, rep: Report) -> None:
    w = _load_cochain(args.file)
    dw = cohomology.coboundary(w)
    payload = cohomology.cochain_to_json(dw)
    rep.payload = payload
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
        rep.notes.append(f"wrote {args.out}")


def cmd_build_ghbar(args, rep: Report) -> None:
    g = _load_algebra(args.gfile)
    try:
        hbar = rational(args.hbar)
    except ValueError:
        raise FixtureError(f"--hbar must be rational, got {args.hbar!r}") from None
    L = cohomology.build_g_hbar(g, hbar)
    rep.reports.append(linfty.check_axioms(L.data))
    payload = linfty.linf_to_json(L.data)
    rep.payload = payload
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
        rep.notes.append(f"wrote {args.out}")


def cmd_killing(args, rep: Report) -> None:
    g = _load_algebra(args.gfile)
    k = cohomology.killing_form(g)
    rep.reports.append(cohomology.check_lie_algebra(g))
    rep.payload = {"killing": [[rat_str(x) for x in row] for row in k.data]}
    rep.notes.append("killing form rows: " +
                     "; ".join("[" + ", ".join(rat_str(x) for x in row) + "]"
                               for row in k.data))


def cmd_ybe(args, rep: Report) -> None:
    g = _load_algebra(args.gfile)
    try:
        op = braid.build_B_vect(g)
    except ValueError as exc:
        raise FixtureError(str(exc)) from None
    rep.reports.append(braid.check_ybe(op))


def cmd_tetrahedron(args, rep: Report) -> None:
    v = _load_linf(args.file)
    L = lie2.from_linfty(v)
    ty = braid.build_Y(L)
    rep.reports.append(ty.hypotheses)
    zam = braid.check_zamolodchikov(ty)
    rep.reports.append(zam)
    cond_i = linfty.check_axioms(v).result("i_jacobiator_coherence")
    agree = CheckReport("tetrahedron_vs_condition_i")
    agree.add("agreement", [] if zam.passed == cond_i.passed else [((), "disagreement")])
    rep.reports.append(agree)
    if not cond_i.passed:
        loc = cond_i.first_violation[0]
        rep.notes.append(f"condition (i) fails first at basis tuple {loc}")


def cmd_skeletalize(args, rep: Report) -> None:
    c = twoterm.complex_from_json(load_json_file(args.file))
    sk = twoterm.skeletalize_complex(c)
    out = CheckReport("skeletalization")
    out.extend(twoterm.check_chain_map(sk.include), prefix="include_")
    out.extend(twoterm.check_chain_map(sk.project), prefix="project_")
    out.extend(twoterm.check_homotopy(sk.homotopy), prefix="homotopy_")
    rt = twoterm.compose_chain_maps(sk.include, sk.project)
    ident = twoterm.identity_chain_map(sk.skeletal)
    out.add("project_include_identity",
            [] if (rt.phi0 == ident.phi0 and rt.phi1 == ident.phi1) else [((), "not identity")])
    rep.reports.append(out)
    from .exactlin import mat_to_json
    payload = {"skeletal": twoterm.complex_to_json(sk.skeletal),
               "include": {"phi0": mat_to_json(sk.include.phi0),
                           "phi1": mat_to_json(sk.include.phi1)},
               "project": {"phi0": mat_to_json(sk.project.phi0),
                           "phi1": mat_to_json(sk.project.phi1)},
               "homotopy_tau": mat_to_json(sk.homotopy.tau)}
    rep.payload = payload
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
        rep.notes.append(f"wrote {args.out}")


def cmd_classify(args, rep: Report) -> None:
    v = _load_linf(args.file)
    L = lie2.from_linfty(v)
    try:
        quad = cohomology.classify(L)
    except ValueError as exc:
        out = CheckReport("classify")
        out.add("input_axioms", [((), str(exc))])
        rep.reports.append(out)
        return
    out = CheckReport("classify")
    out.extend(cohomology.check_lie_algebra(quad.algebra), prefix="algebra_")
    out.extend(cohomology.check_representation(quad.rep), prefix="rep_")
    out.add("cocycle", [] if cohomology.is_cocycle(quad.cocycle) else [((), "not closed")])
    out.extend(linfty.check_hom(quad.witness), prefix="witness_")
    rep.reports.append(out)
    from .exactlin import mat_to_json
    rep.payload = {"algebra": cohomology.algebra_to_json(quad.algebra),
                   "rep": cohomology.rep_to_json(quad.rep),
                   "cocycle": cohomology.cochain_to_json(quad.cocycle),
                   "witness": {"phi0": mat_to_json(quad.witness.chain.phi0),
                               "phi1": mat_to_json(quad.witness.chain.phi1)}}


def fixture_dir():
    return resources.files("lie2alg") / "fixtures"


def cmd_fixtures(args, rep: Report) -> None:
    names = sorted(p.name for p in fixture_dir().iterdir() if p.name.endswith(".json"))
    rep.payload = {"fixtures": names}
    for n in names:
        rep.notes.append(n)
    if args.copy_to:
        for n in names:
            shutil.copy(fixture_dir() / n, args.copy_to)
        rep.notes.append(f"copied {len(names)} fixtures to {args.copy_to}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lie2alg",
        description="Exact verification of two-term L-infinity structures, "
                    "Lie 2-algebra coherence, Lie algebra cohomology and "
                    "braiding equations.")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = p.add_subparsers(dest="command")

    def add(name, fn, **files):
        sp = sub.add_parser(name)
        for arg, kw in files.items():
            sp.add_argument(arg, **kw)
        sp.set_defaults(fn=fn)
        return sp

    add("check-linfty", cmd_check_linfty, file={})
    add("check-hom", cmd_check_hom, file={})
    add("check-2hom", cmd_check_2hom, file={})
    add("check-lie2", cmd_check_lie2, file={})
    add("check-dcm", cmd_check_dcm, file={})
    sp = sub.add_parser("cohomology")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("gfile")
    sp.add_argument("--rep", default=None)
    sp.set_defaults(fn=cmd_cohomology)
    add("is-cocycle", cmd_is_cocycle, file={})
    sp = sub.add_parser("coboundary")
    sp.add_argument("file")
    sp.add_argument("-o", "--out", default=None)
    sp.set_defaults(fn=cmd_coboundary)
    sp = sub.add_parser("build-ghbar")
    sp.add_argument("--hbar", required=True)
    sp.add_argument("gfile")
    sp.add_argument("-o", "--out", default=None)
    sp.set_defaults(fn=cmd_build_ghbar)
    add("killing", cmd_killing, gfile={})
    add("ybe", cmd_ybe, gfile={})
    add("tetrahedron", cmd_tetrahedron, file={})
    sp = sub.add_parser("skeletalize")
    sp.add_argument("file")
    sp.add_argument("-o", "--out", default=None)
    sp.set_defaults(fn=cmd_skeletalize)
    add("classify", cmd_classify, file={})
    sp = sub.add_parser("fixtures")
    sp.add_argument("--copy-to", default=None)
    sp.set_defaults(fn=cmd_fixtures)
    return p


def run(argv: list) -> tuple:
    """Run a CLI invocation; returns (exit code, Report or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code in (0, None) else 2), None
    if not getattr(args, "fn", None):
        parser.print_help()
        return 2, None
    rep = Report(command=list(argv))
    start = time.monotonic()
    try:
        args.fn(args, rep)
    except (FixtureError, DimensionMismatch) as exc:
        # shape mismatches surfacing from the library are input defects
        print(f"error: {exc}", file=sys.stderr)
        return 2, None
    rep.elapsed_s = time.monotonic() - start
    if args.json:
        print(json.dumps(rep.to_json(), indent=1))
    else:
        print(_render_human(rep))
    return (0 if rep.passed else 1), rep


def main() -> None:
    code, _ = run(sys.argv[1:])
    sys.exit(code)


if __name__ == "__main__":
    main()
