"""Command-line front end.

Diagrams are given as a file path or as ``example:NAME`` (see
:mod:`trisectkit.catalog`).  Exit codes: 0 certified or verified, 1 refuted,
2 exhausted or inconclusive, 3 usage error, 4 input error, 5 internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import traceback
from pathlib import Path

from .catalog import catalog as load_example
from .fileformat import FormatError, emit, emit_certificates, parse, parse_certificates
from .heegaard import HeegaardDiagram, SurgeryInstance, h1_invariants, surgery_split
from .multicurve import Multicurve, reduce
from .overlay import algebraic_intersection, geometric_intersection, is_cut_system
from .primitivity import Budget, DEFAULT_BUDGET, check_dsp, check_dspp, replay_certificate
from .render import render_svg
from .trisection import TrisectionDiagram, stabilize, validate_trisection

EXIT = {"certified": 0, "verified": 0, "refuted": 1, "exhausted": 2, "inconclusive": 2}
USAGE_ERROR = 3
INPUT_ERROR = 4
INTERNAL_ERROR = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _load(source: str):
    if source.startswith("example:"):
        return load_example(source)
    return parse(Path(source).read_text())


def _stem(source: str) -> str:
    base = source[len("example:"):] if source.startswith("example:") else Path(source).stem
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", base).strip("_") or "diagram"


def _families(value) -> dict:
    if isinstance(value, Multicurve):
        return {"curves": value}
    if isinstance(value, HeegaardDiagram):
        return {"alpha": value.alpha, "beta": value.beta}
    if isinstance(value, SurgeryInstance):
        return {"alpha": value.alpha, "beta": value.beta, "L": value.L}
    return {"alpha": value.alpha, "beta": value.beta, "gamma": value.gamma}


def _rebuild(value, fams: dict):
    if isinstance(value, Multicurve):
        return fams["curves"]
    if isinstance(value, HeegaardDiagram):
        return HeegaardDiagram(fams["alpha"], fams["beta"])
    if isinstance(value, SurgeryInstance):
        return SurgeryInstance(HeegaardDiagram(fams["alpha"], fams["beta"]), fams["L"])
    return TrisectionDiagram(fams["alpha"], fams["beta"], fams["gamma"])


def _budget(args) -> Budget:
    return Budget(depth=args.depth, states=args.states, arc_bound=args.arc_bound)


class _Out:
    """Human text or line-delimited JSON records."""

    def __init__(self, as_json: bool):
        self.as_json = as_json

    def record(self, command: str, status: str, text: str = "", **data):
        if self.as_json:
            print(json.dumps({"command": command, "status": status, **data}, sort_keys=True))
        elif text:
            print(text)

    def raw(self, text: str):
        if not self.as_json:
            sys.stdout.write(text)


def _surgery_instance(args, value) -> SurgeryInstance:
    if args.L is None:
        if isinstance(value, SurgeryInstance):
            return value
        raise UsageError("this diagram has no L family; pass --L")
    if isinstance(value, SurgeryInstance):
        diagram = value.diagram
    elif isinstance(value, HeegaardDiagram):
        diagram = value
    else:
        raise UsageError("surgery needs a Heegaard diagram")
    fams = _families(value)
    if args.L in fams:
        L = fams[args.L]
    else:
        other = _load(args.L)
        L = other.L if isinstance(other, SurgeryInstance) else other
        if not isinstance(L, Multicurve):
            raise UsageError("--L must name a family, a multicurve file, or a surgery instance")
    return SurgeryInstance(diagram, L)


# ---------------------------------------------------------------------------
# Commands


def cmd_validate(args, out):
    value = _load(args.diagram)
    fams = _families(value)
    cut = {name: is_cut_system(M) for name, M in fams.items()}
    kind = type(value).__name__
    lines = [f"valid {kind}, genus {next(iter(fams.values())).genus}"]
    lines += [f"  {name}: {len(M.components)} component(s), cut system: {cut[name]}" for name, M in fams.items()]
    out.record("validate", "verified", "\n".join(lines), kind=kind, cut_systems=cut)
    return 0


def cmd_reduce(args, out):
    value = _load(args.diagram)
    reduced = _rebuild(value, {k: reduce(M) for k, M in _families(value).items()})
    text = emit(reduced)
    out.record("reduce", "verified", diagram=text)
    out.raw(text)
    return 0


def _pick_pair(args, fams):
    names = args.families or list(fams)[:2]
    if len(names) != 2 or any(n not in fams for n in names):
        raise UsageError(f"choose two of the families {', '.join(fams)}")
    return names


def cmd_intersect(args, out):
    fams = _families(_load(args.diagram))
    a, b = _pick_pair(args, fams)
    G = geometric_intersection(fams[a], fams[b])
    A = algebraic_intersection(fams[a], fams[b])
    text = f"geometric ({a} rows, {b} columns):\n{G}\nalgebraic:\n{A}"
    out.record("intersect", "verified", text, rows=a, cols=b, geometric=G.tolist(), algebraic=A.tolist())
    return 0


def cmd_cut_check(args, out):
    fams = _families(_load(args.diagram))
    cut = {name: is_cut_system(M) for name, M in fams.items()}
    status = "verified" if all(cut.values()) else "refuted"
    text = "\n".join(f"{name}: {'cut system' if ok else 'not a cut system'}" for name, ok in cut.items())
    out.record("cut-check", status, text, cut_systems=cut)
    return EXIT[status]


def cmd_homology(args, out):
    value = _load(args.diagram)
    if isinstance(value, TrisectionDiagram):
        pairs = [("alpha-beta", value.heegaard(0)), ("beta-gamma", value.heegaard(1)), ("gamma-alpha", value.heegaard(2))]
    elif isinstance(value, SurgeryInstance):
        pairs = [("alpha-beta", value.diagram)]
    elif isinstance(value, HeegaardDiagram):
        pairs = [("alpha-beta", value)]
    else:
        raise UsageError("homology needs a Heegaard or trisection diagram")
    for name, D in pairs:
        v = h1_invariants(D)
        out.record("homology", "verified", f"{name}: factors {v.factors}  {v.label()}", pair=name, **v.as_dict())
    return 0


def cmd_surgery(args, out):
    S = _surgery_instance(args, _load(args.diagram))
    split = surgery_split(S.alpha, S.beta, S.L)
    text = (
        f"(alpha, L): {split.first_verdict.label()}\n"
        f"(L, beta):  {split.second_verdict.label()}\n"
        f"surgery:    factors {split.verdict.factors}  {split.verdict.label()}"
    )
    out.record(
        "surgery",
        "verified",
        text,
        first=split.first_verdict.as_dict(),
        second=split.second_verdict.as_dict(),
        verdict=split.verdict.as_dict(),
    )
    return 0


def _search(args, out, command, fn):
    S = _surgery_instance(args, _load(args.diagram))
    v = fn(S.alpha, S.beta, S.L, _budget(args), workers=args.workers)
    lines = [f"{command}: {v.status}"]
    data = {"stats": v.stats}
    if v.certified:
        lines.append(f"k1={v.k1} k2={v.k2} k={v.k}")
        data.update(k1=v.k1, k2=v.k2, k=v.k)
    if v.refuted:
        lines += [f"obstruction: {o.label()} {o.factors}" for o in v.obstruction]
        data["obstruction"] = [o.as_dict() for o in v.obstruction]
    if v.certified and not args.no_cert:
        path = Path(args.cert or f"{_stem(args.diagram)}.{command}.cert")
        path.write_text(emit_certificates(v.certificates))
        lines.append(f"certificate written to {path}")
        data["certificate"] = str(path)
    out.record(command, v.status, "\n".join(lines), **data)
    return EXIT[v.status]


def cmd_search_dsp(args, out):
    return _search(args, out, "search-dsp", check_dsp)


def cmd_search_dspp(args, out):
    return _search(args, out, "search-dspp", check_dspp)


def cmd_trisection_check(args, out):
    T = _load(args.diagram)
    if not isinstance(T, TrisectionDiagram):
        raise UsageError("trisection-check needs a trisection diagram")
    budget = _budget(args) if args.search else None
    rep = validate_trisection(T, budget, workers=args.workers)
    if rep.k is None:
        status = "refuted"
    elif args.search and len(rep.certificates) < 3:
        status = "exhausted"
    else:
        status = "certified" if args.search else "verified"
    lines = [f"{rep.signature()}{'  balanced' if rep.balanced else ''}"]
    lines += [f"  {a}-{b}: {v.label()}" for (a, b), v in zip(("alpha beta".split(), "beta gamma".split(), "gamma alpha".split()), rep.verdicts)]
    lines += [f"  search {k}: {s}" for k, s in rep.search_status.items()]
    lines += [f"  warning: {w}" for w in rep.warnings]
    if rep.euler_characteristic is not None:
        lines.append(f"  euler characteristic 2+g-k1-k2-k3 = {rep.euler_characteristic}")
    out.record("trisection-check", status, "\n".join(lines), **rep.as_dict())
    return EXIT[status]


def cmd_stabilize(args, out):
    T = _load(args.diagram)
    if not isinstance(T, TrisectionDiagram):
        raise UsageError("stabilize needs a trisection diagram")
    text = emit(stabilize(T, args.sector))
    out.record("stabilize", "verified", diagram=text)
    out.raw(text)
    return 0


def cmd_example(args, out):
    text = emit(load_example(args.name))
    out.record("example", "verified", name=args.name, diagram=text)
    out.raw(text)
    return 0


def cmd_canon(args, out):
    text = emit(_load(args.diagram))
    out.record("canon", "verified", diagram=text)
    out.raw(text)
    return 0


def cmd_replay(args, out):
    certs = parse_certificates(Path(args.certificate).read_text())
    ok = True
    for n, cert in enumerate(certs):
        rep = replay_certificate(cert)
        ok &= rep.ok
        out.record(
            "replay",
            "verified" if rep.ok else "refuted",
            f"certificate {n} ({cert.side}, {cert.mode}, {cert.depth} step(s)): {rep.message}",
            index=n,
            side=cert.side,
            mode=cert.mode,
            message=rep.message,
        )
    return 0 if ok else 1


def cmd_render(args, out):
    svg = render_svg(_load(args.diagram), size=args.size)
    if args.output:
        Path(args.output).write_text(svg)
        out.record("render", "verified", f"wrote {args.output}", output=args.output)
    else:
        out.raw(svg)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="line-delimited JSON records")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--depth", type=int, default=DEFAULT_BUDGET.depth)
    search.add_argument("--states", type=int, default=DEFAULT_BUDGET.states)
    search.add_argument("--arc-bound", type=int, default=DEFAULT_BUDGET.arc_bound)
    search.add_argument("--workers", type=int, default=1)

    p = _Parser(prog="trisectkit", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *parents, help=None):
        sp = sub.add_parser(name, parents=[common, *parents], help=help)
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, help="parse and check a diagram").add_argument("diagram")
    add("reduce", cmd_reduce, help="remove backtracking chords").add_argument("diagram")
    sp = add("intersect", cmd_intersect, help="geometric and algebraic intersection matrices")
    sp.add_argument("diagram")
    sp.add_argument("--families", nargs=2, metavar="NAME")
    add("cut-check", cmd_cut_check, help="is each family a cut system").add_argument("diagram")
    add("homology", cmd_homology, help="H_1 of each Heegaard pair").add_argument("diagram")
    for name, fn, extra in (
        ("surgery", cmd_surgery, ()),
        ("search-dsp", cmd_search_dsp, (search,)),
        ("search-dspp", cmd_search_dspp, (search,)),
    ):
        sp = add(name, fn, *extra)
        sp.add_argument("diagram")
        sp.add_argument("--L", help="family name, file or example:NAME giving the link")
        if extra:
            sp.add_argument("--cert", help="certificate output path")
            sp.add_argument("--no-cert", action="store_true", help="do not write a certificate file")
    sp = add("trisection-check", cmd_trisection_check, search)
    sp.add_argument("diagram")
    sp.add_argument("--search", action="store_true", help="also search for pseudo-standard slides")
    sp = add("stabilize", cmd_stabilize)
    sp.add_argument("diagram")
    sp.add_argument("--sector", type=int, choices=(1, 2, 3), required=True)
    add("example", cmd_example).add_argument("name")
    add("canon", cmd_canon, help="canonical text of a diagram").add_argument("diagram")
    add("replay", cmd_replay, help="re-run a certificate file").add_argument("certificate")
    sp = add("render", cmd_render, help="SVG drawing of the polygon")
    sp.add_argument("diagram")
    sp.add_argument("-o", "--output")
    sp.add_argument("--size", type=int, default=480)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.json)
    try:
        return args.fn(args, out)
    except UsageError as exc:
        print(f"trisectkit {args.command}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (FormatError, KeyError, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"trisectkit {args.command}: {msg}", file=sys.stderr)
        if args.json:
            print(json.dumps({"command": args.command, "status": "error", "message": str(msg)}, sort_keys=True))
        return INPUT_ERROR
    except Exception:
        traceback.print_exc()
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
