"""Command-line interface: ``hilburch <command> [flags]``.

Exit codes: 0 on success, 1 on mathematical/domain errors, 2 on usage errors.
"""

import argparse
import json
import sys

from . import cells, gorenstein, hbm, localstd
from .field import field_from_tag
from .parse import ParseError, format_poly, parse_poly, parse_poly_list
from .serialize import render_matrix
from .staircase import enumerate_staircases, parse_staircase


class UsageError(Exception):
    pass


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for '{args.command}'")
    return value


def _field(args):
    try:
        return field_from_tag(args.field)
    except ValueError as exc:
        raise UsageError(f"--field: {exc}") from None


def _staircase(args):
    try:
        return parse_staircase(_need(args, "staircase"))
    except UsageError:
        raise
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"--staircase: {exc}") from None


def _ideal(args, flag="gens"):
    F = _field(args)
    text = _need(args, flag)
    gens = parse_poly_list(text, F, args.cap)
    return localstd.IdealPresentation(tuple(gens), F, args.cap)


def _check_cap(args, E):
    if args.cap is not None and args.cap < E.socle_degree + 2:
        raise ValueError(f"--cap {args.cap} is below socle degree + 2 = {E.socle_degree + 2}")


def _point(args, E, F):
    text = _need(args, "point")
    coords = [F(parse_poly(c, F).coeff(0, 0)) if c.strip() else 0 for c in text.split(",")]
    return hbm.CellPoint(E, tuple(coords), F)


def _deformation(args, E, F):
    text = args.deformation.strip()
    if text.startswith("{"):
        return hbm.Deformation.from_json(json.loads(text), F)
    values = {}
    for piece in text.split(";"):
        if not piece.strip():
            continue
        pos, _, entry = piece.partition(":")
        i, j = (int(v) for v in pos.split(","))
        values[(i, j)] = parse_poly(entry, F)
    return hbm.Deformation.from_dict(E, values, F)


def _polys(fs):
    return [format_poly(f) for f in fs]


# commands: each returns (text, json-data)

def cmd_info(args):
    E = _staircase(args)
    flags = E.classify()
    data = {"staircase": E.to_json(), "hilbert_function": list(E.hilbert_function),
            "colength": E.colength, "socle_degree": E.socle_degree,
            "lex_segment": flags.lex_segment, "lex_compatible": flags.lex_compatible,
            "gorenstein_admissible": flags.gorenstein_admissible,
            "degree_matrix": E.degree_matrix(),
            "canonical_matrix": [[format_poly(v) for v in row] for row in E.canonical_H()],
            "template_size": len(hbm.m_template(E))}
    text = "\n".join([
        f"staircase      {E}",
        f"generators     {E.to_generators_text()}",
        f"hilbert        {{{','.join(map(str, E.hilbert_function))}}}",
        f"colength       {E.colength}",
        f"socle degree   {E.socle_degree}",
        f"lex segment    {flags.lex_segment}",
        f"lex compatible {flags.lex_compatible}",
        f"gor admissible {flags.gorenstein_admissible}",
        "H =", render_matrix(E.canonical_H()),
        "U =", "\n".join("[ " + " ".join(f"{u:3d}" for u in row) + " ]" for row in E.degree_matrix()),
    ])
    return text, data


def cmd_lt(args):
    J = _ideal(args)
    ech = localstd.echelon(J)
    _check_cap(args, ech.staircase)
    data = {"staircase": ech.staircase.to_json(),
            "generators": ech.staircase.to_generators_text(), "certificate": ech.to_json()}
    return str(ech.staircase), data


def cmd_basis(args):
    J = _ideal(args)
    sb = localstd.reduced_standard_basis(J)
    _check_cap(args, sb.E)
    data = {"staircase": sb.E.to_json(), "basis": _polys(sb)}
    text = f"staircase {sb.E}\n" + "\n".join(f"f_{i} = {format_poly(f)}" for i, f in enumerate(sb))
    return text, data


def _deformation_from_flags(args, E, F):
    if args.point is not None:
        return hbm.decode_cellpoint(_point(args, E, F))
    if args.deformation is not None:
        return _deformation(args, E, F)
    raise UsageError("--point or --deformation is required")


def cmd_phi(args):
    E = _staircase(args)
    F = _field(args)
    N = _deformation_from_flags(args, E, F)
    flags = hbm.classify_deformation(E, N)
    minors = hbm.signed_minors(E, N, None)
    # outside N(E) the leading terms may drop, so compute them from scratch
    J = hbm.phi(E, N) if flags.in_N else localstd.IdealPresentation(tuple(minors), F)
    sb = localstd.reduced_standard_basis(J)
    data = {"matrix": [[format_poly(v) for v in row] for row in N.matrix()],
            "minors": _polys(minors), "staircase": sb.E.to_json(), "basis": _polys(sb),
            "flags": vars(flags)}
    text = (render_matrix(N.matrix()) + "\nminors:\n"
            + "\n".join(f"f_{i} = {format_poly(f)}" for i, f in enumerate(minors)))
    return text, data


def cmd_canonical(args):
    J = _ideal(args)
    N0 = cells.canonical_deformation(J)
    E = N0.E
    data = {"staircase": E.to_json(), "matrix": [[format_poly(v) for v in row] for row in N0.matrix()]}
    text = f"staircase {E}\n" + render_matrix(N0.matrix())
    if E.is_lex_compatible():
        p = hbm.encode_cellpoint(E, N0)
        data["point"] = p.to_json()
        text += f"\npoint {p}"
    return text, data


def cmd_dim(args):
    E = _staircase(args)
    rep = cells.cell_report(E)
    text = str(rep.dimension) + (f"  ({rep.note})" if rep.note else "")
    return text, rep.to_json()


def cmd_stratify(args):
    d = _need(args, "colength")
    rows = cells.stratify(d)
    # the dimension formula only applies to lex-compatible staircases
    data = [{"staircase": E.to_json(), "generators": E.to_generators_text(),
             "hilbert_function": list(h), "dimension": None if rep.note else rep.dimension,
             "lex_segment": rep.flags.lex_segment, "note": rep.note} for E, h, rep in rows]
    lines = [f"{'staircase':24} {'generators':22} {'hilbert':14} dim"]
    for E, h, rep in rows:
        lines.append(f"{str(E):24} {E.to_generators_text():22} "
                     f"{'{' + ','.join(map(str, h)) + '}':14} {'-' if rep.note else rep.dimension}")
    return "\n".join(lines), data


def cmd_probe(args):
    E = _staircase(args)
    p = _need(args, "prime")
    report = cells.conjecture_probe(E, p, args.budget)
    text = "\n".join([
        f"staircase {E} over F_{p}",
        f"small-degree family: {report['d_template']} coefficients",
        f"cell points: {report['cell_count']}   image: {report['image_count']}",
        f"injective: {report['injective']}",
        "PASS" if report["pass"] else "FAIL",
    ])
    return text, report


def cmd_gorenstein(args):
    E = _staircase(args)
    F = _field(args)
    N = _deformation_from_flags(args, E, F)
    prof = gorenstein.rank_profile(E, N)
    data = {"mu": prof.mu, "rank_const": prof.rank_const, "gorenstein": prof.mu == 2}
    if args.point is not None and E.is_lex_segment():
        data["third_diagonal"] = gorenstein.is_gorenstein_point(E, _point(args, E, F))
    gens = gorenstein.minimal_generators(hbm.phi(E, N))
    data["generators"] = _polys(gens)
    text = (f"mu {prof.mu}  rank {prof.rank_const}  gorenstein {prof.mu == 2}\n"
            f"generators: {', '.join(data['generators'])}")
    return text, data


def cmd_cover(args):
    F = _field(args)
    target = _ideal(args, "target")
    E = _staircase(args)
    include = [_point(args, E, F).coords] if args.point is not None else []
    if F.p is None:
        if args.json and args.seed is None:
            raise UsageError("--seed is required for sampled search in --json mode")
        res = gorenstein.cover_search(target, E, F, "random_q", args.samples, args.bound,
                                      args.seed or 0, include, args.budget)
    else:
        res = gorenstein.cover_search(target, E, F, "exhaustive_p", budget=args.budget,
                                      include=include)
    data = [r.to_json() for r in res]
    lines = [f"{len(res)} cover(s), gap {E.colength - localstd.lt_ideal_local(target).colength}"]
    for r in res[:20]:
        lines.append(f"{r.cell_point}  ({', '.join(map(format_poly, r.generators()))})")
    return "\n".join(lines), data


def cmd_gcl(args):
    F = _field(args)
    target = _ideal(args, "target")
    include = []
    if args.point is not None:
        E = _staircase(args)
        include = [(E, _point(args, E, F).coords)]
    if F.p is None and args.json and args.seed is None:
        raise UsageError("--seed is required for sampled search in --json mode")
    res = gorenstein.gcl_bound(target, F, args.budget, args.samples, args.bound,
                               args.seed or 0, include)
    kind = "exact" if res.exact else "upper bound"
    w = res.witnesses[0]
    text = f"gcl {res.value} ({kind})\nwitness: ({', '.join(map(format_poly, w.generators()))})"
    return text, res.to_json()


def cmd_gin(args):
    J = _ideal(args)
    if args.json and args.seed is None:
        raise UsageError("--seed is required for 'gin' in --json mode")
    E = cells.generic_initial(J, args.seed or 0, args.bound)
    if E is None:
        return "inconclusive", {"staircase": None, "inconclusive": True}
    return str(E), {"staircase": E.to_json(), "inconclusive": False}


COMMANDS = {
    "info": (cmd_info, "numerical data of a staircase"),
    "lt": (cmd_lt, "leading term ideal under the local degree order"),
    "basis": (cmd_basis, "reduced standard basis"),
    "phi": (cmd_phi, "maximal minors of H + N"),
    "canonical": (cmd_canonical, "canonical Hilbert-Burch matrix of an ideal"),
    "dim": (cmd_dim, "dimension of the Groebner cell"),
    "stratify": (cmd_stratify, "monomial ideals of a given colength"),
    "probe": (cmd_probe, "finite-field check of the small-degree family"),
    "gorenstein": (cmd_gorenstein, "rank criterion for a deformation"),
    "cover": (cmd_cover, "search for Gorenstein covers in a cell"),
    "gcl": (cmd_gcl, "Gorenstein colength"),
    "gin": (cmd_gin, "leading terms after a random change of coordinates"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="hilburch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--staircase")
        p.add_argument("--gens")
        p.add_argument("--field", default="q")
        p.add_argument("--cap", type=int)
        p.add_argument("--json", action="store_true")
        p.add_argument("--seed", type=int)
        p.add_argument("--prime", type=int)
        p.add_argument("--budget", type=int, default=10**6)
        p.add_argument("--samples", type=int, default=10_000)
        p.add_argument("--bound", type=int, default=None)
        p.add_argument("--colength", type=int)
        p.add_argument("--target")
        p.add_argument("--point", help="comma-separated cell coordinates")
        p.add_argument("--deformation", help="'i,j:entry; ...' or deformation JSON")
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.bound is None:
        args.bound = 100 if args.command == "gin" else 5
    func = COMMANDS[args.command][0]
    try:
        text, data = func(args)
    except UsageError as exc:
        print(f"hilburch {args.command}: usage error: {exc}", file=err)
        return 2
    except (ParseError, ValueError, ArithmeticError, OverflowError, IndexError) as exc:
        print(f"hilburch {args.command}: error: {exc}", file=err)
        return 1
    print(json.dumps(data, indent=2) if args.json else text, file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
