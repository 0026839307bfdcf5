"""Command-line entry point: `tropzar <subcommand> ...`.

Exit status: 0 success, 1 a check failed, 2 usage error, 3 bad input.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import charp_curves as cp
from .deformation import CertificateError, certify_bound, deformation_space
from .enumeration import BudgetExceeded, default_jobs, enumerate_types
from .formats import InputError, curve_from_json, curve_to_json, dumps, load_json, parse_q, render_svg
from .gf import field, prime_power
from .lattice_toric import LatticePolygon, polygon_report
from .trop_rational import MarkedRationalMap, tropicalize
from .tropical_curve import DegreeSpec, degree, validate
from .verify import GROUPS, verify_paper

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


def _emit(obj, out=None) -> None:
    (out or sys.stdout).write(obj if isinstance(obj, str) else dumps(obj))


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def _load_curve(path: str):
    data = load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        return curve_from_json(data)
    except InputError:
        raise
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def cmd_polytope(args) -> int:
    data = load_json(args.file)
    try:
        poly = LatticePolygon.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.file}: {exc}") from exc
    _emit(polygon_report(poly))
    return EXIT_OK


def cmd_curve(args) -> int:
    c = _load_curve(args.file)
    if args.action == "validate":
        rep = validate(c)
        _emit(rep.to_json())
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.action == "degree":
        rep = validate(c)
        if not rep.ok:
            _emit(rep.to_json())
            return EXIT_FAIL
        _emit({"degree": degree(c).to_json()})
        return EXIT_OK
    bbox = [parse_q(x) for x in args.bbox.split(",")] if args.bbox else None
    if bbox is not None and len(bbox) != 4:
        raise InputError("--bbox needs xmin,ymin,xmax,ymax")
    svg = render_svg(c, bbox)
    if args.out:
        _write(args.out, svg)
    else:
        _emit(svg)
    return EXIT_OK


def _orientation(path: Optional[str]) -> dict:
    if not path:
        return {}
    data = load_json(path)
    try:
        if isinstance(data, dict):
            return {int(k): (str(v[0]), str(v[1])) for k, v in data.items()}
        return {int(i): (str(t), str(h)) for i, t, h in data}
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: orientation must map edge index to [tail, head]") from exc


def cmd_deform(args) -> int:
    c = _load_curve(args.file)
    try:
        ds = deformation_space(c, _orientation(args.orient))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(ds.to_json())
    return EXIT_OK


def _names(path: Optional[str]) -> list[str]:
    if not path:
        return []
    data = load_json(path)
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a list of infinite vertex names")
    return [str(x) for x in data]


def cmd_certify(args) -> int:
    c = _load_curve(args.file)
    try:
        cert = certify_bound(c, args.k, _names(args.alpha), _names(args.beta))
    except CertificateError as exc:
        raise InputError(str(exc)) from exc
    _emit(cert.to_json())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    data = load_json(args.degree)
    try:
        d = DegreeSpec.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.degree}: {exc}") from exc
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise InputError("--jobs must be positive")
    try:
        res = enumerate_types(d, args.genus, args.ends, args.allow_contracted, jobs=jobs)
    except BudgetExceeded as exc:
        sys.stderr.write(f"tropzar: {exc}\n")
        return EXIT_FAIL
    _emit(res.to_json())
    return EXIT_OK


def cmd_tropicalize(args) -> int:
    data = load_json(args.file)
    try:
        mp = MarkedRationalMap.from_json(data)
        c = tropicalize(mp)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{args.file}: {exc}") from exc
    if args.plot:
        _write(args.plot, render_svg(c))
    _emit(curve_to_json(c))
    return EXIT_OK


def _q(args) -> tuple[int, int]:
    try:
        prime_power(args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if prime_power(args.p)[1] != 1:
        raise InputError(f"--p {args.p} is not prime")
    if args.r < 1:
        raise InputError("--r must be positive")
    return args.p, args.r


def cmd_charp(args) -> int:
    try:
        if args.which == "thm41":
            p, r = _q(args)
            chi = None
            if args.chi:
                F = field(p, args.n or cp.default_extension(p, r))
                chi = tuple(F.element(int(x)) for x in args.chi)
            rep = cp.sq_suite(p, r, n=args.n, pairs=args.pairs, seed=args.seed, chi=chi)
        elif args.which == "thm42":
            p, r = _q(args)
            rep = cp.sqprime_suite(p, r, xi=args.xi)
        else:
            p, r = _q(args)
            rep = cp.severi_numerology(args.d, p**r, args.genus, args.variant)
            _emit(rep)
            return EXIT_OK if rep["reducible"] else EXIT_FAIL
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(rep)
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def cmd_verify(args) -> int:
    only = [g for item in (args.only or []) for g in item.split(",") if g]
    rep = verify_paper(only or None, args.golden, args.seed, args.p, args.r)
    text = dumps(rep)
    if args.out:
        _write(args.out, text)
    else:
        _emit(text)
    for c in rep["checks"]:
        sys.stderr.write(f"{c['status']} {c['group']}: {c['name']}\n")
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tropzar", description="Exact tropical-curve and finite-characteristic toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("polytope", help="lattice polygon report")
    s.add_argument("--file", required=True)
    s.add_argument("--report", action="store_true", help="emit the full report (the default)")
    s.set_defaults(func=cmd_polytope)

    s = sub.add_parser("curve", help="validate, degree or plot a parameterized tropical curve")
    s.add_argument("action", choices=["validate", "degree", "plot"])
    s.add_argument("--file", required=True)
    s.add_argument("--bbox", help="xmin,ymin,xmax,ymax for plot")
    s.add_argument("--out", help="write the SVG here instead of stdout")
    s.set_defaults(func=cmd_curve)

    s = sub.add_parser("deform", help="deformation space E^1")
    s.add_argument("--file", required=True)
    s.add_argument("--orient")
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("certify", help="dimension-bound certificate")
    s.add_argument("--file", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--alpha")
    s.add_argument("--beta")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("enumerate", help="combinatorial types of a degree and genus")
    s.add_argument("--degree", required=True)
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--ends", type=int, required=True, help="curves have fewer than this many ends")
    s.add_argument("--allow-contracted", type=int, default=0)
    s.add_argument("--jobs", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("tropicalize", help="tropicalize a marked rational map")
    s.add_argument("--file", required=True)
    s.add_argument("--plot")
    s.set_defaults(func=cmd_tropicalize)

    s = sub.add_parser("charp", help="curves on S_q and S'_q in characteristic p")
    csub = s.add_subparsers(dest="which", required=True)
    t = csub.add_parser("thm41", help="rational curves on S_q")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--n", type=int, help="extension degree of the working field")
    t.add_argument("--chi", nargs=2, metavar=("CHI_E1", "CHI_E2"),
                   help="field element indices of the base character")
    t.add_argument("--pairs", type=int, default=20)
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(func=cmd_charp)
    t = csub.add_parser("thm42", help="rational curves on S'_q")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--xi", type=int, help="index of xi in the base field (default: all)")
    t.set_defaults(func=cmd_charp)
    t = csub.add_parser("severi", help="reducibility numerology")
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--genus", type=int, required=True)
    t.add_argument("--variant", choices=["s", "sprime"], required=True)
    t.set_defaults(func=cmd_charp)

    s = sub.add_parser("verify-paper", help="run every golden check and property suite")
    s.add_argument("--only", action="append", help=f"comma-separated groups from {', '.join(GROUPS)}")
    s.add_argument("--golden")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--p", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"tropzar: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
